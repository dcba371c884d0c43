#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgprod/hypergraph.hpp"

namespace hgprod {

/// Raised when an isomorphism search would exceed its vertex bound.
class SearchBoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IsoResult {
  bool isomorphic = false;
  std::optional<VertexMapping> witness;
  std::uint64_t nodes_explored = 0;
};

inline constexpr std::size_t kDefaultIsoVertexBound = 12;
// Edges are held as 64-bit vertex masks during the search.
inline constexpr std::size_t kMaxIsoVertexBound = 64;

/// Relabels H through a bijection on V(H).
inline Hypergraph apply_mapping(const Hypergraph& h, const VertexMapping& phi) {
  std::set<VertexLabel> targets;
  for (const auto& v : h.vertices()) {
    auto it = phi.find(v);
    if (it == phi.end()) throw PreconditionError("mapping undefined on vertex " + v.str());
    if (!targets.insert(it->second).second) {
      throw PreconditionError("mapping is not injective: repeated image " + it->second.str());
    }
  }
  return map_labels(h, [&](const VertexLabel& v) { return phi.at(v); });
}

namespace detail {

using Mask = std::uint64_t;

struct IndexedHypergraph {
  std::size_t n = 0;
  std::vector<Mask> edges;                          // sorted
  std::vector<std::vector<std::size_t>> incident;   // vertex -> edge ids
  std::vector<std::vector<std::size_t>> signature;  // vertex invariant

  explicit IndexedHypergraph(const Hypergraph& h) : n(h.vertex_count()), incident(n) {
    for (const auto& e : h.edges()) {
      Mask m = 0;
      for (const auto& v : e) m |= Mask{1} << h.index_of(v);
      edges.push_back(m);
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t id = 0; id < edges.size(); ++id) {
      for (std::size_t v = 0; v < n; ++v) {
        if (edges[id] >> v & 1) incident[v].push_back(id);
      }
    }
    // Invariant per vertex: sorted sizes of incident edges (its length is the degree).
    signature.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
      for (auto id : incident[v]) signature[v].push_back(std::popcount(edges[id]));
      std::sort(signature[v].begin(), signature[v].end());
    }
  }

  bool has_edge(Mask m) const { return std::binary_search(edges.begin(), edges.end(), m); }
};

class IsoSearch {
 public:
  IsoSearch(const IndexedHypergraph& a, const IndexedHypergraph& b) : a_(a), b_(b) {}

  std::optional<std::vector<std::size_t>> run() {
    const std::size_t n = a_.n;
    // Order A's vertices by the size of their invariant class, ties by index
    // (= label order, since vertex lists are sorted).
    order_.resize(n);
    for (std::size_t v = 0; v < n; ++v) order_[v] = v;
    std::vector<std::size_t> class_size(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t u = 0; u < n; ++u) {
        if (a_.signature[u] == a_.signature[v]) ++class_size[v];
      }
    }
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
      return class_size[x] < class_size[y];
    });
    map_.assign(n, n);
    used_.assign(n, 0);
    assigned_a_ = 0;
    assigned_b_ = 0;
    if (extend(0)) return map_;
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t v = order_[depth];
    for (std::size_t w = 0; w < b_.n; ++w) {
      if (used_[w] || a_.signature[v] != b_.signature[w]) continue;
      ++nodes_;
      map_[v] = w;
      used_[w] = 1;
      assigned_a_ |= Mask{1} << v;
      assigned_b_ |= Mask{1} << w;
      if (consistent(v, w) && extend(depth + 1)) return true;
      assigned_a_ &= ~(Mask{1} << v);
      assigned_b_ &= ~(Mask{1} << w);
      used_[w] = 0;
      map_[v] = a_.n;
    }
    return false;
  }

  Mask image(Mask m) const {
    Mask out = 0;
    for (std::size_t v = 0; m; ++v, m >>= 1) {
      if (m & 1) out |= Mask{1} << map_[v];
    }
    return out;
  }

  // Every edge completed by this assignment must have a partner edge on the
  // other side, in both directions.
  bool consistent(std::size_t v, std::size_t w) const {
    for (auto id : a_.incident[v]) {
      Mask e = a_.edges[id];
      if ((e & ~assigned_a_) == 0 && !b_.has_edge(image(e))) return false;
    }
    std::size_t completed_a = 0, completed_b = 0;
    for (auto id : a_.incident[v]) completed_a += (a_.edges[id] & ~assigned_a_) == 0;
    for (auto id : b_.incident[w]) completed_b += (b_.edges[id] & ~assigned_b_) == 0;
    return completed_a == completed_b;
  }

  const IndexedHypergraph& a_;
  const IndexedHypergraph& b_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> map_;
  std::vector<char> used_;
  Mask assigned_a_ = 0;
  Mask assigned_b_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Decides whether two hypergraphs are isomorphic.
///
/// Cheap invariants are compared first (vertex and edge counts, edge-size
/// multiset, degree sequence, per-vertex incident-size multisets). Survivors
/// go to a backtracking search that assigns the vertices of h1 in order of
/// increasing invariant-class size and prunes as soon as a completed edge on
/// either side lacks a partner. The returned witness is verified as a
/// homomorphism in both directions.
///
/// Throws SearchBoundExceeded when either side has more than max_vertices
/// vertices (max_vertices itself is capped at 64).
inline IsoResult are_isomorphic(const Hypergraph& h1, const Hypergraph& h2,
                                std::size_t max_vertices = kDefaultIsoVertexBound) {
  max_vertices = std::min(max_vertices, kMaxIsoVertexBound);
  IsoResult result;
  if (h1.vertex_count() != h2.vertex_count() || h1.edge_count() != h2.edge_count() ||
      edge_size_multiset(h1) != edge_size_multiset(h2) ||
      degree_sequence(h1) != degree_sequence(h2)) {
    return result;
  }
  if (h1.vertex_count() > max_vertices) {
    throw SearchBoundExceeded("isomorphism search refused: " + std::to_string(h1.vertex_count()) +
                              " vertices exceeds bound " + std::to_string(max_vertices));
  }
  detail::IndexedHypergraph a(h1), b(h2);
  auto sig_a = a.signature, sig_b = b.signature;
  std::sort(sig_a.begin(), sig_a.end());
  std::sort(sig_b.begin(), sig_b.end());
  if (sig_a != sig_b) return result;

  detail::IsoSearch search(a, b);
  auto found = search.run();
  result.nodes_explored = search.nodes();
  if (!found) return result;

  VertexMapping phi, inverse;
  for (std::size_t v = 0; v < a.n; ++v) {
    phi.emplace(h1.vertices()[v], h2.vertices()[(*found)[v]]);
    inverse.emplace(h2.vertices()[(*found)[v]], h1.vertices()[v]);
  }
  if (!is_homomorphism(h1, h2, phi) || !is_homomorphism(h2, h1, inverse)) {
    throw std::logic_error("isomorphism search produced an unverifiable witness");
  }
  result.isomorphic = true;
  result.witness = std::move(phi);
  return result;
}

}  // namespace hgprod
