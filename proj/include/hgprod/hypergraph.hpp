#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgprod/label.hpp"

namespace hgprod {

/// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A set of vertex labels. Members are kept sorted and unique.
/// An empty edge is representable so that validate() can report it.
class Edge {
 public:
  Edge() = default;
  Edge(std::initializer_list<VertexLabel> members) : Edge(std::vector<VertexLabel>(members)) {}
  explicit Edge(std::vector<VertexLabel> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<VertexLabel>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(const VertexLabel& v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }
  bool is_subset_of(const Edge& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                         members_.end());
  }

  std::string str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (i) out += ',';
      members_[i].append_to(out);
    }
    out += '}';
    return out;
  }

  /// Canonical edge order: by size, then lexicographically by member list.
  friend std::strong_ordering operator<=>(const Edge& a, const Edge& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.members_.begin(), a.members_.end(),
                                                  b.members_.begin(), b.members_.end());
  }
  friend bool operator==(const Edge& a, const Edge& b) { return a.members_ == b.members_; }

 private:
  std::vector<VertexLabel> members_;
};

using EdgeSet = std::set<Edge>;

/// Finite hypergraph (V, E). The vertex list is stored sorted and unique,
/// the edge set is deduplicated, so equality is extensional.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(std::vector<VertexLabel> vertices, EdgeSet edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  }
  Hypergraph(std::vector<VertexLabel> vertices, const std::vector<Edge>& edges)
      : Hypergraph(std::move(vertices), EdgeSet(edges.begin(), edges.end())) {}

  /// Convenience for atom-labelled hypergraphs:
  /// from_atoms({"a","b"}, {{"a","b"}}).
  static Hypergraph from_atoms(const std::vector<std::string>& vertices,
                               const std::vector<std::vector<std::string>>& edges) {
    std::vector<VertexLabel> vs;
    vs.reserve(vertices.size());
    for (const auto& t : vertices) vs.push_back(VertexLabel::atom(t));
    EdgeSet es;
    for (const auto& e : edges) {
      std::vector<VertexLabel> m;
      for (const auto& t : e) m.push_back(VertexLabel::atom(t));
      es.insert(Edge(std::move(m)));
    }
    return Hypergraph(std::move(vs), std::move(es));
  }

  const std::vector<VertexLabel>& vertices() const { return vertices_; }
  const EdgeSet& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(const VertexLabel& v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }
  bool has_edge(const Edge& e) const { return edges_.count(e) != 0; }

  /// Index of v in the sorted vertex list, or vertex_count() if absent.
  std::size_t index_of(const VertexLabel& v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return vertices_.size();
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::vector<VertexLabel> vertices_;
  EdgeSet edges_;
};

/// Total map between vertex sets; a candidate homomorphism or isomorphism.
using VertexMapping = std::map<VertexLabel, VertexLabel>;

struct Violation {
  std::string message;
  std::optional<Edge> edge;

  std::string str() const { return edge ? message + ": " + edge->str() : message; }
};

/// std::nullopt when H is a well-formed hypergraph; otherwise the first
/// violated invariant (in canonical edge order) and the offending edge.
inline std::optional<Violation> validate(const Hypergraph& h) {
  for (const auto& e : h.edges()) {
    if (e.empty()) return Violation{"empty edge", e};
    for (const auto& v : e) {
      if (!h.has_vertex(v)) return Violation{"edge not subset of vertices", e};
    }
  }
  return std::nullopt;
}

/// Maximum edge cardinality; 0 for an edgeless hypergraph.
inline std::size_t rank(const Hypergraph& h) {
  std::size_t r = 0;
  for (const auto& e : h.edges()) r = std::max(r, e.size());
  return r;
}

inline bool is_simple(const Hypergraph& h) {
  for (const auto& e : h.edges()) {
    if (e.size() < 2) return false;
  }
  for (auto a = h.edges().begin(); a != h.edges().end(); ++a) {
    // Canonical order is by size first, so only later edges can contain *a.
    for (auto b = std::next(a); b != h.edges().end(); ++b) {
      if (a->size() < b->size() && a->is_subset_of(*b)) return false;
    }
  }
  return true;
}

inline Edge image(const Edge& e, const VertexMapping& phi) {
  std::vector<VertexLabel> out;
  out.reserve(e.size());
  for (const auto& v : e) out.push_back(phi.at(v));
  return Edge(std::move(out));
}

/// True iff phi(e) is an edge of dst for every edge e of src.
/// Throws PreconditionError if phi is not total on V(src) or leaves V(dst).
inline bool is_homomorphism(const Hypergraph& src, const Hypergraph& dst, const VertexMapping& phi) {
  for (const auto& v : src.vertices()) {
    auto it = phi.find(v);
    if (it == phi.end()) {
      throw PreconditionError("mapping undefined on vertex " + v.str());
    }
    if (!dst.has_vertex(it->second)) {
      throw PreconditionError("mapping sends " + v.str() + " outside the codomain (" +
                              it->second.str() + ")");
    }
  }
  for (const auto& e : src.edges()) {
    if (!dst.has_edge(image(e, phi))) return false;
  }
  return true;
}

inline VertexMapping identity_mapping(const Hypergraph& h) {
  VertexMapping m;
  for (const auto& v : h.vertices()) m.emplace(v, v);
  return m;
}

/// Sorted edge cardinalities.
inline std::vector<std::size_t> edge_size_multiset(const Hypergraph& h) {
  std::vector<std::size_t> sizes;
  sizes.reserve(h.edge_count());
  for (const auto& e : h.edges()) sizes.push_back(e.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

/// Per-vertex incident edge counts, sorted ascending.
inline std::vector<std::size_t> degree_sequence(const Hypergraph& h) {
  std::vector<std::size_t> deg(h.vertex_count(), 0);
  for (const auto& e : h.edges()) {
    for (const auto& v : e) {
      auto i = h.index_of(v);
      if (i < deg.size()) ++deg[i];
    }
  }
  std::sort(deg.begin(), deg.end());
  return deg;
}

/// Relabels H edge-wise through an arbitrary label function.
/// The caller is responsible for f being injective on V(H).
template <typename F>
Hypergraph map_labels(const Hypergraph& h, F&& f) {
  std::vector<VertexLabel> vs;
  vs.reserve(h.vertex_count());
  for (const auto& v : h.vertices()) vs.push_back(f(v));
  EdgeSet es;
  for (const auto& e : h.edges()) {
    std::vector<VertexLabel> m;
    m.reserve(e.size());
    for (const auto& v : e) m.push_back(f(v));
    es.insert(Edge(std::move(m)));
  }
  return Hypergraph(std::move(vs), std::move(es));
}

}  // namespace hgprod
