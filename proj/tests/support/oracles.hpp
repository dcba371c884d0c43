#pragma once

// Brute-force reference implementations used only by the tests. Nothing
// here calls into the product generators, the counting formulas or the
// isomorphism search it is compared against.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hgprod/hypergraph.hpp"

namespace hgprod::testing {

/// Every hypergraph on atoms prefix0..prefix(n-1) whose edges have sizes
/// in [size_min, size_max] and whose edge count is at most max_edges.
inline std::vector<Hypergraph> all_hypergraphs(std::size_t n, std::size_t max_edges,
                                               std::size_t size_min, std::size_t size_max,
                                               const std::string& prefix = "v") {
  std::vector<VertexLabel> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back(VertexLabel::atom(prefix + std::to_string(i)));
  std::vector<Edge> candidates;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size < size_min || size > size_max) continue;
    std::vector<VertexLabel> m;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) m.push_back(vs[i]);
    }
    candidates.emplace_back(std::move(m));
  }
  std::vector<Hypergraph> out;
  std::vector<Edge> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    out.emplace_back(vs, chosen);
    if (chosen.size() == max_edges) return;
    for (std::size_t i = start; i < candidates.size(); ++i) {
      chosen.push_back(candidates[i]);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return out;
}

/// All hypergraphs with 0..max_n vertices, as above.
inline std::vector<Hypergraph> all_hypergraphs_up_to(std::size_t max_n, std::size_t max_edges,
                                                     std::size_t size_min, std::size_t size_max,
                                                     const std::string& prefix = "v") {
  std::vector<Hypergraph> out;
  for (std::size_t n = 0; n <= max_n; ++n) {
    auto part = all_hypergraphs(n, max_edges, size_min, size_max, prefix);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

/// Simple hypergraphs of rank exactly 2 (graphs with at least one edge)
/// on exactly n vertices.
inline std::vector<Hypergraph> all_simple_graphs(std::size_t n, const std::string& prefix) {
  std::vector<Hypergraph> out;
  for (const auto& h : all_hypergraphs(n, n * (n - 1) / 2, 2, 2, prefix)) {
    if (h.edge_count() > 0) out.push_back(h);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Product definitions by subset scan

using Cell = std::pair<std::size_t, std::size_t>;
using CellSet = std::vector<Cell>;  // sorted

/// The subsets of e1 x e2 (index form) of size r satisfying the direct
/// product predicate: for "min", both projections have r elements with
/// r = min(|e1|,|e2|); for "max", both projections are onto e1 and e2 with
/// r = max(|e1|,|e2|).
inline std::set<CellSet> direct_by_subset_scan(bool minimal, std::size_t s1, std::size_t s2) {
  std::vector<Cell> grid;
  for (std::size_t i = 0; i < s1; ++i) {
    for (std::size_t j = 0; j < s2; ++j) grid.emplace_back(i, j);
  }
  const std::size_t r = minimal ? std::min(s1, s2) : std::max(s1, s2);
  std::set<CellSet> out;
  if (grid.size() > 30) throw std::logic_error("subset scan too large");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << grid.size()); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != r) continue;
    CellSet e;
    std::set<std::size_t> p1, p2;
    for (std::size_t b = 0; b < grid.size(); ++b) {
      if (mask >> b & 1) {
        e.push_back(grid[b]);
        p1.insert(grid[b].first);
        p2.insert(grid[b].second);
      }
    }
    bool ok = minimal ? (p1.size() == r && p2.size() == r) : (p1.size() == s1 && p2.size() == s2);
    if (ok) out.insert(e);
  }
  return out;
}

inline Edge cells_to_edge(const CellSet& cells, const std::vector<VertexLabel>& m1,
                          const std::vector<VertexLabel>& m2) {
  std::vector<VertexLabel> out;
  for (auto [i, j] : cells) out.push_back(VertexLabel::pair(m1[i], m2[j]));
  return Edge(std::move(out));
}

/// Whole-product oracles straight from the set definitions.
inline EdgeSet oracle_cartesian_edges(const Hypergraph& a, const Hypergraph& b) {
  EdgeSet out;
  for (const auto& x : a.vertices()) {
    for (const auto& f : b.edges()) {
      std::vector<VertexLabel> m;
      for (const auto& y : f) m.push_back(VertexLabel::pair(x, y));
      out.insert(Edge(std::move(m)));
    }
  }
  for (const auto& e : a.edges()) {
    for (const auto& y : b.vertices()) {
      std::vector<VertexLabel> m;
      for (const auto& x : e) m.push_back(VertexLabel::pair(x, y));
      out.insert(Edge(std::move(m)));
    }
  }
  return out;
}

inline EdgeSet oracle_direct_edges(bool minimal, const Hypergraph& a, const Hypergraph& b) {
  EdgeSet out;
  for (const auto& e1 : a.edges()) {
    for (const auto& e2 : b.edges()) {
      for (const auto& cells : direct_by_subset_scan(minimal, e1.size(), e2.size())) {
        out.insert(cells_to_edge(cells, e1.members(), e2.members()));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Classical graph products on adjacency matrices

using Adjacency = std::vector<std::vector<bool>>;

inline Adjacency adjacency(const Hypergraph& g) {
  Adjacency adj(g.vertex_count(), std::vector<bool>(g.vertex_count(), false));
  for (const auto& e : g.edges()) {
    auto u = g.index_of(e.members()[0]);
    auto v = g.index_of(e.members()[1]);
    adj[u][v] = adj[v][u] = true;
  }
  return adj;
}

/// Edges of the tensor (direct) or strong graph product as unordered pairs
/// of product vertices (u1,v1),(u2,v2), returned as a label edge set.
inline EdgeSet classical_graph_product(const Hypergraph& g, const Hypergraph& h, bool strong) {
  auto a = adjacency(g);
  auto b = adjacency(h);
  EdgeSet out;
  const auto n1 = g.vertex_count(), n2 = h.vertex_count();
  for (std::size_t u1 = 0; u1 < n1; ++u1) {
    for (std::size_t v1 = 0; v1 < n2; ++v1) {
      for (std::size_t u2 = 0; u2 < n1; ++u2) {
        for (std::size_t v2 = 0; v2 < n2; ++v2) {
          if (u1 == u2 && v1 == v2) continue;
          bool tensor = a[u1][u2] && b[v1][v2];
          bool cart = (u1 == u2 && b[v1][v2]) || (v1 == v2 && a[u1][u2]);
          if (tensor || (strong && cart)) {
            out.insert(Edge{VertexLabel::pair(g.vertices()[u1], h.vertices()[v1]),
                            VertexLabel::pair(g.vertices()[u2], h.vertices()[v2])});
          }
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Counting oracles

/// Alternating-sum Stirling form with exact division checked.
inline std::uint64_t stirling2_alternating(unsigned n, unsigned k) {
  __int128 sum = 0;
  __int128 binom = 1;  // C(k, j)
  for (unsigned j = 0; j <= k; ++j) {
    if (j > 0) binom = binom * (k - j + 1) / j;
    __int128 pw = 1;
    for (unsigned t = 0; t < n; ++t) pw *= j;
    if (n == 0) pw = 1;  // 0^0 = 1
    sum += ((k - j) % 2 == 0 ? 1 : -1) * binom * pw;
  }
  __int128 fact = 1;
  for (unsigned i = 2; i <= k; ++i) fact *= i;
  if (sum % fact != 0) throw std::logic_error("non-exact Stirling division");
  return static_cast<std::uint64_t>(sum / fact);
}

/// Number of surjections from an n-set onto a k-set, by enumerating all k^n maps.
inline std::uint64_t count_surjections(unsigned n, unsigned k) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n; ++i) total *= k;
  std::uint64_t hits = 0;
  std::vector<unsigned> digits(n, 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    std::uint32_t covered = 0;
    for (unsigned i = 0; i < n; ++i) {
      covered |= 1u << (c % k);
      c /= k;
    }
    if (covered == (k >= 32 ? ~0u : (1u << k) - 1)) ++hits;
  }
  if (n == 0 && k == 0) return 1;
  return hits;
}

/// Set partitions of {0..n-1} into exactly k blocks via restricted growth strings.
inline std::uint64_t count_partitions(unsigned n, unsigned k) {
  if (n == 0) return k == 0 ? 1 : 0;
  std::uint64_t count = 0;
  std::vector<unsigned> rgs(n, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned blocks) {
    if (i == n) {
      if (blocks == k) ++count;
      return;
    }
    for (unsigned b = 0; b <= blocks && b < k; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  rgs[0] = 0;
  rec(1, 1);
  return count;
}

// ---------------------------------------------------------------------------
// Isomorphism oracle

/// Tries every bijection V(a) -> V(b).
inline bool isomorphic_by_all_bijections(const Hypergraph& a, const Hypergraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  const auto n = a.vertex_count();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::vector<std::size_t>> target;
  for (const auto& e : b.edges()) {
    std::vector<std::size_t> idx;
    for (const auto& v : e) idx.push_back(b.index_of(v));
    target.insert(idx);
  }
  do {
    bool ok = true;
    for (const auto& e : a.edges()) {
      std::vector<std::size_t> idx;
      for (const auto& v : e) idx.push_back(perm[a.index_of(v)]);
      std::sort(idx.begin(), idx.end());
      if (!target.count(idx)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace hgprod::testing
