#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hgprod/enumerate.hpp"
#include "hgprod/hypergraph.hpp"

namespace hgprod {

enum class ProductKind { cartesian, dirmin, dirmax, dirnon, normal, strong };

inline constexpr std::array<ProductKind, 6> kAllKinds = {
    ProductKind::cartesian, ProductKind::dirmin, ProductKind::dirmax,
    ProductKind::dirnon,    ProductKind::normal, ProductKind::strong};

inline std::string_view to_string(ProductKind k) {
  switch (k) {
    case ProductKind::cartesian: return "cartesian";
    case ProductKind::dirmin: return "dirmin";
    case ProductKind::dirmax: return "dirmax";
    case ProductKind::dirnon: return "dirnon";
    case ProductKind::normal: return "normal";
    case ProductKind::strong: return "strong";
  }
  return "?";
}

inline std::optional<ProductKind> parse_kind(std::string_view s) {
  for (auto k : kAllKinds) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

/// One edge from each factor, with r- = min and r+ = max of their sizes.
struct EdgePairContext {
  const Edge& e1;
  const Edge& e2;

  std::size_t r_min() const { return std::min(e1.size(), e2.size()); }
  std::size_t r_max() const { return std::max(e1.size(), e2.size()); }
};

namespace detail {

using Cell = std::pair<std::size_t, std::size_t>;

// Generates the direct-product edges of a single edge pair, given as index
// lists into the factor vertex sets. Emitted cells are (index in e1's
// factor, index in e2's factor) regardless of which edge is larger.
//
// dirmin: graphs of injections from the smaller edge into the larger.
// dirmax: graphs of surjections from the larger edge onto the smaller.
// Equal sizes reduce both to bijections, enumerated once.
// dirnon: {(x,y)} u (e\x)x(f\y) for every x in e, y in f.
template <typename Emit>
void generate_edge_pair(ProductKind kind, std::span<const std::size_t> e1,
                        std::span<const std::size_t> e2, Emit&& emit) {
  std::vector<Cell> cells;
  if (kind == ProductKind::dirnon) {
    for (std::size_t i = 0; i < e1.size(); ++i) {
      for (std::size_t j = 0; j < e2.size(); ++j) {
        cells.clear();
        cells.emplace_back(e1[i], e2[j]);
        for (std::size_t a = 0; a < e1.size(); ++a) {
          if (a == i) continue;
          for (std::size_t b = 0; b < e2.size(); ++b) {
            if (b != j) cells.emplace_back(e1[a], e2[b]);
          }
        }
        emit(std::span<const Cell>(cells));
      }
    }
    return;
  }
  if (kind != ProductKind::dirmin && kind != ProductKind::dirmax) {
    throw std::invalid_argument("edge pair product is defined for dirmin, dirmax, dirnon only");
  }

  // Maps run from `from` to `to`; `forward` says whether from is e1.
  const bool first_smaller = e1.size() <= e2.size();
  const bool forward = kind == ProductKind::dirmin ? first_smaller : !first_smaller;
  auto from = forward ? e1 : e2;
  auto to = forward ? e2 : e1;
  auto visit = [&](std::span<const std::size_t> img) {
    cells.clear();
    for (std::size_t i = 0; i < img.size(); ++i) {
      if (forward) {
        cells.emplace_back(from[i], to[img[i]]);
      } else {
        cells.emplace_back(to[img[i]], from[i]);
      }
    }
    emit(std::span<const Cell>(cells));
  };
  if (kind == ProductKind::dirmin) {
    for_each_injection(from.size(), to.size(), visit);
  } else {
    for_each_surjection(from.size(), to.size(), visit);
  }
}

// Pair labels for V1 x V2, computed once per product.
class PairTable {
 public:
  PairTable(const std::vector<VertexLabel>& v1, const std::vector<VertexLabel>& v2)
      : width_(v2.size()) {
    labels_.reserve(v1.size() * v2.size());
    for (const auto& a : v1) {
      for (const auto& b : v2) labels_.push_back(VertexLabel::pair(a, b));
    }
  }
  const VertexLabel& at(std::size_t i, std::size_t j) const { return labels_[i * width_ + j]; }
  const std::vector<VertexLabel>& all() const { return labels_; }

  Edge edge(std::span<const Cell> cells) const {
    std::vector<VertexLabel> m;
    m.reserve(cells.size());
    for (auto [i, j] : cells) m.push_back(at(i, j));
    return Edge(std::move(m));
  }

 private:
  std::size_t width_;
  std::vector<VertexLabel> labels_;
};

inline std::vector<std::vector<std::size_t>> edge_indices(const Hypergraph& h) {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(h.edge_count());
  for (const auto& e : h.edges()) {
    std::vector<std::size_t> idx;
    idx.reserve(e.size());
    for (const auto& v : e) idx.push_back(h.index_of(v));
    out.push_back(std::move(idx));
  }
  return out;
}

inline void add_cartesian_edges(const Hypergraph& h1, const Hypergraph& h2,
                                const PairTable& table, EdgeSet& out) {
  std::vector<Cell> cells;
  for (std::size_t x = 0; x < h1.vertex_count(); ++x) {
    for (const auto& f : h2.edges()) {
      cells.clear();
      for (const auto& y : f) cells.emplace_back(x, h2.index_of(y));
      out.insert(table.edge(cells));
    }
  }
  for (const auto& e : h1.edges()) {
    for (std::size_t y = 0; y < h2.vertex_count(); ++y) {
      cells.clear();
      for (const auto& x : e) cells.emplace_back(h1.index_of(x), y);
      out.insert(table.edge(cells));
    }
  }
}

inline void add_direct_edges(ProductKind kind, const Hypergraph& h1, const Hypergraph& h2,
                             const PairTable& table, EdgeSet& out) {
  auto idx1 = edge_indices(h1);
  auto idx2 = edge_indices(h2);
  for (const auto& e1 : idx1) {
    for (const auto& e2 : idx2) {
      generate_edge_pair(kind, e1, e2,
                         [&](std::span<const Cell> cells) { out.insert(table.edge(cells)); });
    }
  }
}

}  // namespace detail

/// Edges generated by a single pair (e1, e2) under a direct product kind.
/// The product's edge set is the union of these over all edge pairs.
inline EdgeSet edge_pair_product(const Edge& e1, const Edge& e2, ProductKind kind) {
  if (e1.empty() || e2.empty()) throw PreconditionError("edge pair product needs non-empty edges");
  const auto& m1 = e1.members();
  const auto& m2 = e2.members();
  detail::PairTable table(m1, m2);
  std::vector<std::size_t> i1(m1.size()), i2(m2.size());
  for (std::size_t i = 0; i < i1.size(); ++i) i1[i] = i;
  for (std::size_t i = 0; i < i2.size(); ++i) i2[i] = i;
  EdgeSet out;
  detail::generate_edge_pair(kind, i1, i2, [&](std::span<const detail::Cell> cells) {
    out.insert(table.edge(cells));
  });
  return out;
}

inline EdgeSet edge_pair_product(const EdgePairContext& ctx, ProductKind kind) {
  return edge_pair_product(ctx.e1, ctx.e2, kind);
}

/// Builds H1 (*) H2 for the given product. The vertex set is V1 x V2 with
/// pair labels (v1, v2); edges are deduplicated.
inline Hypergraph product(ProductKind kind, const Hypergraph& h1, const Hypergraph& h2) {
  detail::PairTable table(h1.vertices(), h2.vertices());
  EdgeSet edges;
  switch (kind) {
    case ProductKind::cartesian:
      detail::add_cartesian_edges(h1, h2, table, edges);
      break;
    case ProductKind::dirmin:
    case ProductKind::dirmax:
    case ProductKind::dirnon:
      detail::add_direct_edges(kind, h1, h2, table, edges);
      break;
    case ProductKind::normal:
      detail::add_cartesian_edges(h1, h2, table, edges);
      detail::add_direct_edges(ProductKind::dirmin, h1, h2, table, edges);
      break;
    case ProductKind::strong:
      detail::add_cartesian_edges(h1, h2, table, edges);
      detail::add_direct_edges(ProductKind::dirmax, h1, h2, table, edges);
      break;
  }
  return Hypergraph(table.all(), std::move(edges));
}

inline Hypergraph cartesian(const Hypergraph& a, const Hypergraph& b) {
  return product(ProductKind::cartesian, a, b);
}
inline Hypergraph dirmin(const Hypergraph& a, const Hypergraph& b) {
  return product(ProductKind::dirmin, a, b);
}
inline Hypergraph dirmax(const Hypergraph& a, const Hypergraph& b) {
  return product(ProductKind::dirmax, a, b);
}
inline Hypergraph dirnon(const Hypergraph& a, const Hypergraph& b) {
  return product(ProductKind::dirnon, a, b);
}
inline Hypergraph normal(const Hypergraph& a, const Hypergraph& b) {
  return product(ProductKind::normal, a, b);
}
inline Hypergraph strong(const Hypergraph& a, const Hypergraph& b) {
  return product(ProductKind::strong, a, b);
}

}  // namespace hgprod
