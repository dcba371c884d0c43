#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgprod/hypergraph.hpp"
#include "hgprod/products.hpp"

namespace hgprod {

namespace detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("edge count overflows 64 bits");
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("edge count overflows 64 bits");
  return r;
}

}  // namespace detail

/// Stirling number of the second kind: partitions of an n-set into k
/// non-empty blocks. S(0,0) = 1, S(n,0) = 0 for n > 0, S(n,k) = 0 for k > n.
/// Row-by-row recurrence S(n,k) = k S(n-1,k) + S(n-1,k-1); exact or throws
/// std::overflow_error.
inline std::uint64_t stirling2(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k == 0) return n == 0 ? 1 : 0;
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;  // S(0,0)
  for (std::uint64_t i = 1; i <= n; ++i) {
    auto top = std::min(i, k);
    for (std::uint64_t j = top; j >= 1; --j) {
      row[j] = detail::checked_add(detail::checked_mul(j, row[j]), row[j - 1]);
    }
    row[0] = 0;
  }
  return row[k];
}

inline std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r = detail::checked_mul(r, i);
  return r;
}

/// Sum over edge pairs of (min)! * S(max, min). Counts generating pairs, so
/// it equals |E(H1 dirmax H2)| whenever distinct pairs cannot emit the same
/// edge (guaranteed when no edge is a singleton).
inline std::uint64_t dirmax_edge_count(const Hypergraph& h1, const Hypergraph& h2) {
  std::uint64_t total = 0;
  for (const auto& e1 : h1.edges()) {
    for (const auto& e2 : h2.edges()) {
      EdgePairContext ctx{e1, e2};
      total = detail::checked_add(
          total, detail::checked_mul(factorial(ctx.r_min()), stirling2(ctx.r_max(), ctx.r_min())));
    }
  }
  return total;
}

/// |V1||E2| + |E1||V2|.
inline std::uint64_t cartesian_edge_count(const Hypergraph& h1, const Hypergraph& h2) {
  return detail::checked_add(detail::checked_mul(h1.vertex_count(), h2.edge_count()),
                             detail::checked_mul(h1.edge_count(), h2.vertex_count()));
}

inline std::uint64_t strong_edge_count(const Hypergraph& h1, const Hypergraph& h2) {
  return detail::checked_add(dirmax_edge_count(h1, h2), cartesian_edge_count(h1, h2));
}

struct CountReport {
  ProductKind kind;
  std::uint64_t formula_count = 0;
  std::uint64_t enumerated_count = 0;
  bool agreement = false;
};

/// Closed-form count for kinds that have one (cartesian, dirmax, strong).
inline std::uint64_t formula_edge_count(ProductKind kind, const Hypergraph& h1,
                                        const Hypergraph& h2) {
  switch (kind) {
    case ProductKind::cartesian: return cartesian_edge_count(h1, h2);
    case ProductKind::dirmax: return dirmax_edge_count(h1, h2);
    case ProductKind::strong: return strong_edge_count(h1, h2);
    default:
      throw std::invalid_argument("no closed-form edge count for " + std::string(to_string(kind)));
  }
}

/// Formula versus enumeration. Disagreement is reported, not thrown: it is
/// the expected outcome for factors with singleton edges.
inline CountReport count_report(ProductKind kind, const Hypergraph& h1, const Hypergraph& h2) {
  CountReport r{kind};
  r.formula_count = formula_edge_count(kind, h1, h2);
  r.enumerated_count = product(kind, h1, h2).edge_count();
  r.agreement = r.formula_count == r.enumerated_count;
  return r;
}

}  // namespace hgprod
