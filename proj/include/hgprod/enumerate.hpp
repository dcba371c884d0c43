#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hgprod {

// Backtracking generators over maps {0..m-1} -> {0..n-1}. The visitor
// receives the map as a span of images, valid only during the call.
// Maps are produced in lexicographic order of the image sequence.

/// Visits every injective map; none when m > n.
template <typename Visit>
void for_each_injection(std::size_t m, std::size_t n, Visit&& visit) {
  if (m > n) return;
  std::vector<std::size_t> img(m);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == m) {
      visit(std::span<const std::size_t>(img));
      return;
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t]) continue;
      used[t] = 1;
      img[i] = t;
      self(self, i + 1);
      used[t] = 0;
    }
  };
  rec(rec, 0);
}

/// Visits every surjective map; none when m < n. With m == n == 0 the
/// empty map is visited once.
template <typename Visit>
void for_each_surjection(std::size_t m, std::size_t n, Visit&& visit) {
  if (m < n) return;
  std::vector<std::size_t> img(m);
  std::vector<std::size_t> hits(n, 0);
  std::size_t uncovered = n;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == m) {
      if (uncovered == 0) visit(std::span<const std::size_t>(img));
      return;
    }
    // Remaining positions must be able to cover every missing target.
    if (m - i < uncovered) return;
    for (std::size_t t = 0; t < n; ++t) {
      if (hits[t]++ == 0) --uncovered;
      img[i] = t;
      self(self, i + 1);
      if (--hits[t] == 0) ++uncovered;
    }
  };
  rec(rec, 0);
}

}  // namespace hgprod
