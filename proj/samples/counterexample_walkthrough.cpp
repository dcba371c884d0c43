// Walks through the non-associativity counterexample for the maximal rank
// preserving direct product using the library API directly.

#include <iostream>

#include "hgprod/hgprod.hpp"

int main() {
  using namespace hgprod;

  const Hypergraph g = parse_hg("vertices: a b\nedge: a b\n");
  const Hypergraph h = parse_hg("vertices: x y z\nedge: x y z\n");

  const Hypergraph left = dirmax(g, dirmax(g, h));
  const Hypergraph right = dirmax(dirmax(g, g), h);
  std::cout << "G x (G x H): " << left.vertex_count() << " vertices, " << left.edge_count()
            << " edges (formula " << dirmax_edge_count(g, dirmax(g, h)) << ")\n";
  std::cout << "(G x G) x H: " << right.vertex_count() << " vertices, " << right.edge_count()
            << " edges (formula " << dirmax_edge_count(dirmax(g, g), h) << ")\n";

  const LawReport report = check_associativity(ProductKind::dirmax, g, g, h, /*full_iso=*/true);
  if (report.witness_edge) {
    std::cout << "edge without a regrouped partner: " << report.witness_edge->str() << '\n';
  }
  std::cout << "isomorphic: " << (report.exists_isomorphism.value_or(false) ? "yes" : "no") << '\n';

  // The normal product, by contrast, regroups cleanly.
  const LawReport normal_report = check_associativity(ProductKind::normal, g, g, h);
  std::cout << "normal product regrouping is an isomorphism: "
            << (normal_report.psi_is_isomorphism ? "yes" : "no") << '\n';
  return 0;
}
