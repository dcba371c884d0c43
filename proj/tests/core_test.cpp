#include <gtest/gtest.h>

#include <random>

#include "hgprod/checker.hpp"
#include "hgprod/hypergraph.hpp"
#include "hgprod/iso.hpp"
#include "hgprod/products.hpp"

namespace hgprod {
namespace {

VertexLabel at(const char* s) { return VertexLabel::atom(s); }

const Hypergraph kG = Hypergraph::from_atoms({"a", "b"}, {{"a", "b"}});
const Hypergraph kH = Hypergraph::from_atoms({"x", "y", "z"}, {{"x", "y", "z"}});

TEST(Validate, AcceptsMinimalHypergraph) { EXPECT_FALSE(validate(kG).has_value()); }

TEST(Validate, EdgeNotSubsetOfVertices) {
  Hypergraph h({at("a")}, std::vector<Edge>{Edge{at("a"), at("b")}});
  auto v = validate(h);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->message, "edge not subset of vertices");
  EXPECT_EQ(v->edge, (Edge{at("a"), at("b")}));
}

TEST(Validate, EmptyEdge) {
  Hypergraph h({at("a")}, std::vector<Edge>{Edge{}});
  auto v = validate(h);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->message, "empty edge");
}

TEST(Validate, RandomInstancesPassAndSingleMutationsFail) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GeneratorConfig cfg;
    cfg.seed = seed;
    cfg.vertex_count = {1, 6};
    cfg.edge_count = {1, 5};
    cfg.edge_size = {1, 4};
    Hypergraph h = random_hypergraph(cfg);
    ASSERT_FALSE(validate(h).has_value()) << seed;

    // Mutation 1: add an edge that reaches outside V.
    EdgeSet outside = h.edges();
    std::vector<VertexLabel> m = h.edges().begin()->members();
    m.push_back(at("outsider"));
    outside.insert(Edge(m));
    EXPECT_EQ(validate(Hypergraph(h.vertices(), outside))->message, "edge not subset of vertices");

    // Mutation 2: add an empty edge.
    EdgeSet with_empty = h.edges();
    with_empty.insert(Edge{});
    EXPECT_EQ(validate(Hypergraph(h.vertices(), with_empty))->message, "empty edge");

    // Mutation 3: drop a vertex that some edge uses.
    std::vector<VertexLabel> fewer;
    const VertexLabel used = h.edges().begin()->members().front();
    for (const auto& v : h.vertices()) {
      if (v != used) fewer.push_back(v);
    }
    EXPECT_EQ(validate(Hypergraph(fewer, h.edges()))->message, "edge not subset of vertices");
  }
}

TEST(Hypergraph, EdgesAreDeduplicatedAndOrderIgnored) {
  Hypergraph a({at("b"), at("a")}, std::vector<Edge>{Edge{at("a"), at("b")}, Edge{at("b"), at("a")}});
  EXPECT_EQ(a.edge_count(), 1u);
  EXPECT_EQ(a, kG);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(kG), 2u);
  EXPECT_EQ(rank(kH), 3u);
  EXPECT_EQ(rank(Hypergraph::from_atoms({"a", "b", "c"}, {})), 0u);
}

TEST(Rank, MatchesExplicitScanAndSimpleRankAtLeastTwo) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GeneratorConfig cfg;
    cfg.seed = seed;
    cfg.vertex_count = {3, 6};
    cfg.edge_count = {1, 4};
    cfg.edge_size = {2, 3};
    cfg.require_simple = seed % 2 == 0;
    Hypergraph h = random_hypergraph(cfg);
    std::size_t scan = 0;
    for (const auto& e : h.edges()) scan = e.size() > scan ? e.size() : scan;
    EXPECT_EQ(rank(h), scan);
    if (is_simple(h)) {
      EXPECT_GE(rank(h), 2u);
    }
  }
}

TEST(IsSimple, Examples) {
  EXPECT_TRUE(is_simple(kG));
  EXPECT_FALSE(is_simple(Hypergraph::from_atoms({"a", "b", "c"}, {{"a", "b"}, {"a", "b", "c"}})));
  EXPECT_FALSE(is_simple(Hypergraph::from_atoms({"a", "b"}, {{"a"}, {"a", "b"}})));
  EXPECT_TRUE(is_simple(Hypergraph::from_atoms({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}})));
}

TEST(IsHomomorphism, Examples) {
  EXPECT_TRUE(is_homomorphism(kG, kG, identity_mapping(kG)));

  VertexMapping collapse{{at("a"), at("x")}, {at("b"), at("x")}};
  EXPECT_FALSE(is_homomorphism(kG, kH, collapse));

  Hypergraph xy = Hypergraph::from_atoms({"x", "y"}, {{"x", "y"}});
  VertexMapping phi{{at("a"), at("x")}, {at("b"), at("y")}};
  EXPECT_TRUE(is_homomorphism(kG, xy, phi));
}

TEST(IsHomomorphism, DomainCodomainMismatch) {
  VertexMapping partial{{at("a"), at("x")}};
  EXPECT_THROW(is_homomorphism(kG, kH, partial), PreconditionError);
  VertexMapping escapes{{at("a"), at("x")}, {at("b"), at("w")}};
  EXPECT_THROW(is_homomorphism(kG, kH, escapes), PreconditionError);
}

TEST(IsHomomorphism, IdentityAlwaysHolds) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GeneratorConfig cfg;
    cfg.seed = seed;
    cfg.vertex_count = {0, 6};
    cfg.edge_count = {0, 5};
    Hypergraph h = random_hypergraph(cfg);
    EXPECT_TRUE(is_homomorphism(h, h, identity_mapping(h)));
  }
}

TEST(Invariants, Examples) {
  EXPECT_EQ(edge_size_multiset(kH), (std::vector<std::size_t>{3}));
  EXPECT_EQ(degree_sequence(kH), (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(edge_size_multiset(kG), (std::vector<std::size_t>{2}));
  EXPECT_EQ(degree_sequence(kG), (std::vector<std::size_t>{1, 1}));

  // G x H Cartesian: {a}xH, {b}xH (size 3) and {a,b}x{x},{y},{z} (size 2);
  // every (g,h) lies in one row and one column edge.
  Hypergraph gh = cartesian(kG, kH);
  EXPECT_EQ(edge_size_multiset(gh), (std::vector<std::size_t>{2, 2, 2, 3, 3}));
  EXPECT_EQ(degree_sequence(gh), (std::vector<std::size_t>{2, 2, 2, 2, 2, 2}));
}

TEST(Invariants, PreservedUnderRelabeling) {
  std::mt19937_64 rng(7);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GeneratorConfig cfg;
    cfg.seed = seed;
    cfg.vertex_count = {1, 7};
    cfg.edge_count = {0, 6};
    Hypergraph h = random_hypergraph(cfg);
    std::vector<VertexLabel> targets;
    for (std::size_t i = 0; i < h.vertex_count(); ++i) {
      targets.push_back(VertexLabel::atom("w" + std::to_string(i)));
    }
    std::shuffle(targets.begin(), targets.end(), rng);
    VertexMapping phi;
    for (std::size_t i = 0; i < h.vertex_count(); ++i) phi.emplace(h.vertices()[i], targets[i]);
    Hypergraph relabeled = apply_mapping(h, phi);
    EXPECT_EQ(edge_size_multiset(relabeled), edge_size_multiset(h));
    EXPECT_EQ(degree_sequence(relabeled), degree_sequence(h));
  }
}

}  // namespace
}  // namespace hgprod
