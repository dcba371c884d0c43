#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

#include "hgprod/counting.hpp"
#include "hgprod/hypergraph.hpp"
#include "hgprod/iso.hpp"
#include "hgprod/products.hpp"

namespace hgprod {

enum class Law { associativity, commutativity, lemma1 };

inline std::string_view to_string(Law law) {
  switch (law) {
    case Law::associativity: return "associativity";
    case Law::commutativity: return "commutativity";
    case Law::lemma1: return "lemma1";
  }
  return "?";
}

struct FactorSummary {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t rank = 0;

  static FactorSummary of(const Hypergraph& h) {
    return {h.vertex_count(), h.edge_count(), hgprod::rank(h)};
  }
  friend bool operator==(const FactorSummary&, const FactorSummary&) = default;
};

/// Outcome of comparing the two sides of an algebraic law.
///
/// The left side is mapped through the law's canonical vertex map (the
/// regrouping map for associativity, the swap map for commutativity, the
/// identity for lemma1) and compared to the right side as an edge set.
/// Invariants: psi_is_isomorphism implies equal counts; a witness edge
/// implies !psi_is_isomorphism; exists_isomorphism == false implies
/// !psi_is_isomorphism.
struct LawReport {
  ProductKind kind = ProductKind::cartesian;
  Law law = Law::associativity;
  std::uint64_t left_count = 0;
  std::uint64_t right_count = 0;
  bool psi_is_isomorphism = false;
  std::optional<bool> exists_isomorphism;
  std::optional<Edge> witness_edge;
  // "left" when witness_edge is an edge of the left side whose image is
  // missing on the right; "right" for the converse.
  std::string witness_side;
  std::vector<FactorSummary> factor_summaries;
  std::optional<std::string> note;

  /// The law holds on this instance: the canonical map works, or a full
  /// search found some other isomorphism.
  bool holds() const { return psi_is_isomorphism || exists_isomorphism.value_or(false); }

  bool consistent() const {
    if (psi_is_isomorphism && left_count != right_count) return false;
    if (witness_edge && psi_is_isomorphism) return false;
    if (exists_isomorphism == false && psi_is_isomorphism) return false;
    return true;
  }
};

namespace detail {

// Maps `left` through f and compares with `right`; fills counts, verdict
// and the first discrepancy in canonical edge order. Left-side witnesses
// keep left-side labels, right-side witnesses keep right-side labels.
template <typename F>
void compare_under_map(const Hypergraph& left, const Hypergraph& right, F&& f, LawReport& r) {
  r.left_count = left.edge_count();
  r.right_count = right.edge_count();
  Hypergraph mapped = map_labels(left, f);
  bool same_vertices = mapped.vertices() == right.vertices();
  r.psi_is_isomorphism = same_vertices && mapped.edges() == right.edges();
  if (r.psi_is_isomorphism) return;
  for (const auto& e : left.edges()) {
    std::vector<VertexLabel> m;
    for (const auto& v : e) m.push_back(f(v));
    if (!right.has_edge(Edge(std::move(m)))) {
      r.witness_edge = e;
      r.witness_side = "left";
      return;
    }
  }
  for (const auto& e : right.edges()) {
    if (!mapped.has_edge(e)) {
      r.witness_edge = e;
      r.witness_side = "right";
      return;
    }
  }
  if (!same_vertices) r.note = "vertex sets differ under the canonical map";
}

}  // namespace detail

/// Compares A*(B*C) with (A*B)*C through the regrouping map
/// (x,(y,z)) -> ((x,y),z). With full_iso, also runs the isomorphism search
/// when the regrouping map fails; oversized instances are refused with a
/// note rather than searched.
inline LawReport check_associativity(ProductKind kind, const Hypergraph& a, const Hypergraph& b,
                                     const Hypergraph& c, bool full_iso = false,
                                     std::size_t iso_bound = kDefaultIsoVertexBound) {
  LawReport r;
  r.kind = kind;
  r.law = Law::associativity;
  r.factor_summaries = {FactorSummary::of(a), FactorSummary::of(b), FactorSummary::of(c)};
  Hypergraph left = product(kind, a, product(kind, b, c));
  Hypergraph right = product(kind, product(kind, a, b), c);
  detail::compare_under_map(left, right, regroup_right_to_left, r);
  if (full_iso) {
    if (r.psi_is_isomorphism) {
      r.exists_isomorphism = true;
    } else {
      try {
        r.exists_isomorphism = are_isomorphic(left, right, iso_bound).isomorphic;
      } catch (const SearchBoundExceeded& ex) {
        r.note = ex.what();
      }
    }
  }
  return r;
}

/// Compares A*B with B*A through the swap map (u,v) -> (v,u).
inline LawReport check_commutativity(ProductKind kind, const Hypergraph& a, const Hypergraph& b) {
  LawReport r;
  r.kind = kind;
  r.law = Law::commutativity;
  r.factor_summaries = {FactorSummary::of(a), FactorSummary::of(b)};
  detail::compare_under_map(product(kind, a, b), product(kind, b, a), swap_map, r);
  return r;
}

/// Edge-set equality of G dirmax H and G dirnon H with no hypothesis check.
/// kind is reported as dirmax (left side); the right side is dirnon.
inline LawReport compare_dirmax_dirnon(const Hypergraph& g, const Hypergraph& h) {
  LawReport r;
  r.kind = ProductKind::dirmax;
  r.law = Law::lemma1;
  r.factor_summaries = {FactorSummary::of(g), FactorSummary::of(h)};
  detail::compare_under_map(dirmax(g, h), dirnon(g, h), [](const VertexLabel& v) { return v; }, r);
  return r;
}

/// G dirmax H == G dirnon H for simple G of rank 2 and simple H of rank at
/// most 3. Throws PreconditionError naming the first failed hypothesis.
inline LawReport check_lemma1(const Hypergraph& g, const Hypergraph& h) {
  if (!is_simple(g)) throw PreconditionError("lemma1 hypothesis failed: G is not simple");
  if (rank(g) != 2) throw PreconditionError("lemma1 hypothesis failed: r(G) = 2");
  if (!is_simple(h)) throw PreconditionError("lemma1 hypothesis failed: H is not simple");
  if (rank(h) > 3) throw PreconditionError("lemma1 hypothesis failed: r(H) <= 3");
  return compare_dirmax_dirnon(g, h);
}

// ---------------------------------------------------------------------------
// Non-associativity counterexample

inline Hypergraph counterexample_g() { return Hypergraph::from_atoms({"a", "b"}, {{"a", "b"}}); }
inline Hypergraph counterexample_h() {
  return Hypergraph::from_atoms({"x", "y", "z"}, {{"x", "y", "z"}});
}

struct CounterexampleReport {
  std::vector<LawReport> reports;  // dirmax, dirnon, strong
  Edge witness;                    // {(a,(a,x)),(a,(b,y)),(b,(b,z))}
  Edge regrouped_witness;          // {((a,a),x),((a,b),y),((b,b),z)}
  bool witness_in_dirmax_left = false;
  bool witness_in_strong_left = false;
  bool regrouped_in_dirmax_right = false;
  bool regrouped_in_strong_right = false;

  /// True when every number and membership matches the expected values.
  bool matches_expected() const {
    static constexpr std::uint64_t expected[3][2] = {{36, 12}, {36, 12}, {82, 58}};
    if (reports.size() != 3) return false;
    for (std::size_t i = 0; i < 3; ++i) {
      const auto& r = reports[i];
      if (r.left_count != expected[i][0] || r.right_count != expected[i][1]) return false;
      if (r.psi_is_isomorphism || r.exists_isomorphism != false) return false;
    }
    return witness_in_dirmax_left && witness_in_strong_left && !regrouped_in_dirmax_right &&
           !regrouped_in_strong_right;
  }
};

inline CounterexampleReport reproduce_counterexample() {
  const Hypergraph g = counterexample_g();
  const Hypergraph h = counterexample_h();
  CounterexampleReport out;
  for (auto kind : {ProductKind::dirmax, ProductKind::dirnon, ProductKind::strong}) {
    out.reports.push_back(check_associativity(kind, g, g, h, /*full_iso=*/true));
  }
  auto at = [](const char* s) { return VertexLabel::atom(s); };
  auto p = [](VertexLabel l, VertexLabel r) { return VertexLabel::pair(std::move(l), std::move(r)); };
  out.witness = Edge{p(at("a"), p(at("a"), at("x"))), p(at("a"), p(at("b"), at("y"))),
                     p(at("b"), p(at("b"), at("z")))};
  std::vector<VertexLabel> regrouped;
  for (const auto& v : out.witness) regrouped.push_back(regroup_right_to_left(v));
  out.regrouped_witness = Edge(std::move(regrouped));

  out.witness_in_dirmax_left = dirmax(g, dirmax(g, h)).has_edge(out.witness);
  out.witness_in_strong_left = strong(g, strong(g, h)).has_edge(out.witness);
  out.regrouped_in_dirmax_right = dirmax(dirmax(g, g), h).has_edge(out.regrouped_witness);
  out.regrouped_in_strong_right = strong(strong(g, g), h).has_edge(out.regrouped_witness);
  return out;
}

// ---------------------------------------------------------------------------
// Seeded random hypergraphs

class GeneratorInfeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename T>
struct Range {
  T min;
  T max;
};

struct GeneratorConfig {
  std::uint64_t seed = 0;
  Range<std::size_t> vertex_count{1, 4};
  Range<std::size_t> edge_count{0, 3};
  Range<std::size_t> edge_size{1, 4};
  bool require_simple = false;
  std::string label_prefix = "v";

  /// Empty when the configuration is usable, else the reason it is not.
  std::optional<std::string> problem() const {
    if (vertex_count.min > vertex_count.max) return "vertex_count range is empty";
    if (edge_count.min > edge_count.max) return "edge_count range is empty";
    if (edge_size.min > edge_size.max) return "edge_size range is empty";
    if (edge_size.min == 0) return "edge_size min must be at least 1";
    if (edge_size.min > vertex_count.max) return "edge_size min exceeds vertex_count max";
    if (require_simple && edge_size.min < 2) return "simple hypergraphs need edge_size min >= 2";
    if (!VertexLabel::is_valid_token(label_prefix + "0")) return "invalid label prefix";
    return std::nullopt;
  }
};

/// splitmix64 finalizer; used to derive independent seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix_seed(mix_seed(master) ^ mix_seed(index + 0x632be59bd9b4e019ULL));
}

namespace detail {

// Uniform draw in [lo, hi] by rejection, independent of the standard
// library's distribution implementations.
inline std::size_t draw(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return lo + static_cast<std::size_t>(rng());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<std::size_t>(x % span);
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

/// Deterministic function of cfg. Draws |V| uniformly from
/// [max(vertex min, edge_size min), vertex max], |E| from the edge range
/// capped at the number of edges that can exist on |V| vertices, then each edge by choosing a size in [edge_size min, min(edge_size max, |V|)]
/// and that many distinct vertices; duplicates (and, for simple output,
/// containments) are rejected and redrawn up to a fixed budget, after which
/// the whole edge set is redrawn. Throws GeneratorInfeasible when every
/// restart fails or the request is impossible, std::invalid_argument for a
/// bad configuration.
inline Hypergraph random_hypergraph(const GeneratorConfig& cfg) {
  if (auto p = cfg.problem()) throw std::invalid_argument("generator config: " + *p);
  std::mt19937_64 rng(cfg.seed);
  const std::size_t n =
      detail::draw(rng, std::max(cfg.vertex_count.min, cfg.edge_size.min), cfg.vertex_count.max);
  const std::size_t size_hi = std::min(cfg.edge_size.max, n);

  // Distinct edges that can exist; for simple output the largest antichain
  // confined to the allowed sizes, which is the widest single level.
  std::uint64_t available = 0;
  for (std::size_t s = cfg.edge_size.min; s <= size_hi; ++s) {
    const std::uint64_t level = detail::binomial(n, s);
    available = cfg.require_simple ? std::max(available, level) : available + level;
  }
  if (cfg.edge_count.min > available) {
    throw GeneratorInfeasible("requested at least " + std::to_string(cfg.edge_count.min) +
                              " edges but only " + std::to_string(available) +
                              " can exist on " + std::to_string(n) + " vertices");
  }
  const std::size_t m = detail::draw(
      rng, cfg.edge_count.min,
      static_cast<std::size_t>(std::min<std::uint64_t>(cfg.edge_count.max, available)));

  std::vector<VertexLabel> vertices;
  for (std::size_t i = 0; i < n; ++i) {
    vertices.push_back(VertexLabel::atom(cfg.label_prefix + std::to_string(i)));
  }

  std::vector<Edge> edges;
  std::vector<std::size_t> pool(n);
  // An early edge can make the remaining request unsatisfiable (e.g. a
  // full-size edge in a simple hypergraph), so the edge set is redrawn from
  // scratch a bounded number of times.
  constexpr std::size_t kRestarts = 20;
  const std::size_t budget = 100 * (m + 1);
  for (std::size_t restart = 0; edges.size() < m; ++restart) {
    if (restart == kRestarts) {
      throw GeneratorInfeasible("could not place " + std::to_string(m) + " edges after " +
                                std::to_string(kRestarts) + " restarts");
    }
    edges.clear();
    for (std::size_t attempts = 0; edges.size() < m && attempts < budget; ++attempts) {
      const std::size_t s = detail::draw(rng, cfg.edge_size.min, size_hi);
      for (std::size_t i = 0; i < n; ++i) pool[i] = i;
      std::vector<VertexLabel> members;
      for (std::size_t i = 0; i < s; ++i) {
        std::size_t j = detail::draw(rng, i, n - 1);
        std::swap(pool[i], pool[j]);
        members.push_back(vertices[pool[i]]);
      }
      Edge e(std::move(members));
      bool reject = false;
      for (const auto& other : edges) {
        if (other == e ||
            (cfg.require_simple && (e.is_subset_of(other) || other.is_subset_of(e)))) {
          reject = true;
          break;
        }
      }
      if (!reject) edges.push_back(std::move(e));
    }
  }
  return Hypergraph(std::move(vertices), edges);
}

// ---------------------------------------------------------------------------
// Fuzzing

struct FuzzWitness {
  std::uint64_t trial = 0;
  std::vector<Hypergraph> factors;
  LawReport report;
};

struct FuzzReport {
  ProductKind kind = ProductKind::cartesian;
  Law law = Law::associativity;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::uint64_t skipped = 0;  // trials whose factors could not be generated
  std::optional<FuzzWitness> minimal;
};

namespace detail {

struct TrialOutcome {
  bool skipped = false;
  bool failed = false;
  std::vector<Hypergraph> factors;
  LawReport report;
};

inline TrialOutcome run_trial(ProductKind kind, Law law, const GeneratorConfig& base,
                              std::uint64_t master_seed, std::uint64_t trial) {
  TrialOutcome out;
  const std::size_t arity = law == Law::associativity ? 3 : 2;
  const std::uint64_t trial_seed = derive_seed(master_seed, trial);
  try {
    for (std::size_t i = 0; i < arity; ++i) {
      GeneratorConfig cfg = base;
      cfg.seed = derive_seed(trial_seed, i);
      cfg.label_prefix = std::string(1, static_cast<char>('a' + i));
      out.factors.push_back(random_hypergraph(cfg));
    }
  } catch (const GeneratorInfeasible&) {
    out.skipped = true;
    return out;
  }
  if (law == Law::associativity) {
    out.report = check_associativity(kind, out.factors[0], out.factors[1], out.factors[2]);
  } else if (law == Law::commutativity) {
    out.report = check_commutativity(kind, out.factors[0], out.factors[1]);
  } else {
    throw std::invalid_argument("fuzzing supports associativity and commutativity");
  }
  out.failed = !out.report.holds();
  return out;
}

inline auto witness_rank(const TrialOutcome& t, std::uint64_t trial) {
  std::size_t v = 0, e = 0;
  for (const auto& f : t.factors) {
    v += f.vertex_count();
    e += f.edge_count();
  }
  return std::make_tuple(v, e, trial);
}

}  // namespace detail

/// Runs `trials` seeded instances of a law. Trial i draws its factors from
/// seeds derived from (cfg.seed, i), so the aggregate is identical for any
/// number of jobs. The minimal witness is the failing trial with the fewest
/// total vertices, then fewest total edges, then lowest index.
inline FuzzReport fuzz_law(ProductKind kind, Law law, const GeneratorConfig& cfg,
                           std::uint64_t trials, unsigned jobs = 1) {
  if (auto p = cfg.problem()) throw std::invalid_argument("generator config: " + *p);
  if (law == Law::lemma1) throw std::invalid_argument("fuzzing supports associativity and commutativity");
  std::vector<detail::TrialOutcome> outcomes(trials);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i = next++; i < trials; i = next++) {
      outcomes[i] = detail::run_trial(kind, law, cfg, cfg.seed, i);
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  FuzzReport rep;
  rep.kind = kind;
  rep.law = law;
  rep.seed = cfg.seed;
  rep.trials = trials;
  std::optional<std::uint64_t> best;
  for (std::uint64_t i = 0; i < trials; ++i) {
    const auto& t = outcomes[i];
    if (t.skipped) {
      ++rep.skipped;
      continue;
    }
    if (!t.failed) continue;
    ++rep.failures;
    if (!best || detail::witness_rank(t, i) < detail::witness_rank(outcomes[*best], *best)) best = i;
  }
  if (best) rep.minimal = FuzzWitness{*best, outcomes[*best].factors, outcomes[*best].report};
  return rep;
}

}  // namespace hgprod
