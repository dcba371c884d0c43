#pragma once

// hgprod command-line driver. Exit codes: 0 success / law holds,
// 1 law violated (or isomorphism absent, count disagreement), 2 usage or
// input error, 3 the built-in counterexample no longer reproduces.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hgprod/checker.hpp"
#include "hgprod/counting.hpp"
#include "hgprod/hg_format.hpp"
#include "hgprod/iso.hpp"
#include "hgprod/products.hpp"
#include "hgprod/report.hpp"

namespace hgprod::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRegression = 3;

/// Renames vertices v0..v(n-1) in canonical order. The legend lists
/// "vI = original" lines in the same order.
inline std::pair<Hypergraph, std::vector<std::string>> flatten(const Hypergraph& h) {
  VertexMapping m;
  std::vector<std::string> legend;
  for (std::size_t i = 0; i < h.vertex_count(); ++i) {
    auto name = "v" + std::to_string(i);
    m.emplace(h.vertices()[i], VertexLabel::atom(name));
    legend.push_back(name + " = " + h.vertices()[i].str());
  }
  return {map_labels(h, [&](const VertexLabel& v) { return m.at(v); }), std::move(legend)};
}

namespace detail {

inline Hypergraph load(const std::string& path) {
  Hypergraph h = read_hg_file(path);
  if (auto v = validate(h)) throw std::runtime_error(path + ": " + v->str());
  return h;
}

inline std::vector<std::string> kind_names() {
  std::vector<std::string> out;
  for (auto k : kAllKinds) out.emplace_back(to_string(k));
  return out;
}

inline void emit(std::ostream& out, bool as_json, const std::string& text, const json& j) {
  if (as_json) {
    out << j.dump(2) << '\n';
  } else {
    out << text;
  }
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypergraph products, edge counts, isomorphism and algebraic-law audits",
               "hgprod"};
  app.require_subcommand(1);

  std::string kind_name;
  std::vector<std::string> files;
  bool as_json = false;

  // product
  auto* product_cmd = app.add_subcommand("product", "Build a product of two .hg files");
  std::string out_path;
  bool flatten_labels = false;
  product_cmd->add_option("--kind", kind_name, "Product kind")
      ->required()
      ->check(CLI::IsMember(detail::kind_names()));
  product_cmd->add_option("files", files, "A.hg B.hg")->required()->expected(2);
  product_cmd->add_option("-o,--output", out_path, "Write the product here instead of stdout");
  product_cmd->add_flag("--flatten", flatten_labels,
                        "Rename vertices v0..vn; the legend is written as comment lines");

  // count
  auto* count_cmd = app.add_subcommand("count", "Closed-form edge count of a product");
  bool verify = false;
  count_cmd->add_option("--kind", kind_name, "cartesian, dirmax or strong")
      ->required()
      ->check(CLI::IsMember({"cartesian", "dirmax", "strong"}));
  count_cmd->add_option("files", files, "A.hg B.hg")->required()->expected(2);
  count_cmd->add_flag("--verify", verify, "Also enumerate the product and compare");
  count_cmd->add_flag("--json", as_json, "Structured output");

  // iso
  auto* iso_cmd = app.add_subcommand("iso", "Isomorphism test");
  std::size_t max_vertices = kDefaultIsoVertexBound;
  iso_cmd->add_option("files", files, "A.hg B.hg")->required()->expected(2);
  iso_cmd->add_option("--max-vertices", max_vertices, "Search bound")
      ->check(CLI::Range(std::size_t{0}, kMaxIsoVertexBound));
  iso_cmd->add_flag("--json", as_json, "Structured output");

  // assoc
  auto* assoc_cmd = app.add_subcommand("assoc", "Associativity audit A*(B*C) vs (A*B)*C");
  bool full_iso = false;
  assoc_cmd->add_option("--kind", kind_name, "Product kind")
      ->required()
      ->check(CLI::IsMember(detail::kind_names()));
  assoc_cmd->add_option("files", files, "A.hg B.hg C.hg")->required()->expected(3);
  assoc_cmd->add_flag("--full-iso", full_iso, "Search for any isomorphism if regrouping fails");
  assoc_cmd->add_option("--max-vertices", max_vertices, "Bound for the full search")
      ->check(CLI::Range(std::size_t{0}, kMaxIsoVertexBound));
  assoc_cmd->add_flag("--json", as_json, "Structured output");

  // commut
  auto* commut_cmd = app.add_subcommand("commut", "Commutativity audit A*B vs B*A");
  commut_cmd->add_option("--kind", kind_name, "Product kind")
      ->required()
      ->check(CLI::IsMember(detail::kind_names()));
  commut_cmd->add_option("files", files, "A.hg B.hg")->required()->expected(2);
  commut_cmd->add_flag("--json", as_json, "Structured output");

  // lemma1
  auto* lemma_cmd =
      app.add_subcommand("lemma1", "Check G dirmax H == G dirnon H (simple, r(G)=2, r(H)<=3)");
  bool unchecked = false;
  lemma_cmd->add_option("files", files, "G.hg H.hg")->required()->expected(2);
  lemma_cmd->add_flag("--unchecked", unchecked, "Compare even if the hypotheses fail");
  lemma_cmd->add_flag("--json", as_json, "Structured output");

  // counterexample
  auto* cex_cmd =
      app.add_subcommand("counterexample", "Reproduce the dirmax/dirnon/strong counterexample");
  cex_cmd->add_flag("--json", as_json, "Structured output");

  // fuzz
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Seeded random audit of a law");
  std::string law_name;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  unsigned jobs = 1;
  GeneratorConfig gen;
  gen.vertex_count = {1, 4};
  gen.edge_count = {1, 3};
  gen.edge_size = {1, 3};
  std::optional<std::size_t> min_vertices;
  fuzz_cmd->add_option("--kind", kind_name, "Product kind")
      ->required()
      ->check(CLI::IsMember(detail::kind_names()));
  fuzz_cmd->add_option("--law", law_name, "assoc or commut")
      ->required()
      ->check(CLI::IsMember({"assoc", "commut"}));
  fuzz_cmd->add_option("--seed", seed, "Master seed")->required();
  fuzz_cmd->add_option("--trials", trials, "Number of trials")->required();
  fuzz_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--max-vertices", gen.vertex_count.max, "Vertices per factor, upper bound");
  fuzz_cmd->add_option("--min-vertices", min_vertices,
                       "Vertices per factor, lower bound (default 1, or edge-size-max with --simple)");
  fuzz_cmd->add_option("--max-edges", gen.edge_count.max, "Edges per factor, upper bound");
  fuzz_cmd->add_option("--min-edges", gen.edge_count.min, "Edges per factor, lower bound");
  fuzz_cmd->add_option("--edge-size-min", gen.edge_size.min, "Smallest edge size");
  fuzz_cmd->add_option("--edge-size-max", gen.edge_size.max, "Largest edge size");
  fuzz_cmd->add_flag("--simple", gen.require_simple, "Only simple factors");
  fuzz_cmd->add_flag("--json", as_json, "Structured output");

  // fmt
  auto* fmt_cmd = app.add_subcommand("fmt", "Print a .hg file in canonical form");
  fmt_cmd->add_option("file", files, "FILE.hg")->required()->expected(1);

  std::vector<const char*> argv;
  argv.push_back("hgprod");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const auto kind = parse_kind(kind_name);
  try {
    if (product_cmd->parsed()) {
      Hypergraph p = product(*kind, detail::load(files[0]), detail::load(files[1]));
      std::string text;
      if (flatten_labels) {
        auto [flat, legend] = flatten(p);
        for (const auto& line : legend) text += "# " + line + '\n';
        text += serialize_hg(flat);
      } else {
        text = serialize_hg(p);
      }
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot write '" + out_path + "'");
        f << text;
      }
      return kExitOk;
    }

    if (count_cmd->parsed()) {
      Hypergraph a = detail::load(files[0]), b = detail::load(files[1]);
      CountReport r = verify ? count_report(*kind, a, b)
                             : CountReport{*kind, formula_edge_count(*kind, a, b), 0, false};
      detail::emit(out, as_json, to_text(r, verify), to_json(r, verify));
      return verify && !r.agreement ? kExitViolated : kExitOk;
    }

    if (iso_cmd->parsed()) {
      IsoResult r = are_isomorphic(detail::load(files[0]), detail::load(files[1]), max_vertices);
      detail::emit(out, as_json, to_text(r), to_json(r));
      return r.isomorphic ? kExitOk : kExitViolated;
    }

    if (assoc_cmd->parsed()) {
      LawReport r = check_associativity(*kind, detail::load(files[0]), detail::load(files[1]),
                                        detail::load(files[2]), full_iso, max_vertices);
      detail::emit(out, as_json, to_text(r), to_json(r));
      return r.holds() ? kExitOk : kExitViolated;
    }

    if (commut_cmd->parsed()) {
      LawReport r = check_commutativity(*kind, detail::load(files[0]), detail::load(files[1]));
      detail::emit(out, as_json, to_text(r), to_json(r));
      return r.holds() ? kExitOk : kExitViolated;
    }

    if (lemma_cmd->parsed()) {
      Hypergraph g = detail::load(files[0]), h = detail::load(files[1]);
      LawReport r;
      try {
        r = check_lemma1(g, h);
      } catch (const PreconditionError& ex) {
        if (!unchecked) throw;
        err << "warning: " << ex.what() << '\n';
        r = compare_dirmax_dirnon(g, h);
      }
      detail::emit(out, as_json, to_text(r), to_json(r));
      return r.holds() ? kExitOk : kExitViolated;
    }

    if (cex_cmd->parsed()) {
      CounterexampleReport c = reproduce_counterexample();
      detail::emit(out, as_json, to_text(c), to_json(c));
      if (!c.matches_expected()) {
        err << "error: counterexample numbers do not match the expected values\n";
        return kExitRegression;
      }
      return kExitViolated;
    }

    if (fuzz_cmd->parsed()) {
      if (min_vertices) {
        gen.vertex_count.min = *min_vertices;
      } else if (gen.require_simple) {
        gen.vertex_count.min = std::min(gen.edge_size.max, gen.vertex_count.max);
      }
      gen.seed = seed;
      const Law law = law_name == "assoc" ? Law::associativity : Law::commutativity;
      FuzzReport r = fuzz_law(*kind, law, gen, trials, jobs);
      detail::emit(out, as_json, to_text(r), to_json(r));
      return r.failures ? kExitViolated : kExitOk;
    }

    if (fmt_cmd->parsed()) {
      out << serialize_hg(detail::load(files[0]));
      return kExitOk;
    }
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hgprod::cli
