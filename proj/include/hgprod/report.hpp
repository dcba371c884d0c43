#pragma once

// Text and JSON renderings of checker, counting and isomorphism results.
// Field names are fixed: kind, law, left_count, right_count, psi_iso,
// full_iso, witness.

#include <sstream>
#include <string>

#include "hgprod/checker.hpp"
#include "hgprod/counting.hpp"
#include "hgprod/hg_format.hpp"
#include "hgprod/iso.hpp"
#include "json.hpp"

namespace hgprod {

using json = nlohmann::ordered_json;

namespace detail {

inline std::string members_str(const Edge& e) {
  std::string out;
  for (const auto& v : e) {
    if (!out.empty()) out += ' ';
    v.append_to(out);
  }
  return out;
}

inline std::string full_iso_str(const LawReport& r) {
  if (!r.exists_isomorphism) return "not-run";
  return *r.exists_isomorphism ? "true" : "false";
}

}  // namespace detail

inline std::string to_text(const LawReport& r) {
  std::ostringstream os;
  os << "kind: " << to_string(r.kind) << '\n'
     << "law: " << to_string(r.law) << '\n'
     << "left_count: " << r.left_count << '\n'
     << "right_count: " << r.right_count << '\n'
     << "psi_iso: " << (r.psi_is_isomorphism ? "true" : "false") << '\n'
     << "full_iso: " << detail::full_iso_str(r) << '\n';
  if (r.witness_edge) {
    os << "witness: " << r.witness_side << ' ' << r.witness_edge->str() << '\n';
  } else {
    os << "witness: none\n";
  }
  os << "factors:";
  for (const auto& f : r.factor_summaries) os << ' ' << f.vertices << '/' << f.edges << '/' << f.rank;
  os << '\n';
  if (r.note) os << "note: " << *r.note << '\n';
  return os.str();
}

inline json to_json(const LawReport& r) {
  json j;
  j["kind"] = to_string(r.kind);
  j["law"] = to_string(r.law);
  j["left_count"] = r.left_count;
  j["right_count"] = r.right_count;
  j["psi_iso"] = r.psi_is_isomorphism;
  j["full_iso"] = r.exists_isomorphism ? json(*r.exists_isomorphism) : json(nullptr);
  if (r.witness_edge) {
    json w = json::array();
    for (const auto& v : *r.witness_edge) w.push_back(v.str());
    j["witness"] = w;
    j["witness_side"] = r.witness_side;
  } else {
    j["witness"] = nullptr;
  }
  json fs = json::array();
  for (const auto& f : r.factor_summaries) {
    fs.push_back({{"vertices", f.vertices}, {"edges", f.edges}, {"rank", f.rank}});
  }
  j["factors"] = fs;
  if (r.note) j["note"] = *r.note;
  return j;
}

inline LawReport law_report_from_json(const json& j) {
  LawReport r;
  auto kind = parse_kind(j.at("kind").get<std::string>());
  if (!kind) throw std::invalid_argument("unknown kind in report");
  r.kind = *kind;
  const auto law = j.at("law").get<std::string>();
  if (law == "associativity") {
    r.law = Law::associativity;
  } else if (law == "commutativity") {
    r.law = Law::commutativity;
  } else if (law == "lemma1") {
    r.law = Law::lemma1;
  } else {
    throw std::invalid_argument("unknown law in report");
  }
  r.left_count = j.at("left_count").get<std::uint64_t>();
  r.right_count = j.at("right_count").get<std::uint64_t>();
  r.psi_is_isomorphism = j.at("psi_iso").get<bool>();
  if (!j.at("full_iso").is_null()) r.exists_isomorphism = j.at("full_iso").get<bool>();
  if (!j.at("witness").is_null()) {
    std::vector<VertexLabel> m;
    for (const auto& s : j.at("witness")) m.push_back(VertexLabel::parse(s.get<std::string>()));
    r.witness_edge = Edge(std::move(m));
    r.witness_side = j.at("witness_side").get<std::string>();
  }
  for (const auto& f : j.at("factors")) {
    r.factor_summaries.push_back({f.at("vertices").get<std::size_t>(),
                                  f.at("edges").get<std::size_t>(),
                                  f.at("rank").get<std::size_t>()});
  }
  if (j.contains("note")) r.note = j.at("note").get<std::string>();
  return r;
}

inline std::string to_text(const CountReport& r, bool verified) {
  std::ostringstream os;
  os << "kind: " << to_string(r.kind) << '\n' << "formula_count: " << r.formula_count << '\n';
  if (verified) {
    os << "enumerated_count: " << r.enumerated_count << '\n'
       << "agreement: " << (r.agreement ? "true" : "false") << '\n';
  }
  return os.str();
}

inline json to_json(const CountReport& r, bool verified) {
  json j;
  j["kind"] = to_string(r.kind);
  j["formula_count"] = r.formula_count;
  if (verified) {
    j["enumerated_count"] = r.enumerated_count;
    j["agreement"] = r.agreement;
  }
  return j;
}

inline std::string to_text(const IsoResult& r) {
  std::ostringstream os;
  os << "isomorphic: " << (r.isomorphic ? "true" : "false") << '\n'
     << "nodes_explored: " << r.nodes_explored << '\n';
  if (r.witness) {
    for (const auto& [from, to] : *r.witness) os << "map: " << from.str() << ' ' << to.str() << '\n';
  }
  return os.str();
}

inline json to_json(const IsoResult& r) {
  json j;
  j["isomorphic"] = r.isomorphic;
  j["nodes_explored"] = r.nodes_explored;
  if (r.witness) {
    json m = json::array();
    for (const auto& [from, to] : *r.witness) m.push_back({from.str(), to.str()});
    j["witness"] = m;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

inline std::string to_text(const CounterexampleReport& c) {
  std::ostringstream os;
  for (const auto& r : c.reports) os << to_text(r) << '\n';
  os << "edge: " << c.witness.str() << '\n'
     << "edge_in_dirmax_left: " << (c.witness_in_dirmax_left ? "true" : "false") << '\n'
     << "edge_in_strong_left: " << (c.witness_in_strong_left ? "true" : "false") << '\n'
     << "regrouped: " << c.regrouped_witness.str() << '\n'
     << "regrouped_in_dirmax_right: " << (c.regrouped_in_dirmax_right ? "true" : "false") << '\n'
     << "regrouped_in_strong_right: " << (c.regrouped_in_strong_right ? "true" : "false") << '\n'
     << "matches_expected: " << (c.matches_expected() ? "true" : "false") << '\n';
  return os.str();
}

inline json to_json(const CounterexampleReport& c) {
  json j;
  json reports = json::array();
  for (const auto& r : c.reports) reports.push_back(to_json(r));
  j["reports"] = reports;
  j["edge"] = c.witness.str();
  j["edge_in_dirmax_left"] = c.witness_in_dirmax_left;
  j["edge_in_strong_left"] = c.witness_in_strong_left;
  j["regrouped"] = c.regrouped_witness.str();
  j["regrouped_in_dirmax_right"] = c.regrouped_in_dirmax_right;
  j["regrouped_in_strong_right"] = c.regrouped_in_strong_right;
  j["matches_expected"] = c.matches_expected();
  return j;
}

inline std::string to_text(const FuzzReport& f) {
  std::ostringstream os;
  os << "kind: " << to_string(f.kind) << '\n'
     << "law: " << to_string(f.law) << '\n'
     << "seed: " << f.seed << '\n'
     << "trials: " << f.trials << '\n'
     << "skipped: " << f.skipped << '\n'
     << "failures: " << f.failures << '\n';
  if (f.minimal) {
    os << "minimal_trial: " << f.minimal->trial << '\n';
    for (std::size_t i = 0; i < f.minimal->factors.size(); ++i) {
      os << "# factor " << i << '\n' << serialize_hg(f.minimal->factors[i]);
    }
    os << to_text(f.minimal->report);
  }
  return os.str();
}

inline json to_json(const FuzzReport& f) {
  json j;
  j["kind"] = to_string(f.kind);
  j["law"] = to_string(f.law);
  j["seed"] = f.seed;
  j["trials"] = f.trials;
  j["skipped"] = f.skipped;
  j["failures"] = f.failures;
  if (f.minimal) {
    json w;
    w["trial"] = f.minimal->trial;
    json fs = json::array();
    for (const auto& h : f.minimal->factors) fs.push_back(serialize_hg(h));
    w["factors"] = fs;
    w["report"] = to_json(f.minimal->report);
    j["minimal"] = w;
  } else {
    j["minimal"] = nullptr;
  }
  return j;
}

}  // namespace hgprod
