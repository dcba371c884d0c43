#pragma once

// Reader and writer for the line-oriented ".hg" hypergraph format:
//
//   # comment
//   vertices: a b c
//   edge: a b
//   edge: a b c
//
// Pair labels are written "(l,r)" with no interior whitespace.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hgprod/hypergraph.hpp"

namespace hgprod {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n\v\f";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Returns the remainder after "key:" or nullopt if the line has another key.
inline std::optional<std::string_view> strip_key(std::string_view line, std::string_view key) {
  if (line.substr(0, key.size()) != key) return std::nullopt;
  auto rest = line.substr(key.size());
  if (rest.empty() || rest.front() != ':') return std::nullopt;
  return rest.substr(1);
}

}  // namespace detail

inline Hypergraph parse_hg(std::string_view text) {
  std::vector<VertexLabel> vertices;
  std::vector<Edge> edges;
  bool have_vertices = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (!have_vertices) {
      auto rest = detail::strip_key(line, "vertices");
      if (!rest) throw ParseError(line_no, "expected 'vertices:' line before any edge");
      for (auto tok : detail::split_ws(*rest)) {
        try {
          vertices.push_back(VertexLabel::parse(tok));
        } catch (const std::invalid_argument& ex) {
          throw ParseError(line_no, ex.what());
        }
      }
      std::sort(vertices.begin(), vertices.end());
      have_vertices = true;
      continue;
    }

    auto rest = detail::strip_key(line, "edge");
    if (!rest) throw ParseError(line_no, "malformed line '" + std::string(line) + "'");
    std::vector<VertexLabel> members;
    for (auto tok : detail::split_ws(*rest)) {
      VertexLabel v = [&] {
        try {
          return VertexLabel::parse(tok);
        } catch (const std::invalid_argument& ex) {
          throw ParseError(line_no, ex.what());
        }
      }();
      if (!std::binary_search(vertices.begin(), vertices.end(), v)) {
        throw ParseError(line_no, "unknown vertex '" + std::string(tok) + "'");
      }
      members.push_back(std::move(v));
    }
    if (members.empty()) throw ParseError(line_no, "empty edge");
    edges.emplace_back(std::move(members));
  }
  if (!have_vertices) throw ParseError(line_no, "missing 'vertices:' line");
  return Hypergraph(std::move(vertices), edges);
}

/// Canonical text form; parse_hg(serialize_hg(h)) == h.
inline std::string serialize_hg(const Hypergraph& h) {
  std::string out = "vertices:";
  for (const auto& v : h.vertices()) {
    out += ' ';
    v.append_to(out);
  }
  out += '\n';
  for (const auto& e : h.edges()) {
    out += "edge:";
    for (const auto& v : e) {
      out += ' ';
      v.append_to(out);
    }
    out += '\n';
  }
  return out;
}

inline Hypergraph read_hg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_hg(ss.str());
  } catch (const ParseError& ex) {
    throw std::runtime_error(path + ": " + ex.what());
  }
}

}  // namespace hgprod
