#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hgprod {

/// Raised when a label does not have the nesting shape an operation needs,
/// e.g. regrouping an atom or swapping a non-pair.
class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Vertex label: either an atom token or an ordered pair of labels.
///
/// Product vertices are pairs of factor vertices, so nested products carry
/// their grouping in the label itself, e.g. (a,(b,x)) versus ((a,b),x).
/// Labels are immutable and cheap to copy (shared structure).
///
/// Ordering: atoms compare by token, every atom sorts before every pair,
/// pairs compare left component first, then right.
class VertexLabel {
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  struct Node {
    std::string token;  // atoms only
    NodePtr left;       // pairs only
    NodePtr right;
  };

 public:
  /// Builds an atom. Throws std::invalid_argument for tokens that are
  /// empty or contain whitespace, commas or parentheses.
  static VertexLabel atom(std::string token) {
    if (!is_valid_token(token)) {
      throw std::invalid_argument("invalid atom token '" + token + "'");
    }
    return VertexLabel(std::make_shared<const Node>(Node{std::move(token), nullptr, nullptr}));
  }

  static VertexLabel pair(VertexLabel left, VertexLabel right) {
    return VertexLabel(
        std::make_shared<const Node>(Node{{}, std::move(left.node_), std::move(right.node_)}));
  }

  /// Parses the serialized form: a token, or "(l,r)" with no whitespace.
  static VertexLabel parse(std::string_view text) {
    std::size_t pos = 0;
    VertexLabel v = parse_at(text, pos);
    if (pos != text.size()) {
      throw std::invalid_argument("trailing characters in label '" + std::string(text) + "'");
    }
    return v;
  }

  static bool is_valid_token(std::string_view token) {
    if (token.empty()) return false;
    for (char c : token) {
      if (c == ',' || c == '(' || c == ')' || c == ' ' || c == '\t' || c == '\n' ||
          c == '\r' || c == '\v' || c == '\f') {
        return false;
      }
    }
    return true;
  }

  bool is_atom() const { return node_->left == nullptr; }
  bool is_pair() const { return node_->left != nullptr; }

  const std::string& token() const {
    if (is_pair()) throw ShapeMismatch("token() on pair label " + str());
    return node_->token;
  }
  VertexLabel left() const {
    if (is_atom()) throw ShapeMismatch("left() on atom label " + str());
    return VertexLabel(node_->left);
  }
  VertexLabel right() const {
    if (is_atom()) throw ShapeMismatch("right() on atom label " + str());
    return VertexLabel(node_->right);
  }

  std::string str() const {
    std::string out;
    append_to(out);
    return out;
  }

  void append_to(std::string& out) const { append_node(*node_, out); }

  friend std::strong_ordering operator<=>(const VertexLabel& a, const VertexLabel& b) {
    return compare_nodes(a.node_.get(), b.node_.get());
  }

  friend bool operator==(const VertexLabel& a, const VertexLabel& b) {
    return compare_nodes(a.node_.get(), b.node_.get()) == 0;
  }

 private:
  explicit VertexLabel(NodePtr n) : node_(std::move(n)) {}

  static void append_node(const Node& n, std::string& out) {
    if (!n.left) {
      out += n.token;
      return;
    }
    out += '(';
    append_node(*n.left, out);
    out += ',';
    append_node(*n.right, out);
    out += ')';
  }

  static std::strong_ordering compare_nodes(const Node* a, const Node* b) {
    if (a == b) return std::strong_ordering::equal;
    const bool a_atom = a->left == nullptr;
    const bool b_atom = b->left == nullptr;
    if (a_atom != b_atom) return a_atom ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a_atom) return a->token <=> b->token;
    if (auto c = compare_nodes(a->left.get(), b->left.get()); c != 0) return c;
    return compare_nodes(a->right.get(), b->right.get());
  }

  static VertexLabel parse_at(std::string_view text, std::size_t& pos) {
    if (pos >= text.size()) {
      throw std::invalid_argument("unexpected end of label '" + std::string(text) + "'");
    }
    if (text[pos] == '(') {
      ++pos;
      VertexLabel l = parse_at(text, pos);
      expect(text, pos, ',');
      VertexLabel r = parse_at(text, pos);
      expect(text, pos, ')');
      return pair(std::move(l), std::move(r));
    }
    std::size_t end = pos;
    while (end < text.size() && text[end] != ',' && text[end] != ')' && text[end] != '(') ++end;
    std::string tok(text.substr(pos, end - pos));
    pos = end;
    return atom(std::move(tok));
  }

  static void expect(std::string_view text, std::size_t& pos, char c) {
    if (pos >= text.size() || text[pos] != c) {
      throw std::invalid_argument(std::string("expected '") + c + "' in label '" +
                                  std::string(text) + "'");
    }
    ++pos;
  }

  NodePtr node_;
};

/// (x,(y,z)) -> ((x,y),z)
inline VertexLabel regroup_right_to_left(const VertexLabel& v) {
  if (!v.is_pair() || !v.right().is_pair()) {
    throw ShapeMismatch("regroup_right_to_left expects (x,(y,z)), got " + v.str());
  }
  const VertexLabel inner = v.right();
  return VertexLabel::pair(VertexLabel::pair(v.left(), inner.left()), inner.right());
}

/// ((x,y),z) -> (x,(y,z))
inline VertexLabel regroup_left_to_right(const VertexLabel& v) {
  if (!v.is_pair() || !v.left().is_pair()) {
    throw ShapeMismatch("regroup_left_to_right expects ((x,y),z), got " + v.str());
  }
  const VertexLabel inner = v.left();
  return VertexLabel::pair(inner.left(), VertexLabel::pair(inner.right(), v.right()));
}

/// (l,r) -> (r,l)
inline VertexLabel swap_map(const VertexLabel& v) {
  if (!v.is_pair()) throw ShapeMismatch("swap_map expects a pair, got " + v.str());
  return VertexLabel::pair(v.right(), v.left());
}

}  // namespace hgprod
