#include "lacm/bracket.hpp"

#include <algorithm>
#include <stdexcept>

namespace lacm {

BracketExpr BracketExpr::A() {
  static const auto node = std::make_shared<Node>(Node{nullptr, nullptr, 1, 2, "A"});
  return BracketExpr(node);
}

BracketExpr BracketExpr::B() {
  static const auto node = std::make_shared<Node>(Node{nullptr, nullptr, 1, 0, "B"});
  return BracketExpr(node);
}

BracketExpr BracketExpr::bracket(const BracketExpr& left, const BracketExpr& right) {
  auto n = std::make_shared<Node>();
  n->left = left.node_;
  n->right = right.node_;
  n->order = left.order() + right.order();
  n->degree = std::max(left.degree() + right.degree() - 1, 0);
  n->repr.reserve(left.str().size() + right.str().size() + 3);
  n->repr += '[';
  n->repr += left.str();
  n->repr += ',';
  n->repr += right.str();
  n->repr += ']';
  return BracketExpr(std::move(n));
}

bool BracketExpr::is_A() const { return is_generator() && node_->degree == 2; }
bool BracketExpr::is_B() const { return is_generator() && node_->degree == 0; }

BracketExpr BracketExpr::left() const {
  if (is_generator()) throw std::logic_error("left(): generator has no factors");
  return BracketExpr(node_->left);
}

BracketExpr BracketExpr::right() const {
  if (is_generator()) throw std::logic_error("right(): generator has no factors");
  return BracketExpr(node_->right);
}

namespace {

BracketExpr parse_at(const std::string& s, size_t& pos) {
  if (pos >= s.size()) throw std::invalid_argument("bracket parse: unexpected end of input");
  char c = s[pos];
  if (c == 'A') {
    ++pos;
    return BracketExpr::A();
  }
  if (c == 'B') {
    ++pos;
    return BracketExpr::B();
  }
  if (c != '[') throw std::invalid_argument("bracket parse: expected 'A', 'B' or '[' at offset " + std::to_string(pos));
  ++pos;
  BracketExpr l = parse_at(s, pos);
  if (pos >= s.size() || s[pos] != ',') throw std::invalid_argument("bracket parse: expected ',' at offset " + std::to_string(pos));
  ++pos;
  BracketExpr r = parse_at(s, pos);
  if (pos >= s.size() || s[pos] != ']') throw std::invalid_argument("bracket parse: expected ']' at offset " + std::to_string(pos));
  ++pos;
  return BracketExpr::bracket(l, r);
}

}  // namespace

BracketExpr BracketExpr::parse(const std::string& text) {
  size_t pos = 0;
  BracketExpr e = parse_at(text, pos);
  if (pos != text.size()) throw std::invalid_argument("bracket parse: trailing characters at offset " + std::to_string(pos));
  return e;
}

int compare(const BracketExpr& u, const BracketExpr& v) {
  if (u == v) return 0;
  if (u.degree() != v.degree()) return u.degree() < v.degree() ? -1 : 1;
  if (u.order() != v.order()) return u.order() < v.order() ? -1 : 1;
  /* Distinct elements with equal (degree, order) are necessarily both
   * composite: generators are the only order-1 words and differ in degree. */
  int c = compare(u.right(), v.right());
  if (c != 0) return c;
  return compare(u.left(), v.left());
}

bool is_hall(const BracketExpr& x) {
  if (x.is_generator()) return true;
  BracketExpr a = x.left(), b = x.right();
  if (!is_hall(a) || !is_hall(b)) return false;
  if (compare(a, b) >= 0) return false;
  if (b.is_generator()) return true;
  return compare(b.left(), a) <= 0;
}

bool is_quotient_basis(const BracketExpr& x) {
  if (x.is_generator()) return true;
  return x.right().degree() > 0 && is_quotient_basis(x.left()) && is_quotient_basis(x.right());
}

BracketExpr star(const BracketExpr& x1, const BracketExpr& x2) {
  if (x1.degree() != 0 || x2.degree() != 0) throw std::invalid_argument("star: both arguments must have degree 0");
  return BracketExpr::bracket(x2, BracketExpr::bracket(x1, BracketExpr::A()));
}

}  // namespace lacm
