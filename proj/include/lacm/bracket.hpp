#pragma once

#include <map>
#include <memory>
#include <string>

#include "lacm/rational.hpp"

namespace lacm {

/* Binary bracket words over the generators A and B.
 *
 * Grading conventions:
 *   order(A) = order(B) = 1,  order([x,y]) = order(x) + order(y)
 *   degree(A) = 2, degree(B) = 0, degree([x,y]) = max(degree(x)+degree(y)-1, 0)
 *
 * Serialization grammar (no whitespace):  expr := "A" | "B" | "[" expr "," expr "]"
 */
class BracketExpr {
 public:
  static BracketExpr A();
  static BracketExpr B();
  static BracketExpr bracket(const BracketExpr& left, const BracketExpr& right);
  static BracketExpr parse(const std::string& text);

  bool is_generator() const { return node_->left == nullptr; }
  bool is_A() const;
  bool is_B() const;
  BracketExpr left() const;   // throws std::logic_error on generators
  BracketExpr right() const;  // throws std::logic_error on generators

  int order() const { return node_->order; }
  int degree() const { return node_->degree; }
  const std::string& str() const { return node_->repr; }

  bool operator==(const BracketExpr& o) const { return node_ == o.node_ || node_->repr == o.node_->repr; }
  bool operator!=(const BracketExpr& o) const { return !(*this == o); }

 private:
  struct Node {
    std::shared_ptr<const Node> left, right;  // both null for generators
    int order;
    int degree;
    std::string repr;
  };
  explicit BracketExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/* Total order on bracket words: degree ascending, then order ascending, then
 * (for two composites with equal keys) right factors compared first, left
 * factors break remaining ties.  Returns -1, 0, +1. */
int compare(const BracketExpr& u, const BracketExpr& v);

struct BracketLess {
  bool operator()(const BracketExpr& a, const BracketExpr& b) const { return compare(a, b) < 0; }
};

/* Membership in the generalized Hall set induced by compare():
 * generators are Hall; [a,b] is Hall iff a,b Hall, a < b, and b is a
 * generator or left(b) <= a. */
bool is_hall(const BracketExpr& x);

/* A Hall word survives in the quotient by the ideal generated by brackets of
 * degree-0 pairs iff no subterm is a bracket of two degree-0 subterms;
 * equivalently [u1,u2] is kept iff u1,u2 are kept and degree(u2) > 0. */
bool is_quotient_basis(const BracketExpr& x);

/* x1 * x2 := [x2, [x1, A]] for degree-0 arguments (throws otherwise). */
BracketExpr star(const BracketExpr& x1, const BracketExpr& x2);

/* Linear combination of quotient-basis Hall words, keyed in basis order. */
using LieVector = std::map<BracketExpr, Rational, BracketLess>;

}  // namespace lacm
