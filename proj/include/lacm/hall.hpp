#pragma once

#include <mutex>
#include <unordered_map>
#include <vector>

#include "lacm/bracket.hpp"

namespace lacm {

enum class HallClass { basis, ideal };

struct HallElement {
  BracketExpr expr;
  HallClass cls;
  int order() const { return expr.order(); }
  int degree() const { return expr.degree(); }
};

/* All Hall words of order <= max_order, sorted by compare().  Classification
 * marks the words spanning the quotient ("basis") versus the ideal. */
std::vector<HallElement> build_hall_set(int max_order);

/* Number of quotient-basis Hall words per (order, degree), orders 1..max_order. */
std::map<std::pair<int, int>, long long> dims_bigraded(int max_order);

/* Rewrites arbitrary bracket words into Hall normal form.  Antisymmetry and
 * Jacobi steps are oriented by compare(); results are memoized on the
 * serialized word, so a long-lived rewriter amortizes across calls. */
class HallRewriter {
 public:
  /* Coordinates in the full free-Lie Hall basis (ideal words included). */
  LieVector hall_coordinates(const BracketExpr& x);

  /* Quotient coordinates: Hall normal form with ideal words projected to 0. */
  LieVector decompose(const BracketExpr& x);
  LieVector decompose(const LieVector& v);

 private:
  LieVector coords(const BracketExpr& x);
  LieVector hall_pair(const BracketExpr& h1, const BracketExpr& h2);

  std::unordered_map<std::string, LieVector> expr_memo_;
  std::unordered_map<std::string, LieVector> pair_memo_;
  std::recursive_mutex mu_;
};

/* Shared-rewriter conveniences. */
LieVector decompose(const BracketExpr& x);
LieVector decompose(const LieVector& v);

/* [B, x] n-fold. */
BracketExpr ad_B(const BracketExpr& x, int times = 1);

}  // namespace lacm
