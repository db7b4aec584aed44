#include "lacm/hall.hpp"

#include <algorithm>
#include <stdexcept>

namespace lacm {

std::vector<HallElement> build_hall_set(int max_order) {
  if (max_order < 1) throw std::invalid_argument("build_hall_set: max_order must be >= 1");
  std::vector<std::vector<BracketExpr>> by_order(max_order + 1);
  by_order[1] = {BracketExpr::B(), BracketExpr::A()};
  for (int n = 2; n <= max_order; ++n) {
    std::vector<BracketExpr> out;
    for (int i = 1; i < n; ++i) {
      for (const BracketExpr& a : by_order[i]) {
        for (const BracketExpr& b : by_order[n - i]) {
          if (compare(a, b) >= 0) continue;
          if (!b.is_generator() && compare(b.left(), a) > 0) continue;
          out.push_back(BracketExpr::bracket(a, b));
        }
      }
    }
    std::sort(out.begin(), out.end(), BracketLess{});
    by_order[n] = std::move(out);
  }
  std::vector<HallElement> all;
  for (int n = 1; n <= max_order; ++n)
    for (const BracketExpr& e : by_order[n])
      all.push_back(HallElement{e, is_quotient_basis(e) ? HallClass::basis : HallClass::ideal});
  std::sort(all.begin(), all.end(),
            [](const HallElement& x, const HallElement& y) { return compare(x.expr, y.expr) < 0; });
  return all;
}

std::map<std::pair<int, int>, long long> dims_bigraded(int max_order) {
  std::map<std::pair<int, int>, long long> dims;
  for (const HallElement& h : build_hall_set(max_order))
    if (h.cls == HallClass::basis) ++dims[{h.order(), h.degree()}];
  return dims;
}

namespace {

void axpy(LieVector& acc, const Rational& c, const LieVector& v) {
  for (const auto& [k, x] : v) {
    Rational& slot = acc[k];
    slot += c * x;
    if (slot == 0) acc.erase(k);
  }
}

}  // namespace

LieVector HallRewriter::hall_coordinates(const BracketExpr& x) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return coords(x);
}

LieVector HallRewriter::coords(const BracketExpr& x) {
  if (is_hall(x)) return LieVector{{x, Rational(1)}};
  auto it = expr_memo_.find(x.str());
  if (it != expr_memo_.end()) return it->second;
  LieVector cl = coords(x.left());
  LieVector cr = coords(x.right());
  LieVector acc;
  for (const auto& [h1, c1] : cl)
    for (const auto& [h2, c2] : cr) axpy(acc, c1 * c2, hall_pair(h1, h2));
  expr_memo_.emplace(x.str(), acc);
  return acc;
}

/* Bracket of two Hall words, as a Hall-basis combination.
 *
 *   h1 == h2            -> 0
 *   h1 > h2             -> -[h2,h1]
 *   [h1,h2] Hall        -> itself
 *   otherwise h2 = [a,b] with a > h1, and
 *   [h1,[a,b]] = [[h1,a],b] + [a,[h1,b]]   (Jacobi, oriented to shrink the
 *   right factor; terminates for compare() because every left factor is
 *   smaller than the bracket it opens). */
LieVector HallRewriter::hall_pair(const BracketExpr& h1, const BracketExpr& h2) {
  int c = compare(h1, h2);
  if (c == 0) return {};
  if (c > 0) {
    LieVector v = hall_pair(h2, h1);
    for (auto& [k, x] : v) x = -x;
    return v;
  }
  BracketExpr cand = BracketExpr::bracket(h1, h2);
  if (h2.is_generator() || compare(h2.left(), h1) <= 0) return LieVector{{cand, Rational(1)}};

  std::string key = h1.str() + "|" + h2.str();
  auto it = pair_memo_.find(key);
  if (it != pair_memo_.end()) return it->second;

  BracketExpr a = h2.left(), b = h2.right();
  LieVector acc;
  LieVector t1 = hall_pair(h1, a);
  for (const auto& [h, coef] : t1) axpy(acc, coef, hall_pair(h, b));
  LieVector t2 = hall_pair(h1, b);
  for (const auto& [h, coef] : t2) axpy(acc, coef, hall_pair(a, h));
  pair_memo_.emplace(std::move(key), acc);
  return acc;
}

LieVector HallRewriter::decompose(const BracketExpr& x) {
  LieVector full = hall_coordinates(x);
  LieVector out;
  for (const auto& [k, c] : full)
    if (is_quotient_basis(k)) out.emplace(k, c);
  return out;
}

LieVector HallRewriter::decompose(const LieVector& v) {
  LieVector acc;
  std::lock_guard<std::recursive_mutex> lock(mu_);
  for (const auto& [e, c] : v) axpy(acc, c, decompose(e));
  return acc;
}

namespace {
HallRewriter& shared_rewriter() {
  static HallRewriter r;
  return r;
}
}  // namespace

LieVector decompose(const BracketExpr& x) { return shared_rewriter().decompose(x); }
LieVector decompose(const LieVector& v) { return shared_rewriter().decompose(v); }

BracketExpr ad_B(const BracketExpr& x, int times) {
  BracketExpr e = x;
  for (int i = 0; i < times; ++i) e = BracketExpr::bracket(BracketExpr::B(), e);
  return e;
}

}  // namespace lacm
