#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "lacm/bracket.hpp"
#include "lacm/hall.hpp"
#include "lacm/mech.hpp"
#include "lacm/polyphase.hpp"
#include "lacm/schrodinger.hpp"
#include "lacm/trees.hpp"

using namespace lacm;

namespace {

int rand_int(std::mt19937& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
}

/* Random polynomial in q_1..q_d, p_1..p_d with small integer coefficients. */
PolyPhase random_poly(std::mt19937& rng, int d, int max_total_degree, bool allow_p) {
  PolyPhase f(d);
  const int monos = rand_int(rng, 2, 4);
  for (int m = 0; m < monos; ++m) {
    PolyPhase t = PolyPhase::constant(d, Rational(rand_int(rng, 1, 3) * (rand_int(rng, 0, 1) ? 1 : -1)));
    const int deg = rand_int(rng, 0, max_total_degree);
    for (int k = 0; k < deg; ++k) {
      int i = rand_int(rng, 1, d);
      if (allow_p && rand_int(rng, 0, 1))
        t = t * PolyPhase::p(d, i);
      else
        t = t * PolyPhase::q(d, i);
    }
    f += t;
  }
  return f;
}

/* Uniform random bracket word of the given order. */
BracketExpr random_word(std::mt19937& rng, int order) {
  if (order == 1) return rand_int(rng, 0, 1) ? BracketExpr::A() : BracketExpr::B();
  const int k = rand_int(rng, 1, order - 1);
  return BracketExpr::bracket(random_word(rng, k), random_word(rng, order - k));
}

/* Random degree-0 word built from B by the star composition; order is odd. */
BracketExpr random_star_word(std::mt19937& rng, int order) {
  if (order == 1) return BracketExpr::B();
  const int o1 = 1 + 2 * rand_int(rng, 0, (order - 3) / 2);  // odd, <= order - 2
  return star(random_star_word(rng, o1), random_star_word(rng, order - 1 - o1));
}

LieVector lie_sum(const LieVector& a, const LieVector& b, int sign_b) {
  LieVector out = a;
  for (const auto& [k, c] : b) {
    out[k] += Rational(sign_b) * c;
    if (out[k] == Rational(0)) out.erase(k);
  }
  return out;
}

TreeVector tree_sum(const TreeVector& a, const TreeVector& b, int sign_b) {
  TreeVector out = a;
  for (const auto& [k, c] : b) {
    out[k] += Rational(sign_b) * c;
    if (out[k] == Rational(0)) out.erase(k);
  }
  return out;
}

TreeVector tv(const ColoredTree& t) {
  TreeVector v;
  v[t] = Rational(1);
  return v;
}

}  // namespace

TEST_CASE("poisson bracket satisfies the Jacobi identity (100 seeded triples)") {
  std::mt19937 rng(20260814);
  int cases = 0;
  while (cases < 100) {
    const int d = rand_int(rng, 1, 3);
    PolyPhase f = random_poly(rng, d, 3, true);
    PolyPhase g = random_poly(rng, d, 3, true);
    PolyPhase h = random_poly(rng, d, 2, true);
    PolyPhase jac = poisson(f, poisson(g, h)) + poisson(g, poisson(h, f)) +
                    poisson(h, poisson(f, g));
    CAPTURE(cases);
    CHECK(jac.is_zero());
    ++cases;
  }
}

TEST_CASE("decomposition is antisymmetric (100 seeded pairs)") {
  std::mt19937 rng(101);
  HallRewriter rw;
  for (int t = 0; t < 100; ++t) {
    BracketExpr x = random_word(rng, rand_int(rng, 1, 6));
    BracketExpr y = random_word(rng, rand_int(rng, 1, 6));
    auto xy = rw.decompose(BracketExpr::bracket(x, y));
    auto yx = rw.decompose(BracketExpr::bracket(y, x));
    CAPTURE(x.str());
    CAPTURE(y.str());
    CHECK(lie_sum(xy, yx, +1).empty());
  }
}

TEST_CASE("decomposition satisfies the Jacobi identity (60 seeded triples)") {
  std::mt19937 rng(202);
  HallRewriter rw;
  for (int t = 0; t < 60; ++t) {
    BracketExpr x = random_word(rng, rand_int(rng, 1, 4));
    BracketExpr y = random_word(rng, rand_int(rng, 1, 4));
    BracketExpr z = random_word(rng, rand_int(rng, 1, 4));
    auto a = rw.decompose(BracketExpr::bracket(x, BracketExpr::bracket(y, z)));
    auto b = rw.decompose(BracketExpr::bracket(y, BracketExpr::bracket(z, x)));
    auto c = rw.decompose(BracketExpr::bracket(z, BracketExpr::bracket(x, y)));
    CAPTURE(x.str());
    CAPTURE(y.str());
    CAPTURE(z.str());
    CHECK(lie_sum(lie_sum(a, b, +1), c, +1).empty());
  }
}

TEST_CASE("star composition is commutative in the quotient (100 seeded pairs)") {
  std::mt19937 rng(303);
  HallRewriter rw;
  for (int t = 0; t < 100; ++t) {
    BracketExpr x = random_star_word(rng, 1 + 2 * rand_int(rng, 0, 3));
    BracketExpr y = random_star_word(rng, 1 + 2 * rand_int(rng, 0, 3));
    auto xy = rw.decompose(star(x, y));
    auto yx = rw.decompose(star(y, x));
    CAPTURE(x.str());
    CAPTURE(y.str());
    CHECK(lie_sum(xy, yx, -1).empty());
  }
}

TEST_CASE("grafting adds orders and drops one degree, term-wise (seeded pairs)") {
  std::mt19937 rng(404);
  auto groups = enumerate_trees(5);
  std::vector<ColoredTree> pool;
  for (const auto& [k, list] : groups) pool.insert(pool.end(), list.begin(), list.end());
  int cases = 0;
  while (cases < 120) {
    const ColoredTree& u = pool[rand_int(rng, 0, (int)pool.size() - 1)];
    const ColoredTree& v = pool[rand_int(rng, 0, (int)pool.size() - 1)];
    if (u.order() + v.order() > 10) continue;
    for (const auto& [t, c] : graft(u, v)) {
      CAPTURE(u.encoding());
      CAPTURE(v.encoding());
      CHECK(t.order() == u.order() + v.order());
      CHECK(t.degree() == u.degree() + v.degree() - 1);
      CHECK(c > Rational(0));
    }
    ++cases;
  }
}

TEST_CASE("grafting is right-symmetric when both right factors have degree 1") {
  std::mt19937 rng(505);
  auto groups = enumerate_trees(8);
  std::vector<ColoredTree> pool, deg1;
  for (const auto& [k, list] : groups) {
    pool.insert(pool.end(), list.begin(), list.end());
    if (k.second == 1) deg1.insert(deg1.end(), list.begin(), list.end());
  }
  REQUIRE(deg1.size() >= 8);
  int cases = 0;
  while (cases < 110) {
    const ColoredTree& u = pool[rand_int(rng, 0, (int)pool.size() - 1)];
    const ColoredTree& v = deg1[rand_int(rng, 0, (int)deg1.size() - 1)];
    const ColoredTree& w = deg1[rand_int(rng, 0, (int)deg1.size() - 1)];
    if (u.order() + v.order() + w.order() > 14) continue;
    TreeVector lhs = tree_sum(graft(graft(tv(u), tv(v)), tv(w)),
                              graft(tv(u), graft(tv(v), tv(w))), -1);
    TreeVector rhs = tree_sum(graft(graft(tv(u), tv(w)), tv(v)),
                              graft(tv(u), graft(tv(w), tv(v))), -1);
    CAPTURE(u.encoding());
    CAPTURE(v.encoding());
    CAPTURE(w.encoding());
    CHECK(lhs == rhs);
    ++cases;
  }
}

TEST_CASE("iterated bracketing with B is nilpotent in the quotient (105 cases)") {
  HallRewriter rw;
  std::vector<BracketExpr> basis;
  for (const auto& h : build_hall_set(6))
    if (h.cls == HallClass::basis) basis.push_back(h.expr);
  REQUIRE(basis.size() >= 15);
  int cases = 0;
  for (size_t i = 0; i < 15; ++i) {
    for (int k = 0; k <= 6; ++k) {
      const int times = basis[i].degree() + 1 + k;
      CAPTURE(basis[i].str());
      CAPTURE(k);
      CHECK(rw.decompose(ad_B(basis[i], times)).empty());
      ++cases;
    }
  }
  CHECK(cases == 105);
}

TEST_CASE("tree image factors through the quotient (100 seeded words)") {
  std::mt19937 rng(606);
  HallRewriter rw;
  for (int t = 0; t < 100; ++t) {
    BracketExpr x = random_word(rng, rand_int(rng, 2, 8));
    CAPTURE(x.str());
    CHECK(theta(rw.decompose(x)) == theta(x));
  }
}

TEST_CASE("star composition intertwines with symmetrized grafting (100 seeded pairs)") {
  std::mt19937 rng(707);
  for (int t = 0; t < 100; ++t) {
    BracketExpr x1 = random_star_word(rng, 1 + 2 * rand_int(rng, 0, 2));
    BracketExpr x2 = random_star_word(rng, 1 + 2 * rand_int(rng, 0, 2));
    BracketExpr a = BracketExpr::A();
    TreeVector lhs = theta(BracketExpr::bracket(star(x1, x2), a));
    TreeVector x1a = theta(BracketExpr::bracket(x1, a));
    TreeVector x2a = theta(BracketExpr::bracket(x2, a));
    TreeVector rhs = tree_sum(graft(x1a, x2a), graft(x2a, x1a), +1);
    CAPTURE(x1.str());
    CAPTURE(x2.str());
    CHECK(lhs == rhs);
  }
}

TEST_CASE("classical realization factors through the quotient (100 seeded words)") {
  std::mt19937 rng(808);
  HallRewriter rw;
  for (int t = 0; t < 100; ++t) {
    const int d = rand_int(rng, 1, 3);
    PolyPhase V = random_poly(rng, d, 3, false);
    auto sys = euclidean_system(d, V);
    BracketExpr x = random_word(rng, rand_int(rng, 2, 7));
    PolyPhase direct = phi(sys, x);
    CAPTURE(x.str());
    CAPTURE(V.str());
    CHECK(direct == phi(sys, rw.decompose(x)));
    if (!direct.is_zero()) CHECK(direct.is_p_homogeneous(x.degree()));
  }
}

TEST_CASE("multiplication operators always commute (100 seeded pairs)") {
  std::mt19937 rng(909);
  for (int t = 0; t < 100; ++t) {
    const int d = rand_int(rng, 1, 3);
    auto M1 = DiffOperator::multiplication(random_poly(rng, d, 3, false));
    auto M2 = DiffOperator::multiplication(random_poly(rng, d, 3, false));
    CHECK(commutator(M1, M2).is_zero());
  }
}
