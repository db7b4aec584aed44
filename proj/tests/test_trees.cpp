#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lacm/bracket.hpp"
#include "lacm/hall.hpp"
#include "lacm/trees.hpp"

using namespace lacm;

namespace {
// Tree counts per (order, degree): row n lists degrees 0..max, n = 1..18.
const std::vector<std::vector<long long>> kTreeTable = {
    {1, 0, 1},
    {0, 1},
    {1, 0, 1},
    {0, 1, 0, 1},
    {1, 0, 2, 0, 1},
    {0, 2, 0, 2, 0, 1},
    {2, 0, 4, 0, 3, 0, 1},
    {0, 4, 0, 6, 0, 3, 0, 1},
    {3, 0, 10, 0, 9, 0, 4, 0, 1},
    {0, 9, 0, 17, 0, 12, 0, 4, 0, 1},
    {6, 0, 24, 0, 30, 0, 16, 0, 5, 0, 1},
    {0, 20, 0, 50, 0, 44, 0, 20, 0, 5, 0, 1},
    {11, 0, 63, 0, 96, 0, 67, 0, 25, 0, 6, 0, 1},
    {0, 48, 0, 146, 0, 164, 0, 91, 0, 30, 0, 6, 0, 1},
    {23, 0, 164, 0, 315, 0, 267, 0, 126, 0, 36, 0, 7, 0, 1},
    {0, 115, 0, 437, 0, 592, 0, 408, 0, 163, 0, 42, 0, 7, 0, 1},
    {47, 0, 444, 0, 1022, 0, 1059, 0, 603, 0, 213, 0, 49, 0, 8, 0, 1},
    {0, 286, 0, 1300, 0, 2126, 0, 1754, 0, 856, 0, 265, 0, 56, 0, 8, 0, 1},
};

const std::vector<long long> kTreeTotals = {2,   1,   2,   2,   4,    5,    10,   14,  27,
                                            43,  82,  140, 269, 486,  939,  1765, 3446, 6652};

int max_degree_at(int n) { return n == 1 ? 2 : n - 1; }
}  // namespace

TEST_CASE("atoms") {
  auto dot = ColoredTree::thin_atom();
  auto o = ColoredTree::thick_atom();
  CHECK(dot.encoding() == ".");
  CHECK(o.encoding() == "o");
  CHECK(dot.order() == 1);
  CHECK(dot.degree() == 2);
  CHECK(o.order() == 1);
  CHECK(o.degree() == 0);
  CHECK(dot.size() == 1);
  CHECK(o.thick_count() == 1);
  CHECK(dot.thin_count() == 1);
}

TEST_CASE("order and degree from vertex counts") {
  struct Row {
    const char* enc;
    int order, degree;
  };
  const std::vector<Row> rows = {
      {".(o)", 2, 1},    {"o(o)", 3, 0},      {"o(.,.)", 3, 2},    {"o(.,o)", 4, 1},
      {"o(o,o)", 5, 0},  {"o(.,.,.)", 4, 3},  {"o(.,o(.))", 5, 2}, {"o(o,o(o))", 7, 0},
  };
  for (const auto& r : rows) {
    auto t = ColoredTree::parse(r.enc);
    CAPTURE(r.enc);
    CHECK(t.order() == r.order);
    CHECK(t.degree() == r.degree);
    CHECK(t.encoding() == r.enc);  // these inputs are already canonical
  }
}

TEST_CASE("parse canonicalizes equivalent presentations") {
  // child order and rooting are normalized away
  CHECK(ColoredTree::parse("o(o(.),.)") == ColoredTree::parse("o(.,o(.))"));
  CHECK(ColoredTree::parse("o(.)") == ColoredTree::parse(".(o)"));
  // the 3-vertex path and 3-vertex star are the same tree
  CHECK(ColoredTree::parse("o(o(o))").encoding() == "o(o,o)");
  // 4-vertex path: bicentroid rooting picks an inner vertex
  CHECK(ColoredTree::parse("o(o(o(o)))").encoding() == "o(o,o(o))");
  // same tree built from explicit vertex lists
  ColoredTree a({'o', '.', 'o'}, {{0, 1}, {0, 2}});
  ColoredTree b({'o', 'o', '.'}, {{1, 0}, {1, 2}});
  CHECK(a == b);
  CHECK(a.encoding() == "o(.,o)");
}

TEST_CASE("construction rejects malformed trees") {
  // edge between two thin vertices
  CHECK_THROWS_AS(ColoredTree({'.', '.'}, {{0, 1}}), std::invalid_argument);
  // thin vertex with two edges
  CHECK_THROWS_AS(ColoredTree({'o', '.', 'o'}, {{0, 1}, {1, 2}}), std::invalid_argument);
  // disconnected
  CHECK_THROWS_AS(ColoredTree({'o', 'o', 'o', 'o'}, {{0, 1}, {2, 3}}), std::invalid_argument);
  // cycle
  CHECK_THROWS_AS(ColoredTree({'o', 'o', 'o'}, {{0, 1}, {1, 2}, {2, 0}}), std::invalid_argument);
  // bad color
  CHECK_THROWS_AS(ColoredTree({'x'}, {}), std::invalid_argument);
  // parse errors
  CHECK_THROWS_AS(ColoredTree::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(ColoredTree::parse("o("), std::invalid_argument);
  CHECK_THROWS_AS(ColoredTree::parse("o(.)x"), std::invalid_argument);
  CHECK_THROWS_AS(ColoredTree::parse(".(.)"), std::invalid_argument);
}

TEST_CASE("tree counts per order and degree, n = 1..18") {
  const int N = 18;
  auto dims = tree_dims(N);
  for (int n = 1; n <= N; ++n) {
    const auto& row = kTreeTable[n - 1];
    long long total = 0;
    for (int d = 0; d <= max_degree_at(n); ++d) {
      auto it = dims.find({n, d});
      long long got = (it == dims.end()) ? 0 : it->second;
      CAPTURE(n);
      CAPTURE(d);
      REQUIRE(d < (int)row.size());
      CHECK(got == row[d]);
      total += got;
    }
    CHECK(total == kTreeTotals[n - 1]);
  }
}

TEST_CASE("enumeration is sorted, duplicate-free, and consistent with counts") {
  auto groups = enumerate_trees(8);
  auto dims = tree_dims(8);
  long long listed = 0;
  for (const auto& [key, list] : groups) {
    CAPTURE(key.first);
    CAPTURE(key.second);
    CHECK((long long)list.size() == dims.at(key));
    listed += (long long)list.size();
    for (size_t i = 0; i < list.size(); ++i) {
      CHECK(list[i].order() == key.first);
      CHECK(list[i].degree() == key.second);
      CHECK(ColoredTree::parse(list[i].encoding()) == list[i]);  // round trip
      if (i > 0) CHECK(list[i - 1].encoding() < list[i].encoding());
    }
  }
  long long expect = 0;
  for (const auto& [k, v] : dims) expect += v;
  CHECK(listed == expect);
}

TEST_CASE("graft base cases") {
  auto dot = ColoredTree::thin_atom();
  auto o = ColoredTree::thick_atom();
  // thick ⊳ thin: a fresh free-end edge on the thick vertex
  auto v = graft(o, dot);
  REQUIRE(v.size() == 1);
  CHECK(v.begin()->first.encoding() == ".(o)");
  CHECK(v.begin()->second == Rational(1));
  // annihilation rules
  CHECK(graft(dot, o).empty());
  CHECK(graft(o, o).empty());
  CHECK(graft(dot, dot).empty());
  // instance counting: two thick receivers give coefficient 2
  auto w = graft(ColoredTree::parse("o(o)"), dot);
  REQUIRE(w.size() == 1);
  CHECK(w.begin()->first.encoding() == "o(.,o)");
  CHECK(w.begin()->second == Rational(2));
  // grafting a one-free-end tree onto a one-thick-vertex tree
  auto g = graft(ColoredTree::parse("o(.)"), ColoredTree::parse("o(.)"));
  REQUIRE(g.size() == 1);
  CHECK(g.begin()->first.encoding() == "o(.,o)");
  CHECK(g.begin()->second == Rational(1));
}

TEST_CASE("graft respects the bigrading term-wise") {
  auto groups = enumerate_trees(5);
  std::vector<ColoredTree> pool;
  for (const auto& [k, list] : groups) pool.insert(pool.end(), list.begin(), list.end());
  for (const auto& u : pool)
    for (const auto& v : pool) {
      if (u.order() + v.order() > 10) continue;
      for (const auto& [t, c] : graft(u, v)) {
        CAPTURE(u.encoding());
        CAPTURE(v.encoding());
        CHECK(t.order() == u.order() + v.order());
        CHECK(t.degree() == u.degree() + v.degree() - 1);
        CHECK(c > Rational(0));  // grafting counts instances
      }
    }
}

TEST_CASE("theta on small basis elements") {
  auto img = [](const char* s) { return theta(BracketExpr::parse(s)); };
  auto single = [](const TreeVector& v, const char* enc, long long coeff) {
    REQUIRE(v.size() == 1);
    CHECK(v.begin()->first.encoding() == enc);
    CHECK(v.begin()->second == Rational(coeff));
  };
  single(theta(BracketExpr::A()), ".", 1);
  single(theta(BracketExpr::B()), "o", 1);
  single(img("[B,A]"), ".(o)", 1);
  single(img("[B,[B,A]]"), "o(o)", 1);
  single(img("[[B,A],A]"), "o(.,.)", 1);
  single(img("[[B,[B,A]],A]"), "o(.,o)", 2);
  single(img("[[B,[B,A]],[B,A]]"), "o(o,o)", 2);
  // ideal elements die: their bracket pairs both have no free ends
  CHECK(img("[B,[B,[B,A]]]").empty());
  CHECK(img("[B,[B,[B,[B,A]]]]").empty());
  CHECK(img("[[B,[B,[B,A]]],A]").empty());
}

TEST_CASE("theta is a Lie homomorphism into the tree bracket") {
  HallRewriter rw;
  const std::vector<const char*> words = {"A", "B", "[B,A]", "[B,[B,A]]", "[[B,A],A]",
                                          "[[B,[B,A]],A]"};
  for (const char* xs : words)
    for (const char* ys : words) {
      BracketExpr x = BracketExpr::parse(xs), y = BracketExpr::parse(ys);
      if (x.order() + y.order() > 8) continue;
      TreeVector lhs = theta(rw.decompose(BracketExpr::bracket(x, y)));
      TreeVector rhs = tree_bracket(theta(x), theta(y));
      CAPTURE(xs);
      CAPTURE(ys);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("rank of the theta image equals the quotient dimension per order") {
  auto rows = theta_rank(8);
  REQUIRE((int)rows.size() == 8);
  const std::vector<long long> lie = {2, 1, 2, 2, 4, 5, 10, 14};
  const std::vector<long long> trees = {2, 1, 2, 2, 4, 5, 10, 14};
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(rows[n - 1].order == n);
    CHECK(rows[n - 1].lie_dim == lie[n - 1]);
    CHECK(rows[n - 1].tree_dim == trees[n - 1]);
    CHECK(rows[n - 1].rank == lie[n - 1]);
    CHECK(rows[n - 1].pass);
  }
  CHECK_THROWS_AS(theta_rank(13), std::invalid_argument);
}
