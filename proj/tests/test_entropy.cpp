#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "lacm/entropy.hpp"

using namespace lacm;

TEST_CASE("quadratic recursions c and e") {
  auto c = c_sequence(4);
  REQUIRE(c.size() == 5);
  CHECK(c[0] == 2);
  CHECK(c[1] == 6);
  CHECK(c[2] == 38);
  CHECK(c[3] == 1446);
  CHECK(c[4] == 2090918);

  auto e = e_sequence(4);
  REQUIRE(e.size() == 5);
  CHECK(e[0] == 1);
  CHECK(e[1] == 3);
  CHECK(e[2] == 11);
  CHECK(e[3] == 123);
  CHECK(e[4] == 15131);

  // recursion invariant for deeper terms
  auto c8 = c_sequence(8);
  for (size_t k = 1; k < c8.size(); ++k) CHECK(c8[k] == c8[k - 1] * c8[k - 1] + 2);
}

TEST_CASE("radius of convergence r to 20 significant digits") {
  auto rl = radius_r(20);
  CHECK(rl.value == "0.40269750367144129097");
  CHECK(rl.reciprocal == "2.4832535361726368586");
  CHECK(rl.levels_used > 0);
  CHECK(rl.levels_used <= 64);
  // successive level estimates converge (quadratically): deltas shrink
  for (size_t i = 1; i < rl.level_deltas.size(); ++i)
    CHECK(rl.level_deltas[i] <= rl.level_deltas[i - 1]);
}

TEST_CASE("growth constant alpha to 20 significant digits") {
  auto al = entropy_alpha(20);
  CHECK(al.value == "0.54797188043460982898");
  CHECK(al.reciprocal == "1.8249111600523655937");
}

TEST_CASE("abelian growth rate r^(-1/2) to 20 significant digits") {
  CHECK(abelian_entropy(20) == "1.5758342349919412950");
}

TEST_CASE("constants at other precisions round correctly") {
  CHECK(radius_r(5).value == "0.40270");
  CHECK(radius_r(1).value == "0.4");
  CHECK(entropy_alpha(8).reciprocal == "1.8249112");
  CHECK(abelian_entropy(6) == "1.57583");
}

TEST_CASE("digit range is validated") {
  CHECK_THROWS_AS(radius_r(0), std::invalid_argument);
  CHECK_THROWS_AS(radius_r(-3), std::invalid_argument);
  CHECK_THROWS_AS(entropy_alpha(0), std::invalid_argument);
  CHECK_THROWS_AS(abelian_entropy(0), std::invalid_argument);
  CHECK_THROWS_AS(radius_r(1001), std::invalid_argument);
}

TEST_CASE("subexponential factor eta") {
  double eta = eta_estimate(10000);
  CHECK(std::abs(eta - 0.318777) < 1e-3);          // headline value
  CHECK(std::abs(eta - 0.3187766185510159) < 1e-9); // tight oracle
}

TEST_CASE("eta diagnostic sequence decreases toward the limit from above") {
  auto seq = eta_sequence(2000);
  REQUIRE(seq.size() >= 100);
  // a_n n^{3/2} r^n has a positive 1/n correction: it decreases toward eta
  for (size_t i = 60; i < seq.size(); ++i) CHECK(seq[i] <= seq[i - 1]);
  CHECK(seq.back() > 0.3187766185510159);
  CHECK(seq.back() < 0.33);
  CHECK_THROWS_AS(eta_estimate(4), std::invalid_argument);
}
