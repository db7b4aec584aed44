#pragma once

#include <map>
#include <vector>

#include "lacm/rational.hpp"

namespace lacm {

/* Dense univariate power series over Rational, truncated at degree trunc(). */
class RatSeries {
 public:
  explicit RatSeries(int trunc) : c_(trunc + 1) {}
  int trunc() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int n) const { return c_.at(n); }
  Rational& operator[](int n) { return c_.at(n); }

  RatSeries& operator+=(const RatSeries& o);
  RatSeries& operator-=(const RatSeries& o);
  RatSeries operator*(const RatSeries& o) const;
  RatSeries operator*(const Rational& s) const;
  RatSeries substitute_t2() const;  // t -> t^2
  RatSeries neglog1m() const;       // -log(1 - f), requires f(0) == 0
  bool operator==(const RatSeries& o) const { return c_ == o.c_; }

 private:
  std::vector<Rational> c_;
};

/* Generating function of rooted full binary trees with n leaves:
 * the fixed point of  a = t + (a^2 + a(t^2))/2,  iterated exactly N times
 * (coefficient n is stable after iteration n).  All coefficients are
 * nonnegative integers. */
RatSeries wedderburn_series(int N);

/* x_n: dimension of the degree-0 component at order n.
 * x_n = a_{(n+1)/2} for odd n, 0 for even n.  Index 0 unused. */
std::vector<Int> abelian_dims(int N);

/* Graded Witt formula: dimensions of the free Lie algebra on a generator set
 * with generator_counts[order] generators of each order.
 * dim L^n = sum_{d | n} mu(d)/d [t^{n/d}] (-log(1 - w)),  w = sum counts t^order.
 * Integrality and nonnegativity are asserted.  Index 0 unused. */
std::vector<Int> witt_dims(const std::map<int, Int>& generator_counts, int N);

/* Total dimensions of the quotient algebra: free part on {A} u {[X,A]}
 * (generator series t + a(t^2)) plus the abelian part x_n. */
std::vector<Int> lacm_dims(int N);

/* Dimensions of the quotient algebra per (order, degree), zero entries
 * omitted.  Bivariate Witt over w(t,s) = t s + a(t^2), where a generator of
 * degree m carries s-exponent m-1; the degree-0 column is the abelian part. */
std::map<std::pair<int, int>, Int> lacm_dims_bigraded(int N);

}  // namespace lacm
