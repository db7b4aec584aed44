#pragma once

#include <string>
#include <vector>

#include "lacm/rational.hpp"

namespace lacm {

/* Decimal output of a certified root limit.  value/reciprocal carry exactly
 * `digits` significant digits; level_deltas[k] = |estimate_{k+1} - estimate_k|
 * for the recursion levels actually evaluated. */
struct RootLimit {
  std::string value;
  std::string reciprocal;
  int levels_used = 0;
  std::vector<double> level_deltas;
};

/* c_0 = 2, c_{k+1} = c_k^2 + 2; terms c_0..c_k. */
std::vector<Int> c_sequence(int k);
/* e_0 = 1, e_{k+1} = e_k^2 + 2; terms e_0..e_k. */
std::vector<Int> e_sequence(int k);

/* r = lim_k c_k^{-2^{-k}}: radius of convergence of the tree generating
 * function.  Certified by agreement of successive levels to digits + 2;
 * throws if 64 levels do not suffice.  Guard digits default to 15 and may be
 * overridden via the LACM_GUARD_DIGITS environment variable. */
RootLimit radius_r(int digits);

/* alpha = lim_k e_k^{-2^{-k}}: the singularity of the quotient algebra's
 * generating function; reciprocal 1/alpha is the total growth rate. */
RootLimit entropy_alpha(int digits);

/* r^{-1/2}: growth rate of the abelian (degree-0) part. */
std::string abelian_entropy(int digits);

/* eta = lim a_n n^{3/2} r^n, estimated with a two-point Richardson
 * extrapolation in 1/n at n_max and n_max/2.  The sequence b_n = a_n r^n is
 * accumulated directly (positive terms only) so double precision carries
 * ~12 correct digits at n_max = 10^4. */
double eta_estimate(int n_max);

/* a_n n^{3/2} r^n for diagnostics (monotonicity over the tested range). */
std::vector<double> eta_sequence(int n_max);

}  // namespace lacm
