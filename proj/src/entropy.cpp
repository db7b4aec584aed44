#include "lacm/entropy.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace lacm {

namespace mp = boost::multiprecision;
using BigFloat = mp::mpfr_float;  // runtime-set precision

namespace {

int guard_digits() {
  if (const char* env = std::getenv("LACM_GUARD_DIGITS")) {
    int g = std::atoi(env);
    if (g > 0) return g;
  }
  return 15;
}

std::vector<Int> doubling_sequence(Int seed, int k) {
  std::vector<Int> out;
  out.reserve(k + 1);
  out.push_back(seed);
  for (int i = 0; i < k; ++i) out.push_back(out.back() * out.back() + 2);
  return out;
}

std::string to_fixed_digits(const BigFloat& x, int digits) {
  std::ostringstream os;
  os << std::showpoint << std::setprecision(digits) << x;
  std::string s = os.str();
  /* showpoint keeps trailing zeros so the printed significant-digit count is
   * exactly `digits`, but guard against a bare trailing point. */
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

/* lim_k s_k^{-2^{-k}} for a doubling sequence s_{k+1} = s_k^2 + 2.
 * estimate_k = exp(-ln(s_k) / 2^k); the error drops roughly like
 * s_0^{-2^k}, so successive estimates agreeing to digits + 2 places
 * certifies the first `digits` digits of the limit. */
RootLimit doubling_root(Int seed, int digits) {
  const int work_digits = digits + guard_digits();
  const unsigned old_prec = BigFloat::default_precision();
  BigFloat::default_precision(work_digits);

  RootLimit out;
  try {
    const BigFloat tol = pow(BigFloat(10), -(digits + 2));
    Int s = seed;
    BigFloat prev = 0;
    bool have_prev = false;
    for (int k = 0; k <= 64; ++k) {
      BigFloat est = exp(-log(BigFloat(s)) / pow(BigFloat(2), k));
      if (have_prev) {
        BigFloat delta = abs(est - prev);
        out.level_deltas.push_back(delta.convert_to<double>());
        if (delta < tol) {
          out.levels_used = k;
          out.value = to_fixed_digits(est, digits);
          out.reciprocal = to_fixed_digits(1 / est, digits);
          BigFloat::default_precision(old_prec);
          return out;
        }
      }
      prev = est;
      have_prev = true;
      s = s * s + 2;
    }
  } catch (...) {
    BigFloat::default_precision(old_prec);
    throw;
  }
  BigFloat::default_precision(old_prec);
  throw std::runtime_error("doubling_root: no convergence within 64 levels");
}

}  // namespace

std::vector<Int> c_sequence(int k) { return doubling_sequence(2, k); }
std::vector<Int> e_sequence(int k) { return doubling_sequence(1, k); }

RootLimit radius_r(int digits) {
  if (digits < 1 || digits > 1000) throw std::invalid_argument("radius_r: digits out of range");
  return doubling_root(2, digits);
}

RootLimit entropy_alpha(int digits) {
  if (digits < 1 || digits > 1000) throw std::invalid_argument("entropy_alpha: digits out of range");
  /* e_0 = 1 gives estimate exp(0) = 1 at level 0; convergence starts at e_1. */
  return doubling_root(1, digits);
}

std::string abelian_entropy(int digits) {
  if (digits < 1 || digits > 1000) throw std::invalid_argument("abelian_entropy: digits out of range");
  const int work_digits = digits + guard_digits();
  const unsigned old_prec = BigFloat::default_precision();
  BigFloat::default_precision(work_digits);
  std::string out;
  try {
    RootLimit r = doubling_root(2, digits + 4);
    BigFloat rv(r.value);
    out = to_fixed_digits(1 / sqrt(rv), digits);
  } catch (...) {
    BigFloat::default_precision(old_prec);
    throw;
  }
  BigFloat::default_precision(old_prec);
  return out;
}

namespace {

/* b_n = a_n r^n where a_n counts binary trees with unordered children:
 * a_1 = 1, a_n = (1/2) [ sum_{i+j=n} a_i a_j + a_{n/2} (n even) ].
 * Scaling by r^n keeps every term in double range (b_n ~ eta n^{-3/2});
 * all terms are positive so no cancellation occurs. */
std::vector<double> scaled_tree_numbers(int n_max) {
  RootLimit rl = radius_r(25);
  const double r = std::stod(rl.value);
  std::vector<double> b(n_max + 1, 0.0);
  std::vector<double> rpow(n_max + 1, 1.0);
  for (int n = 1; n <= n_max; ++n) rpow[n] = rpow[n - 1] * r;
  b[1] = r;
  for (int n = 2; n <= n_max; ++n) {
    double s = 0.0;
    for (int i = 1; i <= n / 2; ++i) {
      double term = b[i] * b[n - i];
      s += (2 * i == n) ? term : 2.0 * term;
    }
    s *= 0.5;
    if (n % 2 == 0) s += 0.5 * b[n / 2] * rpow[n / 2];
    b[n] = s;
  }
  return b;
}

}  // namespace

std::vector<double> eta_sequence(int n_max) {
  std::vector<double> b = scaled_tree_numbers(n_max);
  std::vector<double> out(n_max + 1, 0.0);
  for (int n = 1; n <= n_max; ++n) out[n] = b[n] * std::pow(double(n), 1.5);
  return out;
}

double eta_estimate(int n_max) {
  if (n_max < 8) throw std::invalid_argument("eta_estimate: n_max too small");
  std::vector<double> b = scaled_tree_numbers(n_max);
  auto eta_at = [&](int n) { return b[n] * std::pow(double(n), 1.5); };
  /* eta(n) = eta + c/n + O(1/n^2): eliminate the 1/n term. */
  return 2.0 * eta_at(n_max) - eta_at(n_max / 2);
}

}  // namespace lacm
