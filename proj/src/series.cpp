#include "lacm/series.hpp"

#include <numeric>
#include <stdexcept>

namespace lacm {

RatSeries& RatSeries::operator+=(const RatSeries& o) {
  if (o.trunc() != trunc()) throw std::invalid_argument("series: truncation mismatch");
  for (int i = 0; i <= trunc(); ++i) c_[i] += o.c_[i];
  return *this;
}

RatSeries& RatSeries::operator-=(const RatSeries& o) {
  if (o.trunc() != trunc()) throw std::invalid_argument("series: truncation mismatch");
  for (int i = 0; i <= trunc(); ++i) c_[i] -= o.c_[i];
  return *this;
}

RatSeries RatSeries::operator*(const RatSeries& o) const {
  if (o.trunc() != trunc()) throw std::invalid_argument("series: truncation mismatch");
  RatSeries r(trunc());
  for (int i = 0; i <= trunc(); ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; i + j <= trunc(); ++j) {
      if (o.c_[j] == 0) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  return r;
}

RatSeries RatSeries::operator*(const Rational& s) const {
  RatSeries r(trunc());
  for (int i = 0; i <= trunc(); ++i) r.c_[i] = c_[i] * s;
  return r;
}

RatSeries RatSeries::substitute_t2() const {
  RatSeries r(trunc());
  for (int i = 0; 2 * i <= trunc(); ++i) r.c_[2 * i] = c_[i];
  return r;
}

RatSeries RatSeries::neglog1m() const {
  if (c_[0] != 0) throw std::invalid_argument("neglog1m: constant term must vanish");
  RatSeries acc(trunc());
  RatSeries p = *this;
  for (int k = 1; k <= trunc(); ++k) {
    acc += p * Rational(1, k);
    if (k < trunc()) p = p * (*this);
  }
  return acc;
}

RatSeries wedderburn_series(int N) {
  if (N < 1) throw std::invalid_argument("wedderburn_series: N must be >= 1");
  RatSeries a(N);
  for (int it = 0; it < N; ++it) {
    RatSeries next = (a * a) * Rational(1, 2);
    next += a.substitute_t2() * Rational(1, 2);
    next[1] += 1;
    a = next;
  }
  for (int n = 0; n <= N; ++n)
    if (boost::multiprecision::denominator(a[n]) != 1 || a[n] < 0)
      throw std::logic_error("wedderburn_series: non-integral coefficient");
  return a;
}

std::vector<Int> abelian_dims(int N) {
  RatSeries a = wedderburn_series(N / 2 + 1);
  std::vector<Int> x(N + 1);
  for (int n = 1; n <= N; n += 2) x[n] = boost::multiprecision::numerator(a[(n + 1) / 2]);
  return x;
}

namespace {

int mobius(int n) {
  int res = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      res = -res;
    }
  }
  if (n > 1) res = -res;
  return res;
}

}  // namespace

std::vector<Int> witt_dims(const std::map<int, Int>& generator_counts, int N) {
  RatSeries w(N);
  for (const auto& [ord, cnt] : generator_counts) {
    if (ord < 1) throw std::invalid_argument("witt_dims: generator order must be >= 1");
    if (ord <= N) w[ord] += Rational(cnt);
  }
  RatSeries f = w.neglog1m();
  std::vector<Int> dims(N + 1);
  for (int n = 1; n <= N; ++n) {
    Rational s = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) s += Rational(mobius(d), d) * f[n / d];
    if (boost::multiprecision::denominator(s) != 1 || s < 0)
      throw std::logic_error("witt_dims: Moebius sum not a nonnegative integer");
    dims[n] = boost::multiprecision::numerator(s);
  }
  return dims;
}

namespace {

std::map<int, Int> lacm_generator_counts(int N) {
  RatSeries a = wedderburn_series(N / 2 + 1);
  std::map<int, Int> gens;
  gens[1] = 1;  // A
  for (int m = 1; 2 * m <= N; ++m) {
    Int am = boost::multiprecision::numerator(a[m]);
    if (am != 0) gens[2 * m] += am;  // [X, A] for X of order 2m-1
  }
  return gens;
}

}  // namespace

std::vector<Int> lacm_dims(int N) {
  std::vector<Int> dims = witt_dims(lacm_generator_counts(N), N);
  std::vector<Int> x = abelian_dims(N);
  for (int n = 1; n <= N; ++n) dims[n] += x[n];
  return dims;
}

std::map<std::pair<int, int>, Int> lacm_dims_bigraded(int N) {
  using Key = std::pair<int, int>;  // (order, s-exponent)
  std::map<Key, Rational> w;
  w[{1, 1}] = 1;  // A: order 1, degree 2 -> s^1
  {
    RatSeries a = wedderburn_series(N / 2 + 1);
    for (int m = 1; 2 * m <= N; ++m)
      if (a[m] != 0) w[{2 * m, 0}] += a[m];  // [X,A]: degree 1 -> s^0
  }

  // -log(1 - w), truncated at total order N
  std::map<Key, Rational> f, p = w;
  for (int k = 1; k <= N && !p.empty(); ++k) {
    for (const auto& [key, v] : p) f[key] += v / k;
    std::map<Key, Rational> q;
    for (const auto& [k1, v1] : p)
      for (const auto& [k2, v2] : w)
        if (k1.first + k2.first <= N) q[{k1.first + k2.first, k1.second + k2.second}] += v1 * v2;
    p = std::move(q);
  }

  std::map<std::pair<int, int>, Int> dims;
  std::vector<Int> x = abelian_dims(N);
  for (int n = 1; n <= N; ++n)
    if (x[n] != 0) dims[{n, 0}] = x[n];

  for (int n = 1; n <= N; ++n) {
    for (int k = 0; k <= N; ++k) {
      int g = (k == 0) ? n : std::gcd(n, k);
      Rational s = 0;
      for (int d = 1; d <= g; ++d) {
        if (g % d != 0) continue;
        auto it = f.find({n / d, k / d});
        if (it != f.end()) s += Rational(mobius(d), d) * it->second;
      }
      if (boost::multiprecision::denominator(s) != 1 || s < 0)
        throw std::logic_error("lacm_dims_bigraded: Moebius sum not a nonnegative integer");
      Int v = boost::multiprecision::numerator(s);
      if (v != 0) dims[{n, k + 1}] += v;  // s-exponent k -> degree k+1
    }
  }
  return dims;
}

}  // namespace lacm
