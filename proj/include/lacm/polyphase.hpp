#pragma once

#include <map>
#include <string>
#include <vector>

#include "lacm/rational.hpp"

namespace lacm {

/* Sparse exact polynomial in the phase variables q_0..q_dim, p_0..p_dim.
 * Index 0 exists so that systems with a distinguished extra momentum fit in
 * the same type; plain mechanical systems simply use indices 1..dim. */
class PolyPhase {
 public:
  explicit PolyPhase(int dim);

  static PolyPhase constant(int dim, const Rational& c);
  static PolyPhase q(int dim, int i);
  static PolyPhase p(int dim, int i);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  PolyPhase& operator+=(const PolyPhase& o);
  PolyPhase& operator-=(const PolyPhase& o);
  PolyPhase operator+(const PolyPhase& o) const;
  PolyPhase operator-(const PolyPhase& o) const;
  PolyPhase operator-() const;
  PolyPhase operator*(const PolyPhase& o) const;
  PolyPhase operator*(const Rational& c) const;
  bool operator==(const PolyPhase& o) const;
  bool operator!=(const PolyPhase& o) const { return !(*this == o); }

  PolyPhase dq(int i) const;
  PolyPhase dp(int i) const;

  /* Max total p-exponent over terms; -1 for the zero polynomial. */
  int p_degree() const;
  bool is_p_homogeneous(int n) const;
  bool depends_on_p() const;

  /* Split into p-monomials: exponent vector alpha (length dim+1) -> the
   * p-free coefficient polynomial of p^alpha. */
  std::map<std::vector<int>, PolyPhase> p_parts() const;

  /* p_values/q_values indexed 0..dim. */
  Rational eval(const std::vector<Rational>& p_values,
                const std::vector<Rational>& q_values) const;

  /* Deterministic display, e.g. "2*q1^2*p0 - 1/2*p3". */
  std::string str() const;

  struct Term {
    std::vector<int> q_exp, p_exp;  // length dim+1 each
    Rational coeff;
  };
  std::vector<Term> terms() const;

 private:
  int dim_;
  /* key = q exponents followed by p exponents, length 2*(dim+1) */
  std::map<std::vector<int>, Rational> terms_;

  void add_term(std::vector<int> key, const Rational& c);
  void check_dim(const PolyPhase& o) const;
};

}  // namespace lacm
