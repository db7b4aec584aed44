#pragma once

#include <map>
#include <string>
#include <vector>

#include "lacm/bracket.hpp"
#include "lacm/polyphase.hpp"

namespace lacm {

/* Differential operator in normal form: sum over multi-indices alpha of
 * c_alpha(q) * d^alpha, with exact polynomial coefficients and all
 * derivatives moved to the right.  alpha runs over indices 0..dim like the
 * phase variables; operator degree = max |alpha| with c_alpha != 0. */
class DiffOperator {
 public:
  explicit DiffOperator(int dim);

  static DiffOperator identity(int dim);
  static DiffOperator multiplication(const PolyPhase& f);  // f free of p
  static DiffOperator derivative(int dim, int i);
  /* (1/2) sum_{i=1..dim} d_i^2 */
  static DiffOperator half_laplacian(int dim);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for the zero operator

  DiffOperator& operator+=(const DiffOperator& o);
  DiffOperator& operator-=(const DiffOperator& o);
  DiffOperator operator+(const DiffOperator& o) const;
  DiffOperator operator-(const DiffOperator& o) const;
  DiffOperator operator-() const;
  DiffOperator operator*(const Rational& c) const;
  bool operator==(const DiffOperator& o) const;
  bool operator!=(const DiffOperator& o) const { return !(*this == o); }

  /* Restriction to the terms with |alpha| == n. */
  DiffOperator degree_projection(int n) const;

  const std::map<std::vector<int>, PolyPhase>& parts() const { return terms_; }
  void add_term(const std::vector<int>& alpha, const PolyPhase& coeff);

  std::string str() const;

 private:
  int dim_;
  std::map<std::vector<int>, PolyPhase> terms_;  // alpha (length dim+1) -> c_alpha(q)
};

/* Exact normal-form product via the Leibniz rule. */
DiffOperator compose(const DiffOperator& P, const DiffOperator& Q);

/* [P,Q] = P.Q - Q.P. */
DiffOperator commutator(const DiffOperator& P, const DiffOperator& Q);

/* Injection of p-polynomials: c(q) p^alpha -> c(q) d^alpha. */
DiffOperator nu(const PolyPhase& f);

/* The operator realization with A -> (1/2) Laplacian and B -> multiplication
 * by V.  Bracket images are taken with the operator factors in the order
 * op(y).op(x) - op(x).op(y): with the sign convention of poisson() this is
 * the orientation under which the top-degree projection reproduces nu of
 * the classical image exactly. */
DiffOperator phi_op(const PolyPhase& V, const BracketExpr& x);
DiffOperator phi_op(const PolyPhase& V, const LieVector& x);

struct PhiHatResult {
  DiffOperator op;          // projection to operator degree = degree of input
  int discarded_degree;     // max |alpha| among dropped terms, -1 if none
  PhiHatResult() : op(0), discarded_degree(-1) {}
};

/* phi_op followed by projection to the input's homogeneity degree.
 * Throws std::invalid_argument if the input mixes degrees. */
PhiHatResult phi_hat(const PolyPhase& V, const BracketExpr& x);
PhiHatResult phi_hat(const PolyPhase& V, const LieVector& x);

}  // namespace lacm
