#include "lacm/schrodinger.hpp"

#include <stdexcept>

namespace lacm {

DiffOperator::DiffOperator(int dim) : dim_(dim) {
  if (dim < 0) throw std::invalid_argument("DiffOperator: dim must be >= 0");
}

DiffOperator DiffOperator::identity(int dim) {
  DiffOperator out(dim);
  out.add_term(std::vector<int>(dim + 1, 0), PolyPhase::constant(dim, 1));
  return out;
}

DiffOperator DiffOperator::multiplication(const PolyPhase& f) {
  if (f.depends_on_p())
    throw std::invalid_argument("DiffOperator::multiplication: coefficient depends on p");
  DiffOperator out(f.dim());
  out.add_term(std::vector<int>(f.dim() + 1, 0), f);
  return out;
}

DiffOperator DiffOperator::derivative(int dim, int i) {
  DiffOperator out(dim);
  if (i < 0 || i > dim) throw std::invalid_argument("DiffOperator::derivative: index out of range");
  std::vector<int> alpha(dim + 1, 0);
  alpha[i] = 1;
  out.add_term(alpha, PolyPhase::constant(dim, 1));
  return out;
}

DiffOperator DiffOperator::half_laplacian(int dim) {
  DiffOperator out(dim);
  for (int i = 1; i <= dim; ++i) {
    std::vector<int> alpha(dim + 1, 0);
    alpha[i] = 2;
    out.add_term(alpha, PolyPhase::constant(dim, Rational(1, 2)));
  }
  return out;
}

int DiffOperator::degree() const {
  int best = -1;
  for (const auto& [alpha, c] : terms_) {
    int total = 0;
    for (int a : alpha) total += a;
    if (total > best) best = total;
  }
  return best;
}

void DiffOperator::add_term(const std::vector<int>& alpha, const PolyPhase& coeff) {
  if (static_cast<int>(alpha.size()) != dim_ + 1)
    throw std::invalid_argument("DiffOperator::add_term: bad multi-index length");
  if (coeff.is_zero()) return;
  auto it = terms_.find(alpha);
  if (it == terms_.end()) {
    terms_.emplace(alpha, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("DiffOperator: dimension mismatch");
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, c);
  return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("DiffOperator: dimension mismatch");
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, -c);
  return *this;
}

DiffOperator DiffOperator::operator+(const DiffOperator& o) const {
  DiffOperator out = *this;
  out += o;
  return out;
}

DiffOperator DiffOperator::operator-(const DiffOperator& o) const {
  DiffOperator out = *this;
  out -= o;
  return out;
}

DiffOperator DiffOperator::operator-() const {
  DiffOperator out(dim_);
  for (const auto& [alpha, c] : terms_) out.terms_.emplace(alpha, -c);
  return out;
}

DiffOperator DiffOperator::operator*(const Rational& c) const {
  DiffOperator out(dim_);
  if (c == 0) return out;
  for (const auto& [alpha, coeff] : terms_) out.terms_.emplace(alpha, coeff * c);
  return out;
}

bool DiffOperator::operator==(const DiffOperator& o) const {
  return dim_ == o.dim_ && terms_ == o.terms_;
}

DiffOperator DiffOperator::degree_projection(int n) const {
  DiffOperator out(dim_);
  for (const auto& [alpha, c] : terms_) {
    int total = 0;
    for (int a : alpha) total += a;
    if (total == n) out.terms_.emplace(alpha, c);
  }
  return out;
}

std::string DiffOperator::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [alpha, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    for (int i = 0; i <= dim_; ++i) {
      if (alpha[i] == 0) continue;
      out += "*d" + std::to_string(i);
      if (alpha[i] > 1) out += "^" + std::to_string(alpha[i]);
    }
  }
  return out;
}

namespace {

Rational multi_binomial(const std::vector<int>& alpha, const std::vector<int>& gamma) {
  Rational out = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    // binom(alpha_i, gamma_i)
    Int num = 1, den = 1;
    for (int k = 0; k < gamma[i]; ++k) {
      num *= alpha[i] - k;
      den *= k + 1;
    }
    out *= Rational(num, den);
  }
  return out;
}

}  // namespace

DiffOperator compose(const DiffOperator& P, const DiffOperator& Q) {
  if (P.dim() != Q.dim()) throw std::invalid_argument("compose: dimension mismatch");
  const int dim = P.dim();
  DiffOperator out(dim);
  for (const auto& [alpha, ca] : P.parts()) {
    for (const auto& [beta, cb] : Q.parts()) {
      /* c_a d^alpha . c_b d^beta =
       * c_a sum_{gamma <= alpha} binom(alpha,gamma) (d^gamma c_b) d^{alpha-gamma+beta} */
      std::vector<int> gamma(dim + 1, 0);
      while (true) {
        PolyPhase deriv = cb;
        for (int i = 0; i <= dim && !deriv.is_zero(); ++i)
          for (int k = 0; k < gamma[i]; ++k) deriv = deriv.dq(i);
        if (!deriv.is_zero()) {
          std::vector<int> target(dim + 1);
          for (int i = 0; i <= dim; ++i) target[i] = alpha[i] - gamma[i] + beta[i];
          out.add_term(target, ca * deriv * multi_binomial(alpha, gamma));
        }
        int i = 0;
        while (i <= dim && gamma[i] == alpha[i]) gamma[i++] = 0;
        if (i > dim) break;
        ++gamma[i];
      }
    }
  }
  return out;
}

DiffOperator commutator(const DiffOperator& P, const DiffOperator& Q) {
  return compose(P, Q) - compose(Q, P);
}

DiffOperator nu(const PolyPhase& f) {
  DiffOperator out(f.dim());
  for (const auto& [alpha, coeff] : f.p_parts()) out.add_term(alpha, coeff);
  return out;
}

DiffOperator phi_op(const PolyPhase& V, const BracketExpr& x) {
  if (V.depends_on_p()) throw std::invalid_argument("phi_op: V must not depend on p");
  if (x.is_A()) return DiffOperator::half_laplacian(V.dim());
  if (x.is_B()) return DiffOperator::multiplication(V);
  return commutator(phi_op(V, x.right()), phi_op(V, x.left()));
}

DiffOperator phi_op(const PolyPhase& V, const LieVector& x) {
  DiffOperator out(V.dim());
  for (const auto& [expr, coeff] : x) out += phi_op(V, expr) * coeff;
  return out;
}

namespace {

PhiHatResult project_result(DiffOperator full, int n) {
  PhiHatResult out;
  out.op = full.degree_projection(n);
  out.discarded_degree = -1;
  for (const auto& [alpha, c] : full.parts()) {
    int total = 0;
    for (int a : alpha) total += a;
    if (total != n && total > out.discarded_degree) out.discarded_degree = total;
  }
  return out;
}

}  // namespace

PhiHatResult phi_hat(const PolyPhase& V, const BracketExpr& x) {
  return project_result(phi_op(V, x), x.degree());
}

PhiHatResult phi_hat(const PolyPhase& V, const LieVector& x) {
  if (x.empty()) throw std::invalid_argument("phi_hat: zero element has no degree");
  const int n = x.begin()->first.degree();
  for (const auto& [expr, coeff] : x)
    if (expr.degree() != n)
      throw std::invalid_argument("phi_hat: input is not degree-homogeneous");
  return project_result(phi_op(V, x), n);
}

}  // namespace lacm
