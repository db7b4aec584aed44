#pragma once

#include <string>
#include <vector>

#include "lacm/bracket.hpp"
#include "lacm/polyphase.hpp"
#include "lacm/rational.hpp"
#include "lacm/trees.hpp"

namespace lacm {

/* Polynomial mechanical system: kinetic energy T quadratic in p, potential
 * V independent of p, phase variables indexed 0..d. */
struct MechSystem {
  int d = 0;
  PolyPhase T;
  PolyPhase V;
  MechSystem() : T(0), V(0) {}
};

/* Validates: T p-homogeneous of degree 2, V free of p. */
MechSystem make_system(int d, PolyPhase T, PolyPhase V);

/* T = (1/2) sum_{i=1..d} p_i^2. */
MechSystem euclidean_system(int d, PolyPhase V);

/* {f,g} = sum_i df/dq_i dg/dp_i - df/dp_i dg/dq_i over i = 0..dim. */
PolyPhase poisson(const PolyPhase& f, const PolyPhase& g);

/* The homomorphism with phi(A) = T, phi(B) = V, phi([x,y]) = {phi x, phi y}. */
PolyPhase phi(const MechSystem& sys, const BracketExpr& x);
PolyPhase phi(const MechSystem& sys, const LieVector& x);

/* The separating system on d_n+1 degrees of freedom: V = q_2 and
 * T = p_0 p_1 + sum over basis elements U_3..U_{d_n} of one monomial W_i
 * chosen by the right-nested factorization [c_m,[...,[c_1,A]...]] of U_i:
 *   - m = 2, degree(c_1) = degree(c_2) = 0      -> q_i p_{j1} p_{j2}
 *   - m = 1, degree(c_1) = 0                    -> p_i p_{j1}
 *   - m >= 2, degree(c_1) = 0 < degree(c_2)     -> p_i p_{j1} q_{j2}...q_{jm}
 *   - degree(c_1) > 0                           -> p_0 p_i q_{j1}...q_{jm}
 * where j_k is the position of c_k in the ordered basis U_1=A, U_2=B,
 * then order-2, order-3, ... blocks each in basis order.  Supported for
 * n = 1..6. */
MechSystem separating_system(int n);

/* The ordered basis U_1..U_{d_n} used by separating_system. */
std::vector<BracketExpr> ordered_basis(int n);

struct RealizationReport {
  int n = 0;
  std::vector<BracketExpr> basis;
  /* matrix[i][j] = (d/dp_{i+1} + d/dq_{i+1}) phi(U_{j+1}) at p = (1,0,...,0),
   * q = 0, for i,j = 0..d_n-1. */
  std::vector<std::vector<Rational>> matrix;
  bool pass = false;  // diagonal nonzero, off-diagonal zero
};

RealizationReport realization_matrix(int n);

/* Index-contracted vertex product over the tree: edges carry labels
 * 1..V.dim(); a thin vertex contributes p_(its edge label), a thick vertex
 * with incident labels l_1..l_r contributes d^r V / dq_{l_1}..dq_{l_r}.
 * Base cases: thick atom -> V, thin atom -> (1/2) sum_{i=1..d} p_i^2. */
PolyPhase elementary_hamiltonian(const PolyPhase& V, const ColoredTree& u);
PolyPhase elementary_hamiltonian(const PolyPhase& V, const TreeVector& u);

/* Reference images of the order <= 6 quotient basis, as tabulated in the
 * source material this library reproduces.  The tabulated signs follow a
 * convention that differs from this library's bracket orientation by a
 * per-row sign (and two rows are internally inconsistent either way), so
 * comparisons classify each row instead of asserting equality. */
struct TabulatedThetaRow {
  std::string expr;                                     // bracket text
  std::vector<std::pair<Rational, std::string>> image;  // (coeff, tree encoding)
};
const std::vector<TabulatedThetaRow>& tabulated_theta_rows();

struct FactorizationRow {
  std::string expr;
  bool exact = false;       // phi_V(U) == Psi_V(theta(U)) as polynomials
  std::string sign_class;   // "+1", "-1", "mixed", or "" when untabulated
  std::string detail;       // populated on failure
};

struct FactorizationReport {
  bool all_exact = false;
  bool all_structural = false;  // every tabulated row matches up to sign
  std::vector<FactorizationRow> rows;
};

/* Checks phi_V = Psi_V . theta on every quotient-basis element of order
 * <= max_order (max 8) for the Euclidean system with the given V, and
 * classifies the image of each tabulated row against the reference table. */
FactorizationReport psi_factorization_check(const PolyPhase& V, int max_order);

struct SeparationRow {
  std::string u;
  bool pass = false;
  std::string detail;
};

struct SeparationReport {
  bool pass = false;
  std::vector<SeparationRow> rows;
};

/* For each tree u of order <= max_order (max 7), builds the potential with
 * one squarefree monomial per thick vertex in the edge-label variables and
 * checks that the coefficient of u's own thin-edge p-monomial in the
 * elementary Hamiltonian at q = 0 is nonzero exactly at u among all trees of
 * the same order AND degree.  That coefficient is still a linear functional
 * of the elementary Hamiltonian, and slice-wise separation is what the
 * kernel statement needs: Psi_V of a degree-k tree is p-homogeneous of
 * degree k, and rescaling V -> lambda V scales every value by
 * lambda^(number of thick vertices), which pins the order inside a degree
 * slice via a Vandermonde argument.  Plain evaluation at p = (1,...,1)
 * would not suffice: graph folds can make the elementary Hamiltonian of a
 * different tree in the same slice nonzero there (e.g. the potential built
 * for o(.,.,o(o)) evaluates to 2 on o(o(.),o(.))), but folded terms carry a
 * different p-monomial and the coefficient probe rejects them. */
SeparationReport tree_point_separation(int max_order);

}  // namespace lacm
