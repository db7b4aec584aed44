#include "lacm/mech.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "lacm/hall.hpp"

namespace lacm {

MechSystem make_system(int d, PolyPhase T, PolyPhase V) {
  if (T.dim() != d || V.dim() != d)
    throw std::invalid_argument("make_system: polynomial dimension mismatch");
  if (!T.is_p_homogeneous(2))
    throw std::invalid_argument("make_system: T must be p-homogeneous of degree 2");
  if (V.depends_on_p()) throw std::invalid_argument("make_system: V must not depend on p");
  MechSystem sys;
  sys.d = d;
  sys.T = std::move(T);
  sys.V = std::move(V);
  return sys;
}

MechSystem euclidean_system(int d, PolyPhase V) {
  PolyPhase T(d);
  for (int i = 1; i <= d; ++i) {
    PolyPhase pi = PolyPhase::p(d, i);
    T += pi * pi * Rational(1, 2);
  }
  return make_system(d, std::move(T), std::move(V));
}

PolyPhase poisson(const PolyPhase& f, const PolyPhase& g) {
  if (f.dim() != g.dim()) throw std::invalid_argument("poisson: dimension mismatch");
  PolyPhase out(f.dim());
  for (int i = 0; i <= f.dim(); ++i) {
    out += f.dq(i) * g.dp(i);
    out -= f.dp(i) * g.dq(i);
  }
  return out;
}

PolyPhase phi(const MechSystem& sys, const BracketExpr& x) {
  if (x.is_A()) return sys.T;
  if (x.is_B()) return sys.V;
  return poisson(phi(sys, x.left()), phi(sys, x.right()));
}

PolyPhase phi(const MechSystem& sys, const LieVector& x) {
  PolyPhase out(sys.d);
  for (const auto& [expr, coeff] : x) out += phi(sys, expr) * coeff;
  return out;
}

std::vector<BracketExpr> ordered_basis(int n) {
  std::vector<BracketExpr> basis{BracketExpr::A(), BracketExpr::B()};
  std::vector<BracketExpr> rest;
  for (const HallElement& h : build_hall_set(n))
    if (h.cls == HallClass::basis && h.order() >= 2) rest.push_back(h.expr);
  std::sort(rest.begin(), rest.end(), [](const BracketExpr& a, const BracketExpr& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return compare(a, b) < 0;
  });
  basis.insert(basis.end(), rest.begin(), rest.end());
  return basis;
}

MechSystem separating_system(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("separating_system: n must be in 1..6");
  const std::vector<BracketExpr> U = ordered_basis(n);
  const int d = static_cast<int>(U.size());
  std::map<std::string, int> index;  // 1-based position in U
  for (int i = 0; i < d; ++i) index.emplace(U[i].str(), i + 1);

  PolyPhase T = PolyPhase::p(d, 0) * PolyPhase::p(d, 1);
  for (int i = 3; i <= d; ++i) {
    // unfold U_i = [c_m,[...,[c_1,A]...]]; c holds c_1..c_m innermost first
    std::vector<BracketExpr> c;
    BracketExpr cur = U[i - 1];
    while (!cur.is_generator()) {
      c.push_back(cur.left());
      cur = cur.right();
    }
    if (!cur.is_A())
      throw std::logic_error("separating_system: right-nested unfolding did not end at A for " +
                             U[i - 1].str());
    std::reverse(c.begin(), c.end());
    std::vector<int> j;
    for (const BracketExpr& ck : c) {
      auto it = index.find(ck.str());
      if (it == index.end())
        throw std::logic_error("separating_system: factor " + ck.str() +
                               " is not a basis element");
      j.push_back(it->second);
    }
    const int m = static_cast<int>(c.size());
    PolyPhase W(d);
    if (m == 2 && c[0].degree() == 0 && c[1].degree() == 0) {
      W = PolyPhase::q(d, i) * PolyPhase::p(d, j[0]) * PolyPhase::p(d, j[1]);
    } else if (m == 1 && c[0].degree() == 0) {
      W = PolyPhase::p(d, i) * PolyPhase::p(d, j[0]);
    } else if (m >= 2 && c[0].degree() == 0 && c[1].degree() > 0) {
      W = PolyPhase::p(d, i) * PolyPhase::p(d, j[0]);
      for (int k = 1; k < m; ++k) W = W * PolyPhase::q(d, j[k]);
    } else if (c[0].degree() > 0) {
      W = PolyPhase::p(d, 0) * PolyPhase::p(d, i);
      for (int k = 0; k < m; ++k) W = W * PolyPhase::q(d, j[k]);
    } else {
      throw std::logic_error("separating_system: unhandled factorization shape for " +
                             U[i - 1].str());
    }
    T += W;
  }
  return make_system(d, std::move(T), PolyPhase::q(d, 2));
}

RealizationReport realization_matrix(int n) {
  MechSystem sys = separating_system(n);
  RealizationReport report;
  report.n = n;
  report.basis = ordered_basis(n);
  const int d = sys.d;
  std::vector<Rational> p0(d + 1, Rational(0)), q0(d + 1, Rational(0));
  p0[0] = 1;
  report.pass = true;
  for (int j = 1; j <= d; ++j) {
    PolyPhase img = phi(sys, report.basis[j - 1]);
    std::vector<Rational> col;
    for (int i = 1; i <= d; ++i) {
      Rational entry = (img.dp(i) + img.dq(i)).eval(p0, q0);
      col.push_back(entry);
    }
    report.matrix.push_back(std::move(col));
  }
  // stored column-major above; transpose to matrix[i][j]
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m[i][j] = report.matrix[j][i];
  report.matrix = std::move(m);
  for (int i = 0; i < d && report.pass; ++i)
    for (int j = 0; j < d; ++j) {
      const bool nonzero = report.matrix[i][j] != 0;
      if ((i == j) != nonzero) {
        report.pass = false;
        break;
      }
    }
  return report;
}

namespace {

/* Iterated q-derivatives of V, memoized on the application-count vector. */
class DerivCache {
 public:
  explicit DerivCache(const PolyPhase& V) : dim_(V.dim()) {
    memo_.emplace(std::vector<int>(dim_ + 1, 0), V);
  }
  const PolyPhase& get(const std::vector<int>& counts) {
    auto it = memo_.find(counts);
    if (it != memo_.end()) return it->second;
    std::vector<int> base = counts;
    int i = 0;
    while (base[i] == 0) ++i;
    --base[i];
    PolyPhase d = get(base).dq(i);
    return memo_.emplace(counts, std::move(d)).first->second;
  }

 private:
  int dim_;
  std::map<std::vector<int>, PolyPhase> memo_;
};

}  // namespace

PolyPhase elementary_hamiltonian(const PolyPhase& V, const ColoredTree& u) {
  const int d = V.dim();
  if (V.depends_on_p())
    throw std::invalid_argument("elementary_hamiltonian: V must not depend on p");
  if (u.size() == 1) {
    if (u.color(0) == 'o') return V;
    PolyPhase T(d);
    for (int i = 1; i <= d; ++i) {
      PolyPhase pi = PolyPhase::p(d, i);
      T += pi * pi * Rational(1, 2);
    }
    return T;
  }
  if (d < 1) return PolyPhase(d);  // no edge labels available
  // edge list and incidence
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < u.size(); ++v)
    for (int w : u.neighbors(v))
      if (v < w) edges.push_back({v, w});
  const int m = static_cast<int>(edges.size());
  std::vector<std::vector<int>> incident(u.size());
  for (int e = 0; e < m; ++e) {
    incident[edges[e].first].push_back(e);
    incident[edges[e].second].push_back(e);
  }
  DerivCache cache(V);
  PolyPhase total(d);
  std::vector<int> lab(m, 1);  // labels in 1..d
  while (true) {
    PolyPhase term = PolyPhase::constant(d, 1);
    for (int v = 0; v < u.size() && !term.is_zero(); ++v) {
      if (u.color(v) == '.') {
        term = term * PolyPhase::p(d, lab[incident[v][0]]);
      } else {
        std::vector<int> counts(d + 1, 0);
        for (int e : incident[v]) ++counts[lab[e]];
        term = term * cache.get(counts);
      }
    }
    total += term;
    int e = 0;
    while (e < m && lab[e] == d) lab[e++] = 1;
    if (e == m) break;
    ++lab[e];
  }
  return total;
}

PolyPhase elementary_hamiltonian(const PolyPhase& V, const TreeVector& u) {
  PolyPhase out(V.dim());
  for (const auto& [t, c] : u) out += elementary_hamiltonian(V, t) * c;
  return out;
}

const std::vector<TabulatedThetaRow>& tabulated_theta_rows() {
  static const std::vector<TabulatedThetaRow> rows = {
      {"B", {{1, "o"}}},
      {"[B,[B,A]]", {{1, "o(o)"}}},
      {"[[B,[B,A]],[B,A]]", {{2, "o(o,o)"}}},
      {"[B,A]", {{-1, "o(.)"}}},
      {"[[B,[B,A]],A]", {{2, "o(.,o)"}}},
      {"[[[B,[B,A]],[B,A]],A]", {{4, "o(.,o(o))"}, {2, "o(.,o,o)"}}},
      {"[[B,A],[[B,[B,A]],A]]", {{2, "o(.,o,o)"}}},
      {"A", {{1, "."}}},
      {"[[B,A],A]", {{1, "o(.,.)"}}},
      {"[[[B,[B,A]],A],A]", {{2, "o(.,o(.))"}, {-2, "o(.,.,o)"}}},
      {"[[B,A],[[B,A],A]]", {{2, "o(.,o(.))"}, {1, "o(.,.,o)"}}},
      {"[A,[[B,A],A]]", {{1, "o(.,.,.)"}}},
      {"[A,[[[B,[B,A]],A],A]]", {{-6, "o(.,.,o(.))"}, {-2, "o(.,.,.,o)"}}},
      {"[A,[[B,A],[[B,A],A]]]", {{-3, "o(.,.,o(.))"}, {1, "o(.,.,.,o)"}}},
      {"[A,[A,[[B,A],A]]]", {{1, "o(.,.,.,.)"}}},
      {"[A,[A,[A,[[B,A],A]]]]", {{1, "o(.,.,.,.,.)"}}},
  };
  return rows;
}

namespace {

std::string classify_against_tabulated(const TreeVector& ours,
                                       const std::vector<std::pair<Rational, std::string>>& ref) {
  TreeVector printed;
  for (const auto& [c, enc] : ref) printed.emplace(ColoredTree::parse(enc), c);
  if (ours.size() != printed.size()) return "mismatch";
  bool all_same = true, all_negated = true;
  for (const auto& [t, c] : printed) {
    auto it = ours.find(t);
    if (it == ours.end()) return "mismatch";
    if (abs(it->second) != abs(c)) return "mismatch";
    if (it->second != c) all_same = false;
    if (it->second != -c) all_negated = false;
  }
  if (all_same) return "+1";
  if (all_negated) return "-1";
  return "mixed";
}

}  // namespace

FactorizationReport psi_factorization_check(const PolyPhase& V, int max_order) {
  if (max_order < 1 || max_order > 8)
    throw std::invalid_argument("psi_factorization_check: max_order must be in 1..8");
  MechSystem sys = euclidean_system(V.dim(), V);
  std::map<std::string, const TabulatedThetaRow*> tab;
  for (const TabulatedThetaRow& row : tabulated_theta_rows()) tab.emplace(row.expr, &row);

  FactorizationReport report;
  report.all_exact = true;
  report.all_structural = true;
  for (const BracketExpr& U : ordered_basis(max_order)) {
    FactorizationRow row;
    row.expr = U.str();
    TreeVector image = theta(U);
    PolyPhase lhs = phi(sys, U);
    PolyPhase rhs = elementary_hamiltonian(V, image);
    row.exact = (lhs == rhs);
    if (!row.exact) {
      report.all_exact = false;
      row.detail = "phi = " + lhs.str() + "; psi.theta = " + rhs.str();
    }
    auto it = tab.find(row.expr);
    if (it != tab.end()) {
      row.sign_class = classify_against_tabulated(image, it->second->image);
      if (row.sign_class == "mismatch") {
        report.all_structural = false;
        std::string got;
        for (const auto& [t, c] : image)
          got += (got.empty() ? "" : " + ") + to_string(c) + "*" + t.encoding();
        row.detail += (row.detail.empty() ? "" : "; ") + ("theta = " + got);
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace {

/* Coefficient of the monomial prod_{l in p_target} p_l in the elementary
 * Hamiltonian at q = 0, where the potential is given by its monomial table
 * (exponent vector over labels 1..d, length d+1).  A thick vertex with
 * incident label counts beta contributes the derivative of V at zero:
 * coeff(q^beta) * prod(beta_i!).  Reading off one p-coefficient instead of
 * evaluating at p = (1,...,1) discards label assignments that fold several
 * vertices onto one potential monomial but route the thin edges elsewhere. */
Rational psi_point_value(const std::map<std::vector<int>, Rational>& vmono, int d,
                         const std::vector<int>& p_target, const ColoredTree& u) {
  if (u.size() == 1) {
    if (u.color(0) == '.') {
      // (1/2) sum p_i^2: the only monomials are p_l p_l with 1 <= l <= d
      if (p_target.size() == 2 && p_target[0] == p_target[1] && p_target[0] >= 1 &&
          p_target[0] <= d)
        return Rational(1, 2);
      return 0;
    }
    if (!p_target.empty()) return 0;
    auto it = vmono.find(std::vector<int>(d + 1, 0));
    return it == vmono.end() ? Rational(0) : it->second;
  }
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < u.size(); ++v)
    for (int w : u.neighbors(v))
      if (v < w) edges.push_back({v, w});
  const int m = static_cast<int>(edges.size());
  if (d == 0) return 0;  // no labels available
  std::vector<std::vector<int>> incident(u.size());
  for (int e = 0; e < m; ++e) {
    incident[edges[e].first].push_back(e);
    incident[edges[e].second].push_back(e);
  }
  std::vector<int> thin_edges;  // the unique incident edge of each thin vertex
  for (int v = 0; v < u.size(); ++v)
    if (u.color(v) == '.') thin_edges.push_back(incident[v][0]);
  Rational total = 0;
  std::vector<int> lab(m, 1);
  while (true) {
    std::vector<int> p_mono;
    p_mono.reserve(thin_edges.size());
    for (int e : thin_edges) p_mono.push_back(lab[e]);
    std::sort(p_mono.begin(), p_mono.end());
    if (p_mono != p_target) {
      int e = 0;
      while (e < m && lab[e] == d) lab[e++] = 1;
      if (e == m) break;
      ++lab[e];
      continue;
    }
    Rational term = 1;
    for (int v = 0; v < u.size() && term != 0; ++v) {
      if (u.color(v) == '.') continue;  // p factor carried by p_mono
      std::vector<int> beta(d + 1, 0);
      for (int e : incident[v]) ++beta[lab[e]];
      auto it = vmono.find(beta);
      if (it == vmono.end()) {
        term = 0;
        break;
      }
      Rational deriv = it->second;
      for (int i = 1; i <= d; ++i)
        for (int f = 2; f <= beta[i]; ++f) deriv *= f;
      term *= deriv;
    }
    total += term;
    int e = 0;
    while (e < m && lab[e] == d) lab[e++] = 1;
    if (e == m) break;
    ++lab[e];
  }
  return total;
}

}  // namespace

SeparationReport tree_point_separation(int max_order) {
  if (max_order < 1 || max_order > 7)
    throw std::invalid_argument("tree_point_separation: max_order must be in 1..7");
  auto table = enumerate_trees(max_order);

  SeparationReport report;
  report.pass = true;
  for (const auto& [key, list] : table) {
    for (const ColoredTree& u : list) {
      SeparationRow row;
      row.u = u.encoding();
      row.pass = true;
      // separating potential: one monomial per thick vertex of u in the
      // edge-label variables; thin atom gets V = 0 on one variable.  The
      // probed functional is the coefficient of u's own thin-edge p-monomial
      // at q = 0.
      int d = u.size() - 1;
      std::map<std::vector<int>, Rational> vmono;
      std::vector<int> p_target;
      if (u.size() == 1 && u.color(0) == '.') {
        d = 1;
        p_target = {1, 1};  // probe the p_1^2 term of T
      } else if (u.size() == 1) {
        vmono.emplace(std::vector<int>(1, 0), 1);  // d = 0, V = 1
      } else {
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v < u.size(); ++v)
          for (int w : u.neighbors(v))
            if (v < w) edges.push_back({v, w});
        std::vector<std::vector<int>> incident(u.size());
        for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
          incident[edges[e].first].push_back(e);
          incident[edges[e].second].push_back(e);
        }
        for (int v = 0; v < u.size(); ++v) {
          if (u.color(v) == '.') {
            p_target.push_back(incident[v][0] + 1);
            continue;
          }
          std::vector<int> expo(d + 1, 0);
          for (int e : incident[v]) ++expo[e + 1];
          auto it = vmono.find(expo);
          if (it == vmono.end())
            vmono.emplace(std::move(expo), 1);
          else
            it->second += 1;
        }
        std::sort(p_target.begin(), p_target.end());
      }
      for (const ColoredTree& other : list) {
        Rational value = psi_point_value(vmono, d, p_target, other);
        const bool expect_nonzero = (other == u);
        if ((value != 0) != expect_nonzero) {
          row.pass = false;
          report.pass = false;
          row.detail += (row.detail.empty() ? "" : "; ") + other.encoding() + " -> " +
                        to_string(value);
        }
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace lacm
