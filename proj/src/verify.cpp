#include "lacm/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "lacm/bracket.hpp"
#include "lacm/hall.hpp"
#include "lacm/schrodinger.hpp"
#include "lacm/trees.hpp"

namespace lacm {

int rand_int(std::mt19937& rng, int lo, int hi) {
  unsigned span = static_cast<unsigned>(hi - lo) + 1u;
  return lo + static_cast<int>(rng() % span);
}

PolyPhase random_q_poly(std::mt19937& rng, int dim, int max_degree) {
  PolyPhase out(dim);
  int terms = rand_int(rng, 2, 5);
  for (int t = 0; t < terms; ++t) {
    int c = rand_int(rng, 1, 3) * (rand_int(rng, 0, 1) ? 1 : -1);
    PolyPhase mono = PolyPhase::constant(dim, Rational(c));
    int total = rand_int(rng, 0, max_degree);
    for (int s = 0; s < total; ++s) mono = mono * PolyPhase::q(dim, rand_int(rng, 1, dim));
    out += mono;
  }
  if (out.is_zero()) out = PolyPhase::q(dim, 1);
  return out;
}

PolyPhase random_phase_poly(std::mt19937& rng, int dim, int max_degree) {
  PolyPhase out(dim);
  int terms = rand_int(rng, 2, 5);
  for (int t = 0; t < terms; ++t) {
    int c = rand_int(rng, 1, 3) * (rand_int(rng, 0, 1) ? 1 : -1);
    PolyPhase mono = PolyPhase::constant(dim, Rational(c));
    int total = rand_int(rng, 0, max_degree);
    for (int s = 0; s < total; ++s) {
      int i = rand_int(rng, 1, dim);
      mono = mono * (rand_int(rng, 0, 1) ? PolyPhase::q(dim, i) : PolyPhase::p(dim, i));
    }
    out += mono;
  }
  if (out.is_zero()) out = PolyPhase::p(dim, 1);
  return out;
}

MechSystem random_metric_system(std::mt19937& rng, int dim, int max_degree) {
  PolyPhase V = random_q_poly(rng, dim, max_degree);
  PolyPhase T(dim);
  Rational half(1, 2);
  for (int i = 1; i <= dim; ++i) {
    PolyPhase mii = PolyPhase::constant(dim, Rational(rand_int(rng, 1, 2)));
    if (rand_int(rng, 0, 1)) mii += random_q_poly(rng, dim, max_degree);
    T += mii * PolyPhase::p(dim, i) * PolyPhase::p(dim, i) * half;
    for (int j = i + 1; j <= dim; ++j) {
      if (rand_int(rng, 0, 1)) continue;
      T += random_q_poly(rng, dim, max_degree) * PolyPhase::p(dim, i) * PolyPhase::p(dim, j);
    }
  }
  return make_system(dim, T, V);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "identities", "realization", "elham", "calvo", "theta-rank", "schrodinger"};
  return names;
}

namespace {

void add_check(SuiteResult& res, std::string name, bool pass, std::string detail) {
  res.pass = res.pass && pass;
  res.checks.push_back(Check{std::move(name), pass, std::move(detail)});
}

/* Bilinear form M(q)(grad f, grad g) recovered from T via M_ij = d2T/dp_i dp_j. */
PolyPhase metric_gradient_pairing(const MechSystem& sys, const PolyPhase& f, const PolyPhase& g) {
  PolyPhase out(sys.d);
  for (int i = 0; i <= sys.d; ++i) {
    PolyPhase fi = f.dq(i);
    if (fi.is_zero()) continue;
    PolyPhase ti = sys.T.dp(i);
    for (int j = 0; j <= sys.d; ++j) {
      PolyPhase gj = g.dq(j);
      if (gj.is_zero()) continue;
      out += ti.dp(j) * fi * gj;
    }
  }
  return out;
}

SuiteResult run_identities(int max_order, unsigned seed) {
  SuiteResult res{"identities", seed, true, {}};
  std::mt19937 rng(seed);
  int star_order = std::min(max_order > 0 ? max_order : 5, 6);

  {
    const BracketExpr nested = BracketExpr::parse("[B,[B,[B,A]]]");
    int bad = 0;
    std::string first;
    for (int t = 0; t < 60; ++t) {
      MechSystem sys = random_metric_system(rng, 1 + t % 3, 3);
      if (!phi(sys, nested).is_zero()) {
        ++bad;
        if (first.empty()) first = "case " + std::to_string(t) + ": V = " + sys.V.str();
      }
    }
    add_check(res, "phi([B,[B,[B,A]]]) = 0 on 60 randomized systems", bad == 0,
              bad == 0 ? "60/60 vanish identically" : first);
  }

  {
    int bad = 0;
    std::string first;
    for (int t = 0; t < 40; ++t) {
      int d = 1 + t % 3;
      PolyPhase f = random_phase_poly(rng, d, 3);
      PolyPhase g = random_phase_poly(rng, d, 3);
      PolyPhase h = random_phase_poly(rng, d, 3);
      PolyPhase s = poisson(f, poisson(g, h)) + poisson(g, poisson(h, f)) + poisson(h, poisson(f, g));
      if (!s.is_zero()) {
        ++bad;
        if (first.empty()) first = "case " + std::to_string(t) + ": f = " + f.str();
      }
    }
    add_check(res, "Poisson bracket satisfies Jacobi on 40 randomized triples", bad == 0,
              bad == 0 ? "40/40 vanish identically" : first);
  }

  {
    std::vector<BracketExpr> deg0;
    for (const auto& h : build_hall_set(star_order))
      if (h.cls == HallClass::basis && h.degree() == 0) deg0.push_back(h.expr);
    int cases = 0, bad = 0;
    std::string first;
    for (int t = 0; t < 5; ++t) {
      MechSystem sys = random_metric_system(rng, 1 + t % 3, 3);
      std::vector<PolyPhase> img;
      img.reserve(deg0.size());
      for (const auto& u : deg0) img.push_back(phi(sys, u));
      for (size_t a = 0; a < deg0.size(); ++a)
        for (size_t b = 0; b < deg0.size(); ++b) {
          ++cases;
          PolyPhase lhs = phi(sys, star(deg0[a], deg0[b]));
          if (!(lhs == metric_gradient_pairing(sys, img[a], img[b]))) {
            ++bad;
            if (first.empty())
              first = deg0[a].str() + " * " + deg0[b].str() + " (system " + std::to_string(t) + ")";
          }
        }
    }
    std::ostringstream os;
    os << cases << " pairs of degree-0 basis elements of order <= " << star_order
       << " against 5 systems";
    add_check(res, "phi(X1 * X2) = M(q)(grad phi(X1), grad phi(X2))", bad == 0,
              bad == 0 ? os.str() : first);
  }

  return res;
}

SuiteResult run_realization(int max_order, unsigned seed) {
  SuiteResult res{"realization", seed, true, {}};
  int n_max = std::min(max_order > 0 ? max_order : 6, 6);
  for (int n = 1; n <= n_max; ++n) {
    RealizationReport rep = realization_matrix(n);
    std::ostringstream os;
    if (rep.pass) {
      os << "diagonal nonzero, off-diagonal zero on the " << rep.basis.size() << "-element basis";
    } else {
      for (size_t i = 0; i < rep.matrix.size(); ++i)
        for (size_t j = 0; j < rep.matrix[i].size(); ++j) {
          bool ok = (i == j) ? rep.matrix[i][j] != 0 : rep.matrix[i][j] == 0;
          if (!ok) {
            os << "entry (" << i + 1 << "," << j + 1 << ") = " << to_string(rep.matrix[i][j])
               << " for U_" << j + 1 << " = " << rep.basis[j].str() << "; ";
          }
        }
    }
    add_check(res, "separating system realizes a faithful basis at order " + std::to_string(n),
              rep.pass, os.str());
  }
  return res;
}

SuiteResult run_elham(int max_order, unsigned seed) {
  SuiteResult res{"elham", seed, true, {}};
  std::mt19937 rng(seed);
  int order_cap = std::min(max_order > 0 ? max_order : 6, 8);
  for (int t = 0; t < 10; ++t) {
    int d = 1 + t % 3;
    PolyPhase V = random_q_poly(rng, d, 3);
    FactorizationReport rep = psi_factorization_check(V, order_cap);
    bool ok = rep.all_exact && rep.all_structural;
    std::string detail = "V = " + V.str();
    if (!ok) {
      for (const auto& row : rep.rows)
        if (!row.exact || row.sign_class == "mismatch") {
          detail += "; first failure at " + row.expr +
                    (row.detail.empty() ? std::string() : ": " + row.detail);
          break;
        }
    }
    std::ostringstream name;
    name << "phi_V = Psi_V o theta on the order <= " << order_cap << " basis, potential " << t + 1
         << " (d = " << d << ")";
    add_check(res, name.str(), ok, detail);
  }
  return res;
}

SuiteResult run_calvo(int max_order, unsigned seed) {
  SuiteResult res{"calvo", seed, true, {}};
  int cap = std::min(max_order > 0 ? max_order : 7, 7);
  SeparationReport rep = tree_point_separation(cap);
  std::map<int, std::pair<int, std::string>> by_order;  // order -> (#fail, first detail)
  std::map<int, int> totals;
  for (const auto& row : rep.rows) {
    int n = ColoredTree::parse(row.u).order();
    ++totals[n];
    if (!row.pass) {
      auto& slot = by_order[n];
      ++slot.first;
      if (slot.second.empty()) slot.second = row.u + ": " + row.detail;
    }
  }
  for (const auto& [n, count] : totals) {
    auto it = by_order.find(n);
    bool ok = it == by_order.end();
    std::ostringstream name;
    name << "vertex-monomial potentials separate the " << count << " trees of order " << n;
    add_check(res, name.str(), ok,
              ok ? "probe: coefficient of the tree's thin-edge p-monomial at q = 0"
                 : it->second.second);
  }
  return res;
}

SuiteResult run_theta_rank(int max_order, unsigned seed) {
  SuiteResult res{"theta-rank", seed, true, {}};
  int cap = std::min(max_order > 0 ? max_order : 10, 12);
  for (const ThetaRankRow& row : theta_rank(cap)) {
    std::ostringstream name, detail;
    name << "theta images of the order-" << row.order << " basis are independent";
    detail << "rank " << row.rank << " of expected " << row.lie_dim << " inside the "
           << row.tree_dim << "-dimensional tree slice";
    add_check(res, name.str(), row.pass, detail.str());
  }
  return res;
}

SuiteResult run_schrodinger(int max_order, unsigned seed) {
  SuiteResult res{"schrodinger", seed, true, {}};
  std::mt19937 rng(seed);
  int cap = std::min(max_order > 0 ? max_order : 5, 6);
  std::vector<BracketExpr> basis;
  for (const auto& h : build_hall_set(cap))
    if (h.cls == HallClass::basis) basis.push_back(h.expr);
  for (int t = 0; t < 10; ++t) {
    int d = 1 + t % 2;
    PolyPhase V = random_q_poly(rng, d, 3);
    MechSystem sys = euclidean_system(d, V);
    bool ok = true;
    std::string detail = "V = " + V.str() + "; " + std::to_string(basis.size()) + " basis elements";
    for (const auto& u : basis) {
      PhiHatResult hat = phi_hat(V, u);
      if (!(hat.op == nu(phi(sys, u)))) {
        ok = false;
        detail = "V = " + V.str() + "; operator image of " + u.str() +
                 " differs from the classical image";
        break;
      }
    }
    std::ostringstream name;
    name << "operator bracket projection matches nu o phi_V, potential " << t + 1 << " (d = " << d
         << ")";
    add_check(res, name.str(), ok, detail);
  }
  return res;
}

}  // namespace

SuiteResult run_suite(const std::string& name, int max_order, unsigned seed) {
  if (name == "identities") return run_identities(max_order, seed);
  if (name == "realization") return run_realization(max_order, seed);
  if (name == "elham") return run_elham(max_order, seed);
  if (name == "calvo") return run_calvo(max_order, seed);
  if (name == "theta-rank") return run_theta_rank(max_order, seed);
  if (name == "schrodinger") return run_schrodinger(max_order, seed);
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteResult> run_suites(const std::string& name, int max_order, unsigned seed) {
  std::vector<SuiteResult> out;
  if (name == "all") {
    for (const auto& s : suite_names()) out.push_back(run_suite(s, max_order, seed));
  } else {
    out.push_back(run_suite(name, max_order, seed));
  }
  return out;
}

}  // namespace lacm
