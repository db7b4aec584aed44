#pragma once

#include <random>
#include <string>
#include <vector>

#include "lacm/mech.hpp"
#include "lacm/polyphase.hpp"

namespace lacm {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;  // counterexample payload or short summary
};

struct SuiteResult {
  std::string suite;
  unsigned seed = 0;
  bool pass = false;
  std::vector<Check> checks;
};

/* The individual suite names, in canonical order (without "all"). */
const std::vector<std::string>& suite_names();

/* Runs one suite.  max_order <= 0 selects the suite's default scale
 * (realization 6, elham 6, calvo 7, theta-rank 10, schrodinger 5).
 * Throws std::invalid_argument for an unknown suite name. */
SuiteResult run_suite(const std::string& name, int max_order, unsigned seed);

/* Runs the named suite, or every suite for "all". */
std::vector<SuiteResult> run_suites(const std::string& name, int max_order, unsigned seed);

/* Deterministic sampling helpers (mt19937 output is pinned by the standard,
 * so results are identical across platforms; std distributions are not and
 * are deliberately avoided). */
int rand_int(std::mt19937& rng, int lo, int hi);

/* Nonzero polynomial in q_1..q_dim of total degree <= max_degree with
 * integer coefficients in [-3,3]. */
PolyPhase random_q_poly(std::mt19937& rng, int dim, int max_degree);

/* Polynomial in q_1..q_dim, p_1..p_dim of total degree <= max_degree. */
PolyPhase random_phase_poly(std::mt19937& rng, int dim, int max_degree);

/* System with T = (1/2) M(q)(p,p) for a random symmetric polynomial M and a
 * random potential. */
MechSystem random_metric_system(std::mt19937& rng, int dim, int max_degree);

}  // namespace lacm
