#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "extremal/graph.hpp"
#include "extremal/rational.hpp"

namespace extremal {

// ---------------------------------------------------------------------------
// |E| <= Delta (n - Delta) for triangle-free graphs.

struct EdgeBoundReport {
  std::size_t edges = 0;
  std::size_t max_degree = 0;
  std::size_t bound = 0;  // Delta * (n - Delta)
  bool holds = false;
  bool equality = false;
  // Equality case: g is K_{Delta, n - Delta}. Vacuously true without equality.
  bool equality_is_complete_bipartite = true;
};

// Throws std::invalid_argument unless g is triangle-free.
EdgeBoundReport edge_bound_check(const Graph& g);

// ---------------------------------------------------------------------------
// Minimum-degree coefficient for patterns with a matching of size x and 2d
// unmatched vertices:
//   (d+x-1)^(2d+2x-2) / (2 (2d+x-1)^(2d+x-1) (x-1)^(x-1)).

struct Theorem1Coefficient {
  std::uint64_t x = 0;
  std::uint64_t d = 0;
  Rational value;
  bool exceeds_two_fifths = false;
};

// Throws std::invalid_argument when x < 2.
Theorem1Coefficient thm1_coefficient(std::uint64_t x, std::uint64_t d);

// 16 d^2 <= x - 1, i.e. 2d unmatched vertices <= sqrt(x - 1) / 2.
bool thm1_hypothesis_holds(std::uint64_t x, std::uint64_t d);

// Maximiser (2d+x-1)/(2d+2x-2) of t^(2d+x-1) (1-t)^(x-1) on [0, 1], as a
// fraction of n. Throws std::invalid_argument when x = 0 or 2d+2x-2 = 0.
Rational optimal_Delta_fraction(std::uint64_t x, std::uint64_t d);

struct DeltaGridCheck {
  double argmax = 0;   // grid point maximising the log-objective
  double formula = 0;  // optimal_Delta_fraction as a double
  double step = 0;
  bool within_one_step = false;
};

DeltaGridCheck delta_fraction_grid_check(std::uint64_t x, std::uint64_t d, double step = 1e-4);

enum class Relation { kEqual, kAtLeast, kGreater };

std::string relation_symbol(Relation r);

struct ChainStep {
  std::string lhs_name;
  std::string rhs_name;
  Relation relation = Relation::kEqual;
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

struct ChainReport {
  std::uint64_t x = 0;
  std::uint64_t d = 0;
  bool hypothesis_holds = false;  // 16 d^2 <= x - 1 and d < x - 1
  std::vector<std::pair<std::string, Rational>> values;  // each expression once
  std::vector<ChainStep> steps;
  bool all_hold = false;
};

// Evaluates every expression of the lower-bound chain from the coefficient
// down to 2/5 exactly and checks each consecutive relation. Requires x >= 2;
// a violated hypothesis is reported, not thrown.
ChainReport thm1_chain_check(std::uint64_t x, std::uint64_t d);

struct SweepViolation {
  std::uint64_t x = 0;
  std::uint64_t d = 0;
  std::string what;
};

struct SweepReport {
  std::uint64_t x_max = 0;
  std::size_t pairs_checked = 0;
  std::size_t steps_checked = 0;
  Rational min_coefficient;  // smallest coefficient seen
  std::uint64_t min_x = 0;
  std::uint64_t min_d = 0;
  std::vector<SweepViolation> violations;  // sorted by (x, d)
};

// All (x, d) with 2 <= x <= x_max, d >= 0 and 16 d^2 <= x - 1: coefficient
// > 2/5 and every chain step. Deterministic for any worker count.
SweepReport thm1_sweep(std::uint64_t x_max, unsigned workers = 1);

// ---------------------------------------------------------------------------
// Parameters of the C5 blow-up that beats every bipartite host.

struct ParamSearchConfig {
  std::uint64_t a_resolution = 1024;  // a scanned over 1/2 + j / resolution
  unsigned c_halving_depth = 60;
};

struct Theorem2Params {
  Rational lambda;
  std::uint64_t lambda_num = 0;  // lambda = r / s in lowest terms
  std::uint64_t lambda_den = 1;
  Rational a;
  Rational c;
  Rational b;  // 1 - a - 3c
  // p = a^(lambda+1) (1-a-3c) 2^(lambda+2). Irrational for non-integer
  // lambda, so the exact value carried is p^s.
  Rational p_pow_den;
  double p = 0;
  // 2 a b^2 / c^3; x_min is the least x >= 1 with p^x exceeding it.
  Rational log_argument;
  std::uint64_t x_min = 0;

  bool f_positive = false;         // a^(l+1)(1-a) > (1/2)^(l+2)
  bool g_positive = false;         // a^(l+1)(1-a-3c) > (1/2)^(l+2)
  bool p_greater_than_one = false;
  bool power_certificate = false;  // p^x_min > log_argument
  bool minimal = false;            // p^(x_min - 1) <= log_argument
  bool all_hold() const {
    return f_positive && g_positive && p_greater_than_one && power_certificate && minimal;
  }
};

// Throws std::invalid_argument unless lambda > 0, and std::logic_error if no
// admissible a or c is found.
Theorem2Params solve_theorem2_params(const Rational& lambda, const ParamSearchConfig& config = {});

struct Theorem2Certificate {
  Theorem2Params params;
  std::uint64_t x = 0;
  std::uint64_t d = 0;
  std::size_t pattern_order = 0;  // 2x + 2d
  Rational l_c5;                  // coefficient in the (a, b, c, c, c) C5 blow-up
  Rational l_k2;                  // coefficient in the balanced bipartite host
  Integer c5_hom_count;
  Rational canonical_hom_product;  // a^(x+lx-1) b^(x-2) c^3
  bool c5_beats_k2 = false;
  bool coefficient_at_least_canonical = false;
  bool l_k2_formula = false;  // l_k2 == 2 (1/2)^m
  // The inequality a^(x+lx-1) b^(x-2) c^3 > 2 (1/2)^E with E = 2x + lx
  // (what p^x > 2ab^2/c^3 gives) and with E = 2x + 2l (as sometimes written).
  bool bound_with_exponent_lambda_x = false;
  bool bound_with_exponent_two_lambda = false;
};

// Builds H(d, x) at the least x >= max(x_min, 3) with lambda x an even
// integer (or at `x_override` when non-zero; then lambda x must be even, else
// std::invalid_argument) and compares exact leading coefficients.
Theorem2Certificate theorem2_end_to_end(const Rational& lambda, std::uint64_t x_override = 0,
                                        const ParamSearchConfig& config = {});

// The parameter checks as explicit inequalities. For lambda = r / s the
// sides are raised to the power s so every value stays rational.
std::vector<ChainStep> theorem2_param_steps(const Theorem2Params& params);

// The comparisons behind a certificate: L_C5 > L_K2, L_C5 >= canonical
// product, L_K2 = 2 (1/2)^m.
std::vector<ChainStep> theorem2_certificate_steps(const Theorem2Certificate& cert);

// Both written forms of the canonical-product bound (exponent 2x + lambda x
// and 2x + 2 lambda). Recorded, not required.
std::vector<ChainStep> theorem2_exponent_forms(const Theorem2Certificate& cert);

// Canonical homomorphism product for given blob weights.
Rational canonical_hom_product(const Rational& a, const Rational& b, const Rational& c,
                               std::uint64_t x, std::uint64_t d);

// C5 with the blob order of the construction: 0-1-2-3-4-0 carrying weights
// (a, b, c, c, c).
Graph theorem2_host_pattern();

}  // namespace extremal
