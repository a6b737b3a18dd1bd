#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "extremal/graph.hpp"
#include "extremal/rational.hpp"

namespace extremal {

// Blow-up skeleton: a loopless pattern P with a non-negative rational weight
// per vertex, summing to exactly 1.
class WeightedPattern {
 public:
  // Throws std::invalid_argument when the weights are negative, do not sum to
  // 1, or do not match the pattern order.
  WeightedPattern(Graph pattern, std::vector<Rational> weights);

  // Equal weights 1/|P|.
  static WeightedPattern uniform(Graph pattern);

  const Graph& pattern() const { return pattern_; }
  const std::vector<Rational>& weights() const { return weights_; }

 private:
  Graph pattern_;
  std::vector<Rational> weights_;
};

struct LeadingCoefficient {
  Rational value;
  // Homomorphisms H -> P with a non-zero weight product.
  Integer hom_count;
};

// Number of maps V(H) -> V(P) preserving edges (not necessarily injective).
Integer count_homomorphisms(const Graph& h, const Graph& p);

// Every homomorphism as a vector indexed by H's vertices, in lexicographic
// order. Requires |V(H)| <= 20 and at most `max_listed` results, otherwise
// throws std::length_error.
std::vector<std::vector<Vertex>> list_homomorphisms(const Graph& h, const Graph& p,
                                                    std::size_t max_listed = 1'000'000);

// Sum over homomorphisms of the product of weights[phi(v)]. Weights need not
// sum to 1 here, which makes degree-m homogeneity directly testable.
Rational weighted_hom_sum(const Graph& h, const Graph& p, std::span<const Rational> weights);
double weighted_hom_sum(const Graph& h, const Graph& p, std::span<const double> weights);

// Coefficient of n^m in the embedding count of H (m vertices) in the blow-up
// of P with blobs of weight * n vertices.
LeadingCoefficient leading_coefficient(const Graph& h, const WeightedPattern& wp);

// Blob sizes for a host of n vertices: floor(w * n) plus largest remainders
// (ties to the lower index), so the sizes sum to n.
std::vector<std::size_t> blob_sizes(const WeightedPattern& wp, std::size_t n);

struct SaturationReport {
  bool feasible = false;
  std::string reason;  // why counting was skipped when not feasible
  std::size_t n = 0;
  Rational coefficient;
  Integer count_n;       // embeddings in the blow-up on n vertices
  Integer count_2n;      // ... and on 2n vertices
  Rational error_n;      // |count_n / n^m - coefficient|
  Rational error_2n;
  Rational fitted_constant;  // n * error_n
  bool within_bound = false;  // error_2n <= fitted_constant / (2n)
};

// Compares exact embedding counts in blow-ups on n and 2n vertices with the
// leading coefficient. Skips (feasible = false) when (2n)^m exceeds
// `work_budget`.
SaturationReport saturation_check(const Graph& h, const WeightedPattern& wp, std::size_t n,
                                  double work_budget = 2e9, unsigned workers = 1);

struct OptimizerConfig {
  unsigned grid_resolution = 50;      // simplex grid step 1/resolution
  std::size_t max_grid_points = 400'000;  // after symmetry reduction
  unsigned max_iterations = 200;
  double tolerance = 1e-6;            // stop when the step drops below this
  unsigned seeds = 8;                 // best grid points polished by ascent
  std::uint64_t max_denominator = 10'000;  // rationalization of the optimum
  unsigned workers = 1;
  bool trace = false;
};

struct OptimizationResult {
  WeightedPattern best;
  LeadingCoefficient coefficient;
  unsigned resolution_used = 0;
  std::size_t grid_points = 0;
  std::size_t automorphisms = 0;
  std::vector<std::string> trace;
};

// Heuristic maximiser of the leading coefficient over the weight simplex:
// symmetry-reduced grid seeding, then projected pairwise ascent with a
// halving step, then exact re-evaluation at rationalized points. Output is
// independent of config.workers. Requires |V(P)| <= 8.
OptimizationResult optimize_weights(const Graph& h, const Graph& p, const OptimizerConfig& config);

// Vertex permutations of P preserving adjacency (brute force, |V(P)| <= 8).
std::vector<std::vector<Vertex>> pattern_automorphisms(const Graph& p);

}  // namespace extremal
