#include "extremal/blowup.hpp"

#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "extremal/bounds.hpp"
#include "extremal/embeddings.hpp"
#include "extremal/oracle.hpp"
#include "support/oracles.hpp"

namespace extremal {
namespace {

const Rational kHalf(1, 2);

Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

WeightedPattern half_half() { return WeightedPattern(complete_graph(2), {kHalf, kHalf}); }

std::vector<Rational> random_weights(std::size_t k, std::mt19937_64& rng, bool normalise) {
  std::uniform_int_distribution<int> draw(0, 9);
  std::vector<Rational> w(k);
  Rational total = 0;
  for (auto& x : w) {
    x = draw(rng);
    total += x;
  }
  if (total == 0) {
    w[0] = 1;
    total = 1;
  }
  if (normalise)
    for (auto& x : w) x /= total;
  return w;
}

TEST(WeightedPatternTest, Validation) {
  EXPECT_NO_THROW(half_half());
  EXPECT_THROW(WeightedPattern(complete_graph(2), {kHalf, Rational(1, 3)}), std::invalid_argument);
  EXPECT_THROW(WeightedPattern(complete_graph(2), {Rational(3, 2), Rational(-1, 2)}),
               std::invalid_argument);
  EXPECT_THROW(WeightedPattern(complete_graph(2), {Rational(1)}), std::invalid_argument);
  const auto u = WeightedPattern::uniform(cycle_graph(5));
  for (const auto& w : u.weights()) EXPECT_EQ(w, Rational(1, 5));
}

TEST(HomomorphismTest, Counts) {
  EXPECT_EQ(count_homomorphisms(path_graph(5), complete_graph(2)), 2);
  EXPECT_EQ(count_homomorphisms(cycle_graph(5), cycle_graph(5)), 10);
  EXPECT_EQ(count_homomorphisms(cycle_graph(5), complete_graph(2)), 0);
  Graph matching = complete_graph(2);
  for (int c = 1; c <= 3; ++c) {
    EXPECT_EQ(count_homomorphisms(matching, complete_graph(2)), 1 << c);
    matching = disjoint_union(matching, complete_graph(2));
  }
  EXPECT_EQ(count_homomorphisms(empty_graph(3), cycle_graph(5)), 125);
}

TEST(HomomorphismTest, ListingIsLexicographicAndValid) {
  const Graph h = path_graph(3);
  const Graph p = cycle_graph(5);
  const auto homs = list_homomorphisms(h, p);
  ASSERT_EQ(homs.size(), 20U);
  EXPECT_TRUE(std::is_sorted(homs.begin(), homs.end()));
  for (const auto& phi : homs)
    for (const auto& [u, v] : h.edges()) EXPECT_TRUE(p.adjacent(phi[u], phi[v]));
  EXPECT_EQ(homs.front(), (std::vector<Vertex>{0, 1, 0}));
  EXPECT_THROW(list_homomorphisms(empty_graph(21), complete_graph(1)), std::length_error);
  EXPECT_THROW(list_homomorphisms(empty_graph(6), cycle_graph(5), 100), std::length_error);
}

TEST(HomomorphismTest, MatchesAllMapsOracle) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph h = testing::random_graph(1 + trial % 5, 0.5, rng);
    const Graph p = testing::random_graph(1 + (trial / 5) % 5, 0.6, rng);
    const auto w = random_weights(p.order(), rng, true);
    const WeightedPattern wp(p, w);
    const auto lc = leading_coefficient(h, wp);
    EXPECT_EQ(lc.value, testing::naive_hom_sum(h, p, w));
    const std::vector<mpq_class> ones(p.order(), 1);
    EXPECT_EQ(count_homomorphisms(h, p), testing::naive_hom_sum(h, p, ones));
  }
}

TEST(LeadingCoefficientTest, Examples) {
  EXPECT_EQ(leading_coefficient(complete_graph(2), half_half()).value, kHalf);
  EXPECT_EQ(leading_coefficient(path_graph(3), half_half()).value, Rational(1, 4));
  EXPECT_EQ(leading_coefficient(cycle_graph(4), WeightedPattern(empty_graph(1), {Rational(1)})).value,
            0);
  const auto c5 = leading_coefficient(cycle_graph(5), WeightedPattern::uniform(cycle_graph(5)));
  EXPECT_EQ(c5.value, Rational(2, 625));
  EXPECT_EQ(c5.hom_count, 10);
}

TEST(LeadingCoefficientTest, BipartiteIntoHalfHalf) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t components = 1 + trial % 3;
    const std::size_t m = 2 * components + trial % (11 - 2 * components);
    const Graph h = testing::random_bipartite(m, components, rng);
    ASSERT_EQ(connected_components(h).count, components);
    Rational expected = 1;
    for (std::size_t i = 0; i < m; ++i) expected *= kHalf;
    expected *= 1 << components;
    EXPECT_EQ(leading_coefficient(h, half_half()).value, expected);
  }
}

TEST(LeadingCoefficientTest, MultiplicativeOverComponents) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph h1 = testing::random_graph(2 + trial % 4, 0.5, rng);
    const Graph h2 = testing::random_graph(1 + trial % 3, 0.7, rng);
    const Graph p = testing::random_triangle_free(3 + trial % 4, 0.8, rng);
    const WeightedPattern wp(p, random_weights(p.order(), rng, true));
    EXPECT_EQ(leading_coefficient(disjoint_union(h1, h2), wp).value,
              leading_coefficient(h1, wp).value * leading_coefficient(h2, wp).value);
  }
}

TEST(LeadingCoefficientTest, HomogeneousOfDegreeM) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph h = testing::random_graph(2 + trial % 5, 0.5, rng);
    const Graph p = testing::random_graph(2 + trial % 4, 0.7, rng);
    const auto w = random_weights(p.order(), rng, false);
    const Rational t = frac(2 + trial % 3, 3);
    std::vector<Rational> scaled(w);
    for (auto& x : scaled) x *= t;
    Rational factor = 1;
    for (std::size_t i = 0; i < h.order(); ++i) factor *= t;
    EXPECT_EQ(weighted_hom_sum(h, p, scaled), factor * weighted_hom_sum(h, p, w));

    std::vector<double> wd;
    for (const auto& x : w) wd.push_back(x.get_d());
    EXPECT_NEAR(weighted_hom_sum(h, p, wd), weighted_hom_sum(h, p, w).get_d(), 1e-9);
  }
}

TEST(LeadingCoefficientTest, InvariantUnderRelabelling) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph h = testing::random_graph(3 + trial % 4, 0.5, rng);
    const Graph p = testing::random_graph(3 + trial % 3, 0.7, rng);
    const auto w = random_weights(p.order(), rng, true);

    std::vector<Vertex> sigma(h.order());
    std::iota(sigma.begin(), sigma.end(), Vertex{0});
    std::shuffle(sigma.begin(), sigma.end(), rng);
    std::vector<Edge> relabelled;
    for (const auto& [u, v] : h.edges())
      relabelled.emplace_back(std::min(sigma[u], sigma[v]), std::max(sigma[u], sigma[v]));
    const Graph h2 = Graph::from_edges(h.order(), relabelled);

    std::vector<Vertex> tau(p.order());
    std::iota(tau.begin(), tau.end(), Vertex{0});
    std::shuffle(tau.begin(), tau.end(), rng);
    std::vector<Edge> p_edges;
    for (const auto& [u, v] : p.edges())
      p_edges.emplace_back(std::min(tau[u], tau[v]), std::max(tau[u], tau[v]));
    const Graph p2 = Graph::from_edges(p.order(), p_edges);
    std::vector<Rational> w2(p.order());
    for (Vertex v = 0; v < p.order(); ++v) w2[tau[v]] = w[v];

    const auto base = leading_coefficient(h, WeightedPattern(p, w)).value;
    EXPECT_EQ(leading_coefficient(h2, WeightedPattern(p, w)).value, base);
    EXPECT_EQ(leading_coefficient(h, WeightedPattern(p2, w2)).value, base);
  }
}

TEST(LeadingCoefficientTest, ExampleOneBeatsBipartite) {
  const std::size_t k = 20;
  const Graph h = build_gps_example1(k);
  const Rational small(1, 2 * k);
  const WeightedPattern c5(cycle_graph(5), {small, small, small, small, 1 - frac(2, k)});
  const auto l_c5 = leading_coefficient(h, c5).value;
  const auto l_k2 = leading_coefficient(h, half_half()).value;
  EXPECT_GT(l_c5, l_k2);
  Rational expected_k2 = 2;
  for (std::size_t i = 0; i < 2 * k; ++i) expected_k2 *= kHalf;
  EXPECT_EQ(l_k2, expected_k2);
}

TEST(LeadingCoefficientTest, CanonicalHomomorphismOfTheoremTwoGraph) {
  const std::uint64_t d = 2;
  const std::uint64_t x = 6;
  const Graph h = build_theorem2_H(d, x);
  const Graph p = theorem2_host_pattern();
  const Rational a(3, 5);
  const Rational c(1, 50);
  const Rational b = 1 - a - 3 * c;
  const std::vector<Rational> w{a, b, c, c, c};

  // Labels name the blob each vertex maps to; that map is a homomorphism.
  std::vector<Vertex> phi(h.order());
  Rational product = 1;
  for (Vertex v = 0; v < h.order(); ++v) {
    phi[v] = static_cast<Vertex>(std::stoi(h.label(v)) - 1);
    product *= w[phi[v]];
  }
  for (const auto& [u, v] : h.edges()) EXPECT_TRUE(p.adjacent(phi[u], phi[v]));
  EXPECT_EQ(product, canonical_hom_product(a, b, c, x, d));
  EXPECT_GE(leading_coefficient(h, WeightedPattern(p, w)).value, product);
}

TEST(LeadingCoefficientTest, ZeroWeightBlobsVanish) {
  // With c = 0 only the edge between blobs 1 and 2 survives, so the C5
  // coefficient collapses to the K_2 coefficient with weights (a, b).
  const Graph h = build_theorem2_H(1, 4);
  const Rational a(2, 3);
  const WeightedPattern c5(theorem2_host_pattern(), {a, 1 - a, 0, 0, 0});
  const WeightedPattern k2(complete_graph(2), {a, 1 - a});
  EXPECT_EQ(leading_coefficient(h, c5).value, leading_coefficient(h, k2).value);
  EXPECT_EQ(canonical_hom_product(a, 1 - a, 0, 4, 1), 0);
}

TEST(LeadingCoefficientTest, LargeTreeIntoFiveCycle) {
  // Elimination handles trees far beyond enumeration; compare against the
  // closed form for a path: transfer matrix powers.
  const std::size_t m = 200;
  const Graph h = path_graph(m);
  const auto lc = leading_coefficient(h, WeightedPattern::uniform(cycle_graph(5)));
  // Homs of P_m into C5 = 5 * 2^(m-1); each has weight (1/5)^m.
  Integer homs = 5;
  homs *= pow_int(2, m - 1);
  EXPECT_EQ(lc.hom_count, homs);
  EXPECT_EQ(lc.value, Rational(homs) / Rational(pow_int(5, m)));
}

// ---------------------------------------------------------------------------

TEST(BlobSizesTest, LargestRemainder) {
  EXPECT_EQ(blob_sizes(half_half(), 5), (std::vector<std::size_t>{3, 2}));
  const WeightedPattern thirds(cycle_graph(3).without_labels(), {Rational(1, 3), Rational(1, 3),
                                                                 Rational(1, 3)});
  EXPECT_EQ(blob_sizes(thirds, 7), (std::vector<std::size_t>{3, 2, 2}));
  const WeightedPattern skew(complete_graph(2), {Rational(9, 10), Rational(1, 10)});
  EXPECT_EQ(blob_sizes(skew, 4), (std::vector<std::size_t>{4, 0}));
}

TEST(SaturationTest, EdgeInBalancedBipartite) {
  const auto r = saturation_check(complete_graph(2), half_half(), 10);
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.coefficient, kHalf);
  EXPECT_EQ(r.count_n, 50);  // injective embeddings: 25 edges, two orientations
  EXPECT_EQ(r.count_2n, 200);
  EXPECT_EQ(r.error_n, 0);
  EXPECT_EQ(r.error_2n, 0);
  EXPECT_TRUE(r.within_bound);
}

TEST(SaturationTest, PathConvergesFromBelow) {
  const auto r = saturation_check(path_graph(3), half_half(), 12);
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.coefficient, Rational(1, 4));
  // 2 * 6 * 6 * 5 embeddings on 12 vertices.
  EXPECT_EQ(r.count_n, 360);
  EXPECT_EQ(r.error_n, Rational(1, 24));
  EXPECT_LT(r.error_2n, r.error_n);
  EXPECT_TRUE(r.within_bound);
}

TEST(SaturationTest, InfeasibleIsReported) {
  const auto r = saturation_check(path_graph(10), half_half(), 1000, 1e6);
  EXPECT_FALSE(r.feasible);
  EXPECT_FALSE(r.reason.empty());
}

// ---------------------------------------------------------------------------

TEST(OptimizerTest, EdgeIntoEdge) {
  const auto r = optimize_weights(complete_graph(2), complete_graph(2), {});
  EXPECT_EQ(r.best.weights(), (std::vector<Rational>{kHalf, kHalf}));
  EXPECT_EQ(r.coefficient.value, kHalf);
}

TEST(OptimizerTest, FourCycleIntoEdge) {
  const auto r = optimize_weights(cycle_graph(4), complete_graph(2), {});
  EXPECT_EQ(r.best.weights(), (std::vector<Rational>{kHalf, kHalf}));
  EXPECT_EQ(r.coefficient.value, Rational(1, 8));
}

TEST(OptimizerTest, BalancedTreeIntoEdge) {
  for (std::size_t x = 3; x <= 6; ++x) {
    const auto r = optimize_weights(build_theorem2_H(1, x), complete_graph(2), {});
    EXPECT_EQ(r.best.weights(), (std::vector<Rational>{kHalf, kHalf})) << x;
  }
}

TEST(OptimizerTest, ExampleOneFindsFiveCycleAdvantage) {
  // The advantage only appears from k of about 11 onwards.
  const Graph h = build_gps_example1(12);
  OptimizerConfig config;
  config.grid_resolution = 24;
  const auto c5 = optimize_weights(h, cycle_graph(5), config);
  const auto k2 = optimize_weights(h, complete_graph(2), config);
  EXPECT_GT(c5.coefficient.value, k2.coefficient.value);
  EXPECT_EQ(c5.coefficient.value, leading_coefficient(h, c5.best).value);
  EXPECT_EQ(c5.automorphisms, 10U);
}

TEST(OptimizerTest, DeterministicAcrossWorkers) {
  const Graph h = build_gps_example1(5);
  OptimizerConfig one;
  one.grid_resolution = 20;
  OptimizerConfig many = one;
  many.workers = 8;
  const auto a = optimize_weights(h, cycle_graph(5), one);
  const auto b = optimize_weights(h, cycle_graph(5), many);
  EXPECT_EQ(a.best.weights(), b.best.weights());
  EXPECT_EQ(a.coefficient.value, b.coefficient.value);
  EXPECT_EQ(a.grid_points, b.grid_points);
}

TEST(OptimizerTest, PatternAutomorphisms) {
  EXPECT_EQ(pattern_automorphisms(cycle_graph(5)).size(), 10U);
  EXPECT_EQ(pattern_automorphisms(complete_graph(2)).size(), 2U);
  EXPECT_EQ(pattern_automorphisms(path_graph(3)).size(), 2U);
}

}  // namespace
}  // namespace extremal
