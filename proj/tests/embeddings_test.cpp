#include "extremal/embeddings.hpp"

#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "extremal/graph_io.hpp"
#include "extremal/oracle.hpp"
#include "support/oracles.hpp"

namespace extremal {
namespace {

TEST(EmbeddingsTest, SmallCounts) {
  EXPECT_EQ(count_embeddings(complete_graph(2), complete_graph(2)), 2);
  EXPECT_EQ(count_embeddings(cycle_graph(4), complete_bipartite(2, 2)), 8);
  EXPECT_EQ(count_embeddings(path_graph(3), cycle_graph(5)), 10);
  EXPECT_EQ(count_embeddings(cycle_graph(4), complete_bipartite(2, 3)), 24);
  EXPECT_EQ(count_embeddings(complete_graph(4), complete_graph(3)), 0);
  EXPECT_EQ(count_embeddings(empty_graph(0), cycle_graph(5)), 1);
  EXPECT_EQ(count_embeddings(empty_graph(3), empty_graph(5)), 60);
}

TEST(EmbeddingsTest, Automorphisms) {
  EXPECT_EQ(count_automorphisms(cycle_graph(4)), 8);
  EXPECT_EQ(count_automorphisms(cycle_graph(5)), 10);
  EXPECT_EQ(count_automorphisms(build_theorem2_H(1, 3)), 8);
  EXPECT_EQ(count_automorphisms(petersen_graph()), 120);
  EXPECT_EQ(count_automorphisms(star_graph(3)), 6);
}

TEST(EmbeddingsTest, Copies) {
  EXPECT_EQ(count_copies(cycle_graph(4), complete_bipartite(2, 2)), 1);
  EXPECT_EQ(count_copies(complete_graph(2), complete_bipartite(2, 3)), 6);
  EXPECT_EQ(count_copies(cycle_graph(4), complete_bipartite(2, 3)), 3);
  EXPECT_EQ(count_copies(cycle_graph(5), petersen_graph()), 12);
}

TEST(EmbeddingsTest, SearchOrderIsAPermutation) {
  const Graph h = build_theorem2_H(1, 6);
  auto order = embedding_search_order(h);
  ASSERT_EQ(order.size(), h.order());
  // p has three pendant paths plus two path edges, the unique maximum degree.
  EXPECT_EQ(order.front(), 1U);
  std::sort(order.begin(), order.end());
  for (Vertex v = 0; v < h.order(); ++v) EXPECT_EQ(order[v], v);
}

TEST(EmbeddingsTest, MatchesNaiveOracle) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + trial % 6;
    const std::size_t n = 1 + (trial / 6) % 7;
    const Graph pattern = testing::random_graph(m, 0.5, rng);
    const Graph host = testing::random_graph(n, 0.6, rng);
    EXPECT_EQ(count_embeddings(pattern, host), testing::naive_embeddings(pattern, host))
        << to_text(pattern) << to_text(host);
  }
}

TEST(EmbeddingsTest, WithinRestrictsImages) {
  const Graph host = petersen_graph();
  Bitset allowed(host.order());
  for (Vertex v = 0; v < 7; ++v) allowed.set(v);
  std::vector<Vertex> keep(7);
  std::iota(keep.begin(), keep.end(), Vertex{0});
  const Graph sub = induced_subgraph(host, keep);
  for (const Graph& pattern : {path_graph(3), path_graph(4), star_graph(2), empty_graph(2)}) {
    EXPECT_EQ(count_embeddings_within(pattern, host, allowed), count_embeddings(pattern, sub));
  }
}

TEST(EmbeddingsTest, DoubleCounting) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph pattern = testing::random_graph(2 + trial % 4, 0.6, rng);
    const Graph host = testing::random_triangle_free(4 + trial % 5, 0.7, rng);
    const auto report = h_degrees(pattern, host);
    mpz_class sum = 0;
    for (const auto& h : report.per_vertex()) sum += h;
    EXPECT_EQ(sum, report.total() * static_cast<unsigned long>(pattern.order()));
    EXPECT_EQ(report.total(), count_embeddings(pattern, host));
  }
}

TEST(EmbeddingsTest, HDegreeExamples) {
  const auto k2 = h_degrees(complete_graph(2), complete_bipartite(2, 3));
  const std::vector<mpz_class> expected{6, 6, 4, 4, 4};
  EXPECT_EQ(k2.per_vertex(), expected);

  const auto c4 = h_degrees(cycle_graph(4), complete_bipartite(2, 2));
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(c4.h(v), 8);
}

TEST(EmbeddingsTest, PairDegreesAgreeWithOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph pattern = testing::random_graph(2 + trial % 3, 0.7, rng);
    const Graph host = testing::random_triangle_free(5 + trial % 3, 0.6, rng);
    const auto report = h_degrees(pattern, host);
    for (Vertex u = 0; u < host.order(); ++u) {
      for (Vertex v = 0; v < host.order(); ++v) {
        // Embeddings touching both u and v: total minus those avoiding either.
        std::vector<Vertex> keep_u, keep_v, keep_uv;
        for (Vertex w = 0; w < host.order(); ++w) {
          if (w != u) keep_u.push_back(w);
          if (w != v) keep_v.push_back(w);
          if (w != u && w != v) keep_uv.push_back(w);
        }
        const mpz_class both = report.total() -
                               testing::naive_embeddings(pattern, induced_subgraph(host, keep_u)) -
                               testing::naive_embeddings(pattern, induced_subgraph(host, keep_v)) +
                               testing::naive_embeddings(pattern, induced_subgraph(host, keep_uv));
        const mpz_class expected = u == v ? report.h(u) : both;
        const mpz_class got = report.pair(u, v);
        EXPECT_EQ(got, expected);
        EXPECT_LE(got, std::min(report.h(u), report.h(v)));
        EXPECT_EQ(report.without(u, v) + got, report.h(u));
      }
    }
  }
}

TEST(EmbeddingsTest, AddingHostEdgeNeverDecreases) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph pattern = testing::random_graph(3 + trial % 3, 0.5, rng);
    const Graph host = testing::random_graph(7, 0.4, rng);
    auto edges = host.edges();
    std::vector<Edge> missing;
    for (Vertex u = 0; u < 7; ++u)
      for (Vertex v = u + 1; v < 7; ++v)
        if (!host.adjacent(u, v)) missing.emplace_back(u, v);
    if (missing.empty()) continue;
    edges.push_back(missing[trial % missing.size()]);
    const Graph bigger = Graph::from_edges(7, edges);
    EXPECT_GE(count_embeddings(pattern, bigger), count_embeddings(pattern, host));
  }
}

TEST(EmbeddingsTest, WorkerCountDoesNotChangeResults) {
  const Graph host = build_turan2(14);
  const Graph pattern = build_theorem2_H(1, 3);
  const auto serial = count_embeddings(pattern, host, {1});
  EXPECT_EQ(count_embeddings(pattern, host, {4}), serial);
  EXPECT_EQ(count_embeddings(pattern, host, {8}), serial);
  const auto a = h_degrees(path_graph(4), petersen_graph(), {1});
  const auto b = h_degrees(path_graph(4), petersen_graph(), {8});
  EXPECT_EQ(a.per_vertex(), b.per_vertex());
  EXPECT_EQ(a.pair(0, 5), b.pair(0, 5));
}

TEST(EmbeddingsTest, PathsInBalancedBipartite) {
  // P_6 in K_{20,20}: sides alternate, 2 (20 * 19 * 18)^2.
  const Graph host = build_turan2(40);
  mpz_class expected = 20 * 19 * 18;
  expected *= expected;
  expected *= 2;
  EXPECT_EQ(count_embeddings(path_graph(6), host, {4}), expected);
}

// ---------------------------------------------------------------------------

TEST(CloneMoveTest, Examples) {
  const Graph c5 = cycle_graph(5);
  const Graph moved = clone_move(c5, 0, 1);
  EXPECT_EQ(moved.order(), 5U);
  EXPECT_TRUE(is_triangle_free(moved));
  EXPECT_FALSE(moved.adjacent(0, 1));

  // u on the 3-side (vertex 2), v on the 2-side (vertex 0).
  const Graph k23 = complete_bipartite(2, 3);
  const Graph result = clone_move(k23, 2, 0);
  // N(v') = N(0) \ {2} = {3, 4}, so v' joins vertices 0 and 1.
  EXPECT_TRUE(isomorphic(result, complete_bipartite(3, 2)));

  EXPECT_THROW(clone_move(c5, 2, 2), std::invalid_argument);
}

TEST(CloneMoveTest, NeighbourhoodOfClone) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::random_triangle_free(7, 0.6, rng);
    const Vertex u = trial % 7;
    const Vertex v = (u + 1 + (trial / 7) % 6) % 7;
    const Graph moved = clone_move(g, u, v);
    EXPECT_TRUE(is_triangle_free(moved));
    EXPECT_FALSE(moved.adjacent(u, v));
    for (Vertex w = 0; w < 7; ++w) {
      if (w == u) continue;
      EXPECT_EQ(moved.adjacent(u, w), w != v && g.adjacent(v, w));
      for (Vertex z = 0; z < 7; ++z)
        if (z != u) EXPECT_EQ(moved.adjacent(w, z), g.adjacent(w, z));
    }
  }
}

TEST(CloneMoveTest, GainLedger) {
  // count(G') - count(G) >= h(v, not u) - h(u) for P_3 on triangle-free hosts.
  std::mt19937_64 rng(41);
  const Graph pattern = path_graph(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + trial % 6;
    const Graph g = testing::random_triangle_free(n, 0.7, rng);
    const Vertex u = std::uniform_int_distribution<Vertex>(0, static_cast<Vertex>(n - 1))(rng);
    Vertex v = std::uniform_int_distribution<Vertex>(0, static_cast<Vertex>(n - 2))(rng);
    if (v >= u) ++v;
    const auto report = h_degrees(pattern, g);
    const mpz_class before = report.total();
    const mpz_class after = count_embeddings(pattern, clone_move(g, u, v));
    EXPECT_GE(after - before, report.without(v, u) - report.h(u))
        << "n=" << n << " u=" << u << " v=" << v;
  }
}

}  // namespace
}  // namespace extremal
