#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "extremal/bitset.hpp"
#include "extremal/graph.hpp"

namespace extremal {

// Exact count of injective embeddings, automorphisms or copies.
using EmbeddingCount = mpz_class;

struct CountOptions {
  // Work is split by the host image of the first pattern vertex. The result
  // does not depend on the worker count.
  unsigned workers = 1;
};

// Pattern vertices in search order: highest degree first, then repeatedly the
// vertex with the most already-placed neighbours (ties: degree, then index).
std::vector<Vertex> embedding_search_order(const Graph& pattern);

// Number of injective maps V(pattern) -> V(host) sending every pattern edge
// to a host edge. Non-edges of the pattern are unconstrained.
EmbeddingCount count_embeddings(const Graph& pattern, const Graph& host,
                                CountOptions options = {});

// Same, with images restricted to the host vertices set in `allowed`.
EmbeddingCount count_embeddings_within(const Graph& pattern, const Graph& host,
                                       const Bitset& allowed,
                                       CountOptions options = {});

EmbeddingCount count_automorphisms(const Graph& pattern);

// Embeddings divided by automorphisms. A non-zero remainder means the counter
// is broken and raises std::logic_error.
EmbeddingCount count_copies(const Graph& pattern, const Graph& host,
                            CountOptions options = {});

// Per-host-vertex H-degrees: h(v) is the number of embeddings whose image
// contains v. Pair values are computed on demand from restricted counts.
class HDegreeReport {
 public:
  HDegreeReport(Graph pattern, Graph host, EmbeddingCount total,
                std::vector<EmbeddingCount> per_vertex, CountOptions options);

  const EmbeddingCount& total() const { return total_; }
  const EmbeddingCount& h(Vertex v) const { return per_vertex_[v]; }
  const std::vector<EmbeddingCount>& per_vertex() const { return per_vertex_; }

  // Embeddings whose image contains both u and v. h(v, v) = h(v).
  EmbeddingCount pair(Vertex u, Vertex v) const;
  // Embeddings whose image contains u but not v.
  EmbeddingCount without(Vertex u, Vertex v) const { return h(u) - pair(u, v); }

 private:
  Graph pattern_;
  Graph host_;
  EmbeddingCount total_;
  std::vector<EmbeddingCount> per_vertex_;
  CountOptions options_;
};

HDegreeReport h_degrees(const Graph& pattern, const Graph& host,
                        CountOptions options = {});

// Deletes u and adds a non-adjacent twin v' of v in its place: N(v') =
// N(v) \ {u}. Vertex v' takes index u, so the vertex count is unchanged.
// Triangle-freeness is preserved. Throws std::invalid_argument when u == v.
Graph clone_move(const Graph& host, Vertex u, Vertex v);

}  // namespace extremal
