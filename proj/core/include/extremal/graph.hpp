#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "extremal/bitset.hpp"

namespace extremal {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1 with one adjacency bit row per
// vertex. Immutable once built; use GraphBuilder (or a builder function) to
// make a new one.
//
// Labels are free-form provenance tags (blob names, bipartition sides). No
// algorithm reads them.
class Graph {
 public:
  Graph() = default;

  // Throws std::invalid_argument on self-loops, out-of-range endpoints or
  // repeated edges. `labels` is either empty or has one entry per vertex.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::vector<std::string> labels = {});

  std::size_t order() const { return rows_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const Bitset& neighbors(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return rows_[v].count(); }

  // Edges (u, v) with u < v in ascending lexicographic order.
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  // Empty string when the graph carries no labels.
  const std::string& label(Vertex v) const;
  const std::vector<std::string>& labels() const { return labels_; }

  Graph with_labels(std::vector<std::string> labels) const;
  Graph without_labels() const { return with_labels({}); }

  // Adjacency equality; labels are ignored.
  bool same_adjacency(const Graph& other) const { return rows_ == other.rows_; }
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.rows_ == b.rows_ && a.labels_ == b.labels_;
  }

 private:
  std::vector<Bitset> rows_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : n_(n) {}

  Vertex add_vertex(std::string label = {});
  GraphBuilder& add_edge(Vertex u, Vertex v);
  GraphBuilder& set_label(Vertex v, std::string label);
  std::size_t order() const { return n_; }
  Graph build() const;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::pair<Vertex, std::string>> labels_;
};

struct DegreeStats {
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::size_t edge_count = 0;
};

struct Components {
  std::size_t count = 0;
  std::vector<std::size_t> component_of;  // indexed by vertex
  std::vector<std::vector<Vertex>> members;
};

// side[v] in {0, 1}; side of the lowest vertex of each component is 0.
using Bipartition = std::vector<std::uint8_t>;

bool is_triangle_free(const Graph& g);
std::optional<Bipartition> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);
DegreeStats degree_stats(const Graph& g);
Components connected_components(const Graph& g);

// Part sizes (smaller first) when g is complete bipartite. An edgeless graph
// is K_{0,n}.
std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite_parts(
    const Graph& g);

// Vertex-disjoint union; b's vertices are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

// ---------------------------------------------------------------------------
// Builders

Graph empty_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph petersen_graph();

// K_{ceil(n/2), floor(n/2)}; labels "A"/"B" record the parts. Requires n >= 1.
Graph build_turan2(std::size_t n);

// Replaces pattern vertex v by an independent blob of sizes[v] vertices.
// Labels are "blob<v>". Throws std::invalid_argument on a length mismatch.
Graph build_blowup(const Graph& pattern, std::span<const std::size_t> sizes);

// Two stars K_{1,k-2} whose centres are joined by a path with three edges.
// 2k vertices. Requires k >= 3.
Graph build_gps_example1(std::size_t k);

// Two stars with d+1 leaves, centres u1, u2 joined by the path u1-p-q-u2, and
// x-3 pendant two-edge paths hanging from p. 2x + 2d vertices, a tree.
// Labels carry the C5 blob ("1".."5") each vertex maps to in the canonical
// homomorphism. Requires d >= 1 and x >= 3.
Graph build_theorem2_H(std::size_t d, std::size_t x);

}  // namespace extremal
