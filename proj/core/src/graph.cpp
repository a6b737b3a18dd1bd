#include "extremal/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace extremal {

namespace {

const std::string kNoLabel;

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges,
                        std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n) {
    throw std::invalid_argument("label count " + std::to_string(labels.size()) +
                                " does not match vertex count " +
                                std::to_string(n));
  }
  Graph g;
  g.rows_.assign(n, Bitset(n));
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ") out of range for n = " +
                                  std::to_string(n));
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    if (g.rows_[u].test(v)) {
      throw std::invalid_argument("repeated edge (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ")");
    }
    g.rows_[u].set(v);
    g.rows_[v].set(u);
    ++g.edge_count_;
  }
  // All-empty labels carry no information.
  if (std::all_of(labels.begin(), labels.end(),
                  [](const std::string& s) { return s.empty(); })) {
    labels.clear();
  }
  g.labels_ = std::move(labels);
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    rows_[u].for_each([&](std::size_t v) {
      if (v > u) out.emplace_back(u, static_cast<Vertex>(v));
    });
  }
  return out;
}

const std::string& Graph::label(Vertex v) const {
  return labels_.empty() ? kNoLabel : labels_[v];
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != order()) {
    throw std::invalid_argument("label count does not match vertex count");
  }
  Graph g = *this;
  if (std::all_of(labels.begin(), labels.end(),
                  [](const std::string& s) { return s.empty(); })) {
    labels.clear();
  }
  g.labels_ = std::move(labels);
  return g;
}

Vertex GraphBuilder::add_vertex(std::string label) {
  const auto v = static_cast<Vertex>(n_++);
  if (!label.empty()) labels_.emplace_back(v, std::move(label));
  return v;
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  edges_.emplace_back(u, v);
  return *this;
}

GraphBuilder& GraphBuilder::set_label(Vertex v, std::string label) {
  labels_.emplace_back(v, std::move(label));
  return *this;
}

Graph GraphBuilder::build() const {
  std::vector<std::string> labels;
  if (!labels_.empty()) {
    labels.assign(n_, {});
    for (const auto& [v, text] : labels_) {
      if (v >= n_) throw std::invalid_argument("label for missing vertex");
      labels[v] = text;
    }
  }
  return Graph::from_edges(n_, edges_, std::move(labels));
}

// ---------------------------------------------------------------------------

bool is_triangle_free(const Graph& g) {
  const std::size_t n = g.order();
  for (Vertex u = 0; u < n; ++u) {
    const Bitset& nu = g.neighbors(u);
    bool found = false;
    nu.for_each([&](std::size_t v) {
      if (found || v <= u) return;
      const Bitset& nv = g.neighbors(static_cast<Vertex>(v));
      for (std::size_t w = 0; w < nu.word_count(); ++w) {
        if ((nu.words()[w] & nv.words()[w]) != 0) {
          found = true;
          return;
        }
      }
    });
    if (found) return false;
  }
  return true;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::uint8_t kUnset = 2;
  Bipartition side(n, kUnset);
  std::queue<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] != kUnset) continue;
    side[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      bool conflict = false;
      g.neighbors(u).for_each([&](std::size_t v) {
        if (side[v] == kUnset) {
          side[v] = static_cast<std::uint8_t>(1 - side[u]);
          queue.push(static_cast<Vertex>(v));
        } else if (side[v] == side[u]) {
          conflict = true;
        }
      });
      if (conflict) return std::nullopt;
    }
  }
  return side;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

DegreeStats degree_stats(const Graph& g) {
  DegreeStats stats;
  stats.edge_count = g.edge_count();
  if (g.order() == 0) return stats;
  stats.min_degree = g.order();
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::size_t d = g.degree(v);
    stats.min_degree = std::min(stats.min_degree, d);
    stats.max_degree = std::max(stats.max_degree, d);
  }
  return stats;
}

Components connected_components(const Graph& g) {
  const std::size_t n = g.order();
  Components out;
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  out.component_of.assign(n, kUnset);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (out.component_of[s] != kUnset) continue;
    const std::size_t id = out.count++;
    out.members.emplace_back();
    out.component_of[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      out.members[id].push_back(u);
      g.neighbors(u).for_each([&](std::size_t v) {
        if (out.component_of[v] == kUnset) {
          out.component_of[v] = id;
          stack.push_back(static_cast<Vertex>(v));
        }
      });
    }
    std::sort(out.members[id].begin(), out.members[id].end());
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite_parts(
    const Graph& g) {
  const std::size_t n = g.order();
  if (g.edge_count() == 0) return std::pair<std::size_t, std::size_t>{0, n};
  const auto sides = bipartition(g);
  if (!sides) return std::nullopt;
  std::size_t left = 0;
  for (auto s : *sides) left += (s == 0);
  const std::size_t right = n - left;
  if (g.edge_count() != left * right) return std::nullopt;
  return std::pair{std::min(left, right), std::max(left, right)};
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const auto shift = static_cast<Vertex>(a.order());
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  std::vector<std::string> labels;
  if (a.has_labels() || b.has_labels()) {
    for (Vertex v = 0; v < a.order(); ++v) labels.push_back(a.label(v));
    for (Vertex v = 0; v < b.order(); ++v) labels.push_back(b.label(v));
  }
  return Graph::from_edges(a.order() + b.order(), edges, std::move(labels));
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> index(g.order(), static_cast<Vertex>(-1));
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    if (index[u] != static_cast<Vertex>(-1) && index[v] != static_cast<Vertex>(-1)) {
      edges.emplace_back(index[u], index[v]);
    }
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    for (Vertex v : keep) labels.push_back(g.label(v));
  }
  return Graph::from_edges(keep.size(), edges, std::move(labels));
}

// ---------------------------------------------------------------------------

Graph empty_graph(std::size_t n) { return Graph::from_edges(n, {}); }

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  edges.emplace_back(0, static_cast<Vertex>(n - 1));
  return Graph::from_edges(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  std::vector<std::string> labels(a + b);
  for (Vertex u = 0; u < a; ++u) {
    labels[u] = "A";
    for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, static_cast<Vertex>(a + v));
  }
  for (std::size_t v = a; v < a + b; ++v) labels[v] = "B";
  return Graph::from_edges(a + b, edges, std::move(labels));
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);         // outer cycle
    edges.emplace_back(i, i + 5);               // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  for (auto& [u, v] : edges)
    if (u > v) std::swap(u, v);
  return Graph::from_edges(10, edges);
}

Graph build_turan2(std::size_t n) {
  if (n < 1) throw std::invalid_argument("build_turan2 requires n >= 1");
  return complete_bipartite((n + 1) / 2, n / 2);
}

Graph build_blowup(const Graph& pattern, std::span<const std::size_t> sizes) {
  if (sizes.size() != pattern.order()) {
    throw std::invalid_argument("blow-up needs one size per pattern vertex (got " +
                                std::to_string(sizes.size()) + " for " +
                                std::to_string(pattern.order()) + " vertices)");
  }
  std::vector<std::size_t> first(pattern.order() + 1, 0);
  for (std::size_t v = 0; v < pattern.order(); ++v) first[v + 1] = first[v] + sizes[v];
  const std::size_t n = first.back();
  std::vector<std::string> labels(n);
  for (std::size_t v = 0; v < pattern.order(); ++v)
    for (std::size_t i = first[v]; i < first[v + 1]; ++i) labels[i] = "blob" + std::to_string(v);
  std::vector<Edge> edges;
  for (const auto& [p, q] : pattern.edges()) {
    for (std::size_t i = first[p]; i < first[p + 1]; ++i)
      for (std::size_t j = first[q]; j < first[q + 1]; ++j)
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return Graph::from_edges(n, edges, std::move(labels));
}

Graph build_gps_example1(std::size_t k) {
  if (k < 3) throw std::invalid_argument("build_gps_example1 requires k >= 3");
  // 0 = first centre, 1, 2 = path interior, 3 = second centre.
  GraphBuilder b(4);
  b.set_label(0, "centre1").set_label(1, "path").set_label(2, "path").set_label(3, "centre2");
  b.add_edge(0, 1).add_edge(1, 2).add_edge(2, 3);
  for (std::size_t i = 0; i < k - 2; ++i) b.add_edge(0, b.add_vertex("leaf1"));
  for (std::size_t i = 0; i < k - 2; ++i) b.add_edge(3, b.add_vertex("leaf2"));
  return b.build();
}

Graph build_theorem2_H(std::size_t d, std::size_t x) {
  if (d < 1 || x < 3) {
    throw std::invalid_argument("build_theorem2_H requires d >= 1 and x >= 3");
  }
  // 0 = u1, 1 = p, 2 = q, 3 = u2. Labels are the C5 blobs of the canonical
  // homomorphism (blob 1 has weight a, blob 2 weight b, blobs 3-5 weight c).
  GraphBuilder b(4);
  b.set_label(0, "2").set_label(1, "3").set_label(2, "4").set_label(3, "5");
  b.add_edge(0, 1).add_edge(1, 2).add_edge(2, 3);
  for (std::size_t i = 0; i <= d; ++i) b.add_edge(0, b.add_vertex("1"));
  for (std::size_t i = 0; i <= d; ++i) b.add_edge(3, b.add_vertex("1"));
  for (std::size_t i = 0; i + 3 < x; ++i) {
    const Vertex middle = b.add_vertex("2");
    const Vertex top = b.add_vertex("1");
    b.add_edge(1, middle).add_edge(middle, top);
  }
  return b.build();
}

}  // namespace extremal
