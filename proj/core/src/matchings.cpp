#include "extremal/matchings.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <queue>

namespace extremal {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class HopcroftKarp {
 public:
  HopcroftKarp(const Graph& g, const Bipartition& side) : g_(g) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (side[v] == 0) left_.push_back(v);
    }
    mate_.assign(g.order(), kNone);
    layer_.assign(g.order(), kNone);
  }

  std::size_t run() {
    std::size_t size = 0;
    while (bfs()) {
      for (Vertex u : left_) {
        if (mate_[u] == kNone && dfs(u)) ++size;
      }
    }
    return size;
  }

  const std::vector<std::size_t>& mate() const { return mate_; }
  const std::vector<Vertex>& left() const { return left_; }

 private:
  bool bfs() {
    std::queue<Vertex> queue;
    bool found = false;
    for (Vertex u : left_) {
      if (mate_[u] == kNone) {
        layer_[u] = 0;
        queue.push(u);
      } else {
        layer_[u] = kNone;
      }
    }
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      g_.neighbors(u).for_each([&](std::size_t v) {
        const std::size_t w = mate_[v];
        if (w == kNone) {
          found = true;
        } else if (layer_[w] == kNone) {
          layer_[w] = layer_[u] + 1;
          queue.push(static_cast<Vertex>(w));
        }
      });
    }
    return found;
  }

  bool dfs(Vertex u) {
    for (std::size_t v : g_.neighbors(u).to_vector()) {
      const std::size_t w = mate_[v];
      if (w == kNone || (layer_[w] == layer_[u] + 1 && dfs(static_cast<Vertex>(w)))) {
        mate_[u] = v;
        mate_[v] = u;
        return true;
      }
    }
    layer_[u] = kNone;
    return false;
  }

  const Graph& g_;
  std::vector<Vertex> left_;
  std::vector<std::size_t> mate_;
  std::vector<std::size_t> layer_;
};

// Konig: Z = vertices reachable from free left vertices by alternating paths.
// (L \ Z) u (R n Z) is a vertex cover of size |M| iff M is maximum. Returns
// the cover size, or nothing when the set fails to cover some edge.
std::optional<std::size_t> konig_cover_size(const Graph& g, const Bipartition& side,
                             const std::vector<std::size_t>& mate) {
  std::vector<bool> reached(g.order(), false);
  std::queue<Vertex> queue;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (side[v] == 0 && mate[v] == kNone) {
      reached[v] = true;
      queue.push(v);
    }
  }
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop();
    g.neighbors(u).for_each([&](std::size_t v) {
      // left -> right along non-matching edges, right -> left along matching.
      if (reached[v] || mate[u] == v) return;
      reached[v] = true;
      const std::size_t w = mate[v];
      if (w != kNone && !reached[w]) {
        reached[w] = true;
        queue.push(static_cast<Vertex>(w));
      }
    });
  }
  std::vector<bool> in_cover(g.order(), false);
  std::size_t cover = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    in_cover[v] = (side[v] == 0 && !reached[v]) || (side[v] == 1 && reached[v]);
    cover += in_cover[v];
  }
  for (const auto& [u, v] : g.edges()) {
    if (!in_cover[u] && !in_cover[v]) return std::nullopt;
  }
  return cover;
}

}  // namespace

MatchingReport maximum_matching(const Graph& pattern) {
  const auto side = bipartition(pattern);
  if (!side) throw NotBipartiteError();

  HopcroftKarp hk(pattern, *side);
  MatchingReport report;
  report.order = pattern.order();
  report.size = hk.run();
  const auto& mate = hk.mate();
  for (Vertex u : hk.left()) {
    if (mate[u] != kNone) report.pairs.emplace_back(u, static_cast<Vertex>(mate[u]));
  }
  for (Vertex v = 0; v < pattern.order(); ++v) {
    if (mate[v] == kNone) report.unmatched.push_back(v);
  }
  const std::size_t defect = report.order - 2 * report.size;
  if (defect % 2 == 0) report.half_defect = defect / 2;
  const auto cover = konig_cover_size(pattern, *side, mate);
  report.certified_maximum = cover.has_value() && *cover == report.size;
  return report;
}

HypothesisVerdict check_hypotheses(const MatchingReport& report) {
  HypothesisVerdict verdict;
  verdict.matching_size = report.size;
  verdict.unmatched = report.unmatched.size();
  const auto x = static_cast<long long>(report.size);
  const auto u = static_cast<long long>(verdict.unmatched);
  verdict.satisfies_thm1 = 4 * u * u <= x - 1;
  verdict.satisfies_gps = report.size == report.order / 2;
  if (x > 0) {
    mpq_class lambda(static_cast<long>(u), static_cast<unsigned long>(x));
    lambda.canonicalize();
    verdict.lambda = lambda;
  }
  return verdict;
}

HypothesisVerdict check_theorem1_hypothesis(const Graph& pattern) {
  return check_hypotheses(maximum_matching(pattern));
}

bool is_matching(const Graph& g, const std::vector<Edge>& pairs) {
  std::vector<bool> used(g.order(), false);
  for (const auto& [u, v] : pairs) {
    if (u >= g.order() || v >= g.order() || !g.adjacent(u, v)) return false;
    if (used[u] || used[v]) return false;
    used[u] = used[v] = true;
  }
  return true;
}

IsolatedRemoval remove_isolated_vertices(const Graph& pattern) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < pattern.order(); ++v) {
    if (pattern.degree(v) > 0) keep.push_back(v);
  }
  return {induced_subgraph(pattern, keep), pattern.order() - keep.size()};
}

mpz_class restore_isolated_count(const mpz_class& reduced_count, std::size_t host_order,
                                 std::size_t reduced_order, std::size_t removed) {
  mpz_class out = reduced_count;
  for (std::size_t i = 0; i < removed; ++i) {
    if (host_order < reduced_order + i + 1) return 0;
    out *= static_cast<unsigned long>(host_order - reduced_order - i);
  }
  return out;
}

}  // namespace extremal
