#include "extremal/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

namespace extremal {

namespace {

using Mask = std::uint32_t;

std::size_t code_length(std::size_t n) { return n * (n - 1) / 2; }

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> rows(g.order(), 0);
  for (const auto& [u, v] : g.edges()) {
    rows[u] |= Mask{1} << v;
    rows[v] |= Mask{1} << u;
  }
  return rows;
}

class Canonicalizer {
 public:
  explicit Canonicalizer(const std::vector<Mask>& rows)
      : rows_(rows), n_(rows.size()), total_bits_(code_length(rows.size())), perm_(n_) {
    prev_twin_.assign(n_, -1);
    for (std::size_t v = 0; v < n_; ++v) {
      for (std::size_t u = v; u-- > 0;) {
        const Mask others = ~((Mask{1} << u) | (Mask{1} << v));
        if ((rows_[u] & others) == (rows_[v] & others)) {
          prev_twin_[v] = static_cast<int>(u);
          break;
        }
      }
    }
  }

  std::uint64_t run() {
    if (n_ <= 1) return 0;
    search(0, 0, 0);
    return best_;
  }

 private:
  // Column bits of candidate v against the first `pos` placed vertices.
  std::uint64_t column(std::size_t pos, std::size_t v) const {
    std::uint64_t col = 0;
    for (std::size_t i = 0; i < pos; ++i) col = (col << 1) | ((rows_[perm_[i]] >> v) & 1U);
    return col;
  }

  void search(std::size_t pos, std::uint64_t prefix, Mask placed) {
    if (pos == n_) {
      if (!have_best_ || prefix < best_) {
        best_ = prefix;
        have_best_ = true;
      }
      return;
    }
    // Only candidates with the smallest next column can lead to the minimum.
    std::uint64_t min_col = ~std::uint64_t{0};
    for (std::size_t v = 0; v < n_; ++v) {
      if (!eligible(v, placed)) continue;
      min_col = std::min(min_col, column(pos, v));
    }
    const std::uint64_t next = (prefix << pos) | min_col;
    if (have_best_) {
      const std::uint64_t best_prefix = best_ >> (total_bits_ - code_length(pos + 1));
      if (next > best_prefix) return;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (!eligible(v, placed) || column(pos, v) != min_col) continue;
      perm_[pos] = v;
      search(pos + 1, next, placed | (Mask{1} << v));
    }
  }

  bool eligible(std::size_t v, Mask placed) const {
    if (placed >> v & 1U) return false;
    const int twin = prev_twin_[v];
    return twin < 0 || (placed >> twin & 1U);
  }

  const std::vector<Mask>& rows_;
  std::size_t n_;
  std::size_t total_bits_;
  std::vector<std::size_t> perm_;
  std::vector<int> prev_twin_;
  std::uint64_t best_ = 0;
  bool have_best_ = false;
};

CanonicalCode canonical_from_masks(const std::vector<Mask>& rows) {
  return {static_cast<std::uint32_t>(rows.size()), Canonicalizer(rows).run()};
}

std::vector<Mask> masks_from_code(const CanonicalCode& code) {
  std::vector<Mask> rows(code.n, 0);
  const std::size_t total = code_length(code.n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < code.n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      if ((code.bits >> (total - 1 - k)) & 1U) {
        rows[i] |= Mask{1} << j;
        rows[j] |= Mask{1} << i;
      }
    }
  }
  return rows;
}

void check_order(std::size_t n) {
  if (n > kMaxCanonicalOrder) {
    throw std::invalid_argument("canonical codes support at most " +
                                std::to_string(kMaxCanonicalOrder) + " vertices");
  }
}

void check_deadline(const OracleConfig& config) {
  if (config.deadline && std::chrono::steady_clock::now() > *config.deadline) {
    throw BudgetExceeded("time limit exceeded");
  }
}

void check_budget(std::size_t n, const OracleConfig& config) {
  if (config.budget_n > kHardMaxEnumeration) {
    throw BudgetExceeded("enumeration budget may not exceed n = " +
                         std::to_string(kHardMaxEnumeration));
  }
  if (n > config.budget_n) {
    throw BudgetExceeded("n = " + std::to_string(n) + " exceeds the enumeration budget n <= " +
                         std::to_string(config.budget_n));
  }
}

// Runs fn(i) for i in [0, count) on `workers` threads; the first exception
// (by index order of detection) is rethrown after all threads stop.
template <typename Fn>
void run_indexed(std::size_t count, unsigned workers, Fn&& fn) {
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::vector<std::exception_ptr> errors(workers);
  auto body = [&](unsigned w) {
    try {
      for (std::size_t i = next.fetch_add(1); i < count && !stop; i = next.fetch_add(1)) fn(i);
    } catch (...) {
      errors[w] = std::current_exception();
      stop = true;
    }
  };
  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(body, w);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

CanonicalCode adjacency_code(const Graph& g) {
  check_order(g.order());
  const std::size_t total = code_length(g.order());
  CanonicalCode code{static_cast<std::uint32_t>(g.order()), 0};
  std::size_t k = 0;
  for (Vertex j = 1; j < g.order(); ++j)
    for (Vertex i = 0; i < j; ++i, ++k)
      if (g.adjacent(i, j)) code.bits |= std::uint64_t{1} << (total - 1 - k);
  return code;
}

Graph graph_from_code(const CanonicalCode& code) {
  check_order(code.n);
  const auto rows = masks_from_code(code);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < code.n; ++u)
    for (Vertex v = u + 1; v < code.n; ++v)
      if ((rows[u] >> v) & 1U) edges.emplace_back(u, v);
  return Graph::from_edges(code.n, edges);
}

CanonicalCode canonical_code(const Graph& g) {
  check_order(g.order());
  return canonical_from_masks(adjacency_masks(g));
}

Graph canonical_graph(const Graph& g) { return graph_from_code(canonical_code(g)); }

bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() &&
         canonical_code(a) == canonical_code(b);
}

std::vector<CanonicalCode> enumerate_triangle_free_codes(std::size_t n, const OracleConfig& config) {
  check_budget(n, config);
  std::vector<CanonicalCode> level{{0, 0}};
  if (n == 0) return level;
  level = {{1, 0}};
  for (std::size_t k = 2; k <= n; ++k) {
    // Extend each (k-1)-vertex graph by a vertex whose neighbourhood is an
    // independent set; every triangle-free k-vertex graph arises this way.
    std::vector<std::vector<CanonicalCode>> children(level.size());
    run_indexed(level.size(), config.workers, [&](std::size_t i) {
      check_deadline(config);
      std::vector<Mask> rows = masks_from_code(level[i]);
      rows.push_back(0);
      const Mask subsets = Mask{1} << (k - 1);
      auto& out = children[i];
      for (Mask s = 0; s < subsets; ++s) {
        bool independent = true;
        for (Mask rest = s; rest != 0; rest &= rest - 1) {
          if (rows[static_cast<std::size_t>(std::countr_zero(rest))] & s) {
            independent = false;
            break;
          }
        }
        if (!independent) continue;
        std::vector<Mask> child = rows;
        child[k - 1] = s;
        for (Mask rest = s; rest != 0; rest &= rest - 1)
          child[static_cast<std::size_t>(std::countr_zero(rest))] |= Mask{1} << (k - 1);
        out.push_back(canonical_from_masks(child));
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    });
    std::vector<CanonicalCode> next;
    for (auto& c : children) next.insert(next.end(), c.begin(), c.end());
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  return level;
}

std::vector<Graph> enumerate_triangle_free(std::size_t n, const OracleConfig& config) {
  std::vector<Graph> out;
  for (const auto& code : enumerate_triangle_free_codes(n, config)) out.push_back(graph_from_code(code));
  return out;
}

MaximizerReport find_maximizers(const Graph& pattern, std::size_t n, const OracleConfig& config,
                                std::string pattern_id) {
  if (pattern.order() > n) {
    throw std::invalid_argument("pattern has more vertices than the host size");
  }
  const auto graphs = enumerate_triangle_free(n, config);
  std::vector<EmbeddingCount> copies(graphs.size());
  run_indexed(graphs.size(), config.workers, [&](std::size_t i) {
    if (i % 16 == 0) check_deadline(config);
    copies[i] = count_copies(pattern, graphs[i]);
  });

  MaximizerReport report;
  report.n = n;
  report.pattern_id = std::move(pattern_id);
  report.graphs_examined = graphs.size();
  report.max_count = 0;
  for (const auto& c : copies) report.max_count = std::max(report.max_count, c);
  report.all_bipartite = true;
  report.all_complete_bipartite = true;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (copies[i] != report.max_count) continue;
    report.witnesses.push_back(graphs[i]);
    const auto parts = complete_bipartite_parts(graphs[i]);
    report.witness_parts.push_back(parts);
    report.all_bipartite = report.all_bipartite && is_bipartite(graphs[i]);
    report.all_complete_bipartite = report.all_complete_bipartite && parts.has_value();
  }
  return report;
}

}  // namespace extremal
