#pragma once

#include <chrono>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "extremal/embeddings.hpp"
#include "extremal/graph.hpp"

namespace extremal {

// Upper-triangle adjacency bits read column by column, (0,1), (0,2), (1,2),
// (0,3), ..., the first pair being the most significant bit. Canonical forms
// minimise this string over all vertex relabellings. Fits n <= 11.
struct CanonicalCode {
  std::uint32_t n = 0;
  std::uint64_t bits = 0;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

inline constexpr std::size_t kMaxCanonicalOrder = 11;

CanonicalCode adjacency_code(const Graph& g);
Graph graph_from_code(const CanonicalCode& code);

// Lexicographically minimal code over all permutations, found by
// branch-and-bound. Interchangeable twins (equal neighbourhoods outside each
// other) are placed in index order, which never excludes the minimum.
CanonicalCode canonical_code(const Graph& g);
Graph canonical_graph(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleConfig {
  // Enumeration refuses n above this. Raising it to 9 is allowed (slow);
  // anything larger is rejected.
  std::size_t budget_n = 8;
  unsigned workers = 1;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

inline constexpr std::size_t kHardMaxEnumeration = 9;

// Every triangle-free graph on n vertices exactly once up to isomorphism, in
// canonical form, sorted by code. Throws BudgetExceeded.
std::vector<Graph> enumerate_triangle_free(std::size_t n, const OracleConfig& config = {});
std::vector<CanonicalCode> enumerate_triangle_free_codes(std::size_t n,
                                                         const OracleConfig& config = {});

struct MaximizerReport {
  std::size_t n = 0;
  std::string pattern_id;
  EmbeddingCount max_count;          // copies
  std::vector<Graph> witnesses;      // canonical form, sorted by code
  std::size_t graphs_examined = 0;
  bool all_bipartite = false;
  bool all_complete_bipartite = false;
  // (smaller, larger) part sizes for complete bipartite witnesses, in witness
  // order; empty entries for the rest.
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> witness_parts;
};

// Exact maximisers of the copy count over all triangle-free n-vertex graphs.
// Throws BudgetExceeded, or std::invalid_argument when |V(pattern)| > n.
MaximizerReport find_maximizers(const Graph& pattern, std::size_t n,
                                const OracleConfig& config = {}, std::string pattern_id = {});

}  // namespace extremal
