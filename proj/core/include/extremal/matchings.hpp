#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "extremal/graph.hpp"

namespace extremal {

class NotBipartiteError : public std::invalid_argument {
 public:
  NotBipartiteError() : std::invalid_argument("pattern is not bipartite") {}
};

struct MatchingReport {
  std::size_t order = 0;  // m
  std::size_t size = 0;   // x
  std::vector<Edge> pairs;  // (left, right) by ascending left vertex
  std::vector<Vertex> unmatched;
  // d with m - 2x = 2d; empty when the defect is odd.
  std::optional<std::size_t> half_defect;
  // The Konig set built from alternating reachability is a vertex cover of
  // size x, so no augmenting path remains.
  bool certified_maximum = false;
};

struct HypothesisVerdict {
  std::size_t matching_size = 0;
  std::size_t unmatched = 0;
  // unmatched <= sqrt(x - 1) / 2, checked as 4 * unmatched^2 <= x - 1.
  bool satisfies_thm1 = false;
  // Matching of size floor(m / 2).
  bool satisfies_gps = false;
  // unmatched / x (= 2d / x); empty when x = 0.
  std::optional<mpq_class> lambda;
};

// Hopcroft-Karp on the 2-colouring of `pattern`; vertices are scanned in
// index order so the result is deterministic. Throws NotBipartiteError.
MatchingReport maximum_matching(const Graph& pattern);

HypothesisVerdict check_hypotheses(const MatchingReport& report);
HypothesisVerdict check_theorem1_hypothesis(const Graph& pattern);

// True when `pairs` are vertex-disjoint edges of g.
bool is_matching(const Graph& g, const std::vector<Edge>& pairs);

struct IsolatedRemoval {
  Graph reduced;
  std::size_t removed = 0;
};

IsolatedRemoval remove_isolated_vertices(const Graph& pattern);

// Embedding count of the original pattern from that of the reduced one:
// reduced_count * (n - m')(n - m' - 1) ... (n - m' - removed + 1).
mpz_class restore_isolated_count(const mpz_class& reduced_count, std::size_t host_order,
                                 std::size_t reduced_order, std::size_t removed);

}  // namespace extremal
