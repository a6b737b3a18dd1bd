#include "extremal/blowup.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "elimination.hpp"
#include "extremal/embeddings.hpp"

namespace extremal {

namespace {

std::vector<std::vector<Vertex>> full_domains(const Graph& h, const Graph& p) {
  std::vector<Vertex> all(p.order());
  std::iota(all.begin(), all.end(), Vertex{0});
  return std::vector<std::vector<Vertex>>(h.order(), all);
}

template <typename T>
std::vector<std::vector<Vertex>> support_domains(const Graph& h, std::span<const T> weights) {
  std::vector<Vertex> support;
  for (Vertex i = 0; i < weights.size(); ++i)
    if (weights[i] != 0) support.push_back(i);
  return std::vector<std::vector<Vertex>>(h.order(), support);
}

void require_weight_count(const Graph& p, std::size_t count) {
  if (count != p.order()) {
    throw std::invalid_argument("expected " + std::to_string(p.order()) + " weights, got " +
                                std::to_string(count));
  }
}

// Parallel map over [0, count) into a pre-sized output; the output order is
// fixed, so results never depend on the worker count.
template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  }
}

// Integer compositions of `total` into `parts` parts, lexicographically
// decreasing from (total, 0, ..., 0).
template <typename Fn>
void for_each_composition(unsigned total, std::size_t parts, Fn&& fn) {
  std::vector<unsigned> c(parts, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned remaining) -> void {
    if (i + 1 == parts) {
      c[i] = remaining;
      fn(c);
      return;
    }
    for (unsigned v = remaining + 1; v-- > 0;) {
      c[i] = v;
      self(self, i + 1, remaining - v);
    }
  };
  if (parts == 0) return;
  rec(rec, 0, total);
}

double binomial(unsigned n, unsigned k) {
  double out = 1;
  for (unsigned i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// w[sigma[i]] = c[i] for every automorphism sigma; keep c only if it is the
// lexicographically largest image.
bool is_orbit_representative(const std::vector<unsigned>& c,
                             const std::vector<std::vector<Vertex>>& automorphisms) {
  std::vector<unsigned> image(c.size());
  for (const auto& sigma : automorphisms) {
    for (std::size_t i = 0; i < c.size(); ++i) image[sigma[i]] = c[i];
    if (image > c) return false;
  }
  return true;
}

std::string format_weights(const std::vector<double>& w) {
  std::ostringstream out;
  out.precision(6);
  out << '(';
  for (std::size_t i = 0; i < w.size(); ++i) out << (i ? ", " : "") << w[i];
  out << ')';
  return out.str();
}

}  // namespace

// ---------------------------------------------------------------------------

WeightedPattern::WeightedPattern(Graph pattern, std::vector<Rational> weights)
    : pattern_(std::move(pattern)), weights_(std::move(weights)) {
  require_weight_count(pattern_, weights_.size());
  Rational total = 0;
  for (auto& w : weights_) {
    w.canonicalize();
    if (w < 0) throw std::invalid_argument("blob weights must be non-negative");
    total += w;
  }
  if (total != 1) {
    throw std::invalid_argument("blob weights sum to " + to_fraction_string(total) + ", not 1");
  }
}

WeightedPattern WeightedPattern::uniform(Graph pattern) {
  const auto k = static_cast<unsigned long>(pattern.order());
  std::vector<Rational> w(k, Rational(1UL, k));
  return WeightedPattern(std::move(pattern), std::move(w));
}

Integer count_homomorphisms(const Graph& h, const Graph& p) {
  const std::vector<Integer> ones(p.order(), Integer(1));
  return detail::eliminate<Integer>(h, p, detail::min_degree_order(h), full_domains(h, p),
                                    std::span<const Integer>(ones));
}

std::vector<std::vector<Vertex>> list_homomorphisms(const Graph& h, const Graph& p,
                                                    std::size_t max_listed) {
  if (h.order() > 20) throw std::length_error("homomorphism listing needs |V(H)| <= 20");
  const Integer total = count_homomorphisms(h, p);
  if (total > static_cast<unsigned long>(max_listed)) {
    throw std::length_error("too many homomorphisms to list (" + total.get_str() + ")");
  }
  std::vector<std::vector<Vertex>> out;
  out.reserve(total.get_ui());
  std::vector<Vertex> phi(h.order(), 0);
  auto rec = [&](auto&& self, Vertex v) -> void {
    if (v == h.order()) {
      out.push_back(phi);
      return;
    }
    for (Vertex a = 0; a < p.order(); ++a) {
      bool ok = true;
      h.neighbors(v).for_each([&](std::size_t u) {
        if (u < v && !p.adjacent(phi[u], a)) ok = false;
      });
      if (!ok) continue;
      phi[v] = a;
      self(self, v + 1);
    }
  };
  rec(rec, 0);
  return out;
}

Rational weighted_hom_sum(const Graph& h, const Graph& p, std::span<const Rational> weights) {
  require_weight_count(p, weights.size());
  return detail::eliminate<Rational>(h, p, detail::min_degree_order(h),
                                     support_domains(h, weights), weights);
}

double weighted_hom_sum(const Graph& h, const Graph& p, std::span<const double> weights) {
  require_weight_count(p, weights.size());
  return detail::eliminate<double>(h, p, detail::min_degree_order(h), full_domains(h, p),
                                   weights);
}

LeadingCoefficient leading_coefficient(const Graph& h, const WeightedPattern& wp) {
  const Graph& p = wp.pattern();
  const std::span<const Rational> weights(wp.weights());
  const auto order = detail::min_degree_order(h);
  const auto domains = support_domains(h, weights);
  LeadingCoefficient out;
  out.value = detail::eliminate<Rational>(h, p, order, domains, weights);
  const std::vector<Integer> ones(p.order(), Integer(1));
  out.hom_count = detail::eliminate<Integer>(h, p, order, domains, std::span<const Integer>(ones));
  return out;
}

std::vector<std::size_t> blob_sizes(const WeightedPattern& wp, std::size_t n) {
  const auto& w = wp.weights();
  std::vector<std::size_t> sizes(w.size());
  std::vector<Rational> remainder(w.size());
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Rational scaled = w[i] * static_cast<unsigned long>(n);
    Integer floor_value;
    mpz_fdiv_q(floor_value.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    sizes[i] = floor_value.get_ui();
    remainder[i] = scaled - floor_value;
    assigned += sizes[i];
  }
  std::vector<std::size_t> rank(w.size());
  std::iota(rank.begin(), rank.end(), std::size_t{0});
  std::stable_sort(rank.begin(), rank.end(),
                   [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
  for (std::size_t i = 0; assigned < n; ++i, ++assigned) ++sizes[rank[i % rank.size()]];
  return sizes;
}

SaturationReport saturation_check(const Graph& h, const WeightedPattern& wp, std::size_t n,
                                  double work_budget, unsigned workers) {
  SaturationReport report;
  report.n = n;
  report.coefficient = leading_coefficient(h, wp).value;
  const std::size_t m = h.order();
  if (n == 0) {
    report.reason = "n must be positive";
    return report;
  }
  const double work = std::pow(2.0 * static_cast<double>(n), m > 0 ? static_cast<double>(m - 1) : 0.0);
  if (work > work_budget) {
    report.reason = "estimated work " + std::to_string(work) + " exceeds budget";
    return report;
  }
  const CountOptions options{workers};
  auto normalized_error = [&](std::size_t size, Integer& count) {
    const auto sizes = blob_sizes(wp, size);
    count = count_embeddings(h, build_blowup(wp.pattern(), sizes), options);
    Rational normalized(count, pow_int(static_cast<unsigned long>(size), m));
    normalized.canonicalize();
    return Rational(abs(normalized - report.coefficient));
  };
  report.error_n = normalized_error(n, report.count_n);
  report.error_2n = normalized_error(2 * n, report.count_2n);
  report.fitted_constant = report.error_n * static_cast<unsigned long>(n);
  report.within_bound =
      report.error_2n <= report.fitted_constant / Rational(static_cast<unsigned long>(2 * n));
  report.feasible = true;
  return report;
}

std::vector<std::vector<Vertex>> pattern_automorphisms(const Graph& p) {
  if (p.order() > 8) throw std::invalid_argument("pattern_automorphisms needs |V(P)| <= 8");
  std::vector<Vertex> sigma(p.order());
  std::iota(sigma.begin(), sigma.end(), Vertex{0});
  const auto edges = p.edges();
  std::vector<std::vector<Vertex>> out;
  do {
    bool ok = true;
    for (const auto& [u, v] : edges) {
      if (!p.adjacent(sigma[u], sigma[v])) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

OptimizationResult optimize_weights(const Graph& h, const Graph& p, const OptimizerConfig& config) {
  const std::size_t k = p.order();
  if (k == 0 || k > 8) throw std::invalid_argument("optimize_weights needs 1 <= |V(P)| <= 8");
  if (config.grid_resolution == 0) throw std::invalid_argument("grid resolution must be positive");

  const auto automorphisms = pattern_automorphisms(p);
  unsigned resolution = config.grid_resolution;
  while (resolution > 1 &&
         binomial(resolution + static_cast<unsigned>(k) - 1, static_cast<unsigned>(k) - 1) /
                 static_cast<double>(automorphisms.size()) >
             static_cast<double>(config.max_grid_points)) {
    --resolution;
  }

  std::vector<std::vector<unsigned>> grid;
  for_each_composition(resolution, k, [&](const std::vector<unsigned>& c) {
    if (is_orbit_representative(c, automorphisms)) grid.push_back(c);
  });

  const auto order = detail::min_degree_order(h);
  const auto domains = full_domains(h, p);
  auto evaluate = [&](const std::vector<double>& w) {
    return detail::eliminate<double>(h, p, order, domains, std::span<const double>(w));
  };
  auto to_weights = [&](const std::vector<unsigned>& c) {
    std::vector<double> w(k);
    for (std::size_t i = 0; i < k; ++i) w[i] = static_cast<double>(c[i]) / resolution;
    return w;
  };

  std::vector<double> grid_value(grid.size());
  parallel_for(grid.size(), config.workers,
               [&](std::size_t i) { grid_value[i] = evaluate(to_weights(grid[i])); });

  std::vector<std::size_t> ranked(grid.size());
  std::iota(ranked.begin(), ranked.end(), std::size_t{0});
  const std::size_t seed_count = std::min<std::size_t>(std::max(1U, config.seeds), grid.size());
  std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(seed_count),
                    ranked.end(), [&](std::size_t a, std::size_t b) {
                      if (grid_value[a] != grid_value[b]) return grid_value[a] > grid_value[b];
                      return a < b;
                    });
  ranked.resize(seed_count);

  struct SeedOutcome {
    std::vector<std::vector<Rational>> candidates;
    std::vector<std::string> trace;
  };
  std::vector<SeedOutcome> outcomes(seed_count);

  parallel_for(seed_count, config.workers, [&](std::size_t s) {
    SeedOutcome& outcome = outcomes[s];
    const auto& c = grid[ranked[s]];
    std::vector<Rational> exact_grid(k);
    for (std::size_t i = 0; i < k; ++i) {
      exact_grid[i] = Rational(c[i], resolution);
      exact_grid[i].canonicalize();
    }
    outcome.candidates.push_back(exact_grid);

    std::vector<double> w = to_weights(c);
    double value = evaluate(w);
    double step = 1.0 / resolution;
    unsigned iteration = 0;
    while (step >= config.tolerance && iteration < config.max_iterations) {
      ++iteration;
      bool improved = false;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          if (i == j || w[j] <= 0) continue;
          const double delta = std::min(step, w[j]);
          std::vector<double> trial = w;
          trial[i] += delta;
          trial[j] -= delta;
          const double trial_value = evaluate(trial);
          if (trial_value > value) {
            w = std::move(trial);
            value = trial_value;
            improved = true;
          }
        }
      }
      if (!improved) step /= 2;
      if (config.trace) {
        std::ostringstream line;
        line.precision(12);
        line << "seed " << s << " iter " << iteration << " step " << step << " value " << value
             << " weights " << format_weights(w);
        outcome.trace.push_back(line.str());
      }
    }

    std::size_t largest = 0;
    for (std::size_t i = 1; i < k; ++i)
      if (w[i] > w[largest]) largest = i;
    std::vector<Rational> rational(k);
    Rational rest = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == largest) continue;
      rational[i] = limit_denominator(std::max(w[i], 0.0), config.max_denominator);
      rest -= rational[i];
    }
    if (rest >= 0) {
      rational[largest] = rest;
      outcome.candidates.push_back(std::move(rational));
    }
  });

  std::vector<std::vector<Rational>> candidates;
  OptimizationResult result{WeightedPattern::uniform(p), {}, resolution, grid.size(),
                            automorphisms.size(), {}};
  for (auto& outcome : outcomes) {
    for (auto& c : outcome.candidates) candidates.push_back(std::move(c));
    for (auto& line : outcome.trace) result.trace.push_back(std::move(line));
  }
  std::vector<Rational> exact_values(candidates.size());
  parallel_for(candidates.size(), config.workers, [&](std::size_t i) {
    exact_values[i] = weighted_hom_sum(h, p, std::span<const Rational>(candidates[i]));
  });

  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    if (exact_values[i] > exact_values[best] ||
        (exact_values[i] == exact_values[best] && candidates[i] < candidates[best])) {
      best = i;
    }
  }
  result.best = WeightedPattern(p, candidates[best]);
  result.coefficient = leading_coefficient(h, result.best);
  return result;
}

}  // namespace extremal
