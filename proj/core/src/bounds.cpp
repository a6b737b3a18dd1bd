#include "extremal/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "extremal/blowup.hpp"

namespace extremal {

namespace {

Rational frac(long num, unsigned long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational half_pow(std::uint64_t e) { return Rational(1, pow_int(2, e)); }

bool compare(Relation r, const Rational& lhs, const Rational& rhs) {
  switch (r) {
    case Relation::kEqual:
      return lhs == rhs;
    case Relation::kAtLeast:
      return lhs >= rhs;
    case Relation::kGreater:
      return lhs > rhs;
  }
  return false;
}

}  // namespace

std::string relation_symbol(Relation r) {
  switch (r) {
    case Relation::kEqual:
      return "=";
    case Relation::kAtLeast:
      return ">=";
    case Relation::kGreater:
      return ">";
  }
  return "?";
}

EdgeBoundReport edge_bound_check(const Graph& g) {
  if (!is_triangle_free(g)) throw std::invalid_argument("edge bound needs a triangle-free graph");
  const auto stats = degree_stats(g);
  EdgeBoundReport report;
  report.edges = stats.edge_count;
  report.max_degree = stats.max_degree;
  report.bound = stats.max_degree * (g.order() - stats.max_degree);
  report.holds = report.edges <= report.bound;
  report.equality = report.edges == report.bound;
  if (report.equality) {
    const auto parts = complete_bipartite_parts(g);
    const std::size_t other = g.order() - stats.max_degree;
    report.equality_is_complete_bipartite =
        parts.has_value() && parts->first == std::min(stats.max_degree, other) &&
        parts->second == std::max(stats.max_degree, other);
  }
  return report;
}

// ---------------------------------------------------------------------------

Theorem1Coefficient thm1_coefficient(std::uint64_t x, std::uint64_t d) {
  if (x < 2) throw std::invalid_argument("thm1_coefficient needs x >= 2");
  const Integer num = pow_int(d + x - 1, 2 * d + 2 * x - 2);
  const Integer den = 2 * pow_int(2 * d + x - 1, 2 * d + x - 1) * pow_int(x - 1, x - 1);
  Theorem1Coefficient out;
  out.x = x;
  out.d = d;
  out.value = Rational(num, den);
  out.value.canonicalize();
  out.exceeds_two_fifths = out.value > frac(2, 5);
  return out;
}

bool thm1_hypothesis_holds(std::uint64_t x, std::uint64_t d) {
  return x >= 1 && 16 * d * d <= x - 1;
}

Rational optimal_Delta_fraction(std::uint64_t x, std::uint64_t d) {
  if (x == 0) throw std::invalid_argument("optimal_Delta_fraction needs x >= 1");
  const std::uint64_t den = 2 * d + 2 * x - 2;
  if (den == 0) throw std::invalid_argument("optimal_Delta_fraction: degenerate x = 1, d = 0");
  Rational out(static_cast<unsigned long>(2 * d + x - 1), static_cast<unsigned long>(den));
  out.canonicalize();
  return out;
}

DeltaGridCheck delta_fraction_grid_check(std::uint64_t x, std::uint64_t d, double step) {
  const double formula = optimal_Delta_fraction(x, d).get_d();
  const double a = static_cast<double>(2 * d + x - 1);
  const double b = static_cast<double>(x - 1);
  const auto points = static_cast<std::uint64_t>(std::llround(1.0 / step));
  DeltaGridCheck out;
  out.formula = formula;
  out.step = step;
  double best = -INFINITY;
  for (std::uint64_t i = 1; i < points; ++i) {
    const double t = static_cast<double>(i) * step;
    const double value = a * std::log(t) + b * std::log1p(-t);
    if (value > best) {
      best = value;
      out.argmax = t;
    }
  }
  out.within_one_step = std::abs(out.argmax - formula) <= step * (1 + 1e-9);
  return out;
}

ChainReport thm1_chain_check(std::uint64_t x, std::uint64_t d) {
  if (x < 2) throw std::invalid_argument("thm1_chain_check needs x >= 2");
  ChainReport report;
  report.x = x;
  report.d = d;
  report.hypothesis_holds = thm1_hypothesis_holds(x, d) && d < x - 1;

  const auto xm1 = static_cast<unsigned long>(x - 1);
  const auto dd = static_cast<long>(d);
  const Rational half = frac(1, 2);
  const Rational y = frac(dd, xm1);  // d / (x - 1)
  const Rational one = 1;
  const Rational shrink = one - frac(dd, static_cast<unsigned long>(2 * d + x - 1));

  const Rational coefficient = thm1_coefficient(x, d).value;
  const Rational rearranged =
      half * pow_rational(shrink, 2 * d + x - 1) * pow_rational(one + y, x - 1);
  const Rational bernoulli_base =
      half * pow_rational(one - y, 2 * d + x - 1) * pow_rational(one + y, x - 1);
  const Rational split_power =
      half * pow_rational(one - y, 2 * d) * pow_rational((one - y) * (one + y), x - 1);
  const Rational squares = half * pow_rational(one - y, 2 * d) * pow_rational(one - y * y, x - 1);
  const Rational d2 = frac(dd * dd, xm1);  // d^2 / (x - 1)
  const Rational bernoulli_bound = half * (one - 2 * d2) * (one - d2);
  const Rational hypothesis_bound = half * (one - frac(2, 16)) * (one - frac(1, 16));
  const Rational two_fifths = frac(2, 5);

  report.values = {{"coefficient", coefficient},
                   {"rearranged", rearranged},
                   {"bernoulli_base", bernoulli_base},
                   {"split_power", split_power},
                   {"difference_of_squares", squares},
                   {"bernoulli_bound", bernoulli_bound},
                   {"hypothesis_bound", hypothesis_bound},
                   {"two_fifths", two_fifths}};
  const Relation relations[] = {Relation::kEqual,   Relation::kAtLeast, Relation::kEqual,
                                Relation::kEqual,   Relation::kAtLeast, Relation::kAtLeast,
                                Relation::kGreater};
  report.all_hold = true;
  for (std::size_t i = 0; i + 1 < report.values.size(); ++i) {
    ChainStep step;
    step.lhs_name = report.values[i].first;
    step.rhs_name = report.values[i + 1].first;
    step.relation = relations[i];
    step.lhs = report.values[i].second;
    step.rhs = report.values[i + 1].second;
    step.holds = compare(step.relation, step.lhs, step.rhs);
    report.all_hold = report.all_hold && step.holds;
    report.steps.push_back(std::move(step));
  }
  return report;
}

SweepReport thm1_sweep(std::uint64_t x_max, unsigned workers) {
  struct PerX {
    std::size_t pairs = 0;
    std::size_t steps = 0;
    Rational min_value;
    std::uint64_t min_d = 0;
    std::vector<SweepViolation> violations;
  };
  SweepReport report;
  report.x_max = x_max;
  if (x_max < 2) return report;
  const std::size_t count = x_max - 1;
  std::vector<PerX> per_x(count);

  auto work = [&](std::size_t i) {
    const std::uint64_t x = i + 2;
    PerX& out = per_x[i];
    for (std::uint64_t d = 0; thm1_hypothesis_holds(x, d); ++d) {
      const auto coefficient = thm1_coefficient(x, d);
      ++out.pairs;
      if (out.pairs == 1 || coefficient.value < out.min_value) {
        out.min_value = coefficient.value;
        out.min_d = d;
      }
      if (!coefficient.exceeds_two_fifths) {
        out.violations.push_back({x, d, "coefficient <= 2/5"});
      }
      const auto chain = thm1_chain_check(x, d);
      out.steps += chain.steps.size();
      for (const auto& step : chain.steps) {
        if (!step.holds) {
          out.violations.push_back(
              {x, d, step.lhs_name + " " + relation_symbol(step.relation) + " " + step.rhs_name});
        }
      }
    }
  };

  workers = std::max(1U, workers);
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) work(i);
      });
    }
  }

  bool have_min = false;
  for (std::size_t i = 0; i < count; ++i) {
    const PerX& p = per_x[i];
    report.pairs_checked += p.pairs;
    report.steps_checked += p.steps;
    if (p.pairs > 0 && (!have_min || p.min_value < report.min_coefficient)) {
      have_min = true;
      report.min_coefficient = p.min_value;
      report.min_x = i + 2;
      report.min_d = p.min_d;
    }
    report.violations.insert(report.violations.end(), p.violations.begin(), p.violations.end());
  }
  return report;
}

// ---------------------------------------------------------------------------

Graph theorem2_host_pattern() {
  return cycle_graph(5).with_labels({"1", "2", "3", "4", "5"});
}

Rational canonical_hom_product(const Rational& a, const Rational& b, const Rational& c,
                               std::uint64_t x, std::uint64_t d) {
  return pow_rational(a, x + 2 * d - 1) * pow_rational(b, x - 2) * pow_rational(c, 3);
}

Theorem2Params solve_theorem2_params(const Rational& lambda_in, const ParamSearchConfig& config) {
  Rational lambda = lambda_in;
  lambda.canonicalize();
  if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
  if (config.a_resolution < 4) throw std::invalid_argument("a_resolution must be at least 4");

  Theorem2Params out;
  out.lambda = lambda;
  out.lambda_num = lambda.get_num().get_ui();
  out.lambda_den = lambda.get_den().get_ui();
  const std::uint64_t r = out.lambda_num;
  const std::uint64_t s = out.lambda_den;
  const double l = lambda.get_d();

  // (z^(l+1) * rest)^s > ((1/2)^(l+2))^s, everything positive.
  auto exceeds_threshold = [&](const Rational& z, const Rational& rest) {
    if (rest <= 0) return false;
    return pow_rational(z, r + s) * pow_rational(rest, s) > half_pow(r + 2 * s);
  };

  const std::uint64_t res = config.a_resolution;
  std::uint64_t best_j = 0;
  double best_f = -INFINITY;
  for (std::uint64_t j = 1; 2 * j < res; ++j) {
    const double z = 0.5 + static_cast<double>(j) / static_cast<double>(res);
    const double f = std::pow(z, l + 1) * (1 - z) - std::pow(0.5, l + 2);
    if (f > best_f) {
      best_f = f;
      best_j = j;
    }
  }
  out.a = frac(1, 2) + Rational(static_cast<unsigned long>(best_j), static_cast<unsigned long>(res));
  out.a.canonicalize();
  out.f_positive = exceeds_threshold(out.a, 1 - out.a);
  if (!out.f_positive) throw std::logic_error("no admissible a found in the scan");

  Rational c = (1 - out.a) / 6;
  bool found = false;
  for (unsigned depth = 0; depth <= config.c_halving_depth; ++depth) {
    if (exceeds_threshold(out.a, 1 - out.a - 3 * c)) {
      found = true;
      break;
    }
    c /= 2;
  }
  if (!found) throw std::logic_error("no admissible c found by halving");
  out.c = c;
  out.b = 1 - out.a - 3 * c;
  out.g_positive = true;

  out.p_pow_den = pow_rational(out.a, r + s) * pow_rational(out.b, s) * Rational(pow_int(2, r + 2 * s));
  out.p = std::pow(out.a.get_d(), l + 1) * out.b.get_d() * std::pow(2.0, l + 2);
  out.p_greater_than_one = out.p_pow_den > 1;
  out.log_argument = 2 * out.a * out.b * out.b / (c * c * c);

  const Rational target = pow_rational(out.log_argument, s);
  auto exceeds = [&](std::uint64_t x) { return pow_rational(out.p_pow_den, x) > target; };

  if (out.p_greater_than_one) {
    const double estimate = std::log(out.log_argument.get_d()) / std::log(out.p);
    std::uint64_t x = estimate < 1 ? 1 : static_cast<std::uint64_t>(std::floor(estimate)) + 1;
    while (x > 1 && exceeds(x - 1)) --x;
    while (!exceeds(x)) ++x;
    out.x_min = x;
    out.power_certificate = exceeds(x);
    out.minimal = x == 1 || !exceeds(x - 1);
  }
  return out;
}

Theorem2Certificate theorem2_end_to_end(const Rational& lambda, std::uint64_t x_override,
                                        const ParamSearchConfig& config) {
  Theorem2Certificate cert;
  cert.params = solve_theorem2_params(lambda, config);
  const auto& params = cert.params;
  if (!params.all_hold()) throw std::logic_error("C5 blow-up parameters failed their checks");
  const std::uint64_t r = params.lambda_num;
  const std::uint64_t s = params.lambda_den;

  // lambda x = r x / s must be an even integer.
  auto admissible = [&](std::uint64_t x) { return (r * x) % s == 0 && ((r * x) / s) % 2 == 0; };
  std::uint64_t x = x_override;
  if (x != 0) {
    if (x < 3) throw std::invalid_argument("x must be at least 3");
    if (!admissible(x)) {
      throw std::invalid_argument("lambda * x must be an even integer (got lambda = " +
                                  to_fraction_string(params.lambda) + ", x = " +
                                  std::to_string(x) + ")");
    }
  } else {
    x = std::max<std::uint64_t>(params.x_min, 3);
    while (!admissible(x)) ++x;
  }
  cert.x = x;
  cert.d = (r * x) / s / 2;
  if (cert.d < 1) throw std::invalid_argument("construction needs d >= 1");

  const Graph h = build_theorem2_H(cert.d, x);
  cert.pattern_order = h.order();
  const WeightedPattern c5(theorem2_host_pattern(),
                           {params.a, params.b, params.c, params.c, params.c});
  const WeightedPattern k2(complete_graph(2), {frac(1, 2), frac(1, 2)});
  const auto lc5 = leading_coefficient(h, c5);
  cert.l_c5 = lc5.value;
  cert.c5_hom_count = lc5.hom_count;
  cert.l_k2 = leading_coefficient(h, k2).value;
  cert.c5_beats_k2 = cert.l_c5 > cert.l_k2;
  cert.l_k2_formula = cert.l_k2 == 2 * half_pow(h.order());

  cert.canonical_hom_product = canonical_hom_product(params.a, params.b, params.c, x, cert.d);
  cert.coefficient_at_least_canonical = cert.l_c5 >= cert.canonical_hom_product;
  cert.bound_with_exponent_lambda_x =
      cert.canonical_hom_product > 2 * half_pow(2 * x + 2 * cert.d);
  // 2 (1/2)^(2x + 2r/s), compared after raising both sides to the power s.
  cert.bound_with_exponent_two_lambda =
      pow_rational(cert.canonical_hom_product, s) >
      Rational(pow_int(2, s)) * half_pow(2 * x * s + 2 * r);
  return cert;
}

namespace {

ChainStep make_step(std::string lhs_name, Relation relation, std::string rhs_name, Rational lhs,
                    Rational rhs) {
  ChainStep step;
  step.lhs_name = std::move(lhs_name);
  step.rhs_name = std::move(rhs_name);
  step.relation = relation;
  step.holds = compare(relation, lhs, rhs);
  step.lhs = std::move(lhs);
  step.rhs = std::move(rhs);
  return step;
}

}  // namespace

std::vector<ChainStep> theorem2_param_steps(const Theorem2Params& params) {
  const std::uint64_t r = params.lambda_num;
  const std::uint64_t s = params.lambda_den;
  const Rational threshold = half_pow(r + 2 * s);
  const Rational k_pow = pow_rational(params.log_argument, s);
  std::vector<ChainStep> steps;
  steps.push_back(make_step("(a^(l+1) (1-a))^s", Relation::kGreater, "((1/2)^(l+2))^s",
                            pow_rational(params.a, r + s) * pow_rational(1 - params.a, s),
                            threshold));
  steps.push_back(make_step("(a^(l+1) (1-a-3c))^s", Relation::kGreater, "((1/2)^(l+2))^s",
                            pow_rational(params.a, r + s) * pow_rational(params.b, s), threshold));
  steps.push_back(make_step("p^s", Relation::kGreater, "1", params.p_pow_den, 1));
  if (params.x_min > 0) {
    steps.push_back(make_step("p^(s x_min)", Relation::kGreater, "(2ab^2/c^3)^s",
                              pow_rational(params.p_pow_den, params.x_min), k_pow));
    steps.push_back(make_step("(2ab^2/c^3)^s", Relation::kAtLeast, "p^(s (x_min-1))", k_pow,
                              pow_rational(params.p_pow_den, params.x_min - 1)));
  }
  return steps;
}

std::vector<ChainStep> theorem2_certificate_steps(const Theorem2Certificate& cert) {
  std::vector<ChainStep> steps;
  steps.push_back(make_step("L_C5", Relation::kGreater, "L_K2", cert.l_c5, cert.l_k2));
  steps.push_back(make_step("L_C5", Relation::kAtLeast, "a^(x+lx-1) b^(x-2) c^3", cert.l_c5,
                            cert.canonical_hom_product));
  steps.push_back(make_step("L_K2", Relation::kEqual, "2 (1/2)^m", cert.l_k2,
                            2 * half_pow(cert.pattern_order)));
  return steps;
}

std::vector<ChainStep> theorem2_exponent_forms(const Theorem2Certificate& cert) {
  const std::uint64_t r = cert.params.lambda_num;
  const std::uint64_t s = cert.params.lambda_den;
  std::vector<ChainStep> steps;
  steps.push_back(make_step("a^(x+lx-1) b^(x-2) c^3", Relation::kGreater, "2 (1/2)^(2x+lx)",
                            cert.canonical_hom_product, 2 * half_pow(2 * cert.x + 2 * cert.d)));
  steps.push_back(make_step("(a^(x+lx-1) b^(x-2) c^3)^s", Relation::kGreater,
                            "(2 (1/2)^(2x+2l))^s", pow_rational(cert.canonical_hom_product, s),
                            Rational(pow_int(2, s)) * half_pow(2 * cert.x * s + 2 * r)));
  return steps;
}

}  // namespace extremal
