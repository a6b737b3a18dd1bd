#include "extremal/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace extremal {

Integer pow_int(const Integer& base, std::uint64_t exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational pow_rational(const Rational& base, std::uint64_t exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  out.canonicalize();
  return out;
}

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos) throw std::invalid_argument("bad rational '" + s + "'");
    const std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const std::size_t places = s.size() - dot - 1;
    Integer num;
    if (num.set_str(digits, 10) != 0) throw std::invalid_argument("bad rational '" + s + "'");
    Rational out(num, pow_int(10, places));
    out.canonicalize();
    return out;
  }
  Rational out;
  if (out.set_str(s, 10) != 0 || out.get_den() == 0) {
    throw std::invalid_argument("bad rational '" + s + "'");
  }
  out.canonicalize();
  return out;
}

Rational limit_denominator(double value, std::uint64_t max_denominator) {
  if (!std::isfinite(value)) throw std::invalid_argument("cannot rationalize a non-finite value");
  if (max_denominator == 0) throw std::invalid_argument("max_denominator must be positive");
  // Exact binary value of the double, then the usual convergent walk.
  Rational target(value);
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Integer n = target.get_num(), d = target.get_den();
  const Integer bound = static_cast<unsigned long>(max_denominator);
  while (true) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    const Integer q2 = q0 + a * q1;
    if (q2 > bound) break;
    const Integer p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const Integer r = n - a * d;
    n = d;
    d = r;
    if (d == 0) break;
  }
  if (d == 0) {
    Rational exact(p1, q1);
    exact.canonicalize();
    return exact;
  }
  // Semiconvergent candidate against the last convergent.
  Integer k;
  mpz_fdiv_q(k.get_mpz_t(), Integer(bound - q0).get_mpz_t(), q1.get_mpz_t());
  Rational lower(p0 + k * p1, q0 + k * q1);
  Rational upper(p1, q1);
  lower.canonicalize();
  upper.canonicalize();
  return abs(upper - target) <= abs(lower - target) ? upper : lower;
}

}  // namespace extremal
