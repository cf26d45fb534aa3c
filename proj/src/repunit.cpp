#include "repmat/repunit.hpp"

#include <cmath>
#include <stdexcept>

namespace repmat {

namespace {

constexpr double kNearOneThreshold = 9.5367431640625e-07;  // 2^-20

void check_domain(long m, bool b_positive) {
  if (m < 1) throw std::domain_error("repunit: length m must be >= 1");
  if (!b_positive) throw std::domain_error("repunit: base b must be > 0");
}

Rational rational_pow(const Rational& b, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num().get_mpz_t(), b.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den().get_mpz_t(), b.get_den().get_mpz_t(), e);
  return r;  // already canonical since b is
}

}  // namespace

Rational repunit_exact(long m, const Rational& b) {
  check_domain(m, sgn(b) > 0);
  if (b == 1) return Rational(m);
  return (rational_pow(b, static_cast<unsigned long>(m)) - 1) / (b - 1);
}

double repunit_float(long m, double b) {
  check_domain(m, b > 0.0 && std::isfinite(b));
  if (std::fabs(b - 1.0) <= kNearOneThreshold) {
    double acc = 1.0;
    for (long i = 1; i < m; ++i) acc = 1.0 + b * acc;
    return acc;
  }
  double r = (std::pow(b, static_cast<double>(m)) - 1.0) / (b - 1.0);
  if (!std::isfinite(r)) {
    throw std::overflow_error("repunit_float: value exceeds double range");
  }
  return r;
}

LogValue repunit_log(long m, double b) {
  check_domain(m, b > 0.0 && std::isfinite(b));
  if (m == 1) return {0.0, +1};
  if (std::fabs(b - 1.0) <= kNearOneThreshold) {
    double acc = 1.0;
    for (long i = 1; i < m; ++i) acc = 1.0 + b * acc;
    return {std::log(acc), +1};
  }
  double mlogb = static_cast<double>(m) * std::log(b);
  if (b > 1.0) {
    // R_m = (b^m - 1)/(b - 1); b^-m may underflow to 0, which is exact enough.
    return {mlogb + std::log1p(-std::exp(-mlogb)) - std::log(b - 1.0), +1};
  }
  // b < 1: R_m = (1 - b^m)/(1 - b), and b^m underflow is again harmless.
  return {std::log1p(-std::exp(mlogb)) - std::log1p(-b), +1};
}

std::vector<Rational> repunit_table_exact(long max_m, const Rational& b) {
  if (max_m < 0) throw std::domain_error("repunit_table_exact: max_m < 0");
  if (sgn(b) <= 0) throw std::domain_error("repunit: base b must be > 0");
  std::vector<Rational> table(static_cast<size_t>(max_m) + 1);
  table[0] = 0;
  for (long m = 1; m <= max_m; ++m) {
    table[static_cast<size_t>(m)] = b * table[static_cast<size_t>(m - 1)] + 1;
  }
  return table;
}

std::vector<ScaledFloat> repunit_table_scaled(long max_m, double b) {
  if (max_m < 0) throw std::domain_error("repunit_table_scaled: max_m < 0");
  if (!(b > 0.0) || !std::isfinite(b)) {
    throw std::domain_error("repunit: base b must be > 0");
  }
  std::vector<ScaledFloat> table(static_cast<size_t>(max_m) + 1);
  ScaledFloat base(b), one(1.0L);
  table[0] = ScaledFloat();
  for (long m = 1; m <= max_m; ++m) {
    table[static_cast<size_t>(m)] =
        base * table[static_cast<size_t>(m - 1)] + one;
  }
  return table;
}

}  // namespace repmat
