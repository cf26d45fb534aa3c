#include "repmat/cheb_inverse.hpp"

#include <cmath>
#include <stdexcept>

namespace repmat {

namespace {

void check_entry_index(const TridiagonalParams& p, long i, long j) {
  if (i < 1 || i > p.n || j < 1 || j > p.n) {
    throw std::out_of_range("inverse_entry: index out of range");
  }
}

Rational rational_pow(const Rational& b, long e) {
  Rational r;
  if (e >= 0) {
    mpz_pow_ui(r.get_num().get_mpz_t(), b.get_num().get_mpz_t(),
               static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den().get_mpz_t(), b.get_den().get_mpz_t(),
               static_cast<unsigned long>(e));
    return r;
  }
  return Rational(1) / rational_pow(b, -e);
}

}  // namespace

double chebyshev_u(long m, double x) {
  if (m < 0) throw std::domain_error("chebyshev_u: m must be >= 0");
  long double prev = 1.0L, cur = 2.0L * static_cast<long double>(x);
  if (m == 0) return 1.0;
  for (long i = 2; i <= m; ++i) {
    long double next = 2.0L * static_cast<long double>(x) * cur - prev;
    prev = cur;
    cur = next;
  }
  return static_cast<double>(cur);
}

Rational chebyshev_u_exact(long m, const Rational& x) {
  if (m < 0) throw std::domain_error("chebyshev_u: m must be >= 0");
  Rational prev(1), cur = 2 * x;
  if (m == 0) return prev;
  for (long i = 2; i <= m; ++i) {
    Rational next = 2 * x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::pair<double, double> cheb_repunit_identity(long m, double b) {
  if (m < 0) throw std::domain_error("cheb_repunit_identity: m must be >= 0");
  if (!(b > 0.0) || !std::isfinite(b)) {
    throw std::domain_error("cheb_repunit_identity: b must be > 0");
  }
  const long double sqb = sqrtl(static_cast<long double>(b));
  const long double xb = (static_cast<long double>(b) + 1.0L) / (2.0L * sqb);
  double lhs = chebyshev_u(m, static_cast<double>(xb));
  long double scale =
      expl(-static_cast<long double>(m) / 2.0L * logl(static_cast<long double>(b)));
  double rhs = static_cast<double>(scale * static_cast<long double>(
                                               repunit_float(m + 1, b)));
  return {lhs, rhs};
}

std::pair<Rational, Rational> cheb_repunit_identity_exact(long m,
                                                          const Rational& b) {
  if (m < 0) throw std::domain_error("cheb_repunit_identity: m must be >= 0");
  auto root = exact_sqrt(b);
  if (!root) {
    throw std::invalid_argument(
        "cheb_repunit_identity_exact: b is not a perfect rational square");
  }
  Rational xb = (b + 1) / (2 * *root);
  Rational lhs = chebyshev_u_exact(m, xb);
  Rational rhs = rational_pow(*root, -m) * repunit_exact(m + 1, b);
  return {lhs, rhs};
}

InverseEntry<Rational> inverse_entry_exact(const TridiagonalParams& p, long i,
                                           long j) {
  check_entry_index(p, i, j);
  InverseEntry<Rational> e;
  e.i = i;
  e.j = j;
  e.sign = ((i + j) % 2 == 0) ? +1 : -1;
  e.b_power = (i >= j) ? i - j : 0;
  e.denominator = repunit_exact(p.n + 1, p.b);
  if (i <= j) {
    e.left_repunit = repunit_exact(i, p.b);
    e.right_repunit = repunit_exact(p.n - j + 1, p.b);
  } else {
    e.left_repunit = repunit_exact(j, p.b);
    e.right_repunit = repunit_exact(p.n - i + 1, p.b);
  }
  Rational v = rational_pow(p.b, e.b_power) * e.left_repunit * e.right_repunit /
               e.denominator;
  e.value = (e.sign > 0) ? v : -v;
  return e;
}

InverseEntry<double> inverse_entry_float(const TridiagonalParams& p, long i,
                                         long j) {
  check_entry_index(p, i, j);
  const double b = p.b_float();
  InverseEntry<double> e;
  e.i = i;
  e.j = j;
  e.sign = ((i + j) % 2 == 0) ? +1 : -1;
  e.b_power = (i >= j) ? i - j : 0;
  e.denominator = repunit_float(p.n + 1, b);
  long lo = std::min(i, j), hi = std::max(i, j);
  e.left_repunit = repunit_float(lo, b);
  e.right_repunit = repunit_float(p.n - hi + 1, b);
  double v = std::pow(b, static_cast<double>(e.b_power)) * e.left_repunit *
             e.right_repunit / e.denominator;
  e.value = (e.sign > 0) ? v : -v;
  return e;
}

Matrix<Rational> inverse_dense_exact(const TridiagonalParams& p) {
  const auto n = static_cast<std::size_t>(p.n);
  auto rep = repunit_table_exact(p.n + 1, p.b);
  Matrix<Rational> inv(n, n);
  std::vector<Rational> bpow(n + 1);
  bpow[0] = 1;
  for (std::size_t e = 1; e <= n; ++e) bpow[e] = bpow[e - 1] * p.b;
  const Rational& denom = rep[n + 1];
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      Rational v;
      if (i <= j) {
        v = rep[i] * rep[n - j + 1] / denom;
      } else {
        v = bpow[i - j] * rep[j] * rep[n - i + 1] / denom;
      }
      if ((i + j) % 2 == 1) v = -v;
      inv(i - 1, j - 1) = v;
    }
  }
  return inv;
}

std::vector<Rational> apply_inverse_exact(const TridiagonalParams& p,
                                          std::span<const Rational> r) {
  return apply_inverse_field<Rational>(p.n, p.b, r);
}

std::vector<double> apply_inverse_float(const TridiagonalParams& p,
                                        std::span<const double> r) {
  if (static_cast<long>(r.size()) != p.n) {
    throw std::invalid_argument("apply_inverse: vector length mismatch");
  }
  const auto n = static_cast<std::size_t>(p.n);
  const double bd = p.b_float();
  const ScaledFloat b(static_cast<long double>(bd));
  const ScaledFloat binv = ScaledFloat(1.0L) / b;
  auto rep = repunit_table_scaled(p.n + 1, bd);

  std::vector<ScaledFloat> s(n + 1), t(n + 2);
  {
    ScaledFloat bp(1.0L);
    int sg = 1;
    for (std::size_t j = 1; j <= n; ++j) {
      bp *= binv;
      sg = -sg;
      ScaledFloat term = bp * rep[j] * ScaledFloat(r[j - 1]);
      s[j] = (sg > 0) ? s[j - 1] + term : s[j - 1] - term;
    }
  }
  for (std::size_t j = n; j >= 1; --j) {
    ScaledFloat term = rep[n - j + 1] * ScaledFloat(r[j - 1]);
    t[j] = (j % 2 == 0) ? t[j + 1] + term : t[j + 1] - term;
  }

  std::vector<double> y(n);
  ScaledFloat bpow(1.0L);
  for (std::size_t i = 1; i <= n; ++i) {
    bpow *= b;
    ScaledFloat acc =
        (bpow * rep[n - i + 1] * s[i - 1] + rep[i] * t[i]) / rep[n + 1];
    double v = acc.to_double();
    if (std::isinf(v)) {
      throw std::overflow_error(
          "apply_inverse_float: result overflows double; use exact mode");
    }
    y[i - 1] = (i % 2 == 0) ? v : -v;
  }
  return y;
}

std::vector<Rational> thomas_solve_exact(const TridiagonalParams& p,
                                         std::span<const Rational> r) {
  return thomas_solve_field<Rational>(p.n, p.b, r);
}

std::vector<double> thomas_solve_float(const TridiagonalParams& p,
                                       std::span<const double> r) {
  return thomas_solve_field<double>(p.n, p.b_float(), r);
}

}  // namespace repmat
