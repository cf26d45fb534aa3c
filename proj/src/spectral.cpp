#include "repmat/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace repmat {

namespace {

void check_index(const TridiagonalParams& p, long k) {
  if (k < 1 || k > p.n) {
    throw std::out_of_range("eigen index k out of range");
  }
}

}  // namespace

double eigenvalue(const TridiagonalParams& p, long k) {
  check_index(p, k);
  const long double b = p.b_float();
  const long double lam =
      b + 1.0L + 2.0L * sqrtl(b) * cos_pi_ratio(k, p.n + 1);
  return static_cast<double>(lam);
}

Spectrum spectrum(const TridiagonalParams& p) {
  Spectrum s{p, {}};
  s.values.reserve(static_cast<std::size_t>(p.n));
  for (long k = 1; k <= p.n; ++k) s.values.push_back(eigenvalue(p, k));
  return s;
}

std::vector<double> eigenvector(const TridiagonalParams& p, long k) {
  check_index(p, k);
  const long double logb = logl(static_cast<long double>(p.b_float()));
  std::vector<double> v(static_cast<std::size_t>(p.n));
  for (long j = 1; j <= p.n; ++j) {
    long double scale = expl(static_cast<long double>(j - 1) / 2.0L * logb);
    v[static_cast<std::size_t>(j - 1)] =
        static_cast<double>(scale * sin_pi_ratio(j * k, p.n + 1));
  }
  return v;
}

std::vector<double> eigenvector_w_normalized(const TridiagonalParams& p,
                                             long k) {
  // <v, v>_W = sum_j sin^2(j*k*pi/(n+1)) = (n+1)/2: the b powers cancel
  // against the weights, so the norm never overflows.
  auto v = eigenvector(p, k);
  const double norm = std::sqrt((static_cast<double>(p.n) + 1.0) / 2.0);
  for (double& x : v) x /= norm;
  return v;
}

std::vector<LogValue> eigenvector_log(const TridiagonalParams& p, long k) {
  check_index(p, k);
  const double logb = std::log(p.b_float());
  std::vector<LogValue> v(static_cast<std::size_t>(p.n));
  for (long j = 1; j <= p.n; ++j) {
    long double s = sin_pi_ratio(j * k, p.n + 1);
    int sign = s > 0 ? +1 : (s < 0 ? -1 : 0);
    double logmag = static_cast<double>(j - 1) / 2.0 * logb +
                    static_cast<double>(logl(fabsl(s)));
    v[static_cast<std::size_t>(j - 1)] = {logmag, sign};
  }
  return v;
}

Rational determinant_continuant_exact(const TridiagonalParams& p) {
  Rational prev(1), cur = p.b + 1;
  for (long k = 2; k <= p.n; ++k) {
    Rational next = (p.b + 1) * cur - p.b * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

double determinant_continuant_float(const TridiagonalParams& p) {
  const double b = p.b_float();
  double prev = 1.0, cur = b + 1.0;
  for (long k = 2; k <= p.n; ++k) {
    double next = (b + 1.0) * cur - b * prev;
    prev = cur;
    cur = next;
  }
  if (!std::isfinite(cur)) {
    throw std::overflow_error(
        "determinant_continuant_float: overflow, use log mode");
  }
  return cur;
}

LogValue determinant_continuant_log(const TridiagonalParams& p) {
  const ScaledFloat b(static_cast<long double>(p.b_float()));
  const ScaledFloat diag = b + ScaledFloat(1.0L);
  ScaledFloat prev(1.0L), cur = diag;
  for (long k = 2; k <= p.n; ++k) {
    ScaledFloat next = diag * cur - b * prev;
    prev = cur;
    cur = next;
  }
  return {cur.log_abs(), cur.sign() >= 0 ? +1 : -1};
}

double spectral_product(const TridiagonalParams& p) {
  double prod = 1.0;
  for (long k = 1; k <= p.n; ++k) prod *= eigenvalue(p, k);
  if (!std::isfinite(prod)) {
    throw std::overflow_error("spectral_product: overflow, use log mode");
  }
  return prod;
}

LogValue spectral_product_log(const TridiagonalParams& p) {
  const long double b = p.b_float();
  const long double sqb = sqrtl(b);
  long double acc = 0.0L;
  for (long k = 1; k <= p.n; ++k) {
    acc += logl(b + 1.0L + 2.0L * sqb * cos_pi_ratio(k, p.n + 1));
  }
  return {static_cast<double>(acc), +1};
}

std::pair<double, double> hyperbolic_product(long n, double x) {
  if (n < 1) throw std::domain_error("hyperbolic_product: n must be >= 1");
  if (!std::isfinite(x)) throw std::domain_error("hyperbolic_product: x not finite");

  // Each factor cosh x + cos(theta) is evaluated in the cancellation-free
  // form 2*(2 sinh^2(x/4) + 2 sin^2((n+1-k) pi / (4(n+1)))) * (cosh(x/2) +
  // sin(k pi / (2(n+1)))); near x = 0, theta = pi the naive form loses all
  // accuracy.
  const long double xh = static_cast<long double>(x) / 2.0L;
  const long double sh4 = sinhl(static_cast<long double>(x) / 4.0L);
  const long double ch2 = coshl(xh);
  ScaledFloat lhs(1.0L);
  for (long k = 1; k <= n; ++k) {
    long double s4 = sin_pi_ratio(n + 1 - k, 4 * (n + 1));
    long double s2 = sin_pi_ratio(k, 2 * (n + 1));
    lhs *= ScaledFloat(2.0L * (2.0L * sh4 * sh4 + 2.0L * s4 * s4) *
                       (ch2 + s2));
  }

  ScaledFloat rhs;
  const long double a = fabsl(static_cast<long double>(x));  // both sides even in x
  if (a == 0.0L) {
    rhs = ScaledFloat(static_cast<long double>(n + 1)) / ScaledFloat::pow2(n);
  } else if (static_cast<double>(a) * static_cast<double>(n + 1) < 600.0) {
    rhs = ScaledFloat(sinhl(static_cast<long double>(n + 1) * a)) /
          (ScaledFloat::pow2(n) * ScaledFloat(sinhl(a)));
  } else {
    // log sinh(z) = z - log 2 + log1p(-exp(-2z)) for large z
    double da = static_cast<double>(a);
    double log_num = static_cast<double>(n + 1) * da - M_LN2 +
                     std::log1p(-std::exp(-2.0 * static_cast<double>(n + 1) * da));
    double log_sinh_a = da - M_LN2 + std::log1p(-std::exp(-2.0 * da));
    rhs = ScaledFloat::from_log(log_num - static_cast<double>(n) * M_LN2 -
                                log_sinh_a);
  }
  return {lhs.to_double(), rhs.to_double()};
}

std::pair<double, double> det_bounds(const TridiagonalParams& p) {
  const long double sqb = sqrtl(static_cast<long double>(p.b_float()));
  const long double e = 2.0L * static_cast<long double>(p.n);
  double lower = static_cast<double>(powl(sqb - 1.0L, e));
  double upper = static_cast<double>(powl(sqb + 1.0L, e));
  if (p.b == 1) lower = 0.0;
  return {lower, upper};
}

std::pair<double, double> det_bounds_log(const TridiagonalParams& p) {
  const long double sqb = sqrtl(static_cast<long double>(p.b_float()));
  const double e = 2.0 * static_cast<double>(p.n);
  double lower = (p.b == 1)
                     ? -HUGE_VAL
                     : e * static_cast<double>(logl(fabsl(sqb - 1.0L)));
  double upper = e * static_cast<double>(logl(sqb + 1.0L));
  return {lower, upper};
}

}  // namespace repmat
