#include "repmat/tridiag.hpp"

#include <cmath>

namespace repmat {

std::vector<double> matvec_t(const TridiagonalParams& p,
                             std::span<const double> x) {
  if (static_cast<long>(x.size()) != p.n) {
    throw std::invalid_argument("matvec_t: vector length mismatch");
  }
  const double b = p.b_float();
  const double off = std::sqrt(b);
  const double diag = b + 1.0;
  const auto n = x.size();
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = diag * x[i];
    if (i > 0) acc += off * x[i - 1];
    if (i + 1 < n) acc += off * x[i + 1];
    y[i] = acc;
  }
  return y;
}

std::vector<Rational> matvec_t_exact(const TridiagonalParams& p,
                                     std::span<const Rational> x) {
  if (static_cast<long>(x.size()) != p.n) {
    throw std::invalid_argument("matvec_t_exact: vector length mismatch");
  }
  auto root = exact_sqrt(p.b);
  if (!root) {
    throw std::invalid_argument(
        "matvec_t_exact: b is not a perfect rational square");
  }
  const Rational off = *root;
  const Rational diag = p.b + 1;
  const auto n = x.size();
  std::vector<Rational> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational acc = diag * x[i];
    if (i > 0) acc += off * x[i - 1];
    if (i + 1 < n) acc += off * x[i + 1];
    y[i] = acc;
  }
  return y;
}

std::vector<Rational> weights_exact(const TridiagonalParams& p) {
  std::vector<Rational> w(static_cast<std::size_t>(p.n));
  const Rational binv = Rational(1) / p.b;
  w[0] = 1;
  for (long i = 1; i < p.n; ++i) {
    w[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i - 1)] * binv;
  }
  return w;
}

std::vector<double> weights_float(const TridiagonalParams& p) {
  std::vector<double> w(static_cast<std::size_t>(p.n));
  const double logb = std::log(p.b_float());
  for (long i = 0; i < p.n; ++i) {
    w[static_cast<std::size_t>(i)] = std::exp(-static_cast<double>(i) * logb);
  }
  return w;
}

std::vector<double> d_float(const TridiagonalParams& p) {
  std::vector<double> d(static_cast<std::size_t>(p.n));
  const double b = p.b_float();
  for (long i = 0; i < p.n; ++i) {
    d[static_cast<std::size_t>(i)] = std::pow(b, static_cast<double>(i) / 2.0);
  }
  return d;
}

std::vector<double> log_d(const TridiagonalParams& p) {
  std::vector<double> d(static_cast<std::size_t>(p.n));
  const double logb = std::log(p.b_float());
  for (long i = 0; i < p.n; ++i) {
    d[static_cast<std::size_t>(i)] = static_cast<double>(i) / 2.0 * logb;
  }
  return d;
}

std::optional<std::vector<Rational>> d_exact(const TridiagonalParams& p) {
  auto root = exact_sqrt(p.b);
  if (!root) return std::nullopt;
  std::vector<Rational> d(static_cast<std::size_t>(p.n));
  d[0] = 1;
  for (long i = 1; i < p.n; ++i) {
    d[static_cast<std::size_t>(i)] = d[static_cast<std::size_t>(i - 1)] * *root;
  }
  return d;
}

}  // namespace repmat
