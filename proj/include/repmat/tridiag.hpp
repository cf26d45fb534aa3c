#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "repmat/dense.hpp"
#include "repmat/scalar.hpp"

namespace repmat {

/// The pair (n, b) fully determines the matrix family: diagonal b+1,
/// superdiagonal 1, subdiagonal b. The matrix itself is never stored.
struct TridiagonalParams {
  long n = 1;
  Rational b = 1;

  TridiagonalParams(long n_, Rational b_) : n(n_), b(std::move(b_)) {
    if (n < 1) throw std::domain_error("TridiagonalParams: n must be >= 1");
    if (sgn(b) <= 0) throw std::domain_error("TridiagonalParams: b must be > 0");
  }

  double b_float() const { return b.get_d(); }

  template <class S>
  S base() const {
    if constexpr (std::is_same_v<S, Rational>) {
      return b;
    } else {
      return S(b_float());
    }
  }
};

template <class S>
struct RowEntries {
  std::optional<S> sub;  // absent in row 1
  S diag;
  std::optional<S> sup;  // absent in row n
};

template <class S>
RowEntries<S> row_entries(const TridiagonalParams& p, long i) {
  if (i < 1 || i > p.n) throw std::out_of_range("row_entries: index out of range");
  S b = p.base<S>();
  RowEntries<S> row{std::nullopt, b + S(1), std::nullopt};
  if (i > 1) row.sub = b;
  if (i < p.n) row.sup = S(1);
  return row;
}

/// y = V_n(b) * x in O(n).
template <class S>
std::vector<S> matvec_v(const TridiagonalParams& p, std::span<const S> x) {
  if (static_cast<long>(x.size()) != p.n) {
    throw std::invalid_argument("matvec_v: vector length mismatch");
  }
  const S b = p.base<S>();
  const S d = b + S(1);
  const auto n = x.size();
  std::vector<S> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    S acc = d * x[i];
    if (i > 0) acc += b * x[i - 1];
    if (i + 1 < n) acc += x[i + 1];
    y[i] = acc;
  }
  return y;
}

/// y = T_n(b) * x: the symmetrized form with off-diagonals sqrt(b).
/// Float-only, since sqrt(b) is generally irrational.
std::vector<double> matvec_t(const TridiagonalParams& p,
                             std::span<const double> x);

/// Exact T_n(b) product, available only when b is a perfect rational square.
/// Throws std::invalid_argument otherwise.
std::vector<Rational> matvec_t_exact(const TridiagonalParams& p,
                                     std::span<const Rational> x);

/// <x, y>_W = sum_i b^{-(i-1)} x_i y_i, the inner product under which V_n(b)
/// is self-adjoint.
template <class S>
S weighted_inner(const TridiagonalParams& p, std::span<const S> x,
                 std::span<const S> y) {
  if (static_cast<long>(x.size()) != p.n ||
      static_cast<long>(y.size()) != p.n) {
    throw std::invalid_argument("weighted_inner: vector length mismatch");
  }
  const S binv = S(1) / p.base<S>();
  S w(1), acc(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc += w * x[i] * y[i];
    w *= binv;
  }
  return acc;
}

/// Similarity/weight data of the diagonal change of basis:
/// d(i) = b^{(i-1)/2}, w(i) = d(i)^{-2} = b^{-(i-1)}.
std::vector<Rational> weights_exact(const TridiagonalParams& p);
std::vector<double> weights_float(const TridiagonalParams& p);

/// d(i) as floats; overflows to +inf for extreme (n, b), use log_d instead.
std::vector<double> d_float(const TridiagonalParams& p);

/// log d(i) = (i-1)/2 * log b, safe at any scale.
std::vector<double> log_d(const TridiagonalParams& p);

/// Exact d(i), available iff b is a perfect rational square.
std::optional<std::vector<Rational>> d_exact(const TridiagonalParams& p);

constexpr long kDefaultOracleCap = 256;

/// Dense V_n(b), oracle support only. Throws std::domain_error above the cap.
template <class S>
Matrix<S> dense_materialize(const TridiagonalParams& p,
                            long cap = kDefaultOracleCap) {
  if (p.n > cap) throw std::domain_error("dense_materialize: n above oracle cap");
  const S b = p.base<S>();
  const auto n = static_cast<std::size_t>(p.n);
  Matrix<S> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = b + S(1);
    if (i + 1 < n) {
      m(i, i + 1) = S(1);
      m(i + 1, i) = b;
    }
  }
  return m;
}

}  // namespace repmat
