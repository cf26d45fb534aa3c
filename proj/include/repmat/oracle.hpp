#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "repmat/dense.hpp"
#include "repmat/scalar.hpp"
#include "repmat/tridiag.hpp"

namespace repmat {

namespace detail {

template <class S>
S abs_value(const S& x) {
  if constexpr (std::is_same_v<S, Rational>) {
    return abs(x);
  } else {
    return std::fabs(x);
  }
}

}  // namespace detail

/// Determinant by Gaussian elimination with magnitude pivoting. Exact (no
/// rounding) over Rational; singular matrices return 0.
template <class S>
S dense_lu_det(Matrix<S> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("dense_lu_det: not square");
  const std::size_t n = m.rows();
  S det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (detail::abs_value(m(r, col)) > detail::abs_value(m(pivot, col))) pivot = r;
    }
    if (m(pivot, col) == S(0)) return S(0);
    if (pivot != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      S f = m(r, col) / m(col, col);
      if (f == S(0)) continue;
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

/// Inverse by Gauss-Jordan with magnitude pivoting. Throws
/// std::domain_error on a singular input.
template <class S>
Matrix<S> dense_inverse(Matrix<S> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("dense_inverse: not square");
  const std::size_t n = m.rows();
  Matrix<S> inv = Matrix<S>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (detail::abs_value(m(r, col)) > detail::abs_value(m(pivot, col))) pivot = r;
    }
    if (m(pivot, col) == S(0)) throw std::domain_error("dense_inverse: singular");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(m(pivot, c), m(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    S p = m(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      m(col, c) /= p;
      inv(col, c) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      S f = m(r, col);
      if (f == S(0)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        m(r, c) -= f * m(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

/// All eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations,
/// sorted ascending. Throws std::invalid_argument on an asymmetric input.
std::vector<double> dense_sym_eigs(const Matrix<double>& m);

/// One check at one grid point.
struct VerificationReport {
  std::string check;
  long n = 0;
  std::string b;      // canonical rational text
  std::string mode;   // exact | float | log
  bool pass = false;
  double worst_abs = 0.0;
  double worst_rel = 0.0;
  double tolerance = 0.0;
};

/// Line-oriented serialization consumed by the CLI.
std::string report_line(const VerificationReport& r);

struct OracleCaps {
  long dense_cap = 256;  // dense float checks
  long exact_cap = 64;   // dense exact rational checks
};

std::vector<std::string> known_checks();
std::vector<long> default_grid_sizes();
std::vector<Rational> default_grid_bases();

/// Run the named checks over the grid; reports come back sorted by
/// (check, n, b) so concurrent evaluation cannot change the output.
std::vector<VerificationReport> run_verification(
    const std::vector<std::pair<long, Rational>>& grid,
    const std::vector<std::string>& checks, const OracleCaps& caps = {});

}  // namespace repmat
