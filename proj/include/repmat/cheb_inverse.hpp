#pragma once

#include <span>
#include <utility>
#include <vector>

#include "repmat/dense.hpp"
#include "repmat/repunit.hpp"
#include "repmat/scalar.hpp"
#include "repmat/tridiag.hpp"

namespace repmat {

/// Chebyshev polynomial of the second kind, U_0 = 1, U_1 = 2x,
/// U_{m+1} = 2x U_m - U_{m-1}. O(m).
double chebyshev_u(long m, double x);
Rational chebyshev_u_exact(long m, const Rational& x);

/// Both sides of U_m(x_b) = b^{-m/2} R_{m+1}(b) with x_b = (b+1)/(2 sqrt b).
std::pair<double, double> cheb_repunit_identity(long m, double b);

/// Exact form, available when b is a perfect rational square; the two
/// components are equal as rationals. Throws std::invalid_argument otherwise.
std::pair<Rational, Rational> cheb_repunit_identity_exact(long m,
                                                          const Rational& b);

/// One entry of V_n(b)^{-1} with its structure exposed:
///   i <= j:  (-1)^{i+j} R_i R_{n-j+1} / R_{n+1}
///   i >= j:  (-1)^{i+j} b^{i-j} R_j R_{n-i+1} / R_{n+1}
template <class S>
struct InverseEntry {
  long i = 0, j = 0;
  int sign = +1;        // (-1)^{i+j}
  long b_power = 0;     // i-j when i >= j, else 0
  S left_repunit;       // R_i (i <= j) or R_j (i >= j)
  S right_repunit;      // R_{n-j+1} (i <= j) or R_{n-i+1} (i >= j)
  S denominator;        // R_{n+1}
  S value;
};

InverseEntry<Rational> inverse_entry_exact(const TridiagonalParams& p, long i,
                                           long j);
InverseEntry<double> inverse_entry_float(const TridiagonalParams& p, long i,
                                         long j);

/// Full V_n(b)^{-1} assembled from the closed-form entries, O(n^2) with a
/// shared repunit table. Oracle / acceptance support.
Matrix<Rational> inverse_dense_exact(const TridiagonalParams& p);

/// y = V_n(b)^{-1} r in O(n) total: one prefix sum
///   s_i = sum_{j<=i} (-1)^j b^{-j} R_j r_j,
/// one suffix sum
///   t_i = sum_{j>=i} (-1)^j R_{n-j+1} r_j,
/// assembled as y_i = ((-1)^i / R_{n+1}) (b^i R_{n-i+1} s_{i-1} + R_i t_i).
/// Works over any field scalar; exact over Rational.
template <class S>
std::vector<S> apply_inverse_field(long n, const S& b, std::span<const S> r) {
  if (static_cast<long>(r.size()) != n) {
    throw std::invalid_argument("apply_inverse: vector length mismatch");
  }
  const auto un = static_cast<std::size_t>(n);
  // R[m] = R_m(b), m = 0..n+1
  std::vector<S> rep(un + 2);
  rep[0] = S(0);
  for (std::size_t m = 1; m <= un + 1; ++m) rep[m] = b * rep[m - 1] + S(1);
  const S binv = S(1) / b;

  std::vector<S> s(un + 1), t(un + 2);
  s[0] = S(0);
  {
    S bp = S(1);  // b^{-j}, sign folded in below
    int sg = 1;
    for (std::size_t j = 1; j <= un; ++j) {
      bp *= binv;
      sg = -sg;
      S term = bp * rep[j] * r[j - 1];
      s[j] = s[j - 1];
      if (sg > 0) {
        s[j] += term;
      } else {
        s[j] -= term;
      }
    }
  }
  t[un + 1] = S(0);
  for (std::size_t j = un; j >= 1; --j) {
    S term = rep[un - j + 1] * r[j - 1];
    t[j] = t[j + 1];
    if (j % 2 == 0) {
      t[j] += term;
    } else {
      t[j] -= term;
    }
  }

  std::vector<S> y(un);
  S bpow = S(1);  // b^i
  for (std::size_t i = 1; i <= un; ++i) {
    bpow *= b;
    S acc = bpow * rep[un - i + 1] * s[i - 1] + rep[i] * t[i];
    acc = acc / rep[un + 1];
    y[i - 1] = (i % 2 == 0) ? acc : -acc;
  }
  return y;
}

std::vector<Rational> apply_inverse_exact(const TridiagonalParams& p,
                                          std::span<const Rational> r);

/// Float-mode apply-inverse. The raw prefix sums mix b^{-j} underflow with
/// b^i overflow, so all intermediates carry an explicit base-2 exponent.
std::vector<double> apply_inverse_float(const TridiagonalParams& p,
                                        std::span<const double> r);

/// Classical elimination solver for V_n(b) y = r, O(n), no pivoting: every
/// leading principal minor is a repunit, hence positive.
template <class S>
std::vector<S> thomas_solve_field(long n, const S& b, std::span<const S> r) {
  if (static_cast<long>(r.size()) != n) {
    throw std::invalid_argument("thomas_solve: vector length mismatch");
  }
  const auto un = static_cast<std::size_t>(n);
  const S diag = b + S(1);
  std::vector<S> c(un), d(un);
  S denom = diag;
  // Pivots are ratios of consecutive repunits, so they must stay positive;
  // asserted rather than assumed.
  if (!(denom > S(0))) throw std::runtime_error("thomas_solve: nonpositive pivot");
  c[0] = S(1) / denom;
  d[0] = r[0] / denom;
  for (std::size_t i = 1; i < un; ++i) {
    denom = diag - b * c[i - 1];
    if (!(denom > S(0))) throw std::runtime_error("thomas_solve: nonpositive pivot");
    if (i + 1 < un) c[i] = S(1) / denom;
    d[i] = (r[i] - b * d[i - 1]) / denom;
  }
  std::vector<S> y(un);
  y[un - 1] = d[un - 1];
  for (std::size_t i = un - 1; i >= 1; --i) {
    y[i - 1] = d[i - 1] - c[i - 1] * y[i];
  }
  return y;
}

std::vector<Rational> thomas_solve_exact(const TridiagonalParams& p,
                                         std::span<const Rational> r);
std::vector<double> thomas_solve_float(const TridiagonalParams& p,
                                       std::span<const double> r);

}  // namespace repmat
