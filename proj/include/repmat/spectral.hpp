#pragma once

#include <utility>
#include <vector>

#include "repmat/scalar.hpp"
#include "repmat/tridiag.hpp"

namespace repmat {

/// lambda_k = b + 1 + 2*sqrt(b)*cos(k*pi/(n+1)), 1 <= k <= n.
/// Strictly decreasing in k and always > (sqrt(b)-1)^2 >= 0.
double eigenvalue(const TridiagonalParams& p, long k);

/// All n eigenvalues in index order k = 1..n (hence descending). The paper
/// leaves the ordering open; this library fixes index order as canonical.
struct Spectrum {
  TridiagonalParams params;
  std::vector<double> values;  // values[k-1] = lambda_k
};

Spectrum spectrum(const TridiagonalParams& p);

/// Raw eigenvector v^{(k)}_j = b^{(j-1)/2} * sin(j*k*pi/(n+1)).
std::vector<double> eigenvector(const TridiagonalParams& p, long k);

/// Same vector divided by its W-norm sqrt(<v,v>_W).
std::vector<double> eigenvector_w_normalized(const TridiagonalParams& p, long k);

/// Log-domain form for scales where b^{(j-1)/2} overflows: the sine factor
/// carries the sign, the magnitude is stored as a log.
std::vector<LogValue> eigenvector_log(const TridiagonalParams& p, long k);

/// det V_n(b) by the continuant recurrence
/// Delta_k = (b+1)*Delta_{k-1} - b*Delta_{k-2}, Delta_0 = 1, Delta_1 = b+1.
Rational determinant_continuant_exact(const TridiagonalParams& p);
double determinant_continuant_float(const TridiagonalParams& p);  // throws on overflow
LogValue determinant_continuant_log(const TridiagonalParams& p);

/// prod_k lambda_k. The float form throws std::overflow_error when the
/// product leaves double range; the log form always succeeds.
double spectral_product(const TridiagonalParams& p);
LogValue spectral_product_log(const TridiagonalParams& p);

/// Both sides of the hyperbolic cosine product:
///   lhs = prod_k (cosh x + cos(k*pi/(n+1)))
///   rhs = sinh((n+1)x) / (2^n sinh x),  (n+1)/2^n at x = 0.
std::pair<double, double> hyperbolic_product(long n, double x);

/// ((sqrt(b)-1)^{2n}, (sqrt(b)+1)^{2n}); lower < det < upper strictly for
/// b != 1, lower = 0 (vacuous) at b = 1.
std::pair<double, double> det_bounds(const TridiagonalParams& p);

/// Logs of the same bounds, usable when the powers overflow doubles.
/// lower is -inf at b = 1.
std::pair<double, double> det_bounds_log(const TridiagonalParams& p);

}  // namespace repmat
