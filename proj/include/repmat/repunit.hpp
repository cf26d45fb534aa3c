#pragma once

#include <vector>

#include "repmat/scalar.hpp"

namespace repmat {

/// R_m(b) = 1 + b + ... + b^{m-1}, exactly. R_m(1) = m by continuous
/// extension. Throws std::domain_error for m < 1 or b <= 0.
Rational repunit_exact(long m, const Rational& b);

/// Floating-point R_m(b). Uses the closed form (b^m - 1)/(b - 1) away from
/// b = 1 and Horner accumulation within 2^-20 of it, so there is no
/// cancellation near the removable singularity. Throws std::overflow_error
/// when the value exceeds double range.
double repunit_float(long m, double b);

/// log R_m(b); never overflows. The sign is always +1.
LogValue repunit_log(long m, double b);

/// Table of R_0(b) .. R_max_m(b) (R_0 = 0) via the recurrence
/// R_m = b*R_{m-1} + 1, O(max_m) total.
std::vector<Rational> repunit_table_exact(long max_m, const Rational& b);

/// Same table in overflow-safe scaled floating point.
std::vector<ScaledFloat> repunit_table_scaled(long max_m, double b);

}  // namespace repmat
