#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace repmat {

/// Exact rational scalar. All exact-mode computation goes through GMP.
using Rational = mpq_class;

/// Parse "p/q", an integer, or a decimal literal ("1.5" -> 3/2) into an
/// exact rational. Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

/// Rational square root, when it exists (num and den both perfect squares).
std::optional<Rational> exact_sqrt(const Rational& value);

/// Natural log of a positive rational, accurate to a few ulp regardless of
/// magnitude (works far beyond double range).
double log_of_rational(const Rational& value);

/// Positive quantity in the log domain. sign is kept for API symmetry with
/// signed log-domain values elsewhere; every producer in this library emits +1.
struct LogValue {
  double log_magnitude = 0.0;
  int sign = +1;
};

/// Floating value with an explicit base-2 exponent: value = frac * 2^exp2,
/// normalized so 0.5 <= |frac| < 1 (or frac == 0). The mantissa is a long
/// double, so sums of thousands of terms keep ~18 significant digits while
/// the exponent range is unbounded.
class ScaledFloat {
 public:
  ScaledFloat() = default;
  ScaledFloat(long double v) { assign(v); }  // NOLINT: implicit by intent

  static ScaledFloat from_log(double log_magnitude, int sign = +1);

  /// Exact 2^e for any e.
  static ScaledFloat pow2(long long e) {
    ScaledFloat r;
    r.frac_ = 0.5L;
    r.exp2_ = e + 1;
    return r;
  }

  long double frac() const { return frac_; }
  long long exp2() const { return exp2_; }
  bool is_zero() const { return frac_ == 0.0L; }
  int sign() const { return frac_ > 0 ? 1 : (frac_ < 0 ? -1 : 0); }

  /// Natural log of |value|; -inf for zero.
  double log_abs() const;

  /// Convert to double; overflows to +/-inf, underflows to 0.
  double to_double() const;

  ScaledFloat operator-() const;
  ScaledFloat& operator+=(const ScaledFloat& o);
  ScaledFloat& operator-=(const ScaledFloat& o) { return *this += -o; }
  ScaledFloat& operator*=(const ScaledFloat& o);
  ScaledFloat& operator/=(const ScaledFloat& o);

  friend ScaledFloat operator+(ScaledFloat a, const ScaledFloat& b) { return a += b; }
  friend ScaledFloat operator-(ScaledFloat a, const ScaledFloat& b) { return a -= b; }
  friend ScaledFloat operator*(ScaledFloat a, const ScaledFloat& b) { return a *= b; }
  friend ScaledFloat operator/(ScaledFloat a, const ScaledFloat& b) { return a /= b; }

 private:
  void assign(long double v);
  void normalize();

  long double frac_ = 0.0L;
  long long exp2_ = 0;
};

/// sin(num * pi / den) with the quadrant reduction done in integer
/// arithmetic, so the result is accurate to ~1 ulp even for num >> den.
long double sin_pi_ratio(long long num, long long den);

/// cos(num * pi / den), same reduction scheme.
long double cos_pi_ratio(long long num, long long den);

}  // namespace repmat
