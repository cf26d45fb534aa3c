#include "repmat/scalar.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace repmat {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = (s[0] == '-');
    s.erase(0, 1);
  }

  Rational result;
  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed rational: '" + text + "'");
    }
    mpz_class d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    result = Rational(mpz_class(num, 10), d);
  } else if (dot != std::string::npos) {
    std::string intpart = s.substr(0, dot);
    std::string fracpart = s.substr(dot + 1);
    if (intpart.empty()) intpart = "0";
    if (!all_digits(intpart) || (!fracpart.empty() && !all_digits(fracpart))) {
      throw std::invalid_argument("malformed decimal: '" + text + "'");
    }
    mpz_class num(intpart + fracpart, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fracpart.size());
    result = Rational(num, den);
  } else {
    if (!all_digits(s)) {
      throw std::invalid_argument("malformed number: '" + text + "'");
    }
    result = Rational(mpz_class(s, 10));
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

std::optional<Rational> exact_sqrt(const Rational& value) {
  if (sgn(value) < 0) return std::nullopt;
  const mpz_class& num = value.get_num();
  const mpz_class& den = value.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational root(rn, rd);
  root.canonicalize();
  return root;
}

double log_of_rational(const Rational& value) {
  if (sgn(value) <= 0) {
    throw std::domain_error("log_of_rational requires a positive value");
  }
  signed long en = 0, ed = 0;
  double dn = mpz_get_d_2exp(&en, value.get_num().get_mpz_t());
  double dd = mpz_get_d_2exp(&ed, value.get_den().get_mpz_t());
  return (std::log(dn) - std::log(dd)) +
         static_cast<double>(en - ed) * M_LN2;
}

ScaledFloat ScaledFloat::from_log(double log_magnitude, int sign) {
  if (sign == 0) return ScaledFloat();
  // Split the log between fraction and exponent to stay in range.
  double e2 = log_magnitude / M_LN2;
  long long whole = static_cast<long long>(std::floor(e2));
  ScaledFloat r;
  r.frac_ = static_cast<long double>(sign) *
            std::exp2(static_cast<long double>(e2 - static_cast<double>(whole)));
  r.exp2_ = whole;
  r.normalize();
  return r;
}

void ScaledFloat::assign(long double v) {
  frac_ = v;
  exp2_ = 0;
  normalize();
}

void ScaledFloat::normalize() {
  if (frac_ == 0.0L) {
    exp2_ = 0;
    return;
  }
  int e = 0;
  frac_ = frexpl(frac_, &e);
  exp2_ += e;
}

double ScaledFloat::log_abs() const {
  if (is_zero()) return -HUGE_VAL;
  return static_cast<double>(logl(fabsl(frac_))) +
         static_cast<double>(exp2_) * M_LN2;
}

double ScaledFloat::to_double() const {
  if (is_zero()) return 0.0;
  if (exp2_ > 1100) return frac_ > 0 ? HUGE_VAL : -HUGE_VAL;
  if (exp2_ < -1100) return 0.0;
  return static_cast<double>(ldexpl(frac_, static_cast<int>(exp2_)));
}

ScaledFloat ScaledFloat::operator-() const {
  ScaledFloat r = *this;
  r.frac_ = -r.frac_;
  return r;
}

ScaledFloat& ScaledFloat::operator+=(const ScaledFloat& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  long long diff = exp2_ - o.exp2_;
  if (diff > 80) return *this;  // o is below one ulp of *this
  if (diff < -80) {
    *this = o;
    return *this;
  }
  frac_ = frac_ + ldexpl(o.frac_, static_cast<int>(-diff));
  normalize();
  return *this;
}

ScaledFloat& ScaledFloat::operator*=(const ScaledFloat& o) {
  if (is_zero() || o.is_zero()) {
    *this = ScaledFloat();
    return *this;
  }
  frac_ *= o.frac_;
  exp2_ += o.exp2_;
  normalize();
  return *this;
}

ScaledFloat& ScaledFloat::operator/=(const ScaledFloat& o) {
  if (o.is_zero()) throw std::domain_error("ScaledFloat division by zero");
  if (is_zero()) return *this;
  frac_ /= o.frac_;
  exp2_ -= o.exp2_;
  normalize();
  return *this;
}

long double sin_pi_ratio(long long num, long long den) {
  if (den <= 0) throw std::domain_error("sin_pi_ratio: den must be positive");
  long long r = num % (2 * den);
  if (r < 0) r += 2 * den;
  long double sign = 1.0L;
  if (r >= den) {  // sin(pi + t) = -sin(t)
    sign = -1.0L;
    r -= den;
  }
  if (2 * r > den) r = den - r;  // sin(pi - t) = sin(t)
  // Now 0 <= r <= den/2, argument in [0, pi/2].
  return sign * sinl(M_PIl * static_cast<long double>(r) /
                     static_cast<long double>(den));
}

long double cos_pi_ratio(long long num, long long den) {
  if (den <= 0) throw std::domain_error("cos_pi_ratio: den must be positive");
  long long r = num % (2 * den);
  if (r < 0) r += 2 * den;
  if (r > den) r = 2 * den - r;  // cos is even and 2*pi periodic
  // r in [0, den]; fold across pi/2 so the argument stays small.
  if (2 * r <= den) {
    return cosl(M_PIl * static_cast<long double>(r) /
                static_cast<long double>(den));
  }
  return -cosl(M_PIl * static_cast<long double>(den - r) /
               static_cast<long double>(den));
}

}  // namespace repmat
