#include <doctest.h>

#include <cmath>

#include "repmat/cheb_inverse.hpp"
#include "repmat/oracle.hpp"

using namespace repmat;

namespace {

const char* kGridBases[] = {"1/4", "1/2", "999/1000", "1",
                            "1001/1000", "2", "10", "49/4"};

std::vector<Rational> rhs_exact(long n) {
  std::vector<Rational> r(static_cast<std::size_t>(n));
  for (long i = 1; i <= n; ++i) {
    r[static_cast<std::size_t>(i - 1)] = (5 * i) % 9 - 4;
  }
  return r;
}

std::vector<double> to_float(const std::vector<Rational>& r) {
  std::vector<double> f(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) f[i] = r[i].get_d();
  return f;
}

/// Field scalar that counts arithmetic operations, for complexity asserts.
struct Counted {
  double v = 0.0;
  static inline long ops = 0;
  Counted() = default;
  Counted(double x) : v(x) {}  // NOLINT
  Counted(int x) : v(x) {}     // NOLINT
  Counted operator-() const { ++ops; return Counted(-v); }
  Counted& operator+=(const Counted& o) { ++ops; v += o.v; return *this; }
  Counted& operator-=(const Counted& o) { ++ops; v -= o.v; return *this; }
  Counted& operator*=(const Counted& o) { ++ops; v *= o.v; return *this; }
  friend Counted operator+(Counted a, const Counted& b) { return a += b; }
  friend Counted operator-(Counted a, const Counted& b) { return a -= b; }
  friend Counted operator*(Counted a, const Counted& b) { return a *= b; }
  friend Counted operator/(Counted a, const Counted& b) {
    ++ops;
    a.v /= b.v;
    return a;
  }
  friend bool operator==(const Counted& a, const Counted& b) { return a.v == b.v; }
  friend bool operator>(const Counted& a, const Counted& b) { return a.v > b.v; }
};

}  // namespace

TEST_CASE("chebyshev_u recurrence values") {
  CHECK(chebyshev_u(0, 0.7) == 1.0);
  CHECK(chebyshev_u(1, 0.7) == doctest::Approx(1.4));
  CHECK(chebyshev_u(2, 1.0) == doctest::Approx(3.0));  // U_m(1) = m+1
  CHECK(chebyshev_u(2, 1.25) == doctest::Approx(5.25));  // 2*1.25*2.5 - 1
  CHECK_THROWS_AS(chebyshev_u(-1, 0.5), std::domain_error);

  Rational x = parse_rational("5/4");
  CHECK(chebyshev_u_exact(2, x) == parse_rational("21/4"));
  for (long mm = 0; mm <= 20; ++mm) {
    CHECK(chebyshev_u_exact(mm, Rational(1)) == mm + 1);
  }
}

TEST_CASE("chebyshev-repunit identity") {
  auto [l0, r0] = cheb_repunit_identity(0, 3.3);
  CHECK(l0 == 1.0);
  CHECK(r0 == doctest::Approx(1.0));

  auto [l2, r2] = cheb_repunit_identity(2, 4.0);
  CHECK(l2 == doctest::Approx(5.25).epsilon(1e-13));
  CHECK(r2 == doctest::Approx(21.0 / 4.0).epsilon(1e-13));

  auto [l5, r5] = cheb_repunit_identity(5, 1.0);
  CHECK(l5 == doctest::Approx(6.0).epsilon(1e-13));
  CHECK(r5 == doctest::Approx(6.0).epsilon(1e-13));

  for (long mm : {0L, 1L, 7L, 31L, 64L}) {
    for (const char* bs : kGridBases) {
      double b = parse_rational(bs).get_d();
      auto [lhs, rhs] = cheb_repunit_identity(mm, b);
      CHECK(std::fabs(lhs - rhs) <= 1e-11 * std::fabs(rhs));
    }
  }
  // Exact equality on the perfect-square branch.
  for (long mm : {0L, 3L, 17L, 64L}) {
    auto [le, re] = cheb_repunit_identity_exact(mm, parse_rational("49/4"));
    CHECK(le == re);
  }
  CHECK_THROWS_AS(cheb_repunit_identity_exact(3, Rational(2)),
                  std::invalid_argument);
}

TEST_CASE("inverse entries match the dense oracle and expose structure") {
  TridiagonalParams p1(1, parse_rational("7/2"));
  CHECK(inverse_entry_exact(p1, 1, 1).value == parse_rational("2/9"));

  TridiagonalParams p(2, Rational(2));
  auto e21 = inverse_entry_exact(p, 2, 1);
  CHECK(e21.value == parse_rational("-2/7"));
  CHECK(e21.sign == -1);
  CHECK(e21.b_power == 1);
  CHECK(e21.left_repunit == 1);       // R_1
  CHECK(e21.right_repunit == 1);      // R_{n-i+1} = R_1
  CHECK(e21.denominator == 7);        // R_3(2)
  CHECK(inverse_entry_exact(p, 1, 1).value == parse_rational("3/7"));

  auto ef = inverse_entry_float(p, 2, 1);
  CHECK(ef.value == doctest::Approx(-2.0 / 7.0).epsilon(1e-14));

  CHECK_THROWS_AS(inverse_entry_exact(p, 0, 1), std::out_of_range);
  CHECK_THROWS_AS(inverse_entry_exact(p, 1, 3), std::out_of_range);

  // Full dense comparison against the Gauss-Jordan oracle.
  for (long n : {1L, 2L, 5L, 12L}) {
    for (const char* bs : {"1/4", "1", "2", "49/4"}) {
      TridiagonalParams pp(n, parse_rational(bs));
      auto closed = inverse_dense_exact(pp);
      auto oracle = dense_inverse(dense_materialize<Rational>(pp));
      CHECK(closed == oracle);
      for (long i = 1; i <= n; ++i) {
        for (long j = 1; j <= n; ++j) {
          CHECK(inverse_entry_exact(pp, i, j).value ==
                closed(static_cast<std::size_t>(i - 1),
                       static_cast<std::size_t>(j - 1)));
        }
      }
    }
  }
}

TEST_CASE("two-branch symmetry of the inverse formula") {
  TridiagonalParams p(9, parse_rational("5/3"));
  std::vector<Rational> bpow(10);
  bpow[0] = 1;
  for (int e = 1; e <= 9; ++e) bpow[static_cast<std::size_t>(e)] = bpow[static_cast<std::size_t>(e - 1)] * p.b;
  for (long i = 1; i <= 9; ++i) {
    for (long j = i; j <= 9; ++j) {
      CHECK(bpow[static_cast<std::size_t>(j - i)] *
                inverse_entry_exact(p, i, j).value ==
            inverse_entry_exact(p, j, i).value);
    }
  }
}

TEST_CASE("apply_inverse examples and exact round trip") {
  TridiagonalParams p(2, Rational(2));
  std::vector<Rational> r{1, 0};
  auto y = apply_inverse_exact(p, r);
  CHECK(y[0] == parse_rational("3/7"));
  CHECK(y[1] == parse_rational("-2/7"));

  TridiagonalParams p1(1, Rational(4));
  std::vector<Rational> r1{10};
  CHECK(apply_inverse_exact(p1, r1)[0] == 2);

  for (long n : {1L, 2L, 9L, 33L}) {
    for (const char* bs : kGridBases) {
      TridiagonalParams pp(n, parse_rational(bs));
      auto x = rhs_exact(n);
      auto rr = matvec_v<Rational>(pp, x);
      CHECK(apply_inverse_exact(pp, rr) == x);  // exact inverse relation
      // apply_inverse reproduces entrywise dense multiplication bit-for-bit
      auto inv = inverse_dense_exact(pp);
      auto via_entries = std::vector<Rational>(static_cast<std::size_t>(n));
      for (std::size_t i = 0; i < via_entries.size(); ++i) {
        Rational acc = 0;
        for (std::size_t j = 0; j < via_entries.size(); ++j) {
          acc += inv(i, j) * rr[j];
        }
        via_entries[i] = acc;
      }
      CHECK(apply_inverse_exact(pp, rr) == via_entries);
    }
  }
  std::vector<Rational> wrong{1, 2, 3};
  CHECK_THROWS_AS(apply_inverse_exact(p, wrong), std::invalid_argument);
}

TEST_CASE("thomas_solve examples") {
  TridiagonalParams p1(1, parse_rational("5/2"));
  std::vector<Rational> c{7};
  CHECK(thomas_solve_exact(p1, c)[0] == 2);

  TridiagonalParams p(2, Rational(2));
  std::vector<Rational> r{1, 0};
  auto y = thomas_solve_exact(p, r);
  CHECK(y[0] == parse_rational("3/7"));
  CHECK(y[1] == parse_rational("-2/7"));

  TridiagonalParams p3(3, Rational(1));
  std::vector<double> rf{1.0, 1.0, 1.0};
  auto yf = thomas_solve_float(p3, rf);
  auto inv = dense_inverse(dense_materialize<double>(p3));
  for (std::size_t i = 0; i < 3; ++i) {
    double expected = inv(i, 0) + inv(i, 1) + inv(i, 2);
    CHECK(yf[i] == doctest::Approx(expected).epsilon(1e-12));
  }
  std::vector<double> wrong{1.0};
  CHECK_THROWS_AS(thomas_solve_float(p3, wrong), std::invalid_argument);
}

TEST_CASE("solver agreement up to n = 1024") {
  for (long n : {64L, 257L, 1024L}) {
    for (const char* bs : kGridBases) {
      TridiagonalParams p(n, parse_rational(bs));
      auto rf = to_float(rhs_exact(n));
      auto yt = thomas_solve_float(p, rf);
      auto ya = apply_inverse_float(p, rf);
      double ymax = 0.0, dmax = 0.0;
      for (std::size_t i = 0; i < rf.size(); ++i) {
        ymax = std::max(ymax, std::fabs(yt[i]));
        dmax = std::max(dmax, std::fabs(yt[i] - ya[i]));
      }
      CHECK(dmax <= 1e-10 * ymax);
    }
  }
  // Exact-mode agreement is bit-for-bit.
  for (long n : {3L, 17L, 64L}) {
    TridiagonalParams p(n, parse_rational("1001/1000"));
    auto r = rhs_exact(n);
    CHECK(thomas_solve_exact(p, r) == apply_inverse_exact(p, r));
  }
}

TEST_CASE("both solvers run in O(n) scalar operations") {
  auto count_thomas = [](long n) {
    std::vector<Counted> r(static_cast<std::size_t>(n), Counted(1.0));
    Counted::ops = 0;
    thomas_solve_field<Counted>(n, Counted(2.0), r);
    return Counted::ops;
  };
  auto count_apply = [](long n) {
    std::vector<Counted> r(static_cast<std::size_t>(n), Counted(1.0));
    Counted::ops = 0;
    apply_inverse_field<Counted>(n, Counted(2.0), r);
    return Counted::ops;
  };
  long t256 = count_thomas(256), t512 = count_thomas(512);
  long a256 = count_apply(256), a512 = count_apply(512);
  CHECK(t256 <= 8 * 256);
  CHECK(a256 <= 16 * 256);
  // Doubling n roughly doubles the work: linear, not quadratic.
  CHECK(t512 <= 2 * t256 + 16);
  CHECK(a512 <= 2 * a256 + 32);
}
