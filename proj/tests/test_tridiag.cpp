#include <doctest.h>

#include <cmath>

#include "repmat/oracle.hpp"
#include "repmat/tridiag.hpp"

using namespace repmat;

namespace {

std::vector<Rational> dense_matvec(const Matrix<Rational>& m,
                                   const std::vector<Rational>& x) {
  std::vector<Rational> y(x.size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

}  // namespace

TEST_CASE("row_entries matches the defining pattern") {
  TridiagonalParams one(1, Rational(2));
  auto r1 = row_entries<Rational>(one, 1);
  CHECK(!r1.sub.has_value());
  CHECK(r1.diag == 3);
  CHECK(!r1.sup.has_value());

  TridiagonalParams p(3, Rational(5));
  auto r2 = row_entries<Rational>(p, 2);
  CHECK(*r2.sub == 5);
  CHECK(r2.diag == 6);
  CHECK(*r2.sup == 1);
  auto r3 = row_entries<Rational>(p, 3);
  CHECK(*r3.sub == 5);
  CHECK(!r3.sup.has_value());

  CHECK_THROWS_AS(row_entries<Rational>(p, 0), std::out_of_range);
  CHECK_THROWS_AS(row_entries<Rational>(p, 4), std::out_of_range);
}

TEST_CASE("params validation") {
  CHECK_THROWS_AS(TridiagonalParams(0, Rational(2)), std::domain_error);
  CHECK_THROWS_AS(TridiagonalParams(3, Rational(0)), std::domain_error);
}

TEST_CASE("matvec_v examples and dense oracle agreement") {
  TridiagonalParams p2(2, Rational(2));
  std::vector<Rational> e1{1, 0};
  auto y = matvec_v<Rational>(p2, e1);
  CHECK(y == std::vector<Rational>{3, 2});

  TridiagonalParams p1(1, Rational(4));
  std::vector<Rational> x1{2};
  CHECK(matvec_v<Rational>(p1, x1) == std::vector<Rational>{10});

  for (long n : {1L, 2L, 5L, 16L, 64L}) {
    for (const char* bs : {"1/4", "1", "2", "10"}) {
      TridiagonalParams p(n, parse_rational(bs));
      std::vector<Rational> x(static_cast<std::size_t>(n));
      for (long i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = Rational(i - 2);
      auto fast = matvec_v<Rational>(p, x);
      auto dense = dense_matvec(dense_materialize<Rational>(p), x);
      CHECK(fast == dense);
      std::vector<Rational> zero(static_cast<std::size_t>(n), Rational(0));
      CHECK(matvec_v<Rational>(p, zero) == zero);
    }
  }
  std::vector<Rational> wrong{1, 2, 3};
  CHECK_THROWS_AS(matvec_v<Rational>(p2, wrong), std::invalid_argument);
}

TEST_CASE("matvec_t examples") {
  TridiagonalParams p(2, Rational(4));
  std::vector<double> e1{1.0, 0.0};
  auto y = matvec_t(p, e1);
  CHECK(y[0] == doctest::Approx(5.0));
  CHECK(y[1] == doctest::Approx(2.0));

  TridiagonalParams p3(3, Rational(1));
  std::vector<double> ones{1.0, 1.0, 1.0};
  auto y3 = matvec_t(p3, ones);
  CHECK(y3[0] == doctest::Approx(3.0));
  CHECK(y3[1] == doctest::Approx(4.0));
  CHECK(y3[2] == doctest::Approx(3.0));

  // Exact path only for perfect rational squares.
  TridiagonalParams psq(3, parse_rational("49/4"));
  std::vector<Rational> xr{1, 0, 0};
  auto yr = matvec_t_exact(psq, xr);
  CHECK(yr[0] == parse_rational("53/4"));
  CHECK(yr[1] == parse_rational("7/2"));
  TridiagonalParams pnot(3, Rational(2));
  CHECK_THROWS_AS(matvec_t_exact(pnot, xr), std::invalid_argument);
}

TEST_CASE("weighted_inner examples and bilinearity") {
  TridiagonalParams pb1(3, Rational(1));
  std::vector<Rational> x{1, 2, 3}, yv{4, 5, 6};
  CHECK(weighted_inner<Rational>(pb1, x, yv) == 4 + 10 + 18);  // W = identity

  TridiagonalParams p(2, Rational(2));
  std::vector<Rational> v{1, 2};
  CHECK(weighted_inner<Rational>(p, v, v) == 3);  // 1 + 4/2

  std::vector<Rational> zero{0, 0};
  CHECK(weighted_inner<Rational>(p, v, zero) == 0);
}

TEST_CASE("dense_materialize examples and cap") {
  TridiagonalParams p1(1, Rational(2));
  auto m1 = dense_materialize<Rational>(p1);
  CHECK(m1(0, 0) == 3);

  TridiagonalParams p2(2, Rational(2));
  auto m2 = dense_materialize<Rational>(p2);
  CHECK(m2(0, 0) == 3);
  CHECK(m2(0, 1) == 1);
  CHECK(m2(1, 0) == 2);
  CHECK(m2(1, 1) == 3);

  TridiagonalParams p3(3, Rational(1));
  auto m3 = dense_materialize<Rational>(p3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(m3(i, j) == m3(j, i));  // b = 1 is the symmetric case
    }
  }

  CHECK_THROWS_AS(dense_materialize<Rational>(TridiagonalParams(300, Rational(2))),
                  std::domain_error);
}

TEST_CASE("weights are the inverse squares of the similarity diagonal") {
  TridiagonalParams p(6, parse_rational("49/4"));
  auto w = weights_exact(p);
  auto d = d_exact(p);
  REQUIRE(d.has_value());
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(w[i] * (*d)[i] * (*d)[i] == 1);
  }
  CHECK(!d_exact(TridiagonalParams(4, Rational(2))).has_value());

  auto ld = log_d(p);
  auto df = d_float(p);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(std::log(df[i]) == doctest::Approx(ld[i]).epsilon(1e-12));
  }
}

TEST_CASE("weighted self-adjointness, exact") {
  for (long n : {1L, 2L, 7L, 16L}) {
    for (const char* bs : {"1/4", "999/1000", "2", "49/4"}) {
      TridiagonalParams p(n, parse_rational(bs));
      auto v = dense_materialize<Rational>(p);
      auto w = weights_exact(p);
      const auto un = static_cast<std::size_t>(n);
      Matrix<Rational> vt(un, un), wm(un, un);
      for (std::size_t i = 0; i < un; ++i) {
        wm(i, i) = w[i];
        for (std::size_t j = 0; j < un; ++j) vt(i, j) = v(j, i);
      }
      CHECK(vt * wm == wm * v);
    }
  }
}

TEST_CASE("similarity D^-1 V D = T") {
  // Exact branch: b a perfect rational square.
  TridiagonalParams psq(8, parse_rational("49/4"));
  auto d = *d_exact(psq);
  auto root = *exact_sqrt(psq.b);
  for (std::size_t i = 0; i + 1 < 8; ++i) {
    CHECK(d[i + 1] / d[i] == root);
    CHECK(psq.b * d[i] / d[i + 1] == root);
  }
  // Float branch over a small grid.
  for (long n : {2L, 16L, 64L}) {
    for (const char* bs : {"1/4", "1", "2", "10"}) {
      TridiagonalParams p(n, parse_rational(bs));
      double b = p.b_float();
      double sq = std::sqrt(b);
      auto df = d_float(p);
      for (long i = 0; i + 1 < n; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        CHECK(std::fabs(df[ui + 1] / df[ui] - sq) <= 1e-12 * (b + 1.0));
        CHECK(std::fabs(b * df[ui] / df[ui + 1] - sq) <= 1e-12 * (b + 1.0));
      }
    }
  }
}
