#include <doctest.h>

#include <cmath>

#include "fhdet/errors.hpp"
#include "fhdet/harness.hpp"
#include "fhdet/symbol.hpp"

using namespace fhdet;

namespace {

FourierSeries series(std::initializer_list<std::pair<int, Complex>> terms) {
  std::vector<std::pair<int, Complex>> v(terms);
  return FourierSeries::from_terms(v);
}

double max_error(const FourierCoefficients& c, auto&& exact) {
  double e = 0.0;
  for (int j = c.j_min(); j <= c.j_max(); ++j) e = std::max(e, std::abs(c(j) - exact(j)));
  return e;
}

}  // namespace

TEST_CASE("FourierSeries storage and evaluation") {
  FourierSeries v;
  CHECK(v.is_zero());
  v.set(2, {0.5, 0.1});
  v.set(-1, 0.25);
  CHECK(v.order() == 2);
  CHECK(v[2] == Complex(0.5, 0.1));
  CHECK(v[5] == Complex{});
  const double theta = 0.7;
  const Complex expected = Complex(0.5, 0.1) * std::polar(1.0, 2 * theta) + 0.25 * std::polar(1.0, -theta);
  CHECK(std::abs(v.evaluate(theta) - expected) < 1e-15);
  CHECK(std::abs(v.evaluate(std::polar(1.0, theta)) - expected) < 1e-15);
  CHECK_FALSE(v.is_even());
  CHECK(series({{1, 0.3}, {-1, 0.3}}).is_even());
  CHECK_THROWS_AS(v.set(1, std::nan("")), InvariantError);
}

TEST_CASE("FHSymbol normalizes its point list") {
  const FHSymbol f({}, {{3.0, 0.2, 0.0}, {1.0, 0.0, 0.1}});
  REQUIRE(f.size() == 3);
  CHECK(f[0].theta == 0.0);
  CHECK_FALSE(f[0].is_singular());
  CHECK(f[1].theta == 1.0);
  CHECK(f.singular_indices() == std::vector<std::size_t>{1, 2});
  CHECK_THROWS_AS(FHSymbol({}, {{7.0, 0.1, 0.0}}), DomainError);
  CHECK_THROWS_AS(FHSymbol({}, {{1.0, -0.5, 0.0}}), InvariantError);
  CHECK_THROWS_AS(FHSymbol({}, {{1.0, 0.1, 0.0}, {1.0, 0.2, 0.0}}), InvariantError);
}

TEST_CASE("symbol values") {
  const FHSymbol bt = basor_tracy_symbol();
  CHECK(std::abs(bt.value(1.0) - Complex(0, -1)) < 1e-15);
  CHECK(std::abs(bt.value(4.0) - Complex(0, 1)) < 1e-15);

  const FHSymbol tri = tridiagonal_symbol();
  for (double t : {0.3, 1.5, 3.0, 5.9}) {
    CHECK(std::abs(tri.value(t) - std::norm(std::polar(1.0, t) - 1.0)) < 1e-14);
  }
  CHECK(tri.value(0.0) == Complex{});

  const FHSymbol singular({}, {{2.0, -0.25, 0.0}});
  CHECK_THROWS_AS(singular.value(2.0), DomainError);
  CHECK_THROWS_AS(tri.value(-0.1), DomainError);

  // a jump at 0 alone: f = exp(i beta (theta - pi))
  const FHSymbol jump({}, {{0.0, 0.0, 0.3}});
  CHECK(std::abs(jump.value(2.0) - std::polar(1.0, 0.3 * (2.0 - M_PI))) < 1e-15);

  // e^V factor
  const FHSymbol smooth(series({{1, 0.3}, {-1, 0.3}}), {});
  CHECK(std::abs(smooth.value(1.2) - std::exp(0.6 * std::cos(1.2))) < 1e-14);
}

TEST_CASE("coefficients of the tridiagonal symbol") {
  const auto c = fourier_coefficients(tridiagonal_symbol(), -40, 40);
  CHECK(max_error(c, [](int j) -> Complex { return j == 0 ? 2.0 : (std::abs(j) == 1 ? -1.0 : 0.0); }) <
        1e-14);
}

TEST_CASE("coefficients of the two-jump symbol") {
  const auto c = fourier_coefficients(basor_tracy_symbol(), -60, 60);
  CHECK(max_error(c, [](int j) -> Complex { return j % 2 == 0 ? 0.0 : -2.0 / (M_PI * j); }) < 1e-13);
}

TEST_CASE("coefficients of exp(0.6 cos theta) are Bessel values") {
  const FHSymbol f(series({{1, 0.3}, {-1, 0.3}}), {});
  const auto c = fourier_coefficients(f, -30, 30);
  CHECK(max_error(c, [](int j) -> Complex { return std::cyl_bessel_i(std::abs(j), 0.6); }) < 1e-14);
}

TEST_CASE("coefficients of a pure root singularity") {
  for (double alpha : {-0.3, 0.25, 0.7}) {
    const FHSymbol f({}, {{0.0, alpha, 0.0}});
    const auto c = fourier_coefficients(f, -50, 50);
    auto exact = [alpha](int j) -> Complex {
      const double sign = j % 2 == 0 ? 1.0 : -1.0;
      return sign * std::tgamma(2 * alpha + 1) /
             (std::tgamma(alpha + j + 1) * std::tgamma(alpha - j + 1));
    };
    CHECK(max_error(c, exact) < 1e-13 * std::max(1.0, c.max_abs()));
  }
}

TEST_CASE("coefficients of a pure jump") {
  for (double beta : {0.3, -0.45, 0.5}) {
    const FHSymbol f({}, {{0.0, 0.0, beta}});
    const auto c = fourier_coefficients(f, -50, 50);
    CHECK(max_error(c, [beta](int j) -> Complex {
            return std::sin(M_PI * beta) / (M_PI * (beta - j));
          }) < 1e-13);
  }
}

TEST_CASE("constant symbols have one exact coefficient") {
  const auto c = fourier_coefficients(FHSymbol(), -3, 3);
  CHECK(c(0) == Complex(1.0));
  CHECK(c(2) == Complex{});
  CHECK_THROWS_AS(c(4), DomainError);
  CHECK_THROWS_AS(fourier_coefficients(FHSymbol(), 2, 1), DomainError);
}

TEST_CASE("Wiener-Hopf split") {
  const FourierSeries v = series({{0, 0.1}, {1, 0.3}, {-2, Complex(0, 0.2)}});
  const auto s = wiener_hopf_logs(v, 0.9);
  CHECK(std::abs(s.log_b_plus + s.v0 + s.log_b_minus - v.evaluate(0.9)) < 1e-15);
  CHECK(s.v0 == Complex(0.1));
  CHECK(szego_pair_sum(series({{1, 0.3}, {-1, 0.2}, {2, 1.0}, {-2, 0.5}})) == Complex(0.06 + 1.0));
}
