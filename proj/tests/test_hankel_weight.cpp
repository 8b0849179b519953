#include <doctest.h>

#include <cmath>

#include "fhdet/errors.hpp"
#include "fhdet/hankel_weight.hpp"

using namespace fhdet;

namespace {

FourierSeries even_series(double v0, double v1) {
  FourierSeries v;
  v.set(0, v0);
  v.set(1, v1);
  v.set(-1, v1);
  return v;
}

}  // namespace

TEST_CASE("weight evaluation") {
  const HankelWeight w(even_series(0.1, 0.2), 0.25, -0.2, {{0.3, 0.1, 0.2}});
  const double x = -0.4;
  const double u = 0.1 + 2 * 0.2 * x;
  const Complex expected = std::exp(u) * std::pow(1 - x, 0.5) * std::pow(1 + x, -0.4) *
                           std::pow(std::abs(x - 0.3), 0.2) * std::polar(1.0, M_PI * 0.2);
  CHECK(std::abs(w.value(x) - expected) < 1e-14);
  CHECK(std::abs(w.log_smooth(x) - u) < 1e-15);
  CHECK(std::abs(w.value(0.8) / w.value(0.8) - 1.0) < 1e-15);
  CHECK(std::arg(w.value(0.8)) == doctest::Approx(-M_PI * 0.2));
  CHECK_THROWS_AS(w.value(1.5), DomainError);
}

TEST_CASE("weight invariants") {
  FourierSeries odd;
  odd.set(1, 0.1);
  CHECK_THROWS_AS(HankelWeight(odd, 0, 0, {}), InvariantError);
  CHECK_THROWS_AS(HankelWeight({}, 0, 0, {{1.0, 0, 0.1}}), InvariantError);
  CHECK_THROWS_AS(HankelWeight({}, 0, 0, {{0.2, 0, 0.6}}), InvariantError);
  CHECK_THROWS_AS(HankelWeight({}, -0.5, 0, {}), InvariantError);
  CHECK_THROWS_AS(HankelWeight({}, 0, 0, {{0.2, 0, 0.1}, {0.2, 0, -0.1}}), InvariantError);
  const HankelWeight sorted({}, 0, 0, {{-0.5, 0, 0.1}, {0.4, 0, 0.2}});
  CHECK(sorted.interior()[0].lambda == 0.4);
}

TEST_CASE("the even symbol of a weight is w(cos theta) |sin theta|") {
  const HankelWeight w(even_series(0.1, 0.2), 0.3, -0.1, {{0.3, 0.15, 0.2}, {-0.6, 0.0, -0.35}});
  const FHSymbol f = weight_to_even_symbol(w);
  CHECK(f.v().is_even(1e-15));
  for (double t : {0.2, 1.0, 1.9, 2.8, 3.5, 4.4, 5.9}) {
    const Complex expected = w.value(std::cos(t)) * std::abs(std::sin(t));
    CHECK(std::abs(f.value(t) - expected) < 1e-13 * std::abs(expected));
  }
  const auto parts = decompose_even_symbol(f);
  CHECK(std::abs(parts.alpha_plus - 1.1) < 1e-15);  // 2 alpha_+ + 1/2
  CHECK(std::abs(parts.alpha_minus - 0.3) < 1e-15);
  CHECK(parts.upper.size() == 2);
}

TEST_CASE("even symbol to weight and back") {
  const HankelWeight w(even_series(0.0, 0.15), 0.2, 0.1, {{0.5, 0.1, 0.25}});
  const FHSymbol f = weight_to_even_symbol(w);
  // f (1 - x)^{-1/2} (1 + x)^{-1/2} = w
  const HankelWeight back = even_symbol_to_weight(f, -0.5, -0.5);
  for (double x : {-0.9, -0.2, 0.3, 0.7, 0.95}) {
    CHECK(std::abs(back.value(x) - w.value(x)) < 1e-13 * std::abs(w.value(x)));
  }
  const HankelWeight shifted = even_symbol_to_weight(f, 0.5, -0.5);
  CHECK(std::abs(shifted.value(0.3) - w.value(0.3) * 0.7) < 1e-13);
}

TEST_CASE("non-even symbols are rejected") {
  const FHSymbol f({}, {{1.0, 0.2, 0.0}});
  CHECK_THROWS_AS(decompose_even_symbol(f), InvariantError);
  const FHSymbol g({}, {{0.0, 0.0, 0.2}});
  CHECK_THROWS_AS(decompose_even_symbol(g), InvariantError);
}

TEST_CASE("even symbol of the interior-jump weight is even on a fine grid") {
  const HankelWeight w(even_series(0.1, 0.2), 0.1, 0.2, {{0.0, 0.0, 0.3}});
  const FHSymbol f = weight_to_even_symbol(w);
  REQUIRE(f.size() == 4);
  CHECK(f[1].theta == doctest::Approx(M_PI / 2));
  CHECK(f[1].beta == Complex(-0.3));
  CHECK(f[3].beta == Complex(0.3));
  double worst = 0.0;
  for (int i = 1; i < 1024; ++i) {
    const double t = (i + 0.37) * M_PI / 1024;
    worst = std::max(worst, std::abs(f.value(t) - f.value(2 * M_PI - t)));
  }
  CHECK(worst <= 1e-10);
}
