#include <doctest.h>

#include <cmath>

#include "fhdet/asymptotics.hpp"
#include "fhdet/errors.hpp"
#include "fhdet/exact.hpp"
#include "fhdet/harness.hpp"
#include "fhdet/specfun.hpp"

using namespace fhdet;

namespace {

FourierSeries series(std::initializer_list<std::pair<int, Complex>> terms) {
  std::vector<std::pair<int, Complex>> v(terms);
  return FourierSeries::from_terms(v);
}

FHSymbol rotate(const FHSymbol& f, double phi) {
  FourierSeries v;
  for (int k = -f.v().order(); k <= f.v().order(); ++k) {
    if (f.v()[k] != Complex{}) v.set(k, f.v()[k] * std::polar(1.0, k * phi));
  }
  std::vector<Singularity> pts;
  for (const auto& p : f.singularities()) {
    if (p.is_singular()) pts.push_back({std::fmod(p.theta - phi + 2 * M_PI, 2 * M_PI), p.alpha, p.beta});
  }
  return FHSymbol(v, pts);
}

}  // namespace

TEST_CASE("smooth symbols follow the strong Szego limit") {
  const FHSymbol f(series({{1, 0.3}, {-1, 0.3}}), {});
  const auto r = basor_tracy_sum(f, 20);
  CHECK(r.terms.size() == 1);
  CHECK(r.value.log_mag() == doctest::Approx(0.09).epsilon(1e-14));
  const auto c = fourier_coefficients(f, -20, 20);
  CHECK(relative_difference(toeplitz_det(c, 20).value, r.value) < 1e-13);
}

TEST_CASE("the tridiagonal symbol predicts n") {
  for (int n : {4, 32, 100}) {
    CHECK(basor_tracy_sum(tridiagonal_symbol(), n).value.log_mag() ==
          doctest::Approx(std::log(n)).epsilon(1e-13));
  }
}

TEST_CASE("two half jumps: two equal-size terms that cancel for odd n") {
  const double term_log = 4 * constants::log_barnes_g_half + constants::ln_pi;
  for (int n : {16, 17, 64}) {
    const auto r = basor_tracy_sum(basor_tracy_symbol(), n);
    REQUIRE(r.terms.size() == 2);
    for (const auto& t : r.terms) {
      CHECK(t.log_value.log_mag() == doctest::Approx(term_log - 0.5 * std::log(2.0 * n)).epsilon(1e-13));
    }
    if (n % 2 == 1) {
      CHECK((r.value.is_zero() || r.value.log_mag() < r.terms[0].log_value.log_mag() - 25));
    } else {
      CHECK(r.value.log_mag() == doctest::Approx(term_log - 0.5 * std::log(2.0 * n) + std::log(2.0)));
    }
  }
}

TEST_CASE("prediction is invariant under rotation of the circle") {
  for (const auto& [name, f] : shift_identity_corpus()) {
    CAPTURE(name);
    const auto a = basor_tracy_sum(f, 40).value;
    const auto b = basor_tracy_sum(rotate(f, 0.77), 40).value;
    CHECK(relative_difference(a, b) < 1e-12);
  }
}

TEST_CASE("conjugate symbol gives the conjugate prediction") {
  // D_n(conj f) = conj D_n(f); conjugation flips beta and maps V_k to conj V_{-k}
  const FHSymbol f(series({{1, 0.2}, {-1, 0.1}}), {{1.0, 0.3, 0.2}, {4.0, 0.1, -0.1}});
  const FHSymbol g(series({{1, 0.1}, {-1, 0.2}}),
                   {{1.0, 0.3, -0.2}, {4.0, 0.1, 0.1}});
  const auto a = basor_tracy_sum(f, 30).value;
  const auto b = basor_tracy_sum(g, 30).value;
  CHECK(relative_difference(a.conj(), b) < 1e-12);
}

TEST_CASE("a Barnes G zero makes a term vanish exactly") {
  const FHSymbol f({}, {{1.0, 0.0, 1.0}});
  CHECK(fh_leading_term(f, 10).is_zero());
}

TEST_CASE("delta decreases with n") {
  const FHSymbol f({}, {{1.0, 0.0, 0.3}, {4.0, 0.0, -0.3}});
  double previous = 1.0;
  for (int n : {8, 16, 32, 64}) {
    const double d = delta_scale(f, n);
    CHECK(d < previous);
    CHECK(d == doctest::Approx(std::pow(n, 2 * (0.6 - 1))));
    previous = d;
  }
  CHECK(delta_scale(FHSymbol(), 10) == doctest::Approx(0.01));
}

TEST_CASE("hypothesis checks") {
  const auto reps = find_minimal_representations(basor_tracy_symbol());
  CHECK_THROWS_AS(szego_fh_leading(reps[0], 10), HypothesisError);
  const FHSymbol degenerate({}, {{1.0, -0.4, -0.6}, {3.0, 0.0, 0.4}});
  CHECK_THROWS_AS(basor_tracy_sum(degenerate, 10), DegenerateRepresentationError);
  CHECK_THROWS_AS(hankel_asymptotic(HankelWeight({}, 0, 0, {{0.1, 0, 0.5}}), 10), HypothesisError);
  CHECK_THROWS_AS(polynomial_asymptotics(basor_tracy_symbol().with_betas(std::vector<Complex>{0.6, -0.6}), 10),
                  HypothesisError);
}

TEST_CASE("shifted-jump asymptotics reduce to the representation sum") {
  const FHSymbol base(series({{1, 0.1}, {-1, 0.1}}), {{1.0, 0.2, 0.3}, {4.0, 0.0, -0.3}});
  for (int sign : {1, -1}) {
    std::vector<Complex> betas;
    for (const auto& p : base.singularities()) betas.push_back(p.beta);
    betas[1] += static_cast<double>(sign);
    const FHSymbol shifted = base.with_betas(betas);
    const auto bt1 = bt1_asymptotic(shifted, base, 1, sign, 48);
    CHECK(relative_difference(bt1, basor_tracy_sum(shifted, 48).value) < 1e-11);
  }
  CHECK_THROWS_AS(bt1_asymptotic(base, base, 1, 1, 48), HypothesisError);
}

TEST_CASE("polynomial asymptotics approach the exact values") {
  const FHSymbol f(series({{1, 0.2}, {-1, 0.2}}), {{2.0, 0.4, 0.0}});
  const auto c = fourier_coefficients(f, -65, 65);
  const int n = 64;
  const auto p = polynomial_asymptotics(f, n);
  const auto next = orthogonal_polynomials(c, n);
  const auto prev = orthogonal_polynomials(c, n - 1);
  CHECK(std::abs(p.chi_sq / prev.chi_sq - 1.0) < 1e-3);
  CHECK(std::abs(p.phi0_over_chi / next.phi0 - 1.0) < 0.05);
  CHECK(std::abs(p.hatphi0_over_chi / next.hatphi0 - 1.0) < 0.05);
  CHECK(nu_factors(f).size() == f.size());
}

TEST_CASE("Legendre Hankel determinant") {
  CHECK(legendre_hankel_det(1).value().real() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(legendre_hankel_det(2).value().real() == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  const Complex r = ratio(legendre_hankel_det(50), legendre_hankel_asymptotic(50));
  CHECK(std::abs(r - 1.0) < 1e-3);
  CHECK(relative_difference(hankel_asymptotic(HankelWeight(), 30), legendre_hankel_det(30)) < 1e-12);
}

TEST_CASE("Toeplitz+Hankel asymptotics of the constant symbol") {
  CHECK(std::abs(tph_asymptotic(FHSymbol(), 10, TphVariant::plus_k).value() - 2.0) < 1e-10);
  for (auto v : {TphVariant::minus_k2, TphVariant::plus_k1, TphVariant::minus_k1}) {
    CHECK(std::abs(tph_asymptotic(FHSymbol(), 10, v).value() - 1.0) < 1e-10);
  }
  CHECK_THROWS_AS(tph_asymptotic(FHSymbol({}, {{1.0, 0.2, 0.0}}), 10, TphVariant::plus_k),
                  InvariantError);
}
