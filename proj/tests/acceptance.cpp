// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <mutex>
#include <random>
#include <string>

#include "fhdet/asymptotics.hpp"
#include "fhdet/errors.hpp"
#include "fhdet/exact.hpp"
#include "fhdet/harness.hpp"
#include "fhdet/representation.hpp"
#include "fhdet/specfun.hpp"
#include "oracles.hpp"

using namespace fhdet;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

FourierSeries series(std::initializer_list<std::pair<int, Complex>> terms) {
  std::vector<std::pair<int, Complex>> v(terms);
  return FourierSeries::from_terms(v);
}

std::string fmt(const char* format, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

/// Max of body(i) over [0, count) computed in parallel.
double parallel_max(std::size_t count, const std::function<double(std::size_t)>& body) {
  std::mutex m;
  double worst = 0.0;
  parallel_for(count, worker_count(0), [&](std::size_t i) {
    double r;
    try {
      r = body(i);
    } catch (const std::exception&) {
      r = INFINITY;
    }
    if (std::isnan(r)) r = INFINITY;
    std::lock_guard lock(m);
    worst = std::max(worst, r);
  });
  return worst;
}

Verdict strong_szego() {
  const FHSymbol f(series({{1, 0.3}, {-1, 0.3}}), {});
  const int n = 64;
  const auto exact = toeplitz_det(fourier_coefficients(f, -n, n), n).value;
  const double err = std::abs(ratio(exact, LogComplex::from_value(std::exp(0.09))) - 1.0);
  return {err <= 1e-3, fmt("n=64 |D_n/exp(t^2)-1|=%.2e", err)};
}

Verdict tridiagonal() {
  const auto c = fourier_coefficients(tridiagonal_symbol(), -256, 256);
  double worst_exact = 0.0, worst_pred = 0.0;
  for (int n = 1; n <= 256; ++n) {
    const auto d = toeplitz_det(c, n).value;
    worst_exact = std::max(worst_exact, std::abs(ratio(d, LogComplex::from_value(n + 1.0)) - 1.0));
    if (n >= 8) {
      const Complex r = ratio(d, basor_tracy_sum(tridiagonal_symbol(), n).value);
      worst_pred = std::max(worst_pred, std::abs(r - 1.0 - 1.0 / n) * n * n);
    }
  }
  return {worst_exact <= 1e-10 && worst_pred <= 3.0,
          fmt("max rel err of D_n=n+1 %.2e; max n^2|D_n/R-1-1/n| %.2e", worst_exact, worst_pred)};
}

Verdict basor_tracy() {
  const FHSymbol f = basor_tracy_symbol();
  const auto c = fourier_coefficients(f, -257, 257);
  const double log_g_half = constants::log_barnes_g_half;
  const double log_g_three_halves = log_g_half + 0.5 * constants::ln_pi;
  auto closed_form = [&](int n) {  // sqrt(2/n) G(1/2)^2 G(3/2)^2 for even n
    return std::exp(0.5 * std::log(2.0 / n) + 2 * log_g_half + 2 * log_g_three_halves);
  };
  std::vector<int> even;
  for (int n = 32; n <= 256; n += 8) even.push_back(n);
  std::vector<double> errors;
  double worst_formula = 0.0;
  for (int n : even) {
    const auto d = toeplitz_det(c, n).value;
    errors.push_back(std::abs(ratio(d, LogComplex::from_value(closed_form(n))) - 1.0));
    const auto pred = basor_tracy_sum(f, n).value;
    worst_formula = std::max(worst_formula, std::abs(pred.value().real() / closed_form(n) - 1.0));
  }
  bool monotone = true;
  for (std::size_t i = errors.size() / 2; i + 1 < errors.size(); ++i) {
    monotone = monotone && errors[i + 1] <= errors[i];
  }
  double worst_odd = 0.0;
  for (int n = 65; n <= 255; n += 2) {
    const double bound = closed_form(n + 1);
    worst_odd = std::max(worst_odd, std::exp(toeplitz_det(c, n).value.log_mag()) / bound);
  }
  const bool pass = errors.back() <= 0.1 && monotone && worst_odd <= 0.2 && worst_formula <= 1e-10;
  return {pass, fmt("n=256 ratio err %.2e, top-half monotone %s, max odd |D_n|/pred %.2e, "
                    "representation sum vs closed form %.1e",
                    errors.back(), monotone ? "yes" : "no", worst_odd, worst_formula)};
}

Verdict shift_identities() {
  const auto corpus = shift_identity_corpus();
  const int ells[] = {1, 2, 3, -1};
  const std::size_t per_symbol = 4 * 16;
  const double worst = parallel_max(corpus.size() * per_symbol, [&](std::size_t i) {
    const auto& f = corpus[i / per_symbol].symbol;
    const int ell = ells[(i % per_symbol) / 16];
    const int n = static_cast<int>(i % 16) + 1;
    return check_shift_identity(f, n, ell);
  });
  return {worst <= 1e-7, fmt("%zu symbols, ell in {1,2,3,-1}, n<=16: max residual %.2e",
                             corpus.size(), worst)};
}

Verdict hankel_bridge() {
  const auto corpus = hankel_bridge_corpus();
  const double worst = parallel_max(corpus.size() * 8, [&](std::size_t i) {
    return check_hankel_toeplitz_relation(corpus[i / 8].weight, static_cast<int>(i % 8) + 1);
  });
  return {worst <= 1e-6, fmt("3 weights, n<=8: max residual %.2e", worst)};
}

Verdict legendre() {
  double worst = 0.0;
  for (int n = 1; n <= 20; ++n) {
    worst = std::max(worst, relative_difference(hankel_det(HankelWeight(), n).value, legendre_hankel_det(n)));
  }
  const double r = std::abs(ratio(hankel_det(HankelWeight(), 50).value, legendre_hankel_asymptotic(50)) - 1.0);
  return {worst <= 1e-10 && r <= 1e-2,
          fmt("product vs moment determinant, n<=20: %.2e; n=50 |exact/asymptotic-1|=%.2e", worst, r)};
}

Verdict tph_reductions() {
  const auto corpus = tph_corpus();
  const TphVariant variants[] = {TphVariant::plus_k, TphVariant::minus_k2, TphVariant::plus_k1,
                                 TphVariant::minus_k1};
  const std::size_t per_symbol = 4 * 12;
  const double worst = parallel_max(corpus.size() * per_symbol, [&](std::size_t i) {
    const auto& f = corpus[i / per_symbol].symbol;
    return check_tph_reduction(f, static_cast<int>(i % 12) + 1, variants[(i % per_symbol) / 12]);
  });
  const auto one = fourier_coefficients(FHSymbol(), -30, 30);
  const double expected[] = {2, 1, 1, 1};
  double worst_value = 0.0;
  for (int v = 0; v < 4; ++v) {
    for (int n = 1; n <= 12; ++n) {
      worst_value = std::max(worst_value, std::abs(tph_det(one, n, variants[v]).value.value() - expected[v]));
    }
  }
  return {worst <= 1e-6 && worst_value <= 1e-14,
          fmt("4 variants x 3 symbols, n<=12: max residual %.2e; f=1 values off by %.1e", worst,
              worst_value)};
}

Verdict polynomials() {
  const auto c = fourier_coefficients(tridiagonal_symbol(), -257, 257);
  double worst_exact = 0.0, worst_pred = 0.0;
  for (int n = 8; n <= 256; n *= 2) {
    const double target = 1.0 - 1.0 / n;
    worst_exact = std::max(worst_exact, std::abs(orthogonal_polynomials(c, n - 1).chi_sq - target) * n * n);
    worst_pred = std::max(worst_pred,
                          std::abs(polynomial_asymptotics(tridiagonal_symbol(), n).chi_sq - target) * n * n);
  }
  const FHSymbol jumps({}, {{1.0, 0.0, 0.3}, {4.0, 0.0, -0.3}});
  const int n = 64;
  const auto exact = orthogonal_polynomials(fourier_coefficients(jumps, -n, n), n).phi0;
  const auto pred = polynomial_asymptotics(jumps, n).phi0_over_chi;
  const double rel = std::abs(pred - exact) / std::abs(exact);
  return {worst_exact <= 3.0 && worst_pred <= 3.0 && rel <= 0.1,
          fmt("max n^2|chi^2-(1-1/n)| exact %.2f predicted %.2f; two jumps n=64 phi_n(0)/chi_n rel err %.2e",
              worst_exact, worst_pred, rel)};
}

Verdict rate() {
  const FHSymbol f(series({{1, 0.2}, {-1, 0.2}}), {{2.0, 0.4, 0.0}});
  const auto ns = geometric_grid(16, 512);
  const auto rows = sweep_toeplitz(f, ns);
  const RateFit fit = fit_error_rate(rows);
  return {fit.slope >= -1.3 && fit.slope <= -0.75,
          fmt("n=16..512 fitted slope %.4f (r^2 %.4f, %zu points)", fit.slope, fit.r_squared, fit.points)};
}

Verdict special_functions() {
  double worst_fe = 0.0;
  for (double re = 0.1; re <= 10.0 + 1e-9; re += 0.1) {
    for (double im = -10.0; im <= 10.0 + 1e-9; im += 0.25) {
      const Complex z(re, im);
      worst_fe = std::max(worst_fe, oracle::log_distance(log_barnes_g(z + 1.0), log_gamma(z) + log_barnes_g(z)));
    }
  }
  double worst_int = 0.0;
  double expected = 1.0, factorial = 1.0;  // G(k + 1) = prod_{j<k} j!
  for (int k = 0; k < 12; ++k) {
    if (k > 0) {
      factorial *= k;
      expected *= factorial;
    }
    const double g = std::exp(log_barnes_g(k + 1.0).real());
    worst_int = std::max(worst_int, std::abs(g / (k == 0 ? 1.0 : expected / factorial) - 1.0));
  }
  return {worst_fe <= 1e-12 && worst_int <= 1e-12,
          fmt("functional equation max residual %.2e; G(1..12) max rel err %.2e", worst_fe, worst_int)};
}

Verdict representation_finder() {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_real_distribution<double> beta(-2.0, 2.0);
  std::uniform_real_distribution<double> imag(-0.5, 0.5);
  std::uniform_int_distribution<int> quarter(-8, 8);
  std::uniform_real_distribution<double> angle(0.0, 2 * M_PI);
  std::bernoulli_distribution on_grid(0.5);
  int agree = 0;
  const int trials = 200;
  for (int t = 0; t < trials; ++t) {
    std::vector<Singularity> pts;
    const int m = count(rng);
    std::vector<double> thetas;
    while (static_cast<int>(thetas.size()) < m) {
      const double th = angle(rng);
      if (std::none_of(thetas.begin(), thetas.end(), [&](double o) { return o == th; })) thetas.push_back(th);
    }
    for (double th : thetas) {
      const double re = on_grid(rng) ? 0.25 * quarter(rng) : beta(rng);
      pts.push_back({th, 0.0, Complex(re, imag(rng))});
    }
    const FHSymbol f({}, pts);
    std::vector<std::vector<int>> found;
    for (const auto& r : find_minimal_representations(f)) found.push_back(r.shifts());
    agree += found == oracle::minimal_shifts_brute_force(f);
  }
  return {agree == trials, fmt("%d/%d configurations match exhaustive search", agree, trials)};
}

}  // namespace

int main() {
  const std::pair<const char*, Verdict (*)()> criteria[] = {
      {"strong_szego", strong_szego},
      {"tridiagonal_exactness", tridiagonal},
      {"two_half_jumps", basor_tracy},
      {"shift_identities", shift_identities},
      {"hankel_toeplitz_bridge", hankel_bridge},
      {"legendre_determinant", legendre},
      {"toeplitz_plus_hankel_reductions", tph_reductions},
      {"polynomial_asymptotics", polynomials},
      {"error_rate", rate},
      {"special_functions", special_functions},
      {"representation_finder", representation_finder},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !v.pass;
    std::printf("%s %2d %s: %s [%.1fs]\n", v.pass ? "PASS" : "FAIL", index, name, v.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", index - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
