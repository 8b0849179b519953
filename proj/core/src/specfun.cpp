#include "fhdet/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "fhdet/errors.hpp"

namespace fhdet {

namespace {

using constants::pi;

// B_2, B_4, ..., B_22
constexpr std::array<double, 11> kBernoulliEven = {
    1.0 / 6.0,         -1.0 / 30.0,      1.0 / 42.0,       -1.0 / 30.0,
    5.0 / 66.0,        -691.0 / 2730.0,  7.0 / 6.0,        -3617.0 / 510.0,
    43867.0 / 798.0,   -174611.0 / 330.0, 854513.0 / 138.0};

constexpr double kGammaAnchor = 15.0;
constexpr double kBarnesAnchor = 10.0;

// Stirling series, valid for Re w >= kGammaAnchor.
Complex log_gamma_stirling(Complex w) {
  Complex result = (w - 0.5) * std::log(w) - w + 0.5 * constants::ln_two_pi;
  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex power = inv;
  for (std::size_t k = 1; k <= 9; ++k) {
    const double b = kBernoulliEven[k - 1];
    result += b / (2.0 * k * (2.0 * k - 1.0)) * power;
    power *= inv2;
  }
  return result;
}

// log G(1 + w) for Re w >= kBarnesAnchor - 1:
//   (w^2/2 - 1/12) log w - 3 w^2 / 4 + (w/2) log 2 pi + zeta'(-1)
//     + sum_k B_{2k+2} / (4 k (k + 1) w^{2k})
Complex log_barnes_g1_asymptotic(Complex w) {
  const Complex lw = std::log(w);
  const Complex w2 = w * w;
  Complex result = (0.5 * w2 - 1.0 / 12.0) * lw - 0.75 * w2 + 0.5 * w * constants::ln_two_pi +
                   constants::zeta_prime_minus_one;
  const Complex inv2 = 1.0 / w2;
  Complex power = inv2;
  for (std::size_t k = 1; k <= 10; ++k) {
    const double b = kBernoulliEven[k];  // B_{2k+2}
    result += b / (4.0 * k * (k + 1.0)) * power;
    power *= inv2;
  }
  return result;
}

}  // namespace

bool is_nonpositive_integer(Complex z, double tol) {
  if (std::abs(z.imag()) > tol) return false;
  if (z.real() > tol) return false;
  return std::abs(z.real() - std::round(z.real())) <= tol;
}

Complex log_gamma(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("log_gamma: non-finite argument");
  }
  if (is_nonpositive_integer(z, 1e-14)) {
    throw PoleError("log_gamma: pole at z = " + std::to_string(z.real()));
  }
  // Shift right with log Gamma(z) = log Gamma(z + N) - sum log(z + k). Summing
  // principal logs keeps the result on the standard branch for Im z != 0.
  Complex shift_sum{};
  Complex w = z;
  while (w.real() < kGammaAnchor) {
    shift_sum += std::log(w);
    w += 1.0;
  }
  return log_gamma_stirling(w) - shift_sum;
}

Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

Complex rgamma(Complex z) {
  if (is_nonpositive_integer(z)) return {};
  return std::exp(-log_gamma(z));
}

Complex log_barnes_g(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("log_barnes_g: non-finite argument");
  }
  if (is_nonpositive_integer(z, 1e-14)) {
    return {-std::numeric_limits<double>::infinity(), 0.0};
  }
  // log G(z) = log G(z + N) - sum_{k<N} log Gamma(z + k)
  Complex shift_sum{};
  Complex w = z;
  while (w.real() < kBarnesAnchor) {
    shift_sum += log_gamma(w);
    w += 1.0;
  }
  return log_barnes_g1_asymptotic(w - 1.0) - shift_sum;
}

}  // namespace fhdet
