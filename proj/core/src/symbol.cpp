#include "fhdet/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fhdet/errors.hpp"
#include "fhdet/quadrature.hpp"
#include "fhdet/specfun.hpp"

namespace fhdet {

using constants::pi;
using constants::two_pi;

// ---------------------------------------------------------------- FourierSeries

FourierSeries::FourierSeries(int order) : order_(order), coeffs_(2 * order + 1) {
  if (order < 0) throw DomainError("FourierSeries: negative truncation order");
}

FourierSeries FourierSeries::from_terms(std::span<const std::pair<int, Complex>> terms) {
  FourierSeries series;
  for (const auto& [k, value] : terms) series.set(k, series.coefficient(k) + value);
  return series;
}

Complex FourierSeries::coefficient(int k) const {
  if (k < -order_ || k > order_) return {};
  return coeffs_[static_cast<std::size_t>(k + order_)];
}

void FourierSeries::set(int k, Complex value) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw InvariantError("FourierSeries: non-finite coefficient V_" + std::to_string(k));
  }
  const int need = std::abs(k);
  if (need > order_) {
    std::vector<Complex> grown(2 * need + 1);
    for (int i = -order_; i <= order_; ++i) grown[i + need] = coefficient(i);
    coeffs_ = std::move(grown);
    order_ = need;
  }
  coeffs_[static_cast<std::size_t>(k + order_)] = value;
}

Complex FourierSeries::evaluate(double theta) const {
  Complex sum = coefficient(0);
  for (int k = 1; k <= order_; ++k) {
    const Complex zk = std::polar(1.0, k * theta);
    sum += coefficient(k) * zk + coefficient(-k) * std::conj(zk);
  }
  return sum;
}

Complex FourierSeries::evaluate(Complex z) const {
  Complex sum = coefficient(0);
  Complex zk = 1.0;
  Complex zinv = 1.0;
  for (int k = 1; k <= order_; ++k) {
    zk *= z;
    zinv /= z;
    sum += coefficient(k) * zk + coefficient(-k) * zinv;
  }
  return sum;
}

bool FourierSeries::is_even(double tol) const {
  for (int k = 1; k <= order_; ++k) {
    if (std::abs(coefficient(k) - coefficient(-k)) > tol) return false;
  }
  return true;
}

bool FourierSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complex c) { return c == Complex{}; });
}

// --------------------------------------------------------------------- FHSymbol

FHSymbol::FHSymbol() : points_{Singularity{}} {}

FHSymbol::FHSymbol(FourierSeries v, std::vector<Singularity> singularities)
    : v_(std::move(v)), points_(std::move(singularities)) {
  for (const auto& p : points_) {
    if (!(p.theta >= 0.0 && p.theta < two_pi)) {
      throw DomainError("FHSymbol: singularity theta " + std::to_string(p.theta) +
                        " outside [0, 2pi)");
    }
    if (!(p.alpha.real() > -0.5)) {
      throw InvariantError("FHSymbol: Re alpha must exceed -1/2 (got " +
                           std::to_string(p.alpha.real()) + ")");
    }
    if (!std::isfinite(p.alpha.imag()) || !std::isfinite(p.beta.real()) ||
        !std::isfinite(p.beta.imag())) {
      throw InvariantError("FHSymbol: non-finite singularity parameter");
    }
  }
  std::sort(points_.begin(), points_.end(),
            [](const Singularity& a, const Singularity& b) { return a.theta < b.theta; });
  for (std::size_t j = 1; j < points_.size(); ++j) {
    if (points_[j].theta == points_[j - 1].theta) {
      throw InvariantError("FHSymbol: repeated singularity at theta = " +
                           std::to_string(points_[j].theta));
    }
  }
  if (points_.empty() || points_.front().theta != 0.0) {
    points_.insert(points_.begin(), Singularity{});
  }
}

std::vector<std::size_t> FHSymbol::singular_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < points_.size(); ++j) {
    if (points_[j].is_singular()) out.push_back(j);
  }
  return out;
}

Complex FHSymbol::beta_sum() const {
  Complex s{};
  for (const auto& p : points_) s += p.beta;
  return s;
}

FHSymbol FHSymbol::with_betas(std::span<const Complex> betas) const {
  if (betas.size() != points_.size()) {
    throw InvariantError("FHSymbol::with_betas: size mismatch");
  }
  FHSymbol out = *this;
  for (std::size_t j = 0; j < betas.size(); ++j) out.points_[j].beta = betas[j];
  return out;
}

LogComplex FHSymbol::value_near(double anchor, double offset) const {
  const double theta = anchor + offset;
  Complex log_f = v_.evaluate(theta) + Complex(0.0, theta) * beta_sum();
  for (std::size_t j = 0; j < points_.size(); ++j) {
    const Singularity& p = points_[j];
    if (!p.is_singular()) continue;
    const bool at_anchor = std::remainder(anchor - p.theta, two_pi) == 0.0;
    const double d = std::remainder(anchor - p.theta, two_pi) + offset;
    if (p.alpha != Complex{}) {
      const double dist = std::abs(2.0 * std::sin(0.5 * d));
      if (dist == 0.0) {
        if (p.alpha.real() > 0.0) return LogComplex::zero();
        throw DomainError("eval_symbol: symbol unbounded at theta = " + std::to_string(p.theta));
      }
      log_f += 2.0 * p.alpha * std::log(dist);
    }
    // g_beta is e^{i pi beta} on [0, theta_j) and e^{-i pi beta} on [theta_j, 2pi);
    // for theta_0 = 0 the first interval is empty.
    const bool before = j != 0 && (at_anchor ? offset < 0.0 : theta < p.theta);
    log_f += Complex(0.0, before ? pi : -pi) * p.beta;
    log_f -= Complex(0.0, p.theta) * p.beta;
  }
  return LogComplex::from_log(log_f);
}

Complex FHSymbol::value(double theta) const {
  if (!(theta >= 0.0 && theta < two_pi)) {
    throw DomainError("eval_symbol: theta " + std::to_string(theta) + " outside [0, 2pi)");
  }
  return value_near(theta, 0.0).value();
}

// ---------------------------------------------------------- FourierCoefficients

FourierCoefficients::FourierCoefficients(int j_min, std::vector<Complex> values)
    : j_min_(j_min), values_(std::move(values)) {}

Complex FourierCoefficients::operator()(int j) const {
  if (!contains(j)) {
    throw DomainError("Fourier coefficient f_" + std::to_string(j) + " not available (range " +
                      std::to_string(j_min()) + ".." + std::to_string(j_max()) + ")");
  }
  return values_[static_cast<std::size_t>(j - j_min_)];
}

double FourierCoefficients::max_abs() const {
  double m = 0.0;
  for (Complex c : values_) m = std::max(m, std::abs(c));
  return m;
}

namespace {

struct CoefficientPass {
  std::vector<Complex> coeffs;
  double mean_abs = 0.0;  // (1/2pi) int |f|
};

CoefficientPass coefficient_pass(const FHSymbol& f, int j_min, int j_max, double panel_width,
                                 double tol) {
  std::vector<Breakpoint> breakpoints;
  for (const auto& p : f.singularities()) {
    breakpoints.push_back({p.theta, 2.0 * p.alpha});
  }
  breakpoints.push_back({two_pi, 2.0 * f[0].alpha});

  const auto nodes = composite_rule(0.0, two_pi, breakpoints, {panel_width, tol, 20});
  const std::size_t count = static_cast<std::size_t>(j_max - j_min + 1);
  CoefficientPass pass;
  pass.coeffs.assign(count, Complex{});
  // Neumaier compensation per component: plain accumulation over ~1e4 nodes
  // leaves noise near 1e-14, which large Toeplitz determinants amplify.
  std::vector<double> sum_re(count), sum_im(count), comp_re(count), comp_im(count);
  auto add = [](double& sum, double& comp, double x) {
    const double t = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  };
  constexpr int kResync = 16;
  for (const auto& node : nodes) {
    const Complex value = f.value_near(node.anchor, node.offset).value();
    const Complex weighted = value * (node.weight / two_pi);
    pass.mean_abs += std::abs(weighted);
    const double theta = node.position();
    const Complex step = std::polar(1.0, -theta);
    Complex phase;
    for (std::size_t i = 0; i < count; ++i) {
      if (i % kResync == 0) {
        phase = std::polar(1.0, -static_cast<double>(j_min + static_cast<int>(i)) * theta);
      }
      const Complex term = weighted * phase;
      add(sum_re[i], comp_re[i], term.real());
      add(sum_im[i], comp_im[i], term.imag());
      phase *= step;
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    pass.coeffs[i] = {sum_re[i] + comp_re[i], sum_im[i] + comp_im[i]};
  }
  return pass;
}

}  // namespace

FourierCoefficients fourier_coefficients(const FHSymbol& f, int j_min, int j_max,
                                         const FourierOptions& options) {
  if (j_min > j_max) throw DomainError("fourier_coefficients: empty index range");
  if (!(options.tol > 0.0)) throw DomainError("fourier_coefficients: tol must be positive");
  for (const auto& p : f.singularities()) {
    if (!(p.alpha.real() > -0.5)) throw DomainError("fourier_coefficients: Re alpha <= -1/2");
  }
  // A constant symbol e^{V_0} has exactly one nonzero coefficient.
  bool constant = f.singular_indices().empty();
  for (int k = 1; constant && k <= f.v().order(); ++k) {
    constant = f.v()[k] == Complex{} && f.v()[-k] == Complex{};
  }
  if (constant) {
    std::vector<Complex> values(static_cast<std::size_t>(j_max - j_min + 1));
    if (j_min <= 0 && j_max >= 0) values[static_cast<std::size_t>(-j_min)] = std::exp(f.v()[0]);
    return FourierCoefficients(j_min, std::move(values));
  }
  const int reach = std::max({std::abs(j_min), std::abs(j_max), 1});
  double width = std::min(0.5, 6.0 / reach);
  const double grading_tol = 0.01 * options.tol;

  CoefficientPass coarse = coefficient_pass(f, j_min, j_max, width, grading_tol);
  for (int level = 0; level <= options.max_refinements; ++level) {
    width *= 0.5;
    CoefficientPass fine = coefficient_pass(f, j_min, j_max, width, grading_tol);
    double diff = 0.0;
    double scale = fine.mean_abs;
    for (std::size_t i = 0; i < fine.coeffs.size(); ++i) {
      diff = std::max(diff, std::abs(fine.coeffs[i] - coarse.coeffs[i]));
      scale = std::max(scale, std::abs(fine.coeffs[i]));
    }
    if (diff <= options.tol * scale) {
      return FourierCoefficients(j_min, std::move(fine.coeffs));
    }
    coarse = std::move(fine);
  }
  throw ConvergenceError("fourier_coefficients: tolerance not reached within the panel budget");
}

WienerHopfLogs wiener_hopf_logs(const FourierSeries& v, double theta) {
  WienerHopfLogs out;
  out.v0 = v.coefficient(0);
  for (int k = 1; k <= v.order(); ++k) {
    const Complex zk = std::polar(1.0, k * theta);
    out.log_b_plus += v.coefficient(k) * zk;
    out.log_b_minus += v.coefficient(-k) * std::conj(zk);
  }
  return out;
}

Complex szego_pair_sum(const FourierSeries& v) {
  Complex s{};
  for (int k = 1; k <= v.order(); ++k) {
    s += static_cast<double>(k) * v.coefficient(k) * v.coefficient(-k);
  }
  return s;
}

}  // namespace fhdet
