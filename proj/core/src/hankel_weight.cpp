#include "fhdet/hankel_weight.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fhdet/errors.hpp"
#include "fhdet/specfun.hpp"

namespace fhdet {

using constants::ln2;
using constants::pi;
using constants::two_pi;

HankelWeight::HankelWeight(FourierSeries v, Complex alpha_plus, Complex alpha_minus,
                           std::vector<InteriorPoint> interior)
    : v_(std::move(v)),
      alpha_plus_(alpha_plus),
      alpha_minus_(alpha_minus),
      interior_(std::move(interior)) {
  if (!v_.is_even(1e-14)) throw InvariantError("HankelWeight: V must satisfy V_k = V_{-k}");
  if (!(alpha_plus_.real() > -0.5) || !(alpha_minus_.real() > -0.5)) {
    throw InvariantError("HankelWeight: endpoint Re alpha must exceed -1/2");
  }
  std::sort(interior_.begin(), interior_.end(),
            [](const InteriorPoint& a, const InteriorPoint& b) { return a.lambda > b.lambda; });
  for (std::size_t j = 0; j < interior_.size(); ++j) {
    const auto& p = interior_[j];
    if (!(p.lambda > -1.0 && p.lambda < 1.0)) {
      throw InvariantError("HankelWeight: lambda " + std::to_string(p.lambda) +
                           " outside (-1, 1)");
    }
    if (j > 0 && p.lambda == interior_[j - 1].lambda) {
      throw InvariantError("HankelWeight: repeated lambda " + std::to_string(p.lambda));
    }
    if (!(p.alpha.real() > -0.5)) throw InvariantError("HankelWeight: Re alpha must exceed -1/2");
    if (!(p.beta.real() > -0.5 && p.beta.real() <= 0.5)) {
      throw InvariantError("HankelWeight: Re beta must lie in (-1/2, 1/2]");
    }
  }
}

Complex HankelWeight::log_smooth(double x) const {
  // Chebyshev recurrence for T_k(x)
  Complex u = v_.coefficient(0);
  double t_prev = 1.0;
  double t_cur = x;
  for (int k = 1; k <= v_.order(); ++k) {
    u += 2.0 * v_.coefficient(k) * t_cur;
    const double t_next = 2.0 * x * t_cur - t_prev;
    t_prev = t_cur;
    t_cur = t_next;
  }
  return u;
}

LogComplex HankelWeight::value_at_angle(double anchor, double offset) const {
  const double theta = anchor + offset;
  const double x = std::cos(theta);
  Complex log_w = log_smooth(x);

  auto root_term = [](Complex alpha, double distance) -> Complex {
    if (alpha == Complex{}) return {};
    if (distance == 0.0) {
      if (alpha.real() > 0.0) return {-std::numeric_limits<double>::infinity(), 0.0};
      throw DomainError("HankelWeight: weight unbounded at a singular point");
    }
    return 2.0 * alpha * std::log(distance);
  };

  // |x - 1| = 2 sin^2(theta/2), |x + 1| = 2 sin^2((pi - theta)/2)
  const double to_zero = anchor == 0.0 ? offset : theta;
  const double to_pi = anchor == pi ? -offset : pi - theta;
  const double s0 = std::sin(0.5 * to_zero);
  const double s1 = std::sin(0.5 * to_pi);
  log_w += root_term(alpha_plus_, 2.0 * s0 * s0);
  log_w += root_term(alpha_minus_, 2.0 * s1 * s1);

  for (const auto& p : interior_) {
    const double theta_j = std::acos(p.lambda);
    const double d = anchor == theta_j ? offset : theta - theta_j;
    // |cos theta - cos theta_j| = 2 |sin((theta - theta_j)/2) sin((theta + theta_j)/2)|
    const double distance = std::abs(2.0 * std::sin(0.5 * d) * std::sin(0.5 * (theta + theta_j)));
    log_w += root_term(p.alpha, distance);
    // x < lambda  <=>  theta > theta_j
    const bool below = d > 0.0;
    log_w += Complex(0.0, below ? pi : -pi) * p.beta;
  }
  if (std::isinf(log_w.real()) && log_w.real() < 0) return LogComplex::zero();
  return LogComplex::from_log(log_w);
}

Complex HankelWeight::value(double x) const {
  if (!(x >= -1.0 && x <= 1.0)) {
    throw DomainError("HankelWeight: x = " + std::to_string(x) + " outside [-1, 1]");
  }
  return value_at_angle(std::acos(x), 0.0).value();
}

std::vector<Breakpoint> HankelWeight::angle_breakpoints() const {
  // Near theta = 0: |x - 1|^{2 alpha} sin theta ~ theta^{4 alpha + 1}.
  std::vector<Breakpoint> out;
  out.push_back({0.0, 4.0 * alpha_plus_ + 1.0});
  out.push_back({pi, 4.0 * alpha_minus_ + 1.0});
  for (const auto& p : interior_) out.push_back({std::acos(p.lambda), 2.0 * p.alpha});
  return out;
}

FHSymbol weight_to_even_symbol(const HankelWeight& w) {
  const std::size_t r = w.interior().size();
  std::vector<Singularity> points;
  points.push_back({0.0, 2.0 * w.alpha_plus() + 0.5, 0.0});
  points.push_back({pi, 2.0 * w.alpha_minus() + 0.5, 0.0});

  Complex alpha_total = w.alpha_plus() + w.alpha_minus();
  Complex jump_phase{};
  for (const auto& p : w.interior()) {
    const double theta_j = std::acos(p.lambda);
    points.push_back({theta_j, p.alpha, -p.beta});
    points.push_back({two_pi - theta_j, p.alpha, p.beta});
    alpha_total += p.alpha;
    // omega_j / (mirror jump pair) = e^{i beta_j (pi - 2 theta_j)}
    jump_phase += p.beta * (pi - 2.0 * theta_j);
  }
  (void)r;

  // w |sin| = e^U 2^{-1 - 2 sum alpha} (root factors in z) prod omega_j
  FourierSeries v = w.v();
  v.set(0, v.coefficient(0) - (1.0 + 2.0 * alpha_total) * ln2 + Complex(0.0, 1.0) * jump_phase);
  return FHSymbol(std::move(v), std::move(points));
}

EvenSymbolParts decompose_even_symbol(const FHSymbol& f, double tol) {
  if (!f.v().is_even(tol)) throw InvariantError("even symbol: V_k != V_{-k}");
  EvenSymbolParts parts;
  std::vector<const Singularity*> lower;  // theta in (pi, 2pi)
  for (const auto& p : f.singularities()) {
    if (p.theta == 0.0) {
      parts.alpha_plus = p.alpha;
      if (std::abs(p.beta) > tol) throw InvariantError("even symbol: beta at z = 1 must vanish");
    } else if (std::abs(p.theta - pi) <= tol) {
      parts.alpha_minus = p.alpha;
      if (std::abs(p.beta) > tol) throw InvariantError("even symbol: beta at z = -1 must vanish");
    } else if (p.theta < pi) {
      parts.upper.push_back(p);
    } else {
      lower.push_back(&p);
    }
  }
  if (lower.size() != parts.upper.size()) {
    throw InvariantError("even symbol: singularities are not mirrored about the real axis");
  }
  for (const auto& p : parts.upper) {
    auto it = std::find_if(lower.begin(), lower.end(), [&](const Singularity* q) {
      return std::abs(q->theta - (two_pi - p.theta)) <= 1e-12;
    });
    if (it == lower.end()) {
      throw InvariantError("even symbol: missing mirror of theta = " + std::to_string(p.theta));
    }
    if (std::abs((*it)->alpha - p.alpha) > tol || std::abs((*it)->beta + p.beta) > tol) {
      throw InvariantError("even symbol: mirror point must have equal alpha and opposite beta");
    }
  }
  return parts;
}

HankelWeight even_symbol_to_weight(const FHSymbol& f, double s, double t) {
  const EvenSymbolParts parts = decompose_even_symbol(f);
  // |z - 1|^{2a} = 2^a |x - 1|^a, |z + 1|^{2a} = 2^a |x + 1|^a,
  // |z - z_j|^{2a} |z - conj z_j|^{2a} = 2^{2a} |x - lambda_j|^{2a}
  Complex log_const = (parts.alpha_plus + parts.alpha_minus) * ln2;
  std::vector<InteriorPoint> interior;
  for (const auto& p : parts.upper) {
    const Complex beta_w = -p.beta;
    interior.push_back({std::cos(p.theta), p.alpha, beta_w});
    log_const += 2.0 * p.alpha * ln2;
    // jump pair = omega_j e^{-i beta_w (pi - 2 theta_j)}
    log_const -= Complex(0.0, 1.0) * beta_w * (pi - 2.0 * p.theta);
  }
  FourierSeries v = f.v();
  v.set(0, v.coefficient(0) + log_const);
  return HankelWeight(std::move(v), 0.5 * (parts.alpha_plus + s), 0.5 * (parts.alpha_minus + t),
                      std::move(interior));
}

}  // namespace fhdet
