#include "fhdet/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "fhdet/errors.hpp"
#include "fhdet/specfun.hpp"

namespace fhdet {

using constants::ln2;
using constants::ln_pi;
using constants::ln_two_pi;
using constants::pi;

namespace {

constexpr Complex kI{0.0, 1.0};

void require_n(int n, const char* what) {
  if (n < 1) throw DomainError(std::string(what) + ": n must be at least 1");
}

// log G(1 + a + b) + log G(1 + a - b) - log G(1 + 2a); real part -inf at a zero.
Complex log_g_block(Complex a, Complex b) {
  return log_barnes_g(1.0 + a + b) + log_barnes_g(1.0 + a - b) - log_barnes_g(1.0 + 2.0 * a);
}

std::string describe(const Representation& rep) {
  std::ostringstream os;
  os << "(";
  for (std::size_t j = 0; j < rep.shifts().size(); ++j) os << (j ? "," : "") << rep.shifts()[j];
  os << ")";
  return os.str();
}

[[noreturn]] void throw_degenerate(const Representation& rep, const Degeneracy& d) {
  std::ostringstream os;
  os << "degenerate representation " << describe(rep) << ": alpha_" << d.index
     << (d.plus ? " + " : " - ") << "beta_" << d.index << " = " << d.value.real();
  if (d.value.imag() != 0.0) os << (d.value.imag() < 0 ? " - " : " + ") << std::abs(d.value.imag()) << "i";
  throw DegenerateRepresentationError(os.str());
}

double real_beta_spread(const FHSymbol& f) {
  const auto idx = f.singular_indices();
  if (idx.empty()) return 0.0;
  double lo = f[idx.front()].beta.real(), hi = lo;
  for (auto j : idx) {
    lo = std::min(lo, f[j].beta.real());
    hi = std::max(hi, f[j].beta.real());
  }
  return hi - lo;
}

Complex gamma_ratio(Complex numerator_arg, Complex denominator_arg) {
  const Complex r = rgamma(denominator_arg);
  if (r == Complex{}) return {};
  return gamma(numerator_arg) * r;
}

}  // namespace

// ------------------------------------------------------------------ Theorem 1

LogComplex fh_leading_term(const FHSymbol& f, int n) {
  require_n(n, "fh_leading_term");
  const double ln_n = std::log(static_cast<double>(n));
  const FourierSeries& v = f.v();
  Complex log_value = static_cast<double>(n) * v[0] + szego_pair_sum(v);
  const auto& pts = f.singularities();
  for (std::size_t j = 0; j < pts.size(); ++j) {
    const auto& p = pts[j];
    if (!p.is_singular()) continue;
    const WienerHopfLogs wh = wiener_hopf_logs(v, p.theta);
    log_value += (-p.alpha + p.beta) * wh.log_b_plus + (-p.alpha - p.beta) * wh.log_b_minus;
    log_value += (p.alpha * p.alpha - p.beta * p.beta) * ln_n;
    const Complex g = log_g_block(p.alpha, p.beta);
    if (std::isinf(g.real()) && g.real() < 0) return LogComplex::zero();
    log_value += g;
    for (std::size_t k = j + 1; k < pts.size(); ++k) {
      const auto& q = pts[k];
      if (!q.is_singular()) continue;
      const double dist = std::abs(2.0 * std::sin(0.5 * (q.theta - p.theta)));
      log_value += 2.0 * (p.beta * q.beta - p.alpha * q.alpha) * std::log(dist);
      log_value += (p.alpha * q.beta - q.alpha * p.beta) * kI * (q.theta - p.theta - pi);
    }
  }
  return LogComplex::from_log(log_value);
}

LogComplex szego_fh_leading(const Representation& rep, int n) {
  const double spread = beta_seminorm(rep);
  if (!(spread < 1.0 - 1e-12)) {
    throw HypothesisError("szego_fh_leading: beta seminorm " + std::to_string(spread) +
                          " is not below 1; use basor_tracy_sum");
  }
  for (const auto& p : rep.base().singularities()) {
    if (!(p.alpha.real() > -0.5)) throw HypothesisError("szego_fh_leading: Re alpha <= -1/2");
  }
  if (auto d = is_degenerate(rep)) throw_degenerate(rep, *d);
  return fh_leading_term(apply_representation(rep).symbol, n);
}

double delta_scale(const FHSymbol& f, int n) {
  require_n(n, "delta_scale");
  const double ln_n = std::log(static_cast<double>(n));
  const double spread = real_beta_spread(f);
  return std::exp(2.0 * (spread - 1.0) * ln_n);
}

AsymptoticResult basor_tracy_sum(const FHSymbol& f, int n) {
  require_n(n, "basor_tracy_sum");
  const auto reps = find_minimal_representations(f);
  AsymptoticResult result;
  result.n = n;
  std::vector<LogComplex> values;
  for (const auto& rep : reps) {
    if (auto d = is_degenerate(rep)) throw_degenerate(rep, *d);
    const ShiftedSymbol shifted = apply_representation(rep);
    const LogComplex r = reps.size() == 1 ? szego_fh_leading(rep, n)
                                          : fh_leading_term(shifted.symbol, n);
    const LogComplex term = LogComplex::from_log(static_cast<double>(n) * shifted.log_prefactor) * r;
    values.push_back(term);
    result.terms.push_back({rep, term});
  }
  result.value = values.size() == 1 ? values.front() : sum(values);
  result.delta = delta_scale(apply_representation(reps.front()).symbol, n);
  return result;
}

// ------------------------------------------------------------------ Theorem 2

std::vector<Complex> nu_factors(const FHSymbol& f, NuBranch branch) {
  const auto& pts = f.singularities();
  const std::size_t m = pts.size();
  std::vector<Complex> nu(m);
  for (std::size_t j = 0; j < m; ++j) {
    Complex alpha_before{}, alpha_after{};
    Complex log_nu{};
    for (std::size_t p = 0; p < m; ++p) {
      if (p == j) continue;
      (p < j ? alpha_before : alpha_after) += pts[p].alpha;
      double angle = pts[j].theta - pts[p].theta;
      if (branch == NuBranch::reduced) angle = normalize_angle(angle);
      const double dist = std::abs(2.0 * std::sin(0.5 * (pts[j].theta - pts[p].theta)));
      log_nu += kI * pts[p].alpha * angle + 2.0 * pts[p].beta * std::log(dist);
    }
    log_nu += -kI * pi * (alpha_before - alpha_after);
    nu[j] = std::exp(log_nu);
  }
  return nu;
}

PolynomialAsymptotics polynomial_asymptotics(const FHSymbol& f, int n, NuBranch branch) {
  require_n(n, "polynomial_asymptotics");
  if (!(real_beta_spread(f) < 1.0 - 1e-12)) {
    throw HypothesisError("polynomial_asymptotics: |Re beta_j - Re beta_k| must be below 1");
  }
  const auto& pts = f.singularities();
  for (const auto& p : pts) {
    if (is_nonpositive_integer(p.alpha + p.beta + 1.0) ||
        is_nonpositive_integer(p.alpha - p.beta + 1.0)) {
      throw HypothesisError("polynomial_asymptotics: alpha +- beta is a negative integer");
    }
  }
  const double nd = static_cast<double>(n);
  const double ln_n = std::log(nd);
  const std::size_t m = pts.size();
  const auto nu = nu_factors(f, branch);

  std::vector<Complex> z(m), zn(m), wh_ratio(m), plus_coef(m), minus_coef(m);
  for (std::size_t j = 0; j < m; ++j) {
    const auto& p = pts[j];
    z[j] = std::polar(1.0, p.theta);
    zn[j] = std::polar(1.0, std::fmod(nd * p.theta, constants::two_pi));
    const WienerHopfLogs wh = wiener_hopf_logs(f.v(), p.theta);
    wh_ratio[j] = std::exp(wh.log_b_plus - wh.log_b_minus);  // b_+(z_j) / b_-(z_j)
    // Gamma(1 + a + b) / Gamma(a - b) and Gamma(1 + a - b) / Gamma(a + b)
    plus_coef[j] = gamma_ratio(1.0 + p.alpha + p.beta, p.alpha - p.beta);
    minus_coef[j] = gamma_ratio(1.0 + p.alpha - p.beta, p.alpha + p.beta);
  }

  PolynomialAsymptotics out;
  Complex alpha_beta_sum{};
  for (const auto& p : pts) alpha_beta_sum += p.alpha * p.alpha - p.beta * p.beta;
  Complex bracket = 1.0 - alpha_beta_sum / nd;
  for (std::size_t j = 0; j < m; ++j) {
    if (plus_coef[j] == Complex{}) continue;
    for (std::size_t k = 0; k < m; ++k) {
      if (k == j || minus_coef[k] == Complex{}) continue;
      const Complex power = std::exp(2.0 * (pts[k].beta - pts[j].beta - 1.0) * ln_n);
      bracket += z[k] / (z[j] - z[k]) * (zn[j] / zn[k]) * power * (nu[j] / nu[k]) *
                 plus_coef[j] * minus_coef[k] * (wh_ratio[j] / wh_ratio[k]);
    }
  }
  out.chi_sq = std::exp(-f.v()[0]) * bracket;

  for (std::size_t j = 0; j < m; ++j) {
    if (plus_coef[j] != Complex{}) {
      out.phi0_over_chi += std::exp((-2.0 * pts[j].beta - 1.0) * ln_n) * zn[j] * nu[j] *
                           plus_coef[j] * wh_ratio[j];
    }
    if (minus_coef[j] != Complex{}) {
      out.hatphi0_over_chi += std::exp((2.0 * pts[j].beta - 1.0) * ln_n) / zn[j] / nu[j] *
                              minus_coef[j] / wh_ratio[j];
    }
  }
  out.delta = delta_scale(f, n);
  return out;
}

// ---------------------------------------------------------------- Theorem BT1

LogComplex bt1_asymptotic(const FHSymbol& f_pm, const FHSymbol& base, std::size_t j0, int sign,
                          int n) {
  require_n(n, "bt1_asymptotic");
  if (sign != 1 && sign != -1) throw DomainError("bt1_asymptotic: sign must be +1 or -1");
  if (j0 >= base.size()) throw DomainError("bt1_asymptotic: j0 out of range");
  const auto idx = base.singular_indices();
  if (idx.size() < 2) throw HypothesisError("bt1_asymptotic: needs at least two singular points");
  if (!base[j0].is_singular()) throw HypothesisError("bt1_asymptotic: z_j0 must be singular");
  for (auto j : idx) {
    const auto& p = base[j];
    if (!(p.alpha.real() > -0.5)) throw HypothesisError("bt1_asymptotic: Re alpha <= -1/2");
    if (!(p.beta.real() > -0.5 && p.beta.real() <= 0.5 + 1e-12)) {
      throw HypothesisError("bt1_asymptotic: Re beta outside (-1/2, 1/2]");
    }
    if (std::abs(p.alpha + p.beta) < 1e-12 || std::abs(p.alpha - p.beta) < 1e-12) {
      throw HypothesisError("bt1_asymptotic: alpha +- beta = 0 at a singular point");
    }
  }
  std::vector<Complex> betas;
  for (const auto& p : base.singularities()) betas.push_back(p.beta);
  betas[j0] += static_cast<double>(sign);
  if (!(base.with_betas(betas) == f_pm)) {
    throw HypothesisError("bt1_asymptotic: f_pm is not base with beta_j0 shifted by sign");
  }

  // Extremal Re beta: minimal for f^+, maximal for f^-.
  double extreme = base[idx.front()].beta.real();
  for (auto j : idx) {
    const double b = base[j].beta.real();
    extreme = sign > 0 ? std::min(extreme, b) : std::max(extreme, b);
  }
  const double nd = static_cast<double>(n);
  std::vector<LogComplex> terms;
  for (auto j : idx) {
    if (std::abs(base[j].beta.real() - extreme) > 1e-9) continue;
    std::vector<Complex> shifted;
    for (const auto& p : base.singularities()) shifted.push_back(p.beta);
    shifted[j] += static_cast<double>(sign);
    const LogComplex r = fh_leading_term(base.with_betas(shifted), n);
    const double phase = sign * nd * (base[j].theta - base[j0].theta);
    terms.push_back(LogComplex(0.0, std::fmod(phase, constants::two_pi)) * r);
  }
  return sum(terms);
}

// ---------------------------------------------------------------------- Hankel

LogComplex legendre_hankel_det(int n) {
  require_n(n, "legendre_hankel_det");
  double log_value = static_cast<double>(n) * n * ln2;
  for (int k = 0; k < n; ++k) log_value += 3.0 * std::lgamma(k + 1.0) - std::lgamma(n + k + 1.0);
  return {log_value, 0.0};
}

LogComplex legendre_hankel_asymptotic(int n) {
  require_n(n, "legendre_hankel_asymptotic");
  const double nd = n;
  return {(nd + 0.5) * ln_pi + 2.0 * constants::log_barnes_g_half - nd * (nd - 1.0) * ln2 -
              0.25 * std::log(nd),
          0.0};
}

LogComplex hankel_asymptotic(const HankelWeight& w, int n) {
  require_n(n, "hankel_asymptotic");
  struct Point {
    double lambda;
    Complex alpha;
    Complex beta;
  };
  std::vector<Point> pts;
  pts.push_back({1.0, w.alpha_plus(), {}});
  for (const auto& p : w.interior()) {
    if (!(std::abs(p.beta.real()) < 0.5 - 1e-12)) {
      throw HypothesisError("hankel_asymptotic: needs |Re beta_j| < 1/2");
    }
    pts.push_back({p.lambda, p.alpha, p.beta});
  }
  pts.push_back({-1.0, w.alpha_minus(), {}});
  const std::size_t last = pts.size() - 1;

  const double nd = n;
  const double ln_n = std::log(nd);
  const FourierSeries& v = w.v();
  const Complex a0 = pts.front().alpha;
  const Complex ar = pts.back().alpha;
  Complex big_a{};
  for (const auto& p : pts) big_a += p.alpha;

  Complex log_value = legendre_hankel_det(n).log();
  log_value += (nd + a0 + ar) * v[0] - a0 * v.evaluate(0.0) - ar * v.evaluate(pi) +
               0.5 * szego_pair_sum(v);

  Complex beta_sq{}, interior_n_exp{}, arcsin_sum{}, cross_ab{}, cross_aa{};
  for (std::size_t j = 1; j < last; ++j) {
    const auto& p = pts[j];
    const double theta = std::acos(p.lambda);
    const WienerHopfLogs wh = wiener_hopf_logs(v, theta);
    log_value += (-p.alpha - p.beta) * wh.log_b_plus + (-p.alpha + p.beta) * wh.log_b_minus;
    arcsin_sum += p.beta * std::asin(p.lambda);
    beta_sq += p.beta * p.beta;
    interior_n_exp += p.alpha * p.alpha - p.beta * p.beta;
    log_value += -0.5 * (p.alpha * p.alpha + p.beta * p.beta) * std::log(1.0 - p.lambda * p.lambda);
    log_value += log_g_block(p.alpha, p.beta);
  }
  for (std::size_t j = 0; j <= last; ++j) {
    for (std::size_t k = j + 1; k <= last; ++k) {
      const auto& p = pts[j];
      const auto& q = pts[k];
      cross_ab += p.alpha * q.beta - q.alpha * p.beta;
      cross_aa += p.alpha * q.alpha;
      log_value += -2.0 * (p.alpha * q.alpha + p.beta * q.beta) * std::log(std::abs(p.lambda - q.lambda));
      const Complex bb = p.beta * q.beta;
      if (bb != Complex{}) {
        const double base = p.lambda * q.lambda - 1.0 +
                            std::sqrt((1.0 - p.lambda * p.lambda) * (1.0 - q.lambda * q.lambda));
        log_value += 2.0 * bb * std::log(std::abs(base));
      }
    }
  }
  log_value += 2.0 * kI * (nd + big_a) * arcsin_sum + kI * pi * cross_ab;
  log_value += -2.0 * ln2 * (big_a * nd + a0 * a0 + ar * ar + cross_aa + beta_sq);
  log_value += (a0 + ar) * ln_two_pi;
  log_value += (2.0 * (a0 * a0 + ar * ar) + interior_n_exp) * ln_n;
  log_value += -log_barnes_g(1.0 + 2.0 * a0) - log_barnes_g(1.0 + 2.0 * ar);
  if (std::isinf(log_value.real()) && log_value.real() < 0) return LogComplex::zero();
  return LogComplex::from_log(log_value);
}

// ------------------------------------------------------------ Toeplitz+Hankel

LogComplex tph_asymptotic(const FHSymbol& f, int n, TphVariant variant) {
  require_n(n, "tph_asymptotic");
  const EvenSymbolParts parts = decompose_even_symbol(f);
  const TphParameters par = tph_parameters(variant);
  const double nd = n;
  const double ln_n = std::log(nd);
  const double p = par.p_n * nd + par.p_0;
  const double s = par.s;
  const double t = par.t;
  const Complex a0 = parts.alpha_plus;
  const Complex ar = parts.alpha_minus;
  const FourierSeries& v = f.v();
  const auto& up = parts.upper;
  for (const auto& q : up) {
    if (!(std::abs(q.beta.real()) < 0.5 - 1e-12)) {
      throw HypothesisError("tph_asymptotic: needs |Re beta_j| < 1/2");
    }
  }

  const Complex big_l = a0 + ar + s + t;
  Complex alpha_sum{}, beta_sum{}, ab_diff{};
  for (const auto& q : up) {
    alpha_sum += q.alpha;
    beta_sum += q.beta;
    ab_diff += q.alpha * q.alpha - q.beta * q.beta;
  }
  const Complex a_tilde = 0.5 * big_l + alpha_sum;

  Complex log_value = nd * v[0] + 0.5 * (big_l * v[0] - (a0 + s) * v.evaluate(0.0) -
                                         (ar + t) * v.evaluate(pi) + szego_pair_sum(v));
  Complex cross{};
  for (std::size_t j = 0; j < up.size(); ++j) {
    const auto& q = up[j];
    const WienerHopfLogs wh = wiener_hopf_logs(v, q.theta);
    log_value += (-q.alpha + q.beta) * wh.log_b_plus + (-q.alpha - q.beta) * wh.log_b_minus;
    const Complex zj = std::polar(1.0, q.theta);
    log_value += 2.0 * a_tilde * q.beta * kI * q.theta;
    log_value += -(q.alpha * q.alpha + q.beta * q.beta) * std::log(std::abs(1.0 - zj * zj));
    log_value += -2.0 * q.alpha * (a0 + s) * std::log(std::abs(1.0 - zj));
    log_value += -2.0 * q.alpha * (ar + t) * std::log(std::abs(1.0 + zj));
    log_value += log_g_block(q.alpha, q.beta);
    for (std::size_t k = j + 1; k < up.size(); ++k) {
      const auto& r = up[k];
      const Complex zk = std::polar(1.0, r.theta);
      cross += q.alpha * r.beta - r.alpha * q.beta;
      log_value += -2.0 * (q.alpha * r.alpha - q.beta * r.beta) * std::log(std::abs(zj - zk));
      log_value += -2.0 * (q.alpha * r.alpha + q.beta * r.beta) * std::log(std::abs(zj - 1.0 / zk));
    }
  }
  log_value += -kI * pi * ((a0 + s + alpha_sum) * beta_sum + cross);
  log_value += ln2 * ((1.0 - s - t) * nd + p + ab_diff - 0.5 * big_l * big_l + 0.5 * big_l);
  log_value += ln_n * (0.5 * (a0 * a0 + ar * ar) + a0 * s + ar * t + ab_diff);
  log_value += 0.5 * (big_l + 1.0) * ln_pi + 2.0 * constants::log_barnes_g_half -
               log_barnes_g(1.0 + a0 + s) - log_barnes_g(1.0 + ar + t);
  if (std::isinf(log_value.real()) && log_value.real() < 0) return LogComplex::zero();
  return LogComplex::from_log(log_value);
}

}  // namespace fhdet
