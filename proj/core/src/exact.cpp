#include "fhdet/exact.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "fhdet/errors.hpp"
#include "fhdet/quadrature.hpp"
#include "fhdet/specfun.hpp"

namespace fhdet {

using constants::ln2;
using constants::ln_pi;
using constants::pi;

std::string_view to_string(Quality q) {
  return q == Quality::ok ? "ok" : "ill_conditioned";
}

// ---------------------------------------------------------------------- DenseLu

DenseLu::DenseLu(std::vector<Complex> matrix, std::size_t n)
    : n_(n), lu_(std::move(matrix)), perm_(n) {
  if (lu_.size() != n * n) throw InvariantError("DenseLu: matrix size does not match n");
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});
  double max_a = 0.0;
  for (Complex a : lu_) max_a = std::max(max_a, std::abs(a));
  double max_u = 0.0;

  auto at = [this](std::size_t r, std::size_t c) -> Complex& { return lu_[r * n_ + c]; };
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    double best = std::abs(at(col, col));
    for (std::size_t r = col + 1; r < n_; ++r) {
      const double v = std::abs(at(r, col));
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best == 0.0) {
      singular_ = true;
      continue;
    }
    if (pivot != col) {
      for (std::size_t c = 0; c < n_; ++c) std::swap(at(pivot, c), at(col, c));
      std::swap(perm_[pivot], perm_[col]);
      ++swaps_;
    }
    const Complex inv = 1.0 / at(col, col);
    for (std::size_t r = col + 1; r < n_; ++r) {
      const Complex factor = at(r, col) * inv;
      at(r, col) = factor;
      if (factor == Complex{}) continue;
      Complex* dst = &at(r, col + 1);
      const Complex* src = &at(col, col + 1);
      for (std::size_t c = col + 1; c < n_; ++c) *dst++ -= factor * *src++;
    }
  }
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = r; c < n_; ++c) max_u = std::max(max_u, std::abs(at(r, c)));
  }
  growth_ = max_a > 0.0 ? max_u / max_a : 1.0;
}

LogComplex DenseLu::log_det() const {
  if (singular_) return LogComplex::zero();
  double log_mag = 0.0;
  double arg = swaps_ % 2 == 0 ? 0.0 : pi;
  for (std::size_t i = 0; i < n_; ++i) {
    const Complex u = lu_[i * n_ + i];
    log_mag += std::log(std::abs(u));
    arg += std::arg(u);
  }
  return {log_mag, arg};
}

std::vector<Complex> DenseLu::solve(std::vector<Complex> rhs) const {
  if (singular_) throw SingularSystemError("DenseLu::solve: singular matrix");
  if (rhs.size() != n_) throw InvariantError("DenseLu::solve: size mismatch");
  std::vector<Complex> x(n_);
  for (std::size_t i = 0; i < n_; ++i) x[i] = rhs[perm_[i]];
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t c = 0; c < i; ++c) x[i] -= lu_[i * n_ + c] * x[c];
  }
  for (std::size_t i = n_; i-- > 0;) {
    for (std::size_t c = i + 1; c < n_; ++c) x[i] -= lu_[i * n_ + c] * x[c];
    x[i] /= lu_[i * n_ + i];
  }
  return x;
}

namespace {

DeterminantValue lu_determinant(std::vector<Complex> matrix, int n) {
  const DenseLu lu(std::move(matrix), static_cast<std::size_t>(n));
  return {lu.log_det(), n, lu.growth() > kGrowthBudget ? Quality::ill_conditioned : Quality::ok};
}

void require_positive(int n, const char* what) {
  if (n < 1) throw DomainError(std::string(what) + ": n must be at least 1");
}

}  // namespace

// ------------------------------------------------------------------- Toeplitz

DeterminantValue shifted_toeplitz_det(const FourierCoefficients& f, int n, int shift) {
  require_positive(n, "toeplitz_det");
  const auto un = static_cast<std::size_t>(n);
  std::vector<Complex> a(un * un);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) a[static_cast<std::size_t>(j) * un + k] = f(j - k - shift);
  }
  return lu_determinant(std::move(a), n);
}

DeterminantValue toeplitz_det(const FourierCoefficients& f, int n) {
  return shifted_toeplitz_det(f, n, 0);
}

// --------------------------------------------------------------------- Hankel

namespace {

struct DiscreteMeasure {
  std::vector<double> x;
  std::vector<Complex> w;
};

DiscreteMeasure discretize(const HankelWeight& weight, double panel_width, double tol) {
  const auto breakpoints = weight.angle_breakpoints();
  const auto nodes = composite_rule(0.0, pi, breakpoints, {panel_width, tol, 20});
  DiscreteMeasure m;
  m.x.reserve(nodes.size());
  m.w.reserve(nodes.size());
  for (const auto& node : nodes) {
    const double theta = node.position();
    double sin_theta;
    if (node.anchor == 0.0) {
      sin_theta = std::sin(node.offset);
    } else if (node.anchor == pi) {
      sin_theta = std::sin(-node.offset);
    } else {
      sin_theta = std::sin(theta);
    }
    const Complex value = weight.value_at_angle(node.anchor, node.offset).value();
    m.x.push_back(std::cos(theta));
    m.w.push_back(node.weight * sin_theta * value);
  }
  return m;
}

struct StieltjesResult {
  LogComplex det;
  Quality quality = Quality::ok;
};

// Monic orthogonal polynomials of the discrete bilinear form
// <p, q> = sum_i w_i p(x_i) q(x_i), built by Stieltjes' procedure with full
// re-orthogonalisation. Each p_k is stored as values v_k = p_k / c_k with a
// tracked log scale c_k; det of the moment matrix = prod_k <p_k, p_k>.
StieltjesResult stieltjes_determinant(const DiscreteMeasure& m, int n) {
  const std::size_t count = m.x.size();
  if (count < static_cast<std::size_t>(n)) {
    throw ConvergenceError("hankel_det: discretization has fewer nodes than n");
  }
  auto inner = [&](const std::vector<Complex>& a, const std::vector<Complex>& b) {
    Complex s{};
    for (std::size_t i = 0; i < count; ++i) s += m.w[i] * a[i] * b[i];
    return s;
  };
  auto abs_inner = [&](const std::vector<Complex>& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < count; ++i) s += std::abs(m.w[i]) * std::norm(a[i]);
    return s;
  };

  std::vector<std::vector<Complex>> basis;
  std::vector<Complex> norms;
  basis.reserve(static_cast<std::size_t>(n));
  StieltjesResult result;
  result.det = LogComplex::one();

  std::vector<Complex> v(count, Complex(1.0));
  double log_scale = 0.0;
  for (int k = 0; k < n; ++k) {
    if (k > 0) {
      std::vector<Complex> u(count);
      for (std::size_t i = 0; i < count; ++i) u[i] = m.x[i] * basis.back()[i];
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
          const Complex c = inner(u, basis[i]) / norms[i];
          for (std::size_t q = 0; q < count; ++q) u[q] -= c * basis[i][q];
        }
      }
      const double norm = std::sqrt(abs_inner(u));
      if (!(norm > 0.0)) {
        result.det = LogComplex::zero();
        return result;
      }
      for (auto& value : u) value /= norm;
      log_scale += std::log(norm);
      v = std::move(u);
    }
    const Complex h = inner(v, v);
    const double magnitude = abs_inner(v);
    if (h == Complex{}) {
      result.det = LogComplex::zero();
      return result;
    }
    if (std::abs(h) < 1e-8 * magnitude) result.quality = Quality::ill_conditioned;
    result.det *= LogComplex::from_value(h) * LogComplex(2.0 * log_scale, 0.0);
    norms.push_back(h);
    basis.push_back(v);
  }
  return result;
}

}  // namespace

DeterminantValue hankel_det(const HankelWeight& w, int n, const HankelOptions& options) {
  require_positive(n, "hankel_det");
  if (!(options.tol > 0.0)) throw DomainError("hankel_det: tol must be positive");
  double width = std::min(0.5, 3.0 / n);
  const double grading_tol = 0.01 * options.tol;
  StieltjesResult coarse = stieltjes_determinant(discretize(w, width, grading_tol), n);
  for (int level = 0; level <= options.max_refinements; ++level) {
    width *= 0.5;
    StieltjesResult fine = stieltjes_determinant(discretize(w, width, grading_tol), n);
    const double change = relative_difference(coarse.det, fine.det);
    if (change <= 100.0 * n * options.tol) {
      const Quality q = coarse.quality == Quality::ok && fine.quality == Quality::ok
                            ? Quality::ok
                            : Quality::ill_conditioned;
      return {fine.det, n, q};
    }
    coarse = fine;
  }
  throw ConvergenceError("hankel_det: tolerance not reached within the panel budget");
}

DeterminantValue hankel_det_moments(const HankelWeight& w, int n, double tol) {
  require_positive(n, "hankel_det_moments");
  const DiscreteMeasure m = discretize(w, std::min(0.25, 1.5 / n), 0.01 * tol);
  std::vector<Complex> moments(static_cast<std::size_t>(2 * n - 1));
  for (std::size_t i = 0; i < m.x.size(); ++i) {
    Complex term = m.w[i];
    for (auto& mk : moments) {
      mk += term;
      term *= m.x[i];
    }
  }
  const auto un = static_cast<std::size_t>(n);
  std::vector<Complex> a(un * un);
  for (std::size_t j = 0; j < un; ++j) {
    for (std::size_t k = 0; k < un; ++k) a[j * un + k] = moments[j + k];
  }
  return lu_determinant(std::move(a), n);
}

// --------------------------------------------------------- Toeplitz + Hankel

std::string_view to_string(TphVariant v) {
  switch (v) {
    case TphVariant::plus_k: return "plus_k";
    case TphVariant::minus_k2: return "minus_k2";
    case TphVariant::plus_k1: return "plus_k1";
    case TphVariant::minus_k1: return "minus_k1";
  }
  return "?";
}

TphVariant parse_tph_variant(std::string_view name) {
  for (auto v : {TphVariant::plus_k, TphVariant::minus_k2, TphVariant::plus_k1,
                 TphVariant::minus_k1}) {
    if (name == to_string(v)) return v;
  }
  throw DomainError("unknown Toeplitz+Hankel variant '" + std::string(name) + "'");
}

TphParameters tph_parameters(TphVariant v) {
  switch (v) {
    case TphVariant::plus_k: return {-0.5, -0.5, -2, 2};
    case TphVariant::minus_k2: return {0.5, 0.5, 0, 0};
    case TphVariant::plus_k1: return {-0.5, 0.5, -1, 0};
    case TphVariant::minus_k1: return {0.5, -0.5, -1, 0};
  }
  throw DomainError("unknown Toeplitz+Hankel variant");
}

DeterminantValue tph_det(const FourierCoefficients& f, int n, TphVariant variant) {
  require_positive(n, "tph_det");
  const double scale = std::max(f.max_abs(), 1e-300);
  for (int j = 1; j <= std::min(f.j_max(), -f.j_min()); ++j) {
    if (std::abs(f(j) - f(-j)) > 1e-10 * scale) {
      throw InvariantError("tph_det: symbol is not even (f_" + std::to_string(j) +
                           " != f_-" + std::to_string(j) + ")");
    }
  }
  int offset = 0;
  double sign = 1.0;
  switch (variant) {
    case TphVariant::plus_k: offset = 0; sign = 1.0; break;
    case TphVariant::minus_k2: offset = 2; sign = -1.0; break;
    case TphVariant::plus_k1: offset = 1; sign = 1.0; break;
    case TphVariant::minus_k1: offset = 1; sign = -1.0; break;
  }
  const auto un = static_cast<std::size_t>(n);
  std::vector<Complex> a(un * un);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      a[static_cast<std::size_t>(j) * un + k] = f(j - k) + sign * f(j + k + offset);
    }
  }
  return lu_determinant(std::move(a), n);
}

// ------------------------------------------------------ orthogonal polynomials

Complex evaluate_polynomial(std::span<const Complex> coeffs, Complex z) {
  // Neumaier summation of c_i z^i, separately in each component.
  double sum_re = 0.0, comp_re = 0.0, sum_im = 0.0, comp_im = 0.0;
  auto add = [](double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  };
  Complex power = 1.0;
  for (Complex c : coeffs) {
    const Complex term = c * power;
    add(sum_re, comp_re, term.real());
    add(sum_im, comp_im, term.imag());
    power *= z;
  }
  return {sum_re + comp_re, sum_im + comp_im};
}

OrthoData orthogonal_polynomials(const FourierCoefficients& f, int k) {
  if (k < 0) throw DomainError("orthogonal_polynomials: negative degree");
  OrthoData data;
  data.degree = k;
  data.monic.assign(static_cast<std::size_t>(k) + 1, Complex{});
  data.hat_monic.assign(static_cast<std::size_t>(k) + 1, Complex{});
  data.monic.back() = 1.0;
  data.hat_monic.back() = 1.0;

  double growth = 1.0;
  if (k > 0) {
    const auto uk = static_cast<std::size_t>(k);
    // sum_{i<k} f_{j-i} c_i = -f_{j-k} and sum_{i<k} f_{i-j} d_i = -f_{k-j}, j < k
    std::vector<Complex> t(uk * uk);
    std::vector<Complex> tt(uk * uk);
    std::vector<Complex> rhs(uk);
    std::vector<Complex> hat_rhs(uk);
    for (int j = 0; j < k; ++j) {
      for (int i = 0; i < k; ++i) {
        t[static_cast<std::size_t>(j) * uk + i] = f(j - i);
        tt[static_cast<std::size_t>(j) * uk + i] = f(i - j);
      }
      rhs[static_cast<std::size_t>(j)] = -f(j - k);
      hat_rhs[static_cast<std::size_t>(j)] = -f(k - j);
    }
    const DenseLu lu(std::move(t), uk);
    const DenseLu lu_hat(std::move(tt), uk);
    if (lu.singular() || lu_hat.singular()) {
      throw SingularSystemError("orthogonal_polynomials: determinant vanishes at this k = " +
                                std::to_string(k));
    }
    growth = std::max(lu.growth(), lu_hat.growth());
    const auto c = lu.solve(rhs);
    const auto d = lu_hat.solve(hat_rhs);
    std::copy(c.begin(), c.end(), data.monic.begin());
    std::copy(d.begin(), d.end(), data.hat_monic.begin());
  }

  // D_{k+1} / D_k = sum_i c_i f_{k-i}
  Complex ratio_next{};
  for (int i = 0; i <= k; ++i) ratio_next += data.monic[static_cast<std::size_t>(i)] * f(k - i);
  if (ratio_next == Complex{}) {
    throw SingularSystemError("orthogonal_polynomials: determinant vanishes at this k = " +
                              std::to_string(k + 1));
  }
  data.chi_sq = 1.0 / ratio_next;
  data.chi = std::sqrt(data.chi_sq);
  data.phi0 = data.chi * data.monic.front();
  data.hatphi0 = data.chi * data.hat_monic.front();

  // Orthogonality: sum_i c_i f_{j-i} = chi^{-2} delta_{jk}, likewise for hat.
  double residual = 0.0;
  for (int j = 0; j <= k; ++j) {
    Complex s{}, s_hat{};
    double scale = 0.0, scale_hat = 0.0;
    for (int i = 0; i <= k; ++i) {
      const Complex c = data.monic[static_cast<std::size_t>(i)];
      const Complex d = data.hat_monic[static_cast<std::size_t>(i)];
      s += c * f(j - i);
      s_hat += d * f(i - j);
      scale += std::abs(c * f(j - i));
      scale_hat += std::abs(d * f(i - j));
    }
    const Complex target = j == k ? ratio_next : Complex{};
    if (scale > 0.0) residual = std::max(residual, std::abs(s - target) / scale);
    if (scale_hat > 0.0 && j < k) residual = std::max(residual, std::abs(s_hat) / scale_hat);
  }
  data.orthogonality_residual = residual;
  data.quality = (residual > 1e-8 || growth > kGrowthBudget) ? Quality::ill_conditioned
                                                              : Quality::ok;
  return data;
}

std::vector<Complex> monic_derivatives_at_zero(const OrthoData& data, int max_order) {
  if (max_order < 0) throw DomainError("monic_derivatives_at_zero: negative order");
  std::vector<Complex> out;
  double factorial = 1.0;
  for (int p = 0; p <= max_order; ++p) {
    if (p > 0) factorial *= p;
    const Complex c = p < static_cast<int>(data.monic.size())
                          ? data.monic[static_cast<std::size_t>(p)]
                          : Complex{};
    out.push_back(factorial * c);
  }
  return out;
}

// ------------------------------------------------------------ identity checks

double check_shift_identity(const FourierCoefficients& f, int n, int ell) {
  require_positive(n, "check_shift_identity");
  const LogComplex dn = toeplitz_det(f, n).value;
  if (ell == -1) {
    const LogComplex lhs = shifted_toeplitz_det(f, n, -1).value;
    const OrthoData od = orthogonal_polynomials(f, n);
    const LogComplex rhs =
        LogComplex::from_value(n % 2 == 0 ? od.hat_monic.front() : -od.hat_monic.front()) * dn;
    return relative_difference(lhs, rhs, dn);
  }
  if (ell < 1) throw DomainError("check_shift_identity: ell must be >= 1 or -1");

  const LogComplex lhs = shifted_toeplitz_det(f, n, ell).value;
  const auto uell = static_cast<std::size_t>(ell);
  std::vector<Complex> fmat(uell * uell);
  for (int q = 0; q < ell; ++q) {
    const auto derivs = monic_derivatives_at_zero(orthogonal_polynomials(f, n + q), ell - 1);
    for (int p = 0; p < ell; ++p) {
      fmat[static_cast<std::size_t>(p) * uell + q] = derivs[static_cast<std::size_t>(p)];
    }
  }
  LogComplex rhs = DenseLu(std::move(fmat), uell).log_det() * dn;
  double log_factorials = 0.0;
  for (int j = 1; j < ell; ++j) log_factorials += std::lgamma(j + 1.0);
  rhs = rhs / LogComplex(log_factorials, (ell * n) % 2 == 0 ? 0.0 : pi);
  return relative_difference(lhs, rhs, dn);
}

double check_shift_identity(const FHSymbol& f, int n, int ell, double tol) {
  const int reach = n + std::abs(ell) + 1;
  return check_shift_identity(fourier_coefficients(f, -reach, reach, {tol}), n, ell);
}

double check_hankel_toeplitz_relation(const HankelWeight& w, int n, double tol) {
  require_positive(n, "check_hankel_toeplitz_relation");
  const LogComplex dw = hankel_det(w, n, {tol}).value;
  const FHSymbol f = weight_to_even_symbol(w);
  const auto coeffs = fourier_coefficients(f, -2 * n, 2 * n, {tol});
  const LogComplex d2n = toeplitz_det(coeffs, 2 * n).value;
  const OrthoData od = orthogonal_polynomials(coeffs, 2 * n);
  const Complex at_zero = 1.0 + od.monic.front();
  const Complex at_plus = evaluate_polynomial(od.monic, 1.0);
  const Complex at_minus = evaluate_polynomial(od.monic, -1.0);
  const double log_const = 2.0 * n * ln_pi - 2.0 * (n - 1.0) * (n - 1.0) * ln2;
  const LogComplex rhs = LogComplex(log_const, 0.0) *
                         LogComplex::from_value(at_zero * at_zero / (at_plus * at_minus)) * d2n;
  return relative_difference(dw * dw, rhs);
}

double check_tph_reduction(const FHSymbol& f, int n, TphVariant variant, double tol) {
  require_positive(n, "check_tph_reduction");
  const auto coeffs = fourier_coefficients(f, -(2 * n + 2), 2 * n + 2, {tol});
  const LogComplex lhs = tph_det(coeffs, n, variant).value;
  const TphParameters par = tph_parameters(variant);
  const HankelWeight w = even_symbol_to_weight(f, par.s, par.t);
  const LogComplex hankel = hankel_det(w, n, {tol}).value;
  const double power2 = static_cast<double>(n) * n + par.p_n * n + par.p_0;
  const LogComplex rhs = LogComplex(power2 * ln2 - n * ln_pi, 0.0) * hankel;
  return relative_difference(lhs, rhs);
}

}  // namespace fhdet
