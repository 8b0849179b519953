#pragma once

#include <span>
#include <utility>
#include <vector>

#include "fhdet/log_complex.hpp"

namespace fhdet {

/// Truncated Fourier series V(z) = sum_{|k| <= N} V_k z^k of the smooth log-symbol.
class FourierSeries {
 public:
  FourierSeries() = default;
  /// Zero series of the given truncation order.
  explicit FourierSeries(int order);
  /// Builds a series from (k, V_k) pairs; repeated k accumulate.
  static FourierSeries from_terms(std::span<const std::pair<int, Complex>> terms);

  int order() const { return order_; }
  Complex coefficient(int k) const;
  Complex operator[](int k) const { return coefficient(k); }
  /// Sets V_k, growing the truncation order if needed.
  void set(int k, Complex value);

  Complex evaluate(double theta) const;
  Complex evaluate(Complex z) const;
  /// V_k == V_{-k} for every k, within tol.
  bool is_even(double tol = 0.0) const;
  bool is_zero() const;

  friend bool operator==(const FourierSeries&, const FourierSeries&) = default;

 private:
  int order_ = 0;
  std::vector<Complex> coeffs_ = std::vector<Complex>(1);  // index k + order_
};

/// A Fisher-Hartwig singularity at z_j = exp(i theta): root factor
/// |z - z_j|^{2 alpha} and jump g_{beta}.
struct Singularity {
  double theta = 0.0;
  Complex alpha{};
  Complex beta{};

  bool is_singular() const { return alpha != Complex{} || beta != Complex{}; }
  friend bool operator==(const Singularity&, const Singularity&) = default;
};

/// f(z) = e^{V(z)} z^{sum beta_j} prod_j |z - z_j|^{2 alpha_j} g_{beta_j}(z) z_j^{-beta_j}.
///
/// The singularities are kept sorted by theta, and the point z_0 = 1 is always
/// present (with alpha = beta = 0 when it is not singular).
class FHSymbol {
 public:
  /// The constant symbol f = 1.
  FHSymbol();
  /// Throws DomainError for theta outside [0, 2pi), InvariantError for
  /// repeated points or Re alpha <= -1/2.
  FHSymbol(FourierSeries v, std::vector<Singularity> singularities);

  const FourierSeries& v() const { return v_; }
  const std::vector<Singularity>& singularities() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const Singularity& operator[](std::size_t j) const { return points_[j]; }

  /// Indices j with alpha_j != 0 or beta_j != 0.
  std::vector<std::size_t> singular_indices() const;
  Complex beta_sum() const;

  /// Same points and V with the beta parameters replaced.
  FHSymbol with_betas(std::span<const Complex> betas) const;

  /// Symbol value at z = e^{i theta}. Throws DomainError outside [0, 2pi) and
  /// at a point where some factor is unbounded or undefined.
  Complex value(double theta) const;

  /// log f at anchor + offset, with the distance to a singular point at the
  /// anchor taken as `offset` exactly (see QuadratureNode). Returns
  /// (log|f|, arg) as a LogComplex.
  LogComplex value_near(double anchor, double offset) const;

  friend bool operator==(const FHSymbol&, const FHSymbol&) = default;

 private:
  FourierSeries v_;
  std::vector<Singularity> points_;
};

inline Complex eval_symbol(const FHSymbol& f, double theta) { return f.value(theta); }

/// Fourier coefficients f_j for j in [j_min, j_max].
class FourierCoefficients {
 public:
  FourierCoefficients() = default;
  FourierCoefficients(int j_min, std::vector<Complex> values);

  int j_min() const { return j_min_; }
  int j_max() const { return j_min_ + static_cast<int>(values_.size()) - 1; }
  bool contains(int j) const { return j >= j_min() && j <= j_max(); }
  /// Throws DomainError when j is outside the stored range.
  Complex operator()(int j) const;
  std::span<const Complex> values() const { return values_; }
  double max_abs() const;

 private:
  int j_min_ = 0;
  std::vector<Complex> values_;
};

struct FourierOptions {
  double tol = 1e-13;
  /// Number of panel halvings allowed after the first pass.
  int max_refinements = 6;
};

/// f_j = (1/2pi) int_0^{2pi} f(e^{i theta}) e^{-i j theta} d theta for
/// j_min <= j <= j_max, by graded composite Gauss-Legendre quadrature split at
/// every theta_j. Each coefficient is accurate to tol * max_j |f_j|; throws
/// ConvergenceError when the refinement budget is exhausted.
FourierCoefficients fourier_coefficients(const FHSymbol& f, int j_min, int j_max,
                                         const FourierOptions& options = {});

struct WienerHopfLogs {
  Complex log_b_plus{};
  Complex v0{};
  Complex log_b_minus{};
};

/// log b_+(e^{i theta}) = sum_{k>=1} V_k z^k, V_0 and log b_-(e^{i theta}) = sum_{k<=-1} V_k z^k.
WienerHopfLogs wiener_hopf_logs(const FourierSeries& v, double theta);

/// sum_{k>=1} k V_k V_{-k}.
Complex szego_pair_sum(const FourierSeries& v);

}  // namespace fhdet
