#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "fhdet/hankel_weight.hpp"
#include "fhdet/symbol.hpp"

namespace fhdet {

/// Conditioning verdict carried from the oracle into harness rows.
enum class Quality { ok, ill_conditioned };
std::string_view to_string(Quality q);

/// Dense LU with partial pivoting, row-major n x n.
class DenseLu {
 public:
  DenseLu(std::vector<Complex> matrix, std::size_t n);

  std::size_t size() const { return n_; }
  bool singular() const { return singular_; }
  /// Determinant accumulated as sum log|u_ii| and sum arg u_ii.
  LogComplex log_det() const;
  /// max |U| / max |A|.
  double growth() const { return growth_; }
  /// Throws SingularSystemError if the matrix is singular.
  std::vector<Complex> solve(std::vector<Complex> rhs) const;

 private:
  std::size_t n_;
  std::vector<Complex> lu_;
  std::vector<std::size_t> perm_;
  int swaps_ = 0;
  bool singular_ = false;
  double growth_ = 1.0;
};

struct DeterminantValue {
  LogComplex value;
  int n = 0;
  Quality quality = Quality::ok;
};

/// Growth factor above which an LU determinant is flagged.
inline constexpr double kGrowthBudget = 1e8;

/// D_n = det(f_{j-k})_{j,k=0}^{n-1}; needs f_j for |j| <= n - 1.
DeterminantValue toeplitz_det(const FourierCoefficients& f, int n);
/// det(f_{j-k-shift}), i.e. D_n(z^shift f).
DeterminantValue shifted_toeplitz_det(const FourierCoefficients& f, int n, int shift);

struct HankelOptions {
  double tol = 1e-13;
  int max_refinements = 6;
};

/// det(int_{-1}^{1} x^{j+k} w(x) dx)_{j,k=0}^{n-1}, computed as the product
/// of the norms of the monic orthogonal polynomials of w (an LDL^T of the
/// moment matrix) on a graded discretization of the measure.
DeterminantValue hankel_det(const HankelWeight& w, int n, const HankelOptions& options = {});

/// The same determinant by LU of the explicit moment matrix. Only usable for
/// small n; kept as an independent cross-check.
DeterminantValue hankel_det_moments(const HankelWeight& w, int n, double tol = 1e-13);

enum class TphVariant { plus_k, minus_k2, plus_k1, minus_k1 };
std::string_view to_string(TphVariant v);
/// Throws DomainError for unknown names.
TphVariant parse_tph_variant(std::string_view name);

/// Exponents (s, t) of the endpoint factors (1 - x)^s (1 + x)^t and the
/// 2-power offset p of each Toeplitz+Hankel variant.
struct TphParameters {
  double s = 0.0;
  double t = 0.0;
  /// p = p_n * n + p_0
  int p_n = 0;
  int p_0 = 0;
};
TphParameters tph_parameters(TphVariant v);

/// det(f_{j-k} + f_{j+k}), det(f_{j-k} - f_{j+k+2}) or det(f_{j-k} +- f_{j+k+1}).
/// Throws InvariantError unless f_j = f_{-j} to 1e-10 (relative to max |f_j|).
DeterminantValue tph_det(const FourierCoefficients& f, int n, TphVariant variant);

/// Monic orthogonal polynomial data of degree k for the symbol with the given
/// coefficients (needs |j| <= k).
struct OrthoData {
  int degree = 0;
  /// chi_k^2 = D_k / D_{k+1}
  Complex chi_sq{};
  /// principal square root of chi_sq
  Complex chi{};
  /// Phi_k(z) = phi_k(z) / chi_k, coefficient of z^i at index i (last is 1).
  std::vector<Complex> monic;
  /// hat Phi_k(z) = hat phi_k(z) / chi_k.
  std::vector<Complex> hat_monic;
  Complex phi0{};
  Complex hatphi0{};
  /// Max relative residual of the orthogonality relations.
  double orthogonality_residual = 0.0;
  Quality quality = Quality::ok;
};

/// Throws SingularSystemError("determinant vanishes at this k") if D_k = 0.
OrthoData orthogonal_polynomials(const FourierCoefficients& f, int k);

/// Evaluates a polynomial from its coefficient vector with compensated summation.
Complex evaluate_polynomial(std::span<const Complex> coeffs, Complex z);

/// (d/dz)^p Phi_k(0) = p! * coefficient of z^p, p = 0..max_order.
std::vector<Complex> monic_derivatives_at_zero(const OrthoData& data, int max_order);

/// Relative residual of
///   D_n(z^ell f) = (-1)^{ell n} F_n / prod_{j=1}^{ell-1} j! * D_n(f)   (ell >= 1)
///   D_n(z^{-1} f) = (-1)^n (hat phi_n(0) / chi_n) D_n(f)               (ell = -1)
/// normalised by max(|LHS|, |RHS|, |D_n(f)|). Needs |j| <= n + ell.
double check_shift_identity(const FourierCoefficients& f, int n, int ell);
double check_shift_identity(const FHSymbol& f, int n, int ell, double tol = 1e-13);

/// Relative residual of
///   D_n(w)^2 = pi^{2n} / 4^{(n-1)^2} (chi_2n + phi_2n(0))^2 / (phi_2n(1) phi_2n(-1)) D_2n(f)
/// with f = weight_to_even_symbol(w).
double check_hankel_toeplitz_relation(const HankelWeight& w, int n, double tol = 1e-13);

/// Relative residual of the Toeplitz+Hankel to Hankel reduction
///   det(T+H) = 2^{c(n)} / pi^n * D_n(f(e^{i theta(x)}) (1 - x)^s (1 + x)^t).
double check_tph_reduction(const FHSymbol& f, int n, TphVariant variant, double tol = 1e-13);

}  // namespace fhdet
