#pragma once

#include <optional>
#include <vector>

#include "fhdet/exact.hpp"
#include "fhdet/hankel_weight.hpp"
#include "fhdet/representation.hpp"
#include "fhdet/symbol.hpp"

namespace fhdet {

/// Leading large-n term of D_n(f) for a symbol whose betas all lie in one
/// interval of length < 1, evaluated without any hypothesis checks. Uses
/// n^x = exp(x ln n), |.|^x with the real positive base,
/// (z_k / (z_j e^{i pi}))^x = exp(i x (theta_k - theta_j - pi)) for j < k and
/// b_+-^x = exp(x log b_+-). A Barnes G factor at a zero makes the whole term
/// an exact zero.
LogComplex fh_leading_term(const FHSymbol& f, int n);

/// fh_leading_term of the representation's symbol f(z; n_0, ..., n_m),
/// without the prefactor prod z_j^{n_j}. Throws HypothesisError unless the
/// effective betas have seminorm < 1 - 1e-12 and DegenerateRepresentationError
/// for degenerate representations.
LogComplex szego_fh_leading(const Representation& rep, int n);

struct AsymptoticTerm {
  Representation rep;
  /// (prod z_j^{n_j})^n R(f(z; n_0, ..., n_m))
  LogComplex log_value;
};

struct AsymptoticResult {
  int n = 0;
  LogComplex value;
  std::vector<AsymptoticTerm> terms;
  /// max over singular j, k of n^{2 Re(beta_j - beta_k - 1)} for the first member of M.
  double delta = 0.0;
};

/// Sum over the minimizing set M of (prod z_j^{n_j})^n R(f(z; n)). Throws
/// DegenerateRepresentationError naming the first degenerate member.
AsymptoticResult basor_tracy_sum(const FHSymbol& f, int n);

/// max over singular j, k of n^{2 Re(beta_j - beta_k - 1)} (n^{-2} when
/// there is at most one singular point).
double delta_scale(const FHSymbol& f, int n);

/// Branch of (z_j / z_p)^{alpha_p} inside nu_j.
enum class NuBranch {
  /// exp(i alpha_p (theta_j - theta_p)) with theta in [0, 2 pi)
  raw,
  /// the angle difference reduced to (-pi, pi]
  reduced,
};

struct PolynomialAsymptotics {
  /// chi_{n-1}^2
  Complex chi_sq{};
  Complex phi0_over_chi{};
  Complex hatphi0_over_chi{};
  double delta = 0.0;
};

/// Leading large-n behaviour of chi_{n-1}^2, phi_n(0)/chi_n and
/// hat phi_n(0)/chi_n. Terms whose Gamma reciprocal sits at a pole are
/// exactly zero. Throws HypothesisError if some |Re beta_j - Re beta_k| >= 1
/// or alpha_j +- beta_j is a negative integer.
PolynomialAsymptotics polynomial_asymptotics(const FHSymbol& f, int n,
                                             NuBranch branch = NuBranch::raw);

/// The nu_j factors of the polynomial asymptotics, one per point of f.
std::vector<Complex> nu_factors(const FHSymbol& f, NuBranch branch = NuBranch::raw);

/// Asymptotics of D_n(f^+-) where f^+- is base with beta_{j0} shifted by
/// sign = +-1:
///   z_{j0}^{-+n} sum_p z_{jp}^{+-n} R_{jp,+-},
/// the sum running over the points whose Re beta is extremal (minimal for +,
/// maximal for -) and R_{j,+-} the leading term with beta_j shifted by +-1.
/// Throws HypothesisError unless base has at least two singular points,
/// Re beta_j in (-1/2, 1/2], alpha_j +- beta_j != 0, z_{j0} singular and
/// f_pm is the shifted base.
LogComplex bt1_asymptotic(const FHSymbol& f_pm, const FHSymbol& base, std::size_t j0,
                          int sign, int n);

/// D_n(1) = 2^{n^2} prod_{k=0}^{n-1} k!^3 / (n + k)! for the weight 1 on [-1, 1].
LogComplex legendre_hankel_det(int n);
/// pi^{n + 1/2} G(1/2)^2 / (2^{n(n-1)} n^{1/4}).
LogComplex legendre_hankel_asymptotic(int n);

/// Leading term of the Hankel determinant of w, with the exact D_n(1) factor.
/// Throws HypothesisError when some |Re beta_j| >= 1/2.
LogComplex hankel_asymptotic(const HankelWeight& w, int n);

/// Leading term of the Toeplitz+Hankel determinant of an even symbol.
/// Throws InvariantError if f is not even and HypothesisError when some
/// |Re beta_j| >= 1/2.
LogComplex tph_asymptotic(const FHSymbol& f, int n, TphVariant variant);

}  // namespace fhdet
