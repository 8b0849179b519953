#pragma once

#include <vector>

#include "fhdet/quadrature.hpp"
#include "fhdet/symbol.hpp"

namespace fhdet {

/// Interior singular point of a Hankel weight at lambda in (-1, 1).
struct InteriorPoint {
  double lambda = 0.0;
  Complex alpha{};
  Complex beta{};
  friend bool operator==(const InteriorPoint&, const InteriorPoint&) = default;
};

/// w(x) = e^{U(x)} |x - 1|^{2 alpha_+} |x + 1|^{2 alpha_-}
///        prod_j |x - lambda_j|^{2 alpha_j} omega_j(x),
/// omega_j = e^{i pi beta_j} for x < lambda_j and e^{-i pi beta_j} for x > lambda_j.
///
/// U is stored through the even series V with V(e^{i theta}) = U(cos theta),
/// i.e. U(x) = V_0 + 2 sum_{k>=1} V_k T_k(x).
class HankelWeight {
 public:
  HankelWeight() = default;
  /// Interior points are sorted by decreasing lambda. Throws InvariantError
  /// if V is not even, lambda is outside (-1, 1) or repeated, Re alpha <= -1/2
  /// or Re beta is outside (-1/2, 1/2].
  HankelWeight(FourierSeries v, Complex alpha_plus, Complex alpha_minus,
               std::vector<InteriorPoint> interior);

  const FourierSeries& v() const { return v_; }
  Complex alpha_plus() const { return alpha_plus_; }
  Complex alpha_minus() const { return alpha_minus_; }
  const std::vector<InteriorPoint>& interior() const { return interior_; }

  /// U(x).
  Complex log_smooth(double x) const;
  /// w(x) for x in [-1, 1]; throws DomainError outside or where unbounded.
  Complex value(double x) const;
  /// log w(cos theta) for theta = anchor + offset in [0, pi], with exact
  /// distances for nodes anchored at 0, pi or arccos lambda_j.
  LogComplex value_at_angle(double anchor, double offset) const;

  /// Breakpoints of w(cos theta) sin theta on [0, pi].
  std::vector<Breakpoint> angle_breakpoints() const;

  friend bool operator==(const HankelWeight&, const HankelWeight&) = default;

 private:
  FourierSeries v_;
  Complex alpha_plus_{};
  Complex alpha_minus_{};
  std::vector<InteriorPoint> interior_;
};

/// The even symbol f with f(e^{i theta}) = w(cos theta) |sin theta|:
/// points 0, theta_1..theta_r, pi, 2pi - theta_r..2pi - theta_1, root
/// exponents 2 alpha_+ + 1/2 at 1 and 2 alpha_- + 1/2 at -1, alpha_j at both
/// mirror points, jumps -beta_j at theta_j and +beta_j at 2pi - theta_j.
/// The constant that the jump and root normalizations leave over is folded
/// into V_0.
FHSymbol weight_to_even_symbol(const HankelWeight& w);

/// Decomposition of an even Fisher-Hartwig symbol.
struct EvenSymbolParts {
  Complex alpha_plus{};   // at z = 1
  Complex alpha_minus{};  // at z = -1
  std::vector<Singularity> upper;  // theta in (0, pi), increasing
};

/// Throws InvariantError unless f(e^{i theta}) = f(e^{-i theta}): V even,
/// beta = 0 at z = +-1 and every upper point mirrored with equal alpha and
/// opposite beta.
EvenSymbolParts decompose_even_symbol(const FHSymbol& f, double tol = 1e-12);

/// The Hankel weight w(x) = f(e^{i theta(x)}) (1 - x)^s (1 + x)^t, x = cos theta.
HankelWeight even_symbol_to_weight(const FHSymbol& f, double s, double t);

}  // namespace fhdet
