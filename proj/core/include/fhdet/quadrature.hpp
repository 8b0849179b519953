#pragma once

#include <span>
#include <vector>

#include "fhdet/log_complex.hpp"

namespace fhdet {

/// A quadrature node at anchor + offset. Graded panels anchor their nodes on
/// the singular point so that the distance to it is `offset` exactly, even
/// when it is far below the spacing of doubles near the anchor.
struct QuadratureNode {
  double anchor = 0.0;
  double offset = 0.0;
  double weight = 0.0;

  double position() const { return anchor + offset; }
};

/// A breakpoint of a piecewise-analytic integrand. Near `position` the
/// integrand behaves like |x - position|^exponent times an analytic function
/// on either side (a jump is allowed).
struct Breakpoint {
  double position = 0.0;
  Complex exponent{};
};

struct GaussLegendreRule {
  std::vector<double> nodes;    // on (-1, 1), increasing
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int order);

/// True when |x|^exponent is analytic at 0 (exponent a non-negative even integer).
bool is_smooth_power(Complex exponent);

struct CompositeRuleOptions {
  /// Maximum width of a regular panel.
  double panel_width = 0.5;
  /// Target absolute accuracy (relative to the integrand scale) that sets the
  /// depth of the geometric grading near non-smooth breakpoints.
  double tol = 1e-14;
  int order = 20;
};

/// Composite Gauss-Legendre rule on [lo, hi]. The interval is split at every
/// breakpoint inside it; panels adjacent to a non-smooth breakpoint are
/// refined geometrically with ratio 1/2 toward it. Breakpoints equal to lo or
/// hi only control the grading at that end.
std::vector<QuadratureNode> composite_rule(double lo, double hi,
                                           std::span<const Breakpoint> breakpoints,
                                           const CompositeRuleOptions& options);

}  // namespace fhdet
