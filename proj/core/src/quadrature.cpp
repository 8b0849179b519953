#include "fhdet/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "fhdet/errors.hpp"
#include "fhdet/specfun.hpp"

namespace fhdet {

GaussLegendreRule gauss_legendre(int order) {
  if (order < 1) throw DomainError("gauss_legendre: order must be positive");
  GaussLegendreRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(constants::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (order == 1) p0 = 1.0;
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute the derivative at the converged node
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= order; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = order == 1 ? 1.0 : order * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[order - 1 - i] = x;
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  return rule;
}

bool is_smooth_power(Complex exponent) {
  if (exponent.imag() != 0.0) return false;
  const double p = exponent.real();
  if (p < 0.0) return false;
  const double half = 0.5 * p;
  return half == std::floor(half);
}

namespace {

struct Panel {
  double anchor;  // nodes are anchor + offset
  double lo;      // offsets relative to anchor
  double hi;
};

void append_panel(const Panel& panel, const GaussLegendreRule& gl,
                  std::vector<QuadratureNode>& out) {
  const double mid = 0.5 * (panel.lo + panel.hi);
  const double half = 0.5 * (panel.hi - panel.lo);
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    out.push_back({panel.anchor, mid + half * gl.nodes[i], half * gl.weights[i]});
  }
}

int grading_depth(double width, Complex exponent, double tol) {
  // The innermost panel carries roughly width^(1 + Re p); make it negligible.
  const double decay = std::max(1.0 + exponent.real(), 0.05);
  const double bits = std::log2(std::max(width, 1e-300)) - std::log2(tol) + 4.0;
  return std::clamp(static_cast<int>(std::ceil(bits / decay)), 1, 1000);
}

}  // namespace

std::vector<QuadratureNode> composite_rule(double lo, double hi,
                                           std::span<const Breakpoint> breakpoints,
                                           const CompositeRuleOptions& options) {
  if (!(hi > lo)) throw DomainError("composite_rule: empty interval");
  if (!(options.panel_width > 0.0) || !(options.tol > 0.0)) {
    throw DomainError("composite_rule: panel width and tolerance must be positive");
  }

  // Collect split points with the exponent governing each side.
  struct Split {
    double position;
    Complex exponent;
  };
  std::vector<Split> splits{{lo, 0.0}, {hi, 0.0}};
  for (const auto& b : breakpoints) {
    if (b.position < lo || b.position > hi) continue;
    auto it = std::find_if(splits.begin(), splits.end(),
                           [&](const Split& s) { return s.position == b.position; });
    if (it != splits.end()) {
      if (is_smooth_power(it->exponent)) it->exponent = b.exponent;
    } else {
      splits.push_back({b.position, b.exponent});
    }
  }
  std::sort(splits.begin(), splits.end(),
            [](const Split& a, const Split& b) { return a.position < b.position; });

  const GaussLegendreRule gl = gauss_legendre(options.order);
  std::vector<QuadratureNode> nodes;

  for (std::size_t s = 0; s + 1 < splits.size(); ++s) {
    const Split& left = splits[s];
    const Split& right = splits[s + 1];
    const double length = right.position - left.position;
    if (length <= 0.0) continue;
    const bool grade_left = !is_smooth_power(left.exponent);
    const bool grade_right = !is_smooth_power(right.exponent);

    double start = left.position;
    double stop = right.position;
    const double edge = std::min(options.panel_width, length / (grade_left && grade_right ? 3.0 : 2.0));

    if (grade_left) {
      const int depth = grading_depth(edge, left.exponent, options.tol);
      double outer = edge;
      for (int k = 0; k < depth; ++k) {
        append_panel({left.position, 0.5 * outer, outer}, gl, nodes);
        outer *= 0.5;
      }
      append_panel({left.position, 0.0, outer}, gl, nodes);
      start = left.position + edge;
    }
    if (grade_right) {
      const int depth = grading_depth(edge, right.exponent, options.tol);
      double outer = edge;
      for (int k = 0; k < depth; ++k) {
        append_panel({right.position, -outer, -0.5 * outer}, gl, nodes);
        outer *= 0.5;
      }
      append_panel({right.position, -outer, 0.0}, gl, nodes);
      stop = right.position - edge;
    }

    const double middle = stop - start;
    if (middle > 0.0) {
      const int count = std::max(1, static_cast<int>(std::ceil(middle / options.panel_width)));
      const double width = middle / count;
      for (int p = 0; p < count; ++p) {
        // both ends from the same formula so neighbouring panels share endpoints
        const double a = start + p * width;
        const double b = p + 1 == count ? stop : start + (p + 1) * width;
        append_panel({0.0, a, b}, gl, nodes);
      }
    }
  }
  return nodes;
}

}  // namespace fhdet
