#pragma once

#include <functional>
#include <vector>

namespace sono {

/// Nodes and weights of a composite quadrature rule.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

inline constexpr int kPanelOrder = 16;

/// 16-point Gauss-Legendre on ceil((b - a) / panel_width) equal panels.
QuadratureRule composite_gauss_legendre(double a, double b, double panel_width);

struct AdaptiveResult {
  double value = 0.0;
  double error_estimate = 0.0;
  double l1_norm = 0.0;
};

/// Adaptive Gauss-Kronrod (61 point) on [a, b]. Throws QuadratureError when
/// the error estimate stays above tol relative to the L1 norm.
AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                  double tol = 1e-13);

}  // namespace sono
