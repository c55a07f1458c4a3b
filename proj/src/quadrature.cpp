#include "sonocasimir/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <string>

#include "sonocasimir/errors.hpp"

namespace sono {

QuadratureRule composite_gauss_legendre(double a, double b, double panel_width) {
  if (!(b > a) || !(panel_width > 0.0)) {
    throw DomainError("composite_gauss_legendre: requires a < b and panel_width > 0");
  }
  using Rule = boost::math::quadrature::gauss<double, kPanelOrder>;
  const auto& abscissa = Rule::abscissa();  // non-negative half, 0 excluded for even order
  const auto& weight = Rule::weights();

  const auto panels = static_cast<std::size_t>(std::ceil((b - a) / panel_width - 1e-12));
  const double h = (b - a) / static_cast<double>(panels);
  QuadratureRule rule;
  rule.nodes.reserve(panels * kPanelOrder);
  rule.weights.reserve(panels * kPanelOrder);
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + h * static_cast<double>(p);
    const double mid = lo + 0.5 * h;
    // Ascending node order within a panel.
    for (std::size_t k = abscissa.size(); k-- > 0;) {
      rule.nodes.push_back(mid - 0.5 * h * abscissa[k]);
      rule.weights.push_back(0.5 * h * weight[k]);
    }
    for (std::size_t k = 0; k < abscissa.size(); ++k) {
      rule.nodes.push_back(mid + 0.5 * h * abscissa[k]);
      rule.weights.push_back(0.5 * h * weight[k]);
    }
  }
  return rule;
}

AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                  double tol) {
  using Rule = boost::math::quadrature::gauss_kronrod<double, 61>;
  AdaptiveResult out;
  out.value = Rule::integrate(f, a, b, 20, tol, &out.error_estimate, &out.l1_norm);
  if (!std::isfinite(out.value) || out.error_estimate > 1e3 * tol * std::max(out.l1_norm, 1e-300)) {
    throw QuadratureError("integrate_adaptive: no convergence on [" + std::to_string(a) + ", " +
                          std::to_string(b) + "], error estimate " +
                          std::to_string(out.error_estimate));
  }
  return out;
}

}  // namespace sono
