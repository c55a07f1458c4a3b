#include "sonocasimir/matching.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sonocasimir/errors.hpp"

namespace sono {

Media::Media(double n_gas, double n_liquid) : n_gas_(n_gas), n_liquid_(n_liquid) {
  if (!std::isfinite(n_gas) || !std::isfinite(n_liquid) || n_gas <= 0.0 || n_liquid <= 0.0) {
    throw DomainError("Media: refractive indices must be positive and finite");
  }
}

MatchingCoefficients matching_coefficients_from(int l, double y, double w,
                                                const std::vector<double>& j_y,
                                                const std::vector<double>& j_w,
                                                const std::vector<double>& n_w) {
  const double nu = l + 0.5;
  // z F'(z) = nu F(z) - z F_{nu+1}(z) for both J and N.
  const double jy = j_y[l];
  const double ydjy = nu * jy - y * j_y[l + 1];
  const double jw = j_w[l];
  const double wdjw = nu * jw - w * j_w[l + 1];
  const double nw = n_w[l];
  const double wdnw = nu * nw - w * n_w[l + 1];

  const double p = jy * wdnw - nw * ydjy;
  const double q = jw * ydjy - jy * wdjw;
  const double norm = std::hypot(p, q);
  if (jy == 0.0 || !std::isfinite(p) || !std::isfinite(q) || !std::isfinite(norm) || norm == 0.0) {
    return {0.0, 1.0, 0.0, true};
  }
  return {2.0 / std::numbers::pi / norm, p / norm, q / norm, false};
}

MatchingCoefficients matching_coefficients(const Media& media, ModeIndex m, double y) {
  if (!std::isfinite(y) || y <= 0.0) {
    throw DomainError("matching_coefficients: y must be positive, got " + std::to_string(y));
  }
  const double w = media.exterior_argument(y);
  const int top = m.l() + 1;
  return matching_coefficients_from(m.l(), y, w, bessel_j_half_sequence(top, y),
                                    bessel_j_half_sequence(top, w), bessel_n_half_sequence(top, w));
}

double a_squared_asymptotic(const Media& media, ModeIndex m, double y) {
  if (!std::isfinite(y) || y <= 0.0) {
    throw DomainError("a_squared_asymptotic: y must be positive, got " + std::to_string(y));
  }
  const double ng = media.n_gas();
  const double nl = media.n_liquid();
  const double phase = 2.0 * y - (m.nu() + 0.5) * std::numbers::pi;
  return 2.0 * ng * nl / (ng * ng + nl * nl + (nl * nl - ng * ng) * std::cos(phase));
}

double radial_mode_in(const Media& media, ModeIndex m, double y, double u) {
  if (!std::isfinite(y) || y <= 0.0 || !std::isfinite(u) || u < 0.0) {
    throw DomainError("radial_mode_in: requires y > 0 and u >= 0");
  }
  if (u == 0.0) return 0.0;
  const auto coef = matching_coefficients(media, m, y);
  if (u <= 1.0) return coef.a * bessel_j_half(m, y * u);
  const double wu = media.exterior_argument(y) * u;
  return coef.b * bessel_j_half(m, wu) + coef.c * bessel_n_half(m, wu);
}

double radial_mode_out(ModeIndex m, double x, double u) {
  if (!std::isfinite(x) || x <= 0.0 || !std::isfinite(u) || u < 0.0) {
    throw DomainError("radial_mode_out: requires x > 0 and u >= 0");
  }
  if (u == 0.0) return 0.0;
  return bessel_j_half(m, x * u);
}

}  // namespace sono
