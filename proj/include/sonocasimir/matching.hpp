#pragma once

// "In"-basis matching at the bubble wall. All radial quantities are in units
// of the bubble radius: u = r / R, interior argument y = n_gas w_in R / c,
// exterior argument w = (n_liquid / n_gas) y.

#include "sonocasimir/specfun.hpp"

namespace sono {

/// Refractive indices inside (gas) and outside (liquid) the bubble.
class Media {
 public:
  Media(double n_gas, double n_liquid);

  double n_gas() const noexcept { return n_gas_; }
  double n_liquid() const noexcept { return n_liquid_; }
  double eps_inside() const noexcept { return n_gas_ * n_gas_; }
  double eps_outside() const noexcept { return n_liquid_ * n_liquid_; }
  /// Exterior argument w for interior argument y.
  double exterior_argument(double y) const noexcept { return n_liquid_ / n_gas_ * y; }

  friend bool operator==(const Media&, const Media&) = default;

 private:
  double n_gas_;
  double n_liquid_;
};

struct MatchingCoefficients {
  double a = 1.0;
  double b = 1.0;
  double c = 0.0;
  /// Set when l >> y pushed the wall Bessel values out of double range; the
  /// mode contributes nothing at working precision and a = 0, b = 1, c = 0.
  bool suppressed = false;
};

/// Solves continuity of G and dG/du at u = 1 with B^2 + C^2 = 1 and A > 0.
MatchingCoefficients matching_coefficients(const Media& media, ModeIndex m, double y);

/// Same, from precomputed sequences J_{l+1/2}(y), J_{l+1/2}(w), N_{l+1/2}(w)
/// covering orders l and l + 1.
MatchingCoefficients matching_coefficients_from(int l, double y, double w,
                                                const std::vector<double>& j_y,
                                                const std::vector<double>& j_w,
                                                const std::vector<double>& n_w);

/// Large-argument form of |A_nu|^2:
/// 2 n_g n_l / (n_g^2 + n_l^2 + (n_l^2 - n_g^2) cos(2y - (nu + 1/2) pi)).
/// Accurate for y > nu + 10; its average over one period is exactly 1.
double a_squared_asymptotic(const Media& media, ModeIndex m, double y);

/// G_in(u): A J(y u) inside, B J(w u) + C N(w u) outside.
double radial_mode_in(const Media& media, ModeIndex m, double y, double u);

/// G_out(u) = J(x u).
double radial_mode_out(ModeIndex m, double x, double u);

}  // namespace sono
