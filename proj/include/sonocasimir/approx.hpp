#pragma once

// Semi-analytic approximants of the Bogolubov kernel: the diagonal D(x), its
// rational fit, the sinc^2 transverse kernel and the factorized F.

#include <string>

#include "sonocasimir/bogolubov.hpp"

namespace sono {

/// D(x) = F(x, x) summed exactly (unit A-factor).
double d_exact(double x, const TruncationPolicy& policy);

/// Theta(x - 1) (1 / 2 pi^2) 2 (x - 1)^2 / (3 + 2 (x - 1)^2).
double d_approx(double x);

/// sin^2(pi t / 4) / (pi t / 4)^2, equal to 1 at t = 0.
double sinc_kernel(double t);

/// Theta(x + y - 2) (1 / 2 pi^2) (x + y - 2)^2 / (6 + (x + y - 2)^2) sinc_kernel(x - y).
/// Defined for x, y >= 0.
double f_factorized(double x, double y);

/// Sampling grid for kernel comparisons, uniform over [0, x_hi] x [0, y_hi].
struct GridSpec {
  double x_hi = 0.0;
  double y_hi = 0.0;
  int nx = 201;
  int ny = 201;
  /// Energy comparison integrates spectra over [0, energy_x_max] with
  /// energy_points samples; energy_x_max <= 0 selects 3 R K.
  double energy_x_max = 0.0;
  int energy_points = 2001;

  /// 201 x 201 over [0, 1.2 y_max]^2 with y_max = R K.
  static GridSpec defaults_for(const Scenario& scenario);
  std::string describe() const;
};

struct ApproximationReport {
  double max_abs_error = 0.0;
  double rms_error = 0.0;
  double energy_discrepancy_fraction = 0.0;
  std::string grid;
  // Energies behind the discrepancy, in units of hbar c K.
  double energy_exact_hck = 0.0;
  double energy_factorized_hck = 0.0;
};

ApproximationReport approximation_report(const Media& media, const Scenario& scenario,
                                         const TruncationPolicy& policy, const GridSpec& grid,
                                         int threads = 0);

}  // namespace sono
