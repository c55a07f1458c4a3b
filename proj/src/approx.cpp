#include "sonocasimir/approx.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "sonocasimir/errors.hpp"
#include "sonocasimir/parallel.hpp"
#include "sonocasimir/spectra.hpp"

namespace sono {

namespace {
constexpr double kPlateau = 1.0 / (2.0 * std::numbers::pi * std::numbers::pi);
}

double d_exact(double x, const TruncationPolicy& policy) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError("d_exact: x must be positive, got " + std::to_string(x));
  }
  return detail::kernel_value(x, x, policy, Media(1.0, 1.0), AFactor::unit).value;
}

double d_approx(double x) {
  if (!(x >= 1.0)) return 0.0;
  const double s = (x - 1.0) * (x - 1.0);
  return kPlateau * 2.0 * s / (3.0 + 2.0 * s);
}

double sinc_kernel(double t) {
  const double a = std::numbers::pi * t / 4.0;
  if (std::abs(a) < 1e-4) return 1.0 - a * a / 3.0;
  const double r = std::sin(a) / a;
  return r * r;
}

double f_factorized(double x, double y) {
  const double s = x + y - 2.0;
  if (!(s >= 0.0)) return 0.0;
  return kPlateau * s * s / (6.0 + s * s) * sinc_kernel(x - y);
}

GridSpec GridSpec::defaults_for(const Scenario& scenario) {
  GridSpec g;
  g.x_hi = 1.2 * scenario.x_max();
  g.y_hi = g.x_hi;
  return g;
}

std::string GridSpec::describe() const {
  std::ostringstream os;
  os << nx << "x" << ny << " uniform over [0," << x_hi << "]x[0," << y_hi << "]";
  return os.str();
}

ApproximationReport approximation_report(const Media& media, const Scenario& scenario,
                                         const TruncationPolicy& policy, const GridSpec& grid,
                                         int threads) {
  if (grid.nx < 2 || grid.ny < 2 || !(grid.x_hi > 0.0) || !(grid.y_hi > 0.0)) {
    throw DomainError("approximation_report: grid needs nx, ny >= 2 and positive extents");
  }
  ApproximationReport report;
  report.grid = grid.describe();

  const double dx = grid.x_hi / (grid.nx - 1);
  const double dy = grid.y_hi / (grid.ny - 1);
  std::vector<double> row_max(grid.nx, 0.0);
  std::vector<double> row_sq(grid.nx, 0.0);
  parallel_for(grid.nx, threads, [&](std::size_t i) {
    const double x = dx * static_cast<double>(i);
    double mx = 0.0;
    double sq = 0.0;
    for (int k = 0; k < grid.ny; ++k) {
      const double y = dy * k;
      const double err =
          std::abs(detail::kernel_value(x, y, policy, media, AFactor::unit).value -
                   f_factorized(x, y));
      mx = std::max(mx, err);
      sq += err * err;
    }
    row_max[i] = mx;
    row_sq[i] = sq;
  });
  double total_sq = 0.0;
  for (int i = 0; i < grid.nx; ++i) {
    report.max_abs_error = std::max(report.max_abs_error, row_max[i]);
    total_sq += row_sq[i];
  }
  report.rms_error = std::sqrt(total_sq / (static_cast<double>(grid.nx) * grid.ny));

  const double x_top = grid.energy_x_max > 0.0 ? grid.energy_x_max : 3.0 * scenario.x_max();
  const auto xs = uniform_grid(x_top, x_top / (grid.energy_points - 1));
  const QuadSpec quad;
  const auto exact = spectrum_finite(media, scenario, xs, quad, KernelMode::exact, policy,
                                     AFactor::unit, threads);
  const auto fact = spectrum_finite(media, scenario, xs, quad, KernelMode::factorized, policy,
                                    AFactor::unit, threads);
  report.energy_exact_hck = photon_budget_from_table(exact, media, scenario).e_total_hck;
  report.energy_factorized_hck = photon_budget_from_table(fact, media, scenario).e_total_hck;
  report.energy_discrepancy_fraction =
      report.energy_exact_hck > 0.0
          ? std::abs(report.energy_exact_hck - report.energy_factorized_hck) / report.energy_exact_hck
          : 0.0;
  return report;
}

}  // namespace sono
