#pragma once

// Photon spectra dN/dx (x = n_liquid w_out R / c), budgets and the static
// bulk Casimir energy used as an energy-balance comparator.

#include <string>
#include <vector>

#include "sonocasimir/bogolubov.hpp"

namespace sono {

/// hbar c in eV nm.
inline constexpr double kHbarCEvNm = 197.3269804;

/// hbar c K in eV for the scenario's cutoff.
double hbar_c_k_ev(const Scenario& scenario);

enum class KernelMode { exact, factorized, infinite };

const char* to_string(KernelMode mode);
const char* to_string(AFactor a_factor);
KernelMode kernel_mode_from_string(const std::string& s);
AFactor a_factor_from_string(const std::string& s);

struct SpectrumPoint {
  double x = 0.0;
  double dndx = 0.0;
};

struct SpectrumTable {
  SpectrumTable(KernelMode mode, AFactor a_factor, Media media, Scenario scenario)
      : mode(mode), a_factor(a_factor), media(media), scenario(scenario) {}

  KernelMode mode;
  AFactor a_factor;
  Media media;
  Scenario scenario;
  std::vector<SpectrumPoint> points;
};

struct PhotonBudget {
  double n_total = 0.0;
  double e_total_hck = 0.0;
  double e_total_ev = 0.0;
  double e_avg_hck = 0.0;
  double e_avg_ev = 0.0;
  std::vector<std::string> warnings;
};

struct StaticEnergy {
  double e_hck = 0.0;
  double e_ev = 0.0;
  /// e / <E> with <E> = (3/4) hbar c K / n_liquid; order-of-magnitude only.
  double n_est = 0.0;
};

/// Composite Gauss-Legendre settings for the y integral.
struct QuadSpec {
  double panel_width = 1.0;
  /// Also integrate with half-width panels and fail if the two differ by
  /// more than refine_tolerance (relative).
  bool refine_check = false;
  double refine_tolerance = 1e-3;
};

/// x_i = i dx for i = 0..round(x_max / dx).
std::vector<double> uniform_grid(double x_max, double dx);

/// [1 / (2 pi n_l n_g)] [(n_l - n_g) / (n_l n_g)]^2 x^2 Theta(R K - x).
double spectrum_infinite(const Media& media, const Scenario& scenario, double x);

/// dN/dx = [(n_l^2 - n_g^2)^2 / (n_l^3 n_g^3)] int_0^{RK} (y^2 / (n_g x + n_l y))^2 kernel(x, y) dy,
/// or the infinite-volume closed form for KernelMode::infinite.
SpectrumTable spectrum_finite(const Media& media, const Scenario& scenario,
                              const std::vector<double>& x_grid, const QuadSpec& quad,
                              KernelMode kernel, const TruncationPolicy& policy,
                              AFactor a_factor = AFactor::unit, int threads = 0);

PhotonBudget photon_budget_infinite(const Media& media, const Scenario& scenario);

/// Trapezoid integration of N and E = hbar c K / (n_l R K) int x dN/dx dx.
PhotonBudget photon_budget_from_table(const SpectrumTable& table, const Media& media,
                                      const Scenario& scenario);
inline PhotonBudget photon_budget_from_table(const SpectrumTable& table) {
  return photon_budget_from_table(table, table.media, table.scenario);
}

/// (1 / 6 pi) (R K)^3 (1 / n_g - 1 / n_l) hbar c K.
StaticEnergy schwinger_static_energy(const Media& media, const Scenario& scenario);

}  // namespace sono
