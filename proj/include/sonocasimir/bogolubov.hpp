#pragma once

// Exact (truncated partial-wave sum) Bogolubov kernel
//
//   F(x, y) = sum_{l>=1} (2l+1) w_l W(x,y)^2 / (x^2 - y^2)^2,
//
// with W the pseudo-Wronskian of J_{l+1/2} and w_l = 1 or |A_l(y)|^2.

#include <optional>
#include <vector>

#include "sonocasimir/matching.hpp"

namespace sono {

/// Bubble radius R [m] and wavenumber cutoff K [rad/m].
class Scenario {
 public:
  Scenario(double radius_m, double cutoff_per_m);

  /// R in micrometres, K = 2 pi / lambda_cut with lambda_cut in nanometres.
  static Scenario from_lab_units(double radius_um, double cutoff_wavelength_nm);

  double radius() const noexcept { return radius_; }
  double cutoff() const noexcept { return cutoff_; }
  double x_max() const noexcept { return radius_ * cutoff_; }
  double radius_um() const noexcept { return radius_ * 1e6; }
  double cutoff_nm() const noexcept;

  friend bool operator==(const Scenario&, const Scenario&) = default;

 private:
  double radius_;
  double cutoff_;
};

enum class AFactor { unit, exact };

struct TruncationPolicy {
  enum class Rule { adaptive, fixed };

  Rule rule = Rule::adaptive;
  int fixed_l_max = 0;
  double tail_epsilon = 1e-8;

  static TruncationPolicy adaptive(double tail_epsilon = 1e-8);
  static TruncationPolicy fixed(int l_max, double tail_epsilon = 1e-8);

  /// Throws DomainError unless tail_epsilon in (0, 1e-3] and fixed_l_max >= 1 for fixed.
  void validate() const;
};

/// floor(R K): the largest partial wave an emitted photon can carry.
int l_max_physical(const Scenario& scenario);

struct KernelValue {
  double value = 0.0;
  int l_used = 0;
};

double f_exact(double x, double y, const TruncationPolicy& policy, const Media& media,
               AFactor a_factor = AFactor::unit);

/// f_exact plus the number of partial waves summed.
KernelValue f_exact_detail(double x, double y, const TruncationPolicy& policy, const Media& media,
                           AFactor a_factor = AFactor::unit);

/// |beta|^2 = (R/c)^2 beta0^2(x, y).
struct BetaSquared {
  double beta0_sq = 0.0;      // dimensionless
  double time_scale_sq = 0.0; // (R/c)^2 [s^2]
  double value() const noexcept { return beta0_sq * time_scale_sq; }
};

BetaSquared beta_squared(const Media& media, const Scenario& scenario, double x, double y,
                         const TruncationPolicy& policy, AFactor a_factor = AFactor::unit);

/// (n_l^2 - n_g^2)^2 / (n_l^2 n_g^2) (y^2 / (n_g x + n_l y))^2: the factor
/// multiplying F in beta0^2.
double beta_prefactor(const Media& media, double x, double y);

/// Dimensionless radial overlap  int_0^inf u G_out(x u) G_in(u) du  (units of
/// R^2), in closed form:
///   A ((n_l^2 - n_g^2) / n_g^2) y^2 W(x, y) / ((x^2 - y^2)(w^2 - x^2)),
/// w = (n_l / n_g) y. The x = y point uses the diagonal limit; x = w is a
/// genuine pole and raises DomainError.
double overlap_integral_closed(const Media& media, ModeIndex m, double x, double y);

/// [u W_{lambda mu}(u) / (mu^2 - lambda^2)]_a^b for G = J_{l+1/2}, which
/// equals int_a^b u J(lambda u) J(mu u) du.
double overlap_closed_form(ModeIndex m, double lambda, double mu, double a, double b);

/// |quadrature - closed form| / max(|closed form|, 1e-300) for the finite
/// interval identity. Quadrature failure raises QuadratureError.
double overlap_identity_check(ModeIndex m, double lambda, double mu, double a, double b);

namespace detail {

/// J_{l+1/2}(z) for l = 0..cap+1 plus optional |A_l(z)|^2 weights (exact
/// A-factor, z interpreted as the interior argument y).
struct BesselColumn {
  double z = 0.0;
  std::vector<double> j;
  std::vector<double> a_squared;  // empty in unit mode; index l
  int cap() const noexcept { return static_cast<int>(j.size()) - 2; }
};

BesselColumn make_column(double z, int cap, const Media* media_for_weights);

/// Partial-wave sum with a given policy. Returns std::nullopt if the adaptive
/// rule had not terminated by the columns' cap.
std::optional<KernelValue> sum_kernel(const BesselColumn& xc, const BesselColumn& yc,
                                      const TruncationPolicy& policy, const Media& media,
                                      AFactor a_factor);

/// Cap large enough for the adaptive rule at (x, y) in the common case.
int suggested_cap(double x, double y, const Media& media, AFactor a_factor);

/// F(x, y) with x, y >= 0 (zero on the axes).
KernelValue kernel_value(double x, double y, const TruncationPolicy& policy, const Media& media,
                         AFactor a_factor);

}  // namespace detail

}  // namespace sono
