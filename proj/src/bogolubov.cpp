#include "sonocasimir/bogolubov.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sonocasimir/errors.hpp"
#include "sonocasimir/quadrature.hpp"

namespace sono {

namespace {

constexpr double kSpeedOfLight = 299792458.0;  // m/s

void require_positive(double v, const char* what) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw DomainError(std::string(what) + ": arguments must be positive and finite, got " +
                      std::to_string(v));
  }
}

double diagonal_tolerance(double x) { return 1e-6 * std::max(1.0, x); }

// Estimated size of the l-th summand once nu is in the large-order regime,
// built from J_lo(nu, s) J_lo(nu + 1, s) / s with s = sqrt(x y).
double tail_term(int l, double s) {
  const double nu = l + 0.5;
  const double core = bessel_j_large_order(nu, s) * bessel_j_large_order(nu + 1.0, s) / s;
  return (2 * l + 1) * core * core;
}

double effective_y(double y, const Media& media, AFactor a_factor) {
  // |A_l(y)|^2 grows like (n_l / n_g)^(2 nu) once the exterior is evanescent.
  if (a_factor == AFactor::exact) return y * std::max(1.0, media.n_liquid() / media.n_gas());
  return y;
}

}  // namespace

Scenario::Scenario(double radius_m, double cutoff_per_m) : radius_(radius_m), cutoff_(cutoff_per_m) {
  if (!std::isfinite(radius_m) || !std::isfinite(cutoff_per_m) || radius_m <= 0.0 ||
      cutoff_per_m <= 0.0) {
    throw DomainError("Scenario: radius and cutoff must be positive and finite");
  }
}

Scenario Scenario::from_lab_units(double radius_um, double cutoff_wavelength_nm) {
  if (!std::isfinite(cutoff_wavelength_nm) || cutoff_wavelength_nm <= 0.0) {
    throw DomainError("Scenario: cutoff wavelength must be positive and finite");
  }
  return {radius_um * 1e-6, 2.0 * std::numbers::pi / (cutoff_wavelength_nm * 1e-9)};
}

double Scenario::cutoff_nm() const noexcept { return 2.0 * std::numbers::pi / cutoff_ * 1e9; }

TruncationPolicy TruncationPolicy::adaptive(double tail_epsilon) {
  TruncationPolicy p;
  p.tail_epsilon = tail_epsilon;
  p.validate();
  return p;
}

TruncationPolicy TruncationPolicy::fixed(int l_max, double tail_epsilon) {
  TruncationPolicy p;
  p.rule = Rule::fixed;
  p.fixed_l_max = l_max;
  p.tail_epsilon = tail_epsilon;
  p.validate();
  return p;
}

void TruncationPolicy::validate() const {
  if (!(tail_epsilon > 0.0 && tail_epsilon <= 1e-3)) {
    throw DomainError("TruncationPolicy: tail_epsilon must lie in (0, 1e-3]");
  }
  if (rule == Rule::fixed && fixed_l_max < 1) {
    throw DomainError("TruncationPolicy: fixed_l_max must be >= 1");
  }
}

int l_max_physical(const Scenario& scenario) {
  return static_cast<int>(std::floor(scenario.x_max()));
}

namespace detail {

BesselColumn make_column(double z, int cap, const Media* media_for_weights) {
  BesselColumn col;
  col.z = z;
  if (z <= 0.0) {
    col.j.assign(static_cast<std::size_t>(cap) + 2, 0.0);
    if (media_for_weights) col.a_squared.assign(static_cast<std::size_t>(cap) + 1, 0.0);
    return col;
  }
  col.j = bessel_j_half_sequence(cap + 1, z);
  if (media_for_weights) {
    const double w = media_for_weights->exterior_argument(z);
    const auto jw = bessel_j_half_sequence(cap + 1, w);
    const auto nw = bessel_n_half_sequence(cap + 1, w);
    col.a_squared.assign(static_cast<std::size_t>(cap) + 1, 0.0);
    for (int l = 1; l <= cap; ++l) {
      const auto coef = matching_coefficients_from(l, z, w, col.j, jw, nw);
      col.a_squared[l] = coef.a * coef.a;
    }
  }
  return col;
}

int suggested_cap(double x, double y, const Media& media, AFactor a_factor) {
  const double y_eff = effective_y(y, media, a_factor);
  const double s = std::sqrt(x * y_eff);
  const int by_extent = static_cast<int>(std::ceil(std::max(x, y_eff))) + 10;
  const int by_order = static_cast<int>(std::ceil(std::numbers::e * s / 2.0)) + 2;
  return std::max(by_extent, by_order) + 40;
}

std::optional<KernelValue> sum_kernel(const BesselColumn& xc, const BesselColumn& yc,
                                      const TruncationPolicy& policy, const Media& media,
                                      AFactor a_factor) {
  const double x = xc.z;
  const double y = yc.z;
  if (x <= 0.0 || y <= 0.0) return KernelValue{0.0, 0};

  const bool exact = a_factor == AFactor::exact;
  const bool fixed = policy.rule == TruncationPolicy::Rule::fixed;
  const int cap = std::min(xc.cap(), yc.cap());
  if (fixed && policy.fixed_l_max > cap) return std::nullopt;

  const bool diagonal = std::abs(x - y) < diagonal_tolerance(x);
  const double mid = 0.5 * (x + y);
  BesselColumn mid_column;
  const std::vector<double>* jm = &xc.j;
  if (diagonal && x != y) {
    mid_column = make_column(mid, cap, nullptr);
    jm = &mid_column.j;
  }
  const double denom = diagonal ? (x + y) * (x + y) : (x * x - y * y) * (x * x - y * y);

  const double y_eff = effective_y(y, media, a_factor);
  const double s = std::sqrt(x * y_eff);
  const int l_min = static_cast<int>(std::ceil(std::max(x, y_eff))) + 10;
  const double tail_safety = exact ? 2.0 : 1.0;
  const int last = fixed ? policy.fixed_l_max : cap;

  double sum = 0.0;
  for (int l = 1; l <= last; ++l) {
    const double weight = exact ? yc.a_squared[l] : 1.0;
    const double core = diagonal ? detail::diagonal_from(l, mid, *jm)
                                 : detail::pseudo_wronskian_from(l, x, xc.j, y, yc.j);
    sum += (2 * l + 1) * weight * core * core / denom;

    if (fixed || l < l_min) continue;
    const double nu_next = l + 1.5;
    if (nu_next * nu_next <= x * y_eff || nu_next <= std::numbers::e * s / 2.0) continue;
    const double t1 = tail_safety * tail_term(l + 1, s);
    const double t2 = tail_safety * tail_term(l + 2, s);
    if (t1 == 0.0) return KernelValue{sum, l};  // estimate underflowed
    if (!(t2 < t1)) continue;
    const double tail = t1 / (1.0 - t2 / t1);
    if (tail <= policy.tail_epsilon * sum || tail < 1e-300) return KernelValue{sum, l};
  }
  if (fixed) return KernelValue{sum, last};
  return std::nullopt;
}

KernelValue kernel_value(double x, double y, const TruncationPolicy& policy, const Media& media,
                         AFactor a_factor) {
  policy.validate();
  if (x <= 0.0 || y <= 0.0) return {0.0, 0};
  const bool fixed = policy.rule == TruncationPolicy::Rule::fixed;
  if (fixed && policy.fixed_l_max < static_cast<int>(std::floor(std::max(x, y)))) {
    throw TruncationError("f_exact: fixed l_max = " + std::to_string(policy.fixed_l_max) +
                          " is below max(x, y) = " + std::to_string(std::max(x, y)));
  }
  int cap = fixed ? policy.fixed_l_max : suggested_cap(x, y, media, a_factor);
  const Media* weights = a_factor == AFactor::exact ? &media : nullptr;
  for (int attempt = 0; attempt < 8; ++attempt) {
    const auto xc = make_column(x, cap, nullptr);
    const auto yc = make_column(y, cap, weights);
    if (auto r = sum_kernel(xc, yc, policy, media, a_factor)) return *r;
    cap *= 2;
  }
  throw NumericalError("f_exact: adaptive truncation did not terminate at (x=" +
                       std::to_string(x) + ", y=" + std::to_string(y) + ")");
}

}  // namespace detail

KernelValue f_exact_detail(double x, double y, const TruncationPolicy& policy, const Media& media,
                           AFactor a_factor) {
  require_positive(x, "f_exact");
  require_positive(y, "f_exact");
  return detail::kernel_value(x, y, policy, media, a_factor);
}

double f_exact(double x, double y, const TruncationPolicy& policy, const Media& media,
               AFactor a_factor) {
  return f_exact_detail(x, y, policy, media, a_factor).value;
}

double beta_prefactor(const Media& media, double x, double y) {
  const double ng = media.n_gas();
  const double nl = media.n_liquid();
  const double contrast = nl * nl - ng * ng;
  const double shape = y * y / (ng * x + nl * y);
  return contrast * contrast / (nl * nl * ng * ng) * shape * shape;
}

BetaSquared beta_squared(const Media& media, const Scenario& scenario, double x, double y,
                         const TruncationPolicy& policy, AFactor a_factor) {
  require_positive(x, "beta_squared");
  require_positive(y, "beta_squared");
  const double scale = scenario.radius() / kSpeedOfLight;
  const double pref = beta_prefactor(media, x, y);
  if (pref == 0.0) return {0.0, scale * scale};
  return {pref * f_exact(x, y, policy, media, a_factor), scale * scale};
}

double overlap_integral_closed(const Media& media, ModeIndex m, double x, double y) {
  require_positive(x, "overlap_integral_closed");
  require_positive(y, "overlap_integral_closed");
  const double ng = media.n_gas();
  const double nl = media.n_liquid();
  const double contrast = (nl * nl - ng * ng) / (ng * ng);
  if (contrast == 0.0) return 0.0;

  const double w = media.exterior_argument(y);
  if (std::abs(w - x) <= 1e-12 * std::max(w, x)) {
    throw DomainError("overlap_integral_closed: pole at x = (n_liquid/n_gas) y");
  }
  const auto coef = matching_coefficients(media, m, y);

  // W(x, y) / (x^2 - y^2), with W / (x - y) -> -diag as y -> x.
  double reduced;
  if (std::abs(x - y) < diagonal_tolerance(x)) {
    const double mid = 0.5 * (x + y);
    reduced = -pseudo_wronskian_diagonal(m, mid) / (x + y);
  } else {
    reduced = pseudo_wronskian(m, x, y) / ((x - y) * (x + y));
  }
  return coef.a * contrast * y * y * reduced / ((w - x) * (w + x));
}

double overlap_closed_form(ModeIndex m, double lambda, double mu, double a, double b) {
  require_positive(lambda, "overlap_closed_form");
  require_positive(mu, "overlap_closed_form");
  if (!(a >= 0.0 && b > a)) throw DomainError("overlap_closed_form: requires 0 <= a < b");
  if (lambda == mu) throw DomainError("overlap_closed_form: requires lambda != mu");
  // u W_{lambda mu}(u) = -W~(lambda u, mu u).
  auto boundary = [&](double u) { return u == 0.0 ? 0.0 : pseudo_wronskian(m, lambda * u, mu * u); };
  return (boundary(b) - boundary(a)) / (lambda * lambda - mu * mu);
}

double overlap_identity_check(ModeIndex m, double lambda, double mu, double a, double b) {
  const double closed = overlap_closed_form(m, lambda, mu, a, b);
  const int l = m.l();
  auto integrand = [&](double u) {
    if (u <= 0.0) return 0.0;
    return u * bessel_j_half(l, lambda * u) * bessel_j_half(l, mu * u);
  };
  const auto quad = integrate_adaptive(integrand, a, b);
  return std::abs(quad.value - closed) / std::max(std::abs(closed), 1e-300);
}

}  // namespace sono
