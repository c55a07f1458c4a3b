#include "sonocasimir/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "sonocasimir/approx.hpp"
#include "sonocasimir/errors.hpp"
#include "sonocasimir/presets.hpp"
#include "sonocasimir/quadrature.hpp"
#include "sonocasimir/spectra.hpp"

namespace sono {

namespace {

constexpr std::uint64_t kSeed = 20240611;

// Relative check: metric <= threshold, NaN fails.
CheckResult make(const std::string& family, const std::string& name, double metric,
                 double threshold, std::string detail = {}) {
  CheckResult r;
  r.family = family;
  r.name = name;
  r.metric = metric;
  r.threshold = threshold;
  r.passed = metric <= threshold;
  r.detail = std::move(detail);
  return r;
}

// J_{l+1/2}(z), orders 0..l+1, scaled by (1 + perturb).
std::vector<double> j_seq(int l, double z, double perturb) {
  auto j = bessel_j_half_sequence(l + 1, z);
  for (double& v : j) v *= 1.0 + perturb;
  return j;
}

std::vector<CheckResult> check_wronskian(const ValidationOptions& o) {
  double worst = 0.0;
  std::string where;
  for (double z : {0.1, 1.0, 10.0, 100.0}) {
    for (int l : {1, 5, 20, 50}) {
      const auto j = j_seq(l, z, o.perturb);
      const auto n = bessel_n_half_sequence(l + 1, z);
      // J N' - N J' = N J_{nu+1} - J N_{nu+1} from z F' = nu F - z F_{nu+1}.
      const double w = n[l] * j[l + 1] - j[l] * n[l + 1];
      const double expected = 2.0 / (std::numbers::pi * z);
      const double err = std::abs(w - expected) / expected;
      if (std::isnan(err) || err > worst) {
        worst = err;
        std::ostringstream os;
        os << "worst at l=" << l << ", z=" << z;
        where = os.str();
      }
    }
  }
  return {make("wronskian", "wronskian", worst, 1e-10, where)};
}

std::vector<CheckResult> check_junction(const ValidationOptions& o) {
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> pick_l(1, 20);
  std::uniform_real_distribution<double> pick_arg(0.5, 30.0);
  std::uniform_real_distribution<double> pick_n(1.05, 2.0);
  double worst = 0.0;
  for (int draw = 0; draw < 50; ++draw) {
    const int l = pick_l(rng);
    const double x = pick_arg(rng);
    const double y = pick_arg(rng);
    const Media media(1.0, pick_n(rng));
    const double w = media.exterior_argument(y);
    const double nu = l + 0.5;
    const auto coef = matching_coefficients(media, ModeIndex(l), y);
    const auto jx = bessel_j_half_sequence(l + 1, x);
    const auto jy = j_seq(l, y, o.perturb);
    const auto jw = bessel_j_half_sequence(l + 1, w);
    const auto nw = bessel_n_half_sequence(l + 1, w);
    // u-derivatives at u = 1: d/du F(a u) = a F'(a) = nu F(a) - a F_{nu+1}(a).
    const double dx = nu * jx[l] - x * jx[l + 1];
    const double dy = nu * jy[l] - y * jy[l + 1];
    const double djw = nu * jw[l] - w * jw[l + 1];
    const double dnw = nu * nw[l] - w * nw[l + 1];
    const double lhs = coef.a * (jx[l] * dy - jy[l] * dx);
    const double rhs = coef.b * (jx[l] * djw - jw[l] * dx) + coef.c * (jx[l] * dnw - nw[l] * dx);
    const double scale = std::abs(coef.a) * (std::abs(jx[l] * dy) + std::abs(jy[l] * dx));
    const double err = std::abs(lhs - rhs) / scale;
    worst = std::isnan(err) ? err : std::max(worst, err);
  }
  return {make("junction", "junction", worst, 1e-9, "50 random draws")};
}

std::vector<CheckResult> check_overlap(const ValidationOptions& o) {
  std::mt19937_64 rng(kSeed + 1);
  std::uniform_int_distribution<int> pick_l(1, 20);
  std::uniform_real_distribution<double> pick_k(0.5, 30.0);
  std::uniform_real_distribution<double> pick_b(0.5, 10.0);
  double worst = 0.0;
  for (int draw = 0; draw < 50; ++draw) {
    const int l = pick_l(rng);
    double lambda = pick_k(rng);
    double mu = pick_k(rng);
    while (std::abs(lambda - mu) < 0.5) mu = pick_k(rng);
    const double b = pick_b(rng);
    const double closed = overlap_closed_form(ModeIndex(l), lambda, mu, 0.0, b);
    const auto quad = integrate_adaptive(
        [&](double u) {
          if (u <= 0.0) return 0.0;
          return (1.0 + o.perturb) * u * bessel_j_half(l, lambda * u) * bessel_j_half(l, mu * u);
        },
        0.0, b);
    const double err = std::abs(quad.value - closed) / std::max(std::abs(closed), quad.l1_norm);
    worst = std::isnan(err) ? err : std::max(worst, err);
  }
  return {make("overlap", "overlap", worst, 1e-8, "50 random draws, residual relative to L1 norm")};
}

std::vector<CheckResult> check_symmetry(const ValidationOptions& o) {
  std::mt19937_64 rng(kSeed + 2);
  std::uniform_real_distribution<double> pick(0.1, 50.0);
  const auto policy = TruncationPolicy::adaptive(o.tail_epsilon);
  const Media media(1.0, 1.0);
  double max_f = 0.0;
  double max_diff = 0.0;
  for (int draw = 0; draw < 40; ++draw) {
    const double x = pick(rng);
    const double y = pick(rng);
    const double fxy = f_exact(x, y, policy, media);
    const double fyx = f_exact(y, x, policy, media);
    max_f = std::max({max_f, fxy, fyx});
    max_diff = std::max(max_diff, std::abs(fxy - fyx));
  }
  return {make("symmetry", "f-symmetry", max_diff / max_f, 1e-12, "40 random points in (0,50]^2")};
}

std::vector<CheckResult> check_diagonal(const ValidationOptions& o) {
  const auto policy = TruncationPolicy::adaptive(o.tail_epsilon);
  const Media media(1.0, 1.0);
  double worst = 0.0;
  for (double x : {2.0, 5.0, 10.0}) {
    const double d = f_exact(x, x, policy, media);
    for (double h : {-1e-7, 1e-7}) {
      worst = std::max(worst, std::abs(f_exact(x, x + h, policy, media) - d) / d);
    }
  }
  return {make("diagonal", "diagonal-continuity", worst, 1e-4, "x in {2,5,10}, offsets +-1e-7")};
}

std::vector<CheckResult> check_period_average(const ValidationOptions&) {
  const Media media(1.0, 1.3);
  std::vector<CheckResult> out;

  double worst_closed = 0.0;
  for (int l : {1, 2, 7}) {
    const double y0 = 50.0;
    const auto quad = integrate_adaptive(
        [&](double y) { return a_squared_asymptotic(media, ModeIndex(l), y); }, y0,
        y0 + std::numbers::pi);
    worst_closed = std::max(worst_closed, std::abs(quad.value / std::numbers::pi - 1.0));
  }
  out.push_back(make("period-average", "asymptotic-period-mean", worst_closed, 1e-6,
                     "one period, l in {1,2,7}"));

  double worst_exact = 0.0;
  const double y0 = 50.0;
  const double y1 = y0 + 20.0 * std::numbers::pi;
  const auto rule = composite_gauss_legendre(y0, y1, 0.25);
  for (int l : {1, 2}) {
    double acc = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      const double a = matching_coefficients(media, ModeIndex(l), rule.nodes[k]).a;
      acc += rule.weights[k] * a * a;
    }
    worst_exact = std::max(worst_exact, std::abs(acc / (y1 - y0) - 1.0));
  }
  out.push_back(make("period-average", "exact-a-squared-mean", worst_exact, 0.02,
                     "y in [50, 50+20pi], l in {1,2}"));
  return out;
}

std::vector<CheckResult> check_plateau(const ValidationOptions& o) {
  const double plateau = 1.0 / (2.0 * std::numbers::pi * std::numbers::pi);
  const double d = d_exact(30.0, TruncationPolicy::adaptive(o.tail_epsilon));
  return {make("plateau", "d-exact-30", std::abs(d - plateau) / plateau, 0.05,
               "D(30) against 1/(2 pi^2)")};
}

std::vector<CheckResult> check_four_over_pi(const ValidationOptions& o) {
  const auto& preset = find_preset("ambient");
  const auto scenario = preset.scenario();
  const double rk = scenario.x_max();
  std::vector<double> xs;
  for (double x = 0.3 * rk; x <= 0.7 * rk; x += 0.5) xs.push_back(x);
  const auto table = spectrum_finite(preset.media, scenario, xs, QuadSpec{}, KernelMode::factorized,
                                     TruncationPolicy::adaptive(o.tail_epsilon), AFactor::unit,
                                     o.threads);
  std::vector<double> dev;
  for (const auto& p : table.points) {
    const double ref = 4.0 / std::numbers::pi * spectrum_infinite(preset.media, scenario, p.x);
    dev.push_back(std::abs(p.dndx - ref) / ref);
  }
  std::nth_element(dev.begin(), dev.begin() + dev.size() / 2, dev.end());
  return {make("four-over-pi", "median-ratio-deviation", dev[dev.size() / 2], 0.15,
               "ambient preset, factorized, 0.3 RK <= x <= 0.7 RK")};
}

std::vector<CheckResult> check_energy(const ValidationOptions& o) {
  const auto& preset = find_preset("min-radius");
  const auto scenario = preset.scenario();
  const auto report =
      approximation_report(preset.media, scenario, TruncationPolicy::adaptive(o.tail_epsilon),
                           GridSpec::defaults_for(scenario), o.threads);
  return {make("energy-discrepancy", "exact-vs-factorized-energy",
               report.energy_discrepancy_fraction, 0.20, "min-radius preset")};
}

using CheckFn = std::function<std::vector<CheckResult>(const ValidationOptions&)>;

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> r = {
      {"wronskian", check_wronskian},
      {"junction", check_junction},
      {"overlap", check_overlap},
      {"symmetry", check_symmetry},
      {"diagonal", check_diagonal},
      {"period-average", check_period_average},
      {"plateau", check_plateau},
      {"four-over-pi", check_four_over_pi},
      {"energy-discrepancy", check_energy},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& validation_families() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

std::vector<CheckResult> run_validation(const ValidationOptions& options) {
  const auto& all = validation_families();
  for (const auto& f : options.families) {
    if (std::find(all.begin(), all.end(), f) == all.end()) {
      throw DomainError("unknown check family '" + f + "'");
    }
  }
  std::vector<CheckResult> results;
  for (const auto& [name, fn] : registry()) {
    if (!options.families.empty() &&
        std::find(options.families.begin(), options.families.end(), name) == options.families.end()) {
      continue;
    }
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<CheckResult> part;
    try {
      part = fn(options);
    } catch (const std::exception& e) {
      part = {make(name, name, std::numeric_limits<double>::quiet_NaN(), 0.0, e.what())};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (auto& r : part) {
      r.seconds = secs;
      results.push_back(std::move(r));
    }
  }
  return results;
}

}  // namespace sono
