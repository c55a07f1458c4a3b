// Acceptance suite: one PASS/FAIL line per criterion, including its runtime
// limit. Exit status is non-zero if any criterion fails.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "sonocasimir/approx.hpp"
#include "sonocasimir/presets.hpp"
#include "sonocasimir/quadrature.hpp"
#include "sonocasimir/spectra.hpp"

using namespace sono;
using std::numbers::pi;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < limit_s;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s %2d %s | %s | %.4g s (limit %g s%s)\n", pass ? "PASS" : "FAIL", id, title, o.detail.c_str(),
              secs, limit_s, in_time ? "" : ", exceeded");
  std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// Independent Bessel values for the oracles.
double bj(int l, double z) { return boost::math::cyl_bessel_j(l + 0.5, z); }
double bn(int l, double z) { return boost::math::cyl_neumann(l + 0.5, z); }

double gk(const std::function<double(double)>& f, double a, double b, unsigned depth, double tol) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, depth, tol);
}

}  // namespace

int main() {
  const auto policy = TruncationPolicy::adaptive(1e-8);

  criterion(1, "Wronskian identity", 1.0, [] {
    double worst = 0.0;
    for (double z : {0.1, 1.0, 10.0, 100.0}) {
      for (int l : {1, 5, 20, 50}) {
        const double nu = l + 0.5;
        const double j = bessel_j_half(l, z), n = bessel_n_half(l, z);
        const double dj = nu / z * j - bessel_j_half(l + 1, z);
        const double dn = nu / z * n - bessel_n_half(l + 1, z);
        const double expected = 2.0 / (pi * z);
        worst = std::max(worst, std::abs(j * dn - n * dj - expected) / expected);
      }
    }
    return Outcome{worst <= 1e-10, fmt("max rel err %.3g <= 1e-10", worst)};
  });

  criterion(2, "Overlap identity oracle", 30.0, [] {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> pick_l(1, 20);
    std::uniform_real_distribution<double> pick_k(0.5, 30.0), pick_b(0.5, 10.0);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const int l = pick_l(rng);
      const double lam = pick_k(rng);
      double mu = pick_k(rng);
      while (std::abs(lam - mu) < 0.5) mu = pick_k(rng);
      const double b = pick_b(rng);
      auto f = [&](double u) { return u * bj(l, lam * u) * bj(l, mu * u); };
      const double quad = gk(f, 0.0, b, 15, 1e-12);
      const double l1 = gk([&](double u) { return std::abs(f(u)); }, 0.0, b, 3, 1e-3);
      const double closed = overlap_closed_form(ModeIndex(l), lam, mu, 0.0, b);
      worst = std::max(worst, std::abs(quad - closed) / std::max(std::abs(closed), l1));
    }
    return Outcome{worst <= 1e-8, fmt("50 draws, max residual %.3g <= 1e-8", worst)};
  });

  criterion(3, "Junction identity", 5.0, [] {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> pick_l(1, 20);
    std::uniform_real_distribution<double> pick(0.5, 30.0), pick_n(1.05, 2.0);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const int l = pick_l(rng);
      const double x = pick(rng), y = pick(rng);
      const Media media(1.0, pick_n(rng));
      const auto c = matching_coefficients(media, ModeIndex(l), y);
      const double w = media.exterior_argument(y), nu = l + 0.5;
      const double jx = bj(l, x), dx = nu * jx - x * bj(l + 1, x);
      const double jy = bj(l, y), dy = nu * jy - y * bj(l + 1, y);
      const double jw = bj(l, w), djw = nu * jw - w * bj(l + 1, w);
      const double nw = bn(l, w), dnw = nu * nw - w * bn(l + 1, w);
      const double lhs = c.a * (jx * dy - jy * dx);
      const double rhs = c.b * (jx * djw - jw * dx) + c.c * (jx * dnw - nw * dx);
      const double scale = std::abs(c.a) * (std::abs(jx * dy) + std::abs(jy * dx));
      worst = std::max(worst, std::abs(lhs - rhs) / scale);
    }
    return Outcome{worst <= 1e-9, fmt("50 draws, max rel err %.3g <= 1e-9", worst)};
  });

  criterion(4, "A-factor mean", 10.0, [] {
    const Media media(1.0, 1.3);
    const double y0 = 50.0, y1 = 50.0 + 20.0 * pi;
    const auto rule = composite_gauss_legendre(y0, y1, 0.25);
    double worst_exact = 0.0;
    for (int l : {1, 2}) {
      double acc = 0.0;
      for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        const double a = matching_coefficients(media, ModeIndex(l), rule.nodes[k]).a;
        acc += rule.weights[k] * a * a;
      }
      worst_exact = std::max(worst_exact, std::abs(acc / (y1 - y0) - 1.0));
    }
    double worst_closed = 0.0;
    for (int l : {1, 2, 5}) {
      const double period = gk([&](double y) { return a_squared_asymptotic(media, ModeIndex(l), y); }, y0,
                               y0 + pi, 15, 1e-14);
      worst_closed = std::max(worst_closed, std::abs(period / pi - 1.0));
    }
    return Outcome{worst_exact <= 0.02 && worst_closed <= 1e-6,
                   fmt("|<|A|^2> - 1| = %.3g <= 0.02; asymptotic period mean err %.3g <= 1e-6", worst_exact,
                       worst_closed)};
  });

  criterion(5, "Plateau D(30)", 10.0, [&] {
    const double plateau = 1.0 / (2.0 * pi * pi);
    const double d = d_exact(30.0, policy);
    const double dev = std::abs(d - plateau) / plateau;
    return Outcome{dev <= 0.05, fmt("D(30) = %.6f vs 1/(2 pi^2) = %.6f, dev %.3g <= 0.05", d, plateau, dev)};
  });

  criterion(6, "Schwinger photon count", 1e-3, [] {
    const auto& p = find_preset("schwinger");
    const auto b = photon_budget_infinite(p.media, p.scenario());
    // Independent arithmetic: R K = 40 um * 2 pi / 360 nm.
    const double rk = 40e-6 * 2.0 * pi / 360e-9;
    const double n_ref = std::pow(0.3 / 1.3, 2) * rk * rk * rk / (6.0 * pi * 1.3);
    const bool ok = std::abs(b.n_total - n_ref) / n_ref < 0.01 && std::abs(b.n_total - 7.40e5) / 7.40e5 < 0.01 &&
                    b.n_total >= 0.6e6 && b.n_total <= 0.85e6;
    return Outcome{ok, fmt("N = %.6g (re-derived %.6g), within 1%% of 7.40e5 and in [0.6e6, 0.85e6]", b.n_total, n_ref)};
  });

  criterion(7, "Mean photon energy", 1.0, [&] {
    const auto& p = find_preset("ambient");
    const auto s = p.scenario();
    const auto closed = photon_budget_infinite(p.media, s);
    const double target = 0.75 / p.media.n_liquid();
    const double err_closed = std::abs(closed.e_avg_hck - target) / target;
    const auto grid = uniform_grid(s.x_max(), s.x_max() / 1999.0);
    const auto table = spectrum_finite(p.media, s, grid, QuadSpec{}, KernelMode::infinite, policy);
    const auto fromtab = photon_budget_from_table(table);
    const double err_table = std::abs(fromtab.e_avg_hck - target) / target;
    return Outcome{err_closed <= 1e-12 && err_table <= 0.01 && grid.size() == 2000,
                   fmt("closed-form err %.3g <= 1e-12; 2000-point table err %.3g <= 0.01", err_closed, err_table)};
  });

  criterion(8, "4/pi consistency (ambient)", 300.0, [&] {
    const auto& p = find_preset("ambient");
    const auto s = p.scenario();
    std::vector<double> xs;
    for (double x = 0.3 * s.x_max(); x <= 0.7 * s.x_max(); x += 0.25) xs.push_back(x);
    const auto t = spectrum_finite(p.media, s, xs, QuadSpec{}, KernelMode::factorized, policy);
    std::vector<double> dev;
    for (const auto& pt : t.points) {
      dev.push_back(std::abs(pt.dndx / (4.0 / pi * spectrum_infinite(p.media, s, pt.x)) - 1.0));
    }
    std::sort(dev.begin(), dev.end());
    const double median = dev[dev.size() / 2];
    return Outcome{median <= 0.15, fmt("median |ratio/(4/pi) - 1| = %.3g <= 0.15 over %g points", median,
                                       static_cast<double>(dev.size()))};
  });

  criterion(9, "Approximation energy error (min-radius)", 600.0, [] {
    const auto& p = find_preset("min-radius");
    const auto s = p.scenario();
    const auto r = approximation_report(p.media, s, TruncationPolicy::adaptive(1e-6), GridSpec::defaults_for(s));
    return Outcome{r.energy_discrepancy_fraction <= 0.20,
                   fmt("E_exact = %.6g, E_factorized = %.6g hbar c K, discrepancy %.3g <= 0.20", r.energy_exact_hck,
                       r.energy_factorized_hck, r.energy_discrepancy_fraction)};
  });

  criterion(10, "Null case", 1.0, [&] {
    const Media media(1.3, 1.3);
    const auto s = Scenario::from_lab_units(0.5, 200.0);
    bool zero = true;
    for (auto mode : {KernelMode::exact, KernelMode::factorized, KernelMode::infinite}) {
      const auto t = spectrum_finite(media, s, uniform_grid(18.0, 0.25), QuadSpec{}, mode, policy);
      for (const auto& pt : t.points) zero = zero && pt.dndx == 0.0;
      const auto b = photon_budget_from_table(t);
      zero = zero && b.n_total == 0.0 && b.e_total_hck == 0.0 && b.e_total_ev == 0.0;
    }
    const auto bi = photon_budget_infinite(media, s);
    const auto st = schwinger_static_energy(media, s);
    zero = zero && bi.n_total == 0.0 && bi.e_total_hck == 0.0 && st.e_hck == 0.0 && st.e_ev == 0.0;
    return Outcome{zero, "spectra (3 modes), budgets and static energy identically 0"};
  });

  criterion(11, "Property suite", 120.0, [&] {
    const Media vac(1.0, 1.0);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> pick50(1e-3, 50.0), pick30(0.1, 30.0);

    double max_f = 0.0, max_diff = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double x = pick50(rng), y = pick50(rng);
      const double a = f_exact(x, y, policy, vac), b = f_exact(y, x, policy, vac);
      max_f = std::max({max_f, a, b});
      max_diff = std::max(max_diff, std::abs(a - b));
    }
    const double sym = max_diff / max_f;

    double diag = 0.0;
    for (double x : {2.0, 5.0, 10.0}) {
      const double d = f_exact(x, x, policy, vac);
      for (double h : {-1e-7, 1e-7}) diag = std::max(diag, std::abs(f_exact(x, x + h, policy, vac) - d) / d);
    }

    double trunc = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double x = pick30(rng), y = pick30(rng);
      const auto f = f_exact_detail(x, y, policy, vac);
      const double doubled = f_exact(x, y, TruncationPolicy::fixed(2 * f.l_used), vac);
      trunc = std::max(trunc, std::abs(doubled - f.value) / doubled);
    }

    bool nonneg = true;
    for (const char* name : {"min-radius", "ambient"}) {
      const auto& p = find_preset(name);
      const auto s = p.scenario();
      const auto grid = uniform_grid(1.5 * s.x_max(), s.x_max() / 40.0);
      for (auto mode : {KernelMode::exact, KernelMode::factorized, KernelMode::infinite}) {
        for (auto af : {AFactor::unit, AFactor::exact}) {
          if (mode != KernelMode::exact && af == AFactor::exact) continue;
          if (mode == KernelMode::exact && std::string(name) == "ambient" && af == AFactor::exact) continue;
          for (const auto& pt : spectrum_finite(p.media, s, grid, QuadSpec{}, mode, policy, af).points) {
            nonneg = nonneg && pt.dndx >= 0.0;
          }
        }
      }
    }

    const auto& p = find_preset("schwinger");
    const double n1 = photon_budget_infinite(p.media, Scenario::from_lab_units(20.0, 360.0)).n_total;
    const double n2 = photon_budget_infinite(p.media, Scenario::from_lab_units(40.0, 360.0)).n_total;
    const double scaling = std::abs(n2 / n1 - 8.0) / 8.0;

    const bool ok = sym <= 1e-12 && diag < 1e-4 && trunc < 1e-8 && nonneg && scaling < 1e-12;
    char buf[320];
    std::snprintf(buf, sizeof buf,
                  "symmetry %.3g <= 1e-12; diagonal %.3g < 1e-4; doubling L %.3g < tail_eps 1e-8; "
                  "non-negative %s; N(2R)/N(R) - 8 rel %.3g",
                  sym, diag, trunc, nonneg ? "yes" : "no", scaling);
    return Outcome{ok, buf};
  });

  std::printf("%s: %d criterion failure(s)\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
