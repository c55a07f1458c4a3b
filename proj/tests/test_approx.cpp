#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sonocasimir/approx.hpp"
#include "sonocasimir/errors.hpp"
#include "sonocasimir/presets.hpp"

using namespace sono;
using std::numbers::pi;

namespace {
const double kPlateau = 1.0 / (2.0 * pi * pi);
const auto kPolicy = TruncationPolicy::adaptive(1e-8);

// D(x) from its defining sum with oracle Bessel values.
long double d_oracle(long double x, int L) {
  long double sum = 0.0L;
  for (int l = 1; l <= L; ++l) {
    const long double a = oracle::j_half(l, x), b = oracle::j_half(l - 1, x);
    const long double t = (2 * l + 1) * a * b - x * (a * a + b * b);
    sum += (2 * l + 1) * t * t / (4 * x * x);
  }
  return sum;
}
}  // namespace

TEST_CASE("d_exact") {
  for (double x : {2.0, 5.0, 10.0}) {
    CHECK(std::abs(d_exact(x, kPolicy) - f_exact(x, x, kPolicy, Media(1.0, 1.0))) <= 1e-10 * d_exact(x, kPolicy));
  }
  for (double x : {0.3, 1.0, 2.0, 7.7, 18.0, 30.0}) {
    const long double ref = d_oracle(x, static_cast<int>(x) + 80);
    INFO("x=" << x);
    CHECK(static_cast<double>(std::abs(d_exact(x, kPolicy) - ref) / ref) < 1e-10);
  }
  CHECK(d_exact(0.05, kPolicy) < 1e-6);
  CHECK(std::abs(d_exact(30.0, kPolicy) - kPlateau) < 0.05 * kPlateau);
  CHECK(kPlateau == doctest::Approx(0.050660).epsilon(1e-5));
  CHECK_THROWS_AS(d_exact(0.0, kPolicy), DomainError);
}

TEST_CASE("d_approx") {
  CHECK(d_approx(1.0) == 0.0);
  CHECK(d_approx(0.5) == 0.0);
  CHECK(d_approx(0.0) == 0.0);
  CHECK(d_approx(2.0) == doctest::Approx(kPlateau * 0.4).epsilon(1e-15));
  CHECK(d_approx(2.0) == doctest::Approx(0.0202642).epsilon(1e-6));
  double prev = 0.0;
  for (double x = 1.0; x < 200.0; x += 0.37) {
    const double v = d_approx(x);
    CHECK(v >= prev);
    CHECK(v <= kPlateau);
    prev = v;
  }
}

TEST_CASE("sinc_kernel") {
  CHECK(sinc_kernel(0.0) == 1.0);
  CHECK(std::abs(sinc_kernel(4.0)) < 1e-30);
  CHECK(sinc_kernel(2.0) == doctest::Approx(4.0 / (pi * pi)).epsilon(1e-14));
  CHECK(sinc_kernel(2.0) == doctest::Approx(0.405285).epsilon(1e-6));
  CHECK(sinc_kernel(-3.1) == sinc_kernel(3.1));
  // Series branch joins the direct formula smoothly.
  const double t = 4.0 * 1e-4 / pi;
  const double direct = std::pow(std::sin(pi * t * 1.0001 / 4.0) / (pi * t * 1.0001 / 4.0), 2);
  CHECK(sinc_kernel(t * 1.0001) == doctest::Approx(direct).epsilon(1e-14));
  CHECK(sinc_kernel(t * 0.9999) == doctest::Approx(1.0 - std::pow(pi * t * 0.9999 / 4.0, 2) / 3.0).epsilon(1e-15));
}

TEST_CASE("f_factorized") {
  for (double s : {1.0, 2.0, 10.0}) CHECK(f_factorized(s, s) == doctest::Approx(d_approx(s)).epsilon(1e-14));
  CHECK(f_factorized(7.0, 3.0) == doctest::Approx(d_approx(5.0) * sinc_kernel(4.0)).epsilon(1e-12));
  CHECK(std::abs(f_factorized(7.0, 3.0)) < 1e-30);
  CHECK(f_factorized(0.5, 1.4) == 0.0);
  CHECK(f_factorized(1.0, 1.0) == 0.0);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> pick(0.0, 60.0);
  for (int i = 0; i < 2000; ++i) {
    const double x = pick(rng), y = pick(rng);
    const double v = f_factorized(x, y);
    CHECK(v == f_factorized(y, x));
    CHECK(v >= 0.0);
    CHECK(v <= kPlateau + 1e-12);
    CHECK(v == doctest::Approx(d_approx(0.5 * (x + y)) * sinc_kernel(x - y)).epsilon(1e-12));
    if (x + y <= 2.0) CHECK(v == 0.0);
  }
}

TEST_CASE("transverse slice at (3, 3)") {
  const double d3 = d_exact(3.0, kPolicy);
  double sq = 0.0, peak = 0.0;
  int n = 0;
  for (double z = -3.0; z <= 3.0 + 1e-12; z += 0.05) {
    // z = +-3 reaches the axis, where F vanishes.
    const double exact = detail::kernel_value(3.0 + z, 3.0 - z, kPolicy, Media(1.0, 1.0), AFactor::unit).value;
    const double model = sinc_kernel(2.0 * z) * d3;
    peak = std::max(peak, exact);
    sq += (exact - model) * (exact - model);
    ++n;
  }
  const double rms = std::sqrt(sq / n);
  MESSAGE("transverse RMS/peak = " << rms / peak);
  CHECK(rms < 0.15 * peak);
}

TEST_CASE("approximation report") {
  const auto& preset = find_preset("min-radius");
  const auto scenario = preset.scenario();
  const auto grid = GridSpec::defaults_for(scenario);
  CHECK(grid.nx == 201);
  CHECK(grid.ny == 201);
  CHECK(grid.x_hi == doctest::Approx(1.2 * scenario.x_max()));
  const auto report = approximation_report(preset.media, scenario, TruncationPolicy::adaptive(1e-6), grid);
  MESSAGE("energy discrepancy " << report.energy_discrepancy_fraction << ", max abs " << report.max_abs_error
                                << ", rms " << report.rms_error);
  CHECK(report.energy_discrepancy_fraction <= 0.20);
  CHECK(report.max_abs_error >= 0.0);
  CHECK(report.rms_error >= 0.0);
  CHECK(report.rms_error <= report.max_abs_error);
  CHECK(report.energy_exact_hck > 0.0);
  CHECK(!report.grid.empty());

  // On the diagonal the pointwise error is |d_exact - d_approx|.
  for (double x : {0.7, 4.0, 12.5}) {
    const double diff = std::abs(f_exact(x, x, kPolicy, Media(1.0, 1.0)) - f_factorized(x, x));
    CHECK(diff == doctest::Approx(std::abs(d_exact(x, kPolicy) - d_approx(x))).epsilon(1e-12));
  }

  GridSpec bad = grid;
  bad.nx = 1;
  CHECK_THROWS_AS(approximation_report(preset.media, scenario, kPolicy, bad), DomainError);
}
