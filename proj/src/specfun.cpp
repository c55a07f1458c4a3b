#include "sonocasimir/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "sonocasimir/errors.hpp"

namespace sono {

namespace {

constexpr double kRescaleAbove = 1.0e200;
constexpr double kRescaleFactor = 1.0e-200;

void require_argument(double z, const char* what) {
  if (!std::isfinite(z) || z <= 0.0) {
    throw DomainError(std::string(what) + ": argument must be positive and finite, got " +
                      std::to_string(z));
  }
}

void require_range(int l, double z, const char* what) {
  if (l < 0) throw DomainError(std::string(what) + ": negative order");
  if (l > kMaxOrder || z > kMaxArgument) {
    throw RangeError(std::string(what) + ": (l=" + std::to_string(l) + ", z=" +
                     std::to_string(z) + ") outside supported range l <= 2000, z <= 1e4");
  }
}

// Spherical j_0, j_1 without cancellation at small z.
double sph_j0(double z) { return std::abs(z) < 1e-4 ? 1.0 - z * z / 6.0 : std::sin(z) / z; }

double sph_j1(double z) {
  if (z < 0.3) {
    const double z2 = z * z;
    return z / 3.0 *
           (1.0 - z2 / 10.0 * (1.0 - z2 / 28.0 * (1.0 - z2 / 54.0 * (1.0 - z2 / 88.0))));
  }
  return (std::sin(z) - z * std::cos(z)) / (z * z);
}

int miller_margin(int l) {
  return std::max(20, static_cast<int>(std::ceil(std::sqrt(40.0 * l))));
}

// Spherical j_l(z), l = 0..l_max.
std::vector<double> spherical_j(int l_max, double z) {
  std::vector<double> j(static_cast<std::size_t>(l_max) + 1, 0.0);
  j[0] = sph_j0(z);
  if (l_max == 0) return j;

  if (l_max <= z) {
    j[1] = sph_j1(z);
    for (int n = 1; n < l_max; ++n) j[n + 1] = (2 * n + 1) / z * j[n] - j[n - 1];
    return j;
  }

  const int start = l_max + miller_margin(l_max);
  double upper = 0.0;  // f_{n+1}
  double cur = 1.0e-280;  // f_n
  for (int n = start; n > 0; --n) {
    const double lower = (2 * n + 1) / z * cur - upper;
    upper = cur;
    cur = lower;
    if (n - 1 <= l_max) j[n - 1] = cur;
    if (n <= l_max) j[n] = upper;
    if (std::abs(cur) > kRescaleAbove) {
      cur *= kRescaleFactor;
      upper *= kRescaleFactor;
      for (int k = n - 1; k <= l_max; ++k) j[k] *= kRescaleFactor;
    }
  }

  const double true0 = sph_j0(z);
  const double true1 = sph_j1(z);
  const double scale = std::abs(true0) >= std::abs(true1) ? true0 / j[0] : true1 / j[1];
  for (double& v : j) v *= scale;
  return j;
}

std::vector<double> spherical_y(int l_max, double z) {
  std::vector<double> y(static_cast<std::size_t>(l_max) + 1);
  y[0] = -std::cos(z) / z;
  if (l_max == 0) return y;
  y[1] = -std::cos(z) / (z * z) - std::sin(z) / z;
  const double neg_inf = -std::numeric_limits<double>::infinity();
  for (int n = 1; n < l_max; ++n) {
    if (!std::isfinite(y[n])) {
      std::fill(y.begin() + n + 1, y.end(), neg_inf);
      break;
    }
    y[n + 1] = (2 * n + 1) / z * y[n] - y[n - 1];
  }
  return y;
}

}  // namespace

ModeIndex::ModeIndex(int l) : l_(l) {
  if (l < 1) throw DomainError("ModeIndex: l must be >= 1, got " + std::to_string(l));
}

std::vector<double> bessel_j_half_sequence(int l_max, double z) {
  require_argument(z, "bessel_j_half_sequence");
  if (l_max < 0) throw DomainError("bessel_j_half_sequence: negative l_max");
  auto j = spherical_j(l_max, z);
  const double c = std::sqrt(2.0 * z / std::numbers::pi);
  for (double& v : j) v *= c;
  return j;
}

std::vector<double> bessel_n_half_sequence(int l_max, double z) {
  require_argument(z, "bessel_n_half_sequence");
  if (l_max < 0) throw DomainError("bessel_n_half_sequence: negative l_max");
  auto y = spherical_y(l_max, z);
  const double c = std::sqrt(2.0 * z / std::numbers::pi);
  for (double& v : y) v *= c;
  return y;
}

double bessel_j_half(int l, double z) {
  require_argument(z, "bessel_j_half");
  require_range(l, z, "bessel_j_half");
  return bessel_j_half_sequence(l, z)[l];
}

double bessel_n_half(int l, double z) {
  require_argument(z, "bessel_n_half");
  require_range(l, z, "bessel_n_half");
  return bessel_n_half_sequence(l, z)[l];
}

double pseudo_wronskian(ModeIndex m, double x, double y) {
  require_argument(x, "pseudo_wronskian");
  require_argument(y, "pseudo_wronskian");
  require_range(m.l(), std::max(x, y), "pseudo_wronskian");
  const auto jx = bessel_j_half_sequence(m.l() + 1, x);
  const auto jy = bessel_j_half_sequence(m.l() + 1, y);
  return detail::pseudo_wronskian_from(m.l(), x, jx, y, jy);
}

double pseudo_wronskian_diagonal(ModeIndex m, double x) {
  require_argument(x, "pseudo_wronskian_diagonal");
  require_range(m.l(), x, "pseudo_wronskian_diagonal");
  return detail::diagonal_from(m.l(), x, bessel_j_half_sequence(m.l(), x));
}

double bessel_j_large_order(double nu, double z) {
  require_argument(z, "bessel_j_large_order");
  if (!(nu > std::numbers::e * z / 2.0)) {
    throw DomainError("bessel_j_large_order: requires nu > e z / 2 (nu=" + std::to_string(nu) +
                      ", z=" + std::to_string(z) + ")");
  }
  const double log_value =
      nu * std::log(std::numbers::e * z / (2.0 * nu)) - 0.5 * std::log(2.0 * std::numbers::pi * nu);
  return std::exp(log_value);
}

double bessel_j_large_order(ModeIndex m, double z) { return bessel_j_large_order(m.nu(), z); }

}  // namespace sono
