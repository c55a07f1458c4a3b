#include "sonocasimir/spectra.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <sstream>

#include "sonocasimir/approx.hpp"
#include "sonocasimir/errors.hpp"
#include "sonocasimir/parallel.hpp"
#include "sonocasimir/quadrature.hpp"

namespace sono {

namespace {

// Above this many cached doubles the exact kernel recomputes columns per point.
constexpr double kColumnCacheLimit = 2.5e7;

double contrast_factor(const Media& media) {
  const double ng = media.n_gas();
  const double nl = media.n_liquid();
  const double r = (nl - ng) / (nl * ng);
  return r * r;
}

std::string format_x(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

// Integrand-weighted y sum for a single x.
class YIntegrator {
 public:
  YIntegrator(const Media& media, const Scenario& scenario, double panel_width, KernelMode kernel,
              const TruncationPolicy& policy, AFactor a_factor, double x_hi)
      : media_(media),
        policy_(policy),
        kernel_(kernel),
        a_factor_(a_factor),
        rule_(composite_gauss_legendre(0.0, scenario.x_max(), panel_width)) {
    if (kernel_ != KernelMode::exact) return;
    cap_ = detail::suggested_cap(x_hi, scenario.x_max(), media, a_factor);
    const double per_column = (cap_ + 2.0) * (a_factor == AFactor::exact ? 2.0 : 1.0);
    if (per_column * static_cast<double>(rule_.nodes.size()) > kColumnCacheLimit) return;
    const Media* weights = a_factor == AFactor::exact ? &media_ : nullptr;
    columns_.reserve(rule_.nodes.size());
    for (double y : rule_.nodes) columns_.push_back(detail::make_column(y, cap_, weights));
  }

  double operator()(double x) const {
    const double ng = media_.n_gas();
    const double nl = media_.n_liquid();
    std::unique_ptr<detail::BesselColumn> xc;
    if (kernel_ == KernelMode::exact && !columns_.empty() && x > 0.0) {
      xc = std::make_unique<detail::BesselColumn>(detail::make_column(x, cap_, nullptr));
    }
    double acc = 0.0;
    for (std::size_t k = 0; k < rule_.nodes.size(); ++k) {
      const double y = rule_.nodes[k];
      const double shape = y * y / (ng * x + nl * y);
      acc += rule_.weights[k] * shape * shape * kernel_value(x, k, xc.get());
    }
    return acc;
  }

 private:
  double kernel_value(double x, std::size_t k, const detail::BesselColumn* xc) const {
    const double y = rule_.nodes[k];
    if (kernel_ == KernelMode::factorized) return f_factorized(x, y);
    if (x <= 0.0) return 0.0;
    if (xc) {
      if (auto r = detail::sum_kernel(*xc, columns_[k], policy_, media_, a_factor_)) return r->value;
    }
    return detail::kernel_value(x, y, policy_, media_, a_factor_).value;
  }

  const Media& media_;
  const TruncationPolicy& policy_;
  KernelMode kernel_;
  AFactor a_factor_;
  QuadratureRule rule_;
  int cap_ = 0;
  std::vector<detail::BesselColumn> columns_;
};

}  // namespace

double hbar_c_k_ev(const Scenario& scenario) { return kHbarCEvNm * 1e-9 * scenario.cutoff(); }

const char* to_string(KernelMode mode) {
  switch (mode) {
    case KernelMode::exact: return "exact";
    case KernelMode::factorized: return "factorized";
    case KernelMode::infinite: return "infinite";
  }
  return "?";
}

const char* to_string(AFactor a_factor) {
  return a_factor == AFactor::exact ? "exact" : "unit";
}

KernelMode kernel_mode_from_string(const std::string& s) {
  if (s == "exact") return KernelMode::exact;
  if (s == "factorized") return KernelMode::factorized;
  if (s == "infinite") return KernelMode::infinite;
  throw DomainError("unknown kernel mode '" + s + "'");
}

AFactor a_factor_from_string(const std::string& s) {
  if (s == "unit") return AFactor::unit;
  if (s == "exact") return AFactor::exact;
  throw DomainError("unknown a-factor '" + s + "'");
}

std::vector<double> uniform_grid(double x_max, double dx) {
  if (!(x_max > 0.0) || !(dx > 0.0) || !std::isfinite(x_max) || !std::isfinite(dx)) {
    throw DomainError("uniform_grid: x_max and dx must be positive");
  }
  const auto n = static_cast<std::size_t>(std::llround(x_max / dx));
  std::vector<double> xs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) xs[i] = static_cast<double>(i) * dx;
  return xs;
}

double spectrum_infinite(const Media& media, const Scenario& scenario, double x) {
  if (!std::isfinite(x) || x < 0.0) throw DomainError("spectrum_infinite: x must be >= 0");
  if (x > scenario.x_max()) return 0.0;
  const double ng = media.n_gas();
  const double nl = media.n_liquid();
  return contrast_factor(media) * x * x / (2.0 * std::numbers::pi * nl * ng);
}

SpectrumTable spectrum_finite(const Media& media, const Scenario& scenario,
                              const std::vector<double>& x_grid, const QuadSpec& quad,
                              KernelMode kernel, const TruncationPolicy& policy, AFactor a_factor,
                              int threads) {
  policy.validate();
  if (!(quad.panel_width > 0.0)) throw DomainError("spectrum_finite: panel width must be positive");
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    if (!std::isfinite(x_grid[i]) || x_grid[i] < 0.0 || (i > 0 && !(x_grid[i] > x_grid[i - 1]))) {
      throw DomainError("spectrum_finite: x grid must be non-negative and strictly increasing");
    }
  }

  SpectrumTable table(kernel, a_factor, media, scenario);
  table.points.resize(x_grid.size());
  for (std::size_t i = 0; i < x_grid.size(); ++i) table.points[i].x = x_grid[i];

  if (kernel == KernelMode::infinite) {
    for (auto& p : table.points) p.dndx = spectrum_infinite(media, scenario, p.x);
    return table;
  }

  const double ng = media.n_gas();
  const double nl = media.n_liquid();
  const double contrast = nl * nl - ng * ng;
  const double prefactor = contrast * contrast / (nl * nl * nl * ng * ng * ng);
  if (prefactor == 0.0 || x_grid.empty()) return table;

  const double x_hi = x_grid.back();
  const YIntegrator integrate(media, scenario, quad.panel_width, kernel, policy, a_factor, x_hi);
  std::unique_ptr<YIntegrator> refined;
  if (quad.refine_check) {
    refined = std::make_unique<YIntegrator>(media, scenario, 0.5 * quad.panel_width, kernel, policy,
                                            a_factor, x_hi);
  }

  parallel_for(x_grid.size(), threads, [&](std::size_t i) {
    const double x = x_grid[i];
    const double value = prefactor * integrate(x);
    if (!(value >= 0.0) || !std::isfinite(value)) {
      throw NumericalError("spectrum_finite: negative or invalid dN/dx at x=" + format_x(x));
    }
    if (refined) {
      const double fine = prefactor * (*refined)(x);
      if (std::abs(fine - value) > quad.refine_tolerance * std::max(std::abs(fine), 1e-300)) {
        throw QuadratureError("spectrum_finite: panel refinement changed dN/dx at x=" +
                              format_x(x) + " beyond tolerance");
      }
    }
    table.points[i].dndx = value;
  });
  return table;
}

PhotonBudget photon_budget_infinite(const Media& media, const Scenario& scenario) {
  PhotonBudget b;
  const double c = contrast_factor(media);
  if (c == 0.0) return b;
  const double ng = media.n_gas();
  const double nl = media.n_liquid();
  const double rk3 = std::pow(scenario.x_max(), 3);
  b.n_total = c * rk3 / (6.0 * std::numbers::pi * nl * ng);
  b.e_total_hck = c * rk3 / (8.0 * std::numbers::pi * nl * nl * ng);
  const double unit_ev = hbar_c_k_ev(scenario);
  b.e_total_ev = b.e_total_hck * unit_ev;
  b.e_avg_hck = b.e_total_hck / b.n_total;
  b.e_avg_ev = b.e_avg_hck * unit_ev;
  return b;
}

PhotonBudget photon_budget_from_table(const SpectrumTable& table, const Media& media,
                                      const Scenario& scenario) {
  PhotonBudget b;
  const auto& pts = table.points;
  if (pts.size() < 2) return b;
  double n = 0.0;
  double first_moment = 0.0;
  double peak = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    peak = std::max(peak, pts[i].dndx);
    if (i == 0) continue;
    const double h = pts[i].x - pts[i - 1].x;
    n += 0.5 * h * (pts[i].dndx + pts[i - 1].dndx);
    first_moment += 0.5 * h * (pts[i].x * pts[i].dndx + pts[i - 1].x * pts[i - 1].dndx);
  }
  if (peak > 0.0 && pts.back().dndx > 1e-6 * peak) {
    std::ostringstream os;
    os.precision(4);
    os << "spectrum tail not negligible: dN/dx at x=" << pts.back().x << " is "
       << pts.back().dndx / peak << " of the peak";
    b.warnings.push_back(os.str());
  }
  b.n_total = n;
  b.e_total_hck = first_moment / (media.n_liquid() * scenario.x_max());
  const double unit_ev = hbar_c_k_ev(scenario);
  b.e_total_ev = b.e_total_hck * unit_ev;
  if (n > 0.0) {
    b.e_avg_hck = b.e_total_hck / n;
    b.e_avg_ev = b.e_avg_hck * unit_ev;
  }
  return b;
}

StaticEnergy schwinger_static_energy(const Media& media, const Scenario& scenario) {
  StaticEnergy s;
  const double ng = media.n_gas();
  const double nl = media.n_liquid();
  s.e_hck = std::pow(scenario.x_max(), 3) * (1.0 / ng - 1.0 / nl) / (6.0 * std::numbers::pi);
  s.e_ev = s.e_hck * hbar_c_k_ev(scenario);
  s.n_est = s.e_hck / (0.75 / nl);
  return s;
}

}  // namespace sono
