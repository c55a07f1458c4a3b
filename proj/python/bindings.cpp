#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sonocasimir/approx.hpp"
#include "sonocasimir/cli.hpp"
#include "sonocasimir/errors.hpp"
#include "sonocasimir/presets.hpp"
#include "sonocasimir/spectra.hpp"
#include "sonocasimir/validation.hpp"

namespace py = pybind11;
using namespace sono;

namespace {

TruncationPolicy policy(double tail_eps, int fixed_l_max) {
  return fixed_l_max > 0 ? TruncationPolicy::fixed(fixed_l_max, tail_eps) : TruncationPolicy::adaptive(tail_eps);
}

AFactor af(const std::string& s) { return a_factor_from_string(s); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Photon production by a collapsing dielectric bubble";
  m.attr("__version__") = SONO_VERSION;

  static py::exception<NumericalError> numerical_error(m, "NumericalError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const RangeError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const NumericalError& e) {
      PyErr_SetString(numerical_error.ptr(), e.what());
    }
  });

  py::class_<Media>(m, "Media")
      .def(py::init<double, double>(), py::arg("n_gas"), py::arg("n_liquid"))
      .def_property_readonly("n_gas", &Media::n_gas)
      .def_property_readonly("n_liquid", &Media::n_liquid)
      .def("__repr__", [](const Media& x) {
        std::ostringstream os;
        os << "Media(n_gas=" << x.n_gas() << ", n_liquid=" << x.n_liquid() << ")";
        return os.str();
      });

  py::class_<Scenario>(m, "Scenario")
      .def(py::init<double, double>(), py::arg("radius_m"), py::arg("cutoff_per_m"))
      .def_static("from_lab_units", &Scenario::from_lab_units, py::arg("radius_um"), py::arg("cutoff_nm"))
      .def_property_readonly("radius", &Scenario::radius)
      .def_property_readonly("cutoff", &Scenario::cutoff)
      .def_property_readonly("x_max", &Scenario::x_max);

  py::class_<MatchingCoefficients>(m, "MatchingCoefficients")
      .def_readonly("a", &MatchingCoefficients::a)
      .def_readonly("b", &MatchingCoefficients::b)
      .def_readonly("c", &MatchingCoefficients::c)
      .def_readonly("suppressed", &MatchingCoefficients::suppressed);

  py::class_<PhotonBudget>(m, "PhotonBudget")
      .def_readonly("n_total", &PhotonBudget::n_total)
      .def_readonly("e_total_hck", &PhotonBudget::e_total_hck)
      .def_readonly("e_total_ev", &PhotonBudget::e_total_ev)
      .def_readonly("e_avg_hck", &PhotonBudget::e_avg_hck)
      .def_readonly("e_avg_ev", &PhotonBudget::e_avg_ev)
      .def_readonly("warnings", &PhotonBudget::warnings);

  py::class_<StaticEnergy>(m, "StaticEnergy")
      .def_readonly("e_hck", &StaticEnergy::e_hck)
      .def_readonly("e_ev", &StaticEnergy::e_ev)
      .def_readonly("n_est", &StaticEnergy::n_est);

  m.def("bessel_j_half", py::overload_cast<int, double>(&bessel_j_half), py::arg("l"), py::arg("z"));
  m.def("bessel_n_half", py::overload_cast<int, double>(&bessel_n_half), py::arg("l"), py::arg("z"));
  m.def("pseudo_wronskian", [](int l, double x, double y) { return pseudo_wronskian(ModeIndex(l), x, y); },
        py::arg("l"), py::arg("x"), py::arg("y"));
  m.def("pseudo_wronskian_diagonal", [](int l, double x) { return pseudo_wronskian_diagonal(ModeIndex(l), x); },
        py::arg("l"), py::arg("x"));
  m.def("matching_coefficients",
        [](const Media& media, int l, double y) { return matching_coefficients(media, ModeIndex(l), y); },
        py::arg("media"), py::arg("l"), py::arg("y"));
  m.def("a_squared_asymptotic",
        [](const Media& media, int l, double y) { return a_squared_asymptotic(media, ModeIndex(l), y); },
        py::arg("media"), py::arg("l"), py::arg("y"));

  m.def("f_exact",
        [](double x, double y, const Media& media, const std::string& a_factor, double tail_eps, int fixed_l_max) {
          return f_exact(x, y, policy(tail_eps, fixed_l_max), media, af(a_factor));
        },
        py::arg("x"), py::arg("y"), py::arg("media") = Media(1.0, 1.0), py::arg("a_factor") = "unit",
        py::arg("tail_eps") = 1e-8, py::arg("fixed_l_max") = 0);
  m.def("d_exact", [](double x, double tail_eps) { return d_exact(x, TruncationPolicy::adaptive(tail_eps)); },
        py::arg("x"), py::arg("tail_eps") = 1e-8);
  m.def("d_approx", &d_approx, py::arg("x"));
  m.def("sinc_kernel", &sinc_kernel, py::arg("t"));
  m.def("f_factorized", &f_factorized, py::arg("x"), py::arg("y"));
  m.def("overlap_integral_closed",
        [](const Media& media, int l, double x, double y) { return overlap_integral_closed(media, ModeIndex(l), x, y); },
        py::arg("media"), py::arg("l"), py::arg("x"), py::arg("y"));

  m.def("spectrum_infinite", &spectrum_infinite, py::arg("media"), py::arg("scenario"), py::arg("x"));
  m.def("spectrum",
        [](const Media& media, const Scenario& scenario, const std::vector<double>& xs, const std::string& mode,
           const std::string& a_factor, double tail_eps, int threads) {
          std::vector<std::pair<double, double>> out;
          py::gil_scoped_release release;
          const auto t = spectrum_finite(media, scenario, xs, QuadSpec{}, kernel_mode_from_string(mode),
                                         TruncationPolicy::adaptive(tail_eps), af(a_factor), threads);
          for (const auto& p : t.points) out.emplace_back(p.x, p.dndx);
          return out;
        },
        py::arg("media"), py::arg("scenario"), py::arg("xs"), py::arg("mode") = "factorized",
        py::arg("a_factor") = "unit", py::arg("tail_eps") = 1e-8, py::arg("threads") = 0);
  m.def("photon_budget_infinite", &photon_budget_infinite, py::arg("media"), py::arg("scenario"));
  m.def("photon_budget",
        [](const Media& media, const Scenario& scenario, const std::vector<std::pair<double, double>>& points) {
          SpectrumTable t(KernelMode::factorized, AFactor::unit, media, scenario);
          for (const auto& [x, d] : points) t.points.push_back({x, d});
          return photon_budget_from_table(t, media, scenario);
        },
        py::arg("media"), py::arg("scenario"), py::arg("points"));
  m.def("schwinger_static_energy", &schwinger_static_energy, py::arg("media"), py::arg("scenario"));

  m.def("preset_names", [] {
    std::vector<std::string> names;
    for (const auto& p : builtin_presets()) names.push_back(p.name);
    return names;
  });
  m.def("preset", [](const std::string& name) {
    const auto& p = find_preset(name);
    return py::make_tuple(p.media, p.scenario());
  }, py::arg("name"));

  m.def("validate", [](const std::vector<std::string>& families, double perturb) {
    ValidationOptions o;
    o.families = families;
    o.perturb = perturb;
    py::list out;
    for (const auto& r : run_validation(o)) {
      py::dict d;
      d["family"] = r.family;
      d["name"] = r.name;
      d["passed"] = r.passed;
      d["metric"] = r.metric;
      d["threshold"] = r.threshold;
      out.append(d);
    }
    return out;
  }, py::arg("families") = std::vector<std::string>{}, py::arg("perturb") = 0.0);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
