#include "sonocasimir/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "sonocasimir/errors.hpp"
#include "sonocasimir/io.hpp"
#include "sonocasimir/presets.hpp"
#include "sonocasimir/validation.hpp"

#ifndef SONO_VERSION
#define SONO_VERSION "0.0.0"
#endif

namespace sono::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string preset;
  std::optional<double> n_gas;
  std::optional<double> n_liquid;
  std::optional<double> radius_um;
  std::optional<double> cutoff_nm;
  std::string mode = "factorized";
  std::string a_factor = "unit";
  std::optional<double> x_max;
  double dx = 0.05;
  double tail_eps = 1e-8;
  std::string format = "csv";
  std::string out;
  int threads = 0;
};

struct Resolved {
  std::string label;
  double n_gas = 0.0;
  double n_liquid = 0.0;
  double radius_um = 0.0;
  double cutoff_nm = 0.0;

  Media media() const { return Media(n_gas, n_liquid); }
  Scenario scenario() const { return Scenario::from_lab_units(radius_um, cutoff_nm); }
};

enum class SweepParam { radius_um, cutoff_nm, n_liquid };

void add_scenario_options(CLI::App& app, CommonOptions& o) {
  app.add_option("--preset", o.preset, "Built-in scenario (schwinger, updated, min-radius, ambient, ambient-paper)");
  app.add_option("--n-gas", o.n_gas, "Refractive index inside the bubble");
  app.add_option("--n-liquid", o.n_liquid, "Refractive index of the liquid");
  app.add_option("--radius-um", o.radius_um, "Bubble radius [um]");
  app.add_option("--cutoff-nm", o.cutoff_nm, "Cutoff wavelength [nm], K = 2 pi / lambda");
}

void add_compute_options(CLI::App& app, CommonOptions& o, const char* x_max_help) {
  add_scenario_options(app, o);
  app.add_option("--mode", o.mode, "Kernel: exact, factorized or infinite")
      ->check(CLI::IsMember({"exact", "factorized", "infinite"}))
      ->capture_default_str();
  app.add_option("--a-factor", o.a_factor, "A-factor weighting for the exact kernel: unit or exact")
      ->check(CLI::IsMember({"unit", "exact"}))
      ->capture_default_str();
  app.add_option("--x-max", o.x_max, x_max_help);
  app.add_option("--dx", o.dx, "Spectrum grid spacing")->capture_default_str();
  app.add_option("--tail-eps", o.tail_eps, "Relative tail tolerance of the partial-wave sum")
      ->capture_default_str();
  app.add_option("--format", o.format, "Table format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--threads", o.threads, "Worker threads (0 = hardware concurrency)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
}

Resolved resolve(const CommonOptions& o) {
  Resolved r;
  const bool any_explicit = o.n_gas || o.n_liquid || o.radius_um || o.cutoff_nm;
  if (!o.preset.empty()) {
    const auto& p = find_preset(o.preset);
    r.label = p.name;
    r.n_gas = p.media.n_gas();
    r.n_liquid = p.media.n_liquid();
    r.radius_um = p.radius_um;
    r.cutoff_nm = p.cutoff_nm;
  } else if (!(o.n_gas && o.n_liquid && o.radius_um && o.cutoff_nm)) {
    throw UsageError("give --preset NAME or all of --n-gas, --n-liquid, --radius-um, --cutoff-nm");
  }
  if (any_explicit) r.label = "custom";
  if (o.n_gas) r.n_gas = *o.n_gas;
  if (o.n_liquid) r.n_liquid = *o.n_liquid;
  if (o.radius_um) r.radius_um = *o.radius_um;
  if (o.cutoff_nm) r.cutoff_nm = *o.cutoff_nm;
  // Work with the printed values so that tables re-read from disk describe
  // the same scenario bit for bit.
  r.n_gas = io::round_printed(r.n_gas);
  r.n_liquid = io::round_printed(r.n_liquid);
  r.radius_um = io::round_printed(r.radius_um);
  r.cutoff_nm = io::round_printed(r.cutoff_nm);
  r.media();
  r.scenario();
  return r;
}

TruncationPolicy policy_of(const CommonOptions& o) { return TruncationPolicy::adaptive(o.tail_eps); }

SpectrumTable compute_table(const Resolved& r, const CommonOptions& o, double x_max_factor) {
  const auto media = r.media();
  const auto scenario = r.scenario();
  const double x_max = o.x_max.value_or(x_max_factor * scenario.x_max());
  if (!(x_max > 0.0) || !std::isfinite(x_max)) throw UsageError("--x-max must be positive");
  if (!(o.dx > 0.0) || !std::isfinite(o.dx)) throw UsageError("--dx must be positive");
  if (o.dx > x_max) throw UsageError("--dx must not exceed --x-max");
  const auto policy = policy_of(o);
  const auto grid = uniform_grid(x_max, o.dx);
  auto table = spectrum_finite(media, scenario, grid, QuadSpec{}, kernel_mode_from_string(o.mode),
                               policy, a_factor_from_string(o.a_factor), o.threads);
  return io::rounded(table);
}

std::string render_table(const SpectrumTable& table, const std::string& label,
                         const std::string& format) {
  io::TableLabel tl{label};
  if (format == "json") return io::dump(io::to_json(table, tl));
  std::ostringstream os;
  io::write_csv(os, table, tl);
  return os.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    out.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

Json describe(const std::string& label, const Media& media, const Scenario& scenario,
              KernelMode mode, AFactor a_factor) {
  Json j;
  j["tool"] = std::string("sonocasimir ") + SONO_VERSION;
  j["preset"] = label;
  j["media"] = {{"n_gas", io::round_printed(media.n_gas())},
                {"n_liquid", io::round_printed(media.n_liquid())}};
  j["scenario"] = {{"radius_um", io::round_printed(scenario.radius_um())},
                   {"cutoff_nm", io::round_printed(scenario.cutoff_nm())},
                   {"x_max", io::round_printed(scenario.x_max())}};
  j["mode"] = to_string(mode);
  j["a_factor"] = to_string(a_factor);
  return j;
}

// Budget document: closed form for infinite mode without a table, otherwise
// trapezoid integration of the (printed) table.
Json budget_document(const std::string& label, const Media& media, const Scenario& scenario,
                     KernelMode mode, AFactor a_factor, const SpectrumTable* table) {
  Json j = describe(label, media, scenario, mode, a_factor);
  PhotonBudget budget;
  if (table) {
    j["source"] = "table";
    j["table_points"] = table->points.size();
    j["table_x_max"] = table->points.empty() ? 0.0 : io::round_printed(table->points.back().x);
    budget = photon_budget_from_table(*table, media, scenario);
  } else {
    j["source"] = "closed-form";
    budget = photon_budget_infinite(media, scenario);
  }
  j["budget"] = io::to_json(budget);
  j["static"] = io::to_json(schwinger_static_energy(media, scenario));
  return j;
}

int cmd_spectrum(const CommonOptions& o, std::ostream& out) {
  const auto r = resolve(o);
  policy_of(o);
  const auto table = compute_table(r, o, 1.2);
  emit(render_table(table, r.label, o.format), o.out, out);
  return kExitOk;
}

int cmd_budget(const CommonOptions& o, const std::string& table_path, std::ostream& out) {
  if (!table_path.empty()) {
    if (!o.preset.empty() || o.n_gas || o.n_liquid || o.radius_um || o.cutoff_nm) {
      throw UsageError("--table cannot be combined with scenario options");
    }
    std::ifstream f(table_path, std::ios::binary);
    if (!f) throw UsageError("cannot open table '" + table_path + "'");
    io::TableLabel label;
    const auto table = io::read_table(f, &label);
    emit(io::dump(budget_document(label.preset, table.media, table.scenario, table.mode,
                                  table.a_factor, &table)),
         o.out, out);
    return kExitOk;
  }
  const auto r = resolve(o);
  policy_of(o);
  const auto mode = kernel_mode_from_string(o.mode);
  const auto a_factor = a_factor_from_string(o.a_factor);
  if (mode == KernelMode::infinite && !o.x_max) {
    emit(io::dump(budget_document(r.label, r.media(), r.scenario(), mode, a_factor, nullptr)),
         o.out, out);
    return kExitOk;
  }
  const auto table = compute_table(r, o, 3.0);
  emit(io::dump(budget_document(r.label, r.media(), r.scenario(), mode, a_factor, &table)), o.out,
       out);
  return kExitOk;
}

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (!part.empty()) out.push_back(part);
    }
  }
  return out;
}

int cmd_validate(const std::vector<std::string>& checks, double perturb, double tail_eps,
                 int threads, const std::string& path, std::ostream& out, std::ostream& err) {
  ValidationOptions opts;
  opts.families = split_list(checks);
  opts.perturb = perturb;
  opts.tail_epsilon = tail_eps;
  opts.threads = threads;
  TruncationPolicy::adaptive(tail_eps);
  for (const auto& f : opts.families) {
    const auto& all = validation_families();
    if (std::find(all.begin(), all.end(), f) == all.end()) {
      throw UsageError("unknown check family '" + f + "'");
    }
  }
  const auto results = run_validation(opts);
  Json j;
  j["tool"] = std::string("sonocasimir ") + SONO_VERSION;
  auto arr = Json::array();
  auto failed = Json::array();
  bool all_ok = true;
  for (const auto& r : results) {
    Json c;
    c["family"] = r.family;
    c["name"] = r.name;
    c["status"] = r.passed ? "pass" : "fail";
    c["metric"] = std::isfinite(r.metric) ? Json(io::round_printed(r.metric)) : Json(nullptr);
    c["threshold"] = r.threshold;
    c["seconds"] = io::round_printed(r.seconds);
    c["detail"] = r.detail;
    arr.push_back(std::move(c));
    if (!r.passed) {
      all_ok = false;
      failed.push_back(r.name);
      err << "FAILED " << r.family << "/" << r.name << ": metric " << io::format_number(r.metric)
          << " > " << io::format_number(r.threshold);
      if (!r.detail.empty()) err << " (" << r.detail << ")";
      err << '\n';
    }
  }
  j["passed"] = all_ok;
  j["checks"] = std::move(arr);
  j["failed"] = std::move(failed);
  emit(io::dump(j), path, out);
  return all_ok ? kExitOk : kExitValidation;
}

std::string step_name(int i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "step_%03d", i);
  return buf;
}

int cmd_sweep(CommonOptions o, const std::string& param, double from, double to, int steps,
              std::ostream& out, std::ostream& err) {
  if (!(from < to)) throw UsageError("--from must be less than --to");
  if (steps < 2) throw UsageError("--steps must be >= 2");
  if (o.out.empty()) throw UsageError("sweep requires --out DIR");
  const SweepParam which = param == "radius-um"   ? SweepParam::radius_um
                           : param == "cutoff-nm" ? SweepParam::cutoff_nm
                                                  : SweepParam::n_liquid;
  policy_of(o);
  // Validate the base configuration once (the swept value is substituted).
  {
    CommonOptions probe = o;
    switch (which) {
      case SweepParam::radius_um: probe.radius_um = from; break;
      case SweepParam::cutoff_nm: probe.cutoff_nm = from; break;
      case SweepParam::n_liquid: probe.n_liquid = from; break;
    }
    if (probe.preset.empty() && !(probe.n_gas && probe.n_liquid && probe.radius_um && probe.cutoff_nm)) {
      throw UsageError("give --preset NAME or the scenario options not being swept");
    }
    if (!probe.preset.empty()) find_preset(probe.preset);
  }

  const std::filesystem::path dir(o.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create directory '" + o.out + "': " + ec.message());

  const std::string ext = o.format == "json" ? ".json" : ".csv";
  const auto mode = kernel_mode_from_string(o.mode);
  Json index;
  index["tool"] = std::string("sonocasimir ") + SONO_VERSION;
  index["param"] = param;
  index["from"] = io::round_printed(from);
  index["to"] = io::round_printed(to);
  index["steps"] = steps;
  index["mode"] = o.mode;
  index["a_factor"] = o.a_factor;
  index["format"] = o.format;
  auto entries = Json::array();
  int failures = 0;

  for (int i = 0; i < steps; ++i) {
    const double value = io::round_printed(from + (to - from) * i / (steps - 1));
    CommonOptions step = o;
    step.out.clear();
    switch (which) {
      case SweepParam::radius_um: step.radius_um = value; break;
      case SweepParam::cutoff_nm: step.cutoff_nm = value; break;
      case SweepParam::n_liquid: step.n_liquid = value; break;
    }
    Json e;
    e["index"] = i;
    e["value"] = value;
    const std::string base = step_name(i);
    try {
      const auto r = resolve(step);
      const auto table = compute_table(r, step, 1.2);
      emit(render_table(table, r.label, o.format), (dir / (base + ext)).string(), out);
      const auto budget =
          mode == KernelMode::infinite
              ? budget_document(r.label, r.media(), r.scenario(), mode, table.a_factor, nullptr)
              : budget_document(r.label, r.media(), r.scenario(), mode, table.a_factor, &table);
      emit(io::dump(budget), (dir / (base + "_budget.json")).string(), out);
      e["status"] = "ok";
      e["spectrum"] = base + ext;
      e["budget"] = base + "_budget.json";
      e["n_total"] = budget["budget"]["n_total"];
      e["e_total_hck"] = budget["budget"]["e_total_hck"];
    } catch (const std::exception& ex) {
      ++failures;
      e["status"] = "failed";
      e["error"] = ex.what();
      err << "sweep step " << i << " (" << param << "=" << io::format_number(value)
          << ") failed: " << ex.what() << '\n';
    }
    entries.push_back(std::move(e));
  }
  index["results"] = std::move(entries);
  index["failures"] = failures;
  emit(io::dump(index), (dir / "index.json").string(), out);
  return failures == 0 ? kExitOk : kExitPartialSweep;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Photon production by a collapsing dielectric bubble: spectra, budgets, checks",
               "sonocasimir"};
  app.set_version_flag("--version", std::string("sonocasimir ") + SONO_VERSION);
  app.require_subcommand(1);

  CommonOptions spectrum_opts;
  auto* spectrum = app.add_subcommand("spectrum", "Compute a dN/dx table");
  add_compute_options(*spectrum, spectrum_opts, "Upper end of the x grid (default 1.2 R K)");
  spectrum->add_option("--out", spectrum_opts.out, "Output file (default stdout)");

  CommonOptions budget_opts;
  std::string table_path;
  auto* budget = app.add_subcommand("budget", "Photon number and energy budget (JSON)");
  add_compute_options(*budget, budget_opts, "Upper end of the integrated x grid (default 3 R K)");
  budget->add_option("--out", budget_opts.out, "Output file (default stdout)");
  budget->add_option("--table", table_path, "Integrate a previously written CSV/JSON table");

  std::vector<std::string> checks;
  double perturb = 0.0;
  double validate_tail = 1e-8;
  int validate_threads = 0;
  std::string validate_out;
  auto* validate = app.add_subcommand("validate", "Run the self-check suite (JSON)");
  validate->add_option("--checks", checks, "Comma-separated check families (default all)")
      ->delimiter(',');
  validate->add_option("--perturb", perturb, "Relative perturbation of J in identity checks (testing)");
  validate->add_option("--tail-eps", validate_tail, "Relative tail tolerance")->capture_default_str();
  validate->add_option("--threads", validate_threads, "Worker threads (0 = auto)")
      ->check(CLI::NonNegativeNumber);
  validate->add_option("--out", validate_out, "Output file (default stdout)");

  CommonOptions sweep_opts;
  std::string sweep_param;
  double sweep_from = 0.0;
  double sweep_to = 0.0;
  int sweep_steps = 0;
  auto* sweep = app.add_subcommand("sweep", "Spectra and budgets over a parameter range");
  add_compute_options(*sweep, sweep_opts, "Upper end of each x grid (default 1.2 R K)");
  sweep->add_option("--param", sweep_param, "Swept parameter")
      ->required()
      ->check(CLI::IsMember({"radius-um", "cutoff-nm", "n-liquid"}));
  sweep->add_option("--from", sweep_from, "First value")->required();
  sweep->add_option("--to", sweep_to, "Last value")->required();
  sweep->add_option("--steps", sweep_steps, "Number of values (>= 2)")->required();
  sweep->add_option("--out", sweep_opts.out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*spectrum) return cmd_spectrum(spectrum_opts, out);
    if (*budget) return cmd_budget(budget_opts, table_path, out);
    if (*validate) {
      return cmd_validate(checks, perturb, validate_tail, validate_threads, validate_out, out, err);
    }
    if (*sweep) {
      return cmd_sweep(sweep_opts, sweep_param, sweep_from, sweep_to, sweep_steps, out, err);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("sonocasimir");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace sono::cli
