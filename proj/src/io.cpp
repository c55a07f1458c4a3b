#include "sonocasimir/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "sonocasimir/errors.hpp"

#ifndef SONO_VERSION
#define SONO_VERSION "0.0.0"
#endif

namespace sono::io {

namespace {

double parse_number(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw DomainError("read_table: malformed number '" + std::string(s) + "'");
  }
  return v;
}

std::string tool_id() { return std::string("sonocasimir ") + SONO_VERSION; }

SpectrumTable make_table(KernelMode mode, AFactor a_factor, double n_gas, double n_liquid,
                         double radius_um, double cutoff_nm) {
  return SpectrumTable(mode, a_factor, Media(n_gas, n_liquid),
                       Scenario::from_lab_units(radius_um, cutoff_nm));
}

}  // namespace

std::string format_number(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, kSignificantDigits);
  return std::string(buf, r.ptr);
}

double round_printed(double v) {
  if (!std::isfinite(v) || v == 0.0) return v == 0.0 ? 0.0 : v;
  return parse_number(format_number(v));
}

SpectrumTable rounded(const SpectrumTable& table) {
  SpectrumTable out = table;
  for (auto& p : out.points) {
    p.x = round_printed(p.x);
    p.dndx = round_printed(p.dndx);
  }
  return out;
}

void write_csv(std::ostream& os, const SpectrumTable& table, const TableLabel& label) {
  os << "# tool: " << tool_id() << '\n'
     << "# preset: " << label.preset << '\n'
     << "# n_gas: " << format_number(table.media.n_gas()) << '\n'
     << "# n_liquid: " << format_number(table.media.n_liquid()) << '\n'
     << "# radius_um: " << format_number(table.scenario.radius_um()) << '\n'
     << "# cutoff_nm: " << format_number(table.scenario.cutoff_nm()) << '\n'
     << "# x_max: " << format_number(table.scenario.x_max()) << '\n'
     << "# mode: " << to_string(table.mode) << '\n'
     << "# a_factor: " << to_string(table.a_factor) << '\n'
     << "x,dndx\n";
  for (const auto& p : table.points) os << format_number(p.x) << ',' << format_number(p.dndx) << '\n';
}

nlohmann::ordered_json to_json(const SpectrumTable& table, const TableLabel& label) {
  nlohmann::ordered_json j;
  j["tool"] = tool_id();
  j["preset"] = label.preset;
  j["media"] = {{"n_gas", round_printed(table.media.n_gas())},
                {"n_liquid", round_printed(table.media.n_liquid())}};
  j["scenario"] = {{"radius_um", round_printed(table.scenario.radius_um())},
                   {"cutoff_nm", round_printed(table.scenario.cutoff_nm())},
                   {"x_max", round_printed(table.scenario.x_max())}};
  j["mode"] = to_string(table.mode);
  j["a_factor"] = to_string(table.a_factor);
  auto points = nlohmann::ordered_json::array();
  for (const auto& p : table.points) {
    points.push_back({round_printed(p.x), round_printed(p.dndx)});
  }
  j["points"] = std::move(points);
  return j;
}

SpectrumTable read_table(std::istream& is, TableLabel* label) {
  std::stringstream buffer;
  buffer << is.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw DomainError("read_table: empty input");

  if (text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
      auto table = make_table(kernel_mode_from_string(j.at("mode").get<std::string>()),
                              a_factor_from_string(j.at("a_factor").get<std::string>()),
                              j.at("media").at("n_gas").get<double>(),
                              j.at("media").at("n_liquid").get<double>(),
                              j.at("scenario").at("radius_um").get<double>(),
                              j.at("scenario").at("cutoff_nm").get<double>());
      for (const auto& p : j.at("points")) {
        table.points.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
      }
      if (label) label->preset = j.value("preset", std::string("custom"));
      return table;
    } catch (const nlohmann::json::exception& e) {
      throw DomainError(std::string("read_table: invalid JSON spectrum: ") + e.what());
    }
  }

  std::map<std::string, std::string> meta;
  std::vector<SpectrumPoint> points;
  std::istringstream lines(text);
  std::string line;
  bool header_seen = false;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto colon = line.find(':');
      if (colon == std::string::npos) continue;
      auto key = line.substr(1, colon - 1);
      key.erase(0, key.find_first_not_of(' '));
      auto value = line.substr(colon + 1);
      value.erase(0, value.find_first_not_of(' '));
      meta[key] = value;
      continue;
    }
    if (!header_seen) {
      if (line != "x,dndx") throw DomainError("read_table: expected header 'x,dndx'");
      header_seen = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw DomainError("read_table: malformed row '" + line + "'");
    points.push_back({parse_number(std::string_view(line).substr(0, comma)),
                      parse_number(std::string_view(line).substr(comma + 1))});
  }
  auto need = [&](const char* key) -> const std::string& {
    const auto it = meta.find(key);
    if (it == meta.end()) throw DomainError(std::string("read_table: missing metadata '") + key + "'");
    return it->second;
  };
  auto table = make_table(kernel_mode_from_string(need("mode")), a_factor_from_string(need("a_factor")),
                          parse_number(need("n_gas")), parse_number(need("n_liquid")),
                          parse_number(need("radius_um")), parse_number(need("cutoff_nm")));
  table.points = std::move(points);
  if (label) label->preset = meta.count("preset") ? meta["preset"] : "custom";
  return table;
}

nlohmann::ordered_json to_json(const PhotonBudget& budget) {
  nlohmann::ordered_json j;
  j["n_total"] = round_printed(budget.n_total);
  j["e_total_hck"] = round_printed(budget.e_total_hck);
  j["e_total_ev"] = round_printed(budget.e_total_ev);
  j["e_avg_hck"] = round_printed(budget.e_avg_hck);
  j["e_avg_ev"] = round_printed(budget.e_avg_ev);
  j["warnings"] = budget.warnings;
  return j;
}

nlohmann::ordered_json to_json(const StaticEnergy& energy) {
  nlohmann::ordered_json j;
  j["e_hck"] = round_printed(energy.e_hck);
  j["e_ev"] = round_printed(energy.e_ev);
  j["n_est"] = round_printed(energy.n_est);
  return j;
}

nlohmann::ordered_json to_json(const ApproximationReport& report) {
  nlohmann::ordered_json j;
  j["max_abs_error"] = round_printed(report.max_abs_error);
  j["rms_error"] = round_printed(report.rms_error);
  j["energy_discrepancy_fraction"] = round_printed(report.energy_discrepancy_fraction);
  j["grid"] = report.grid;
  j["energy_exact_hck"] = round_printed(report.energy_exact_hck);
  j["energy_factorized_hck"] = round_printed(report.energy_factorized_hck);
  return j;
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace sono::io
