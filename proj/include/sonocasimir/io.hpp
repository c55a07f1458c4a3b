#pragma once

// Text formats: CSV and JSON spectrum tables, budget and report JSON.
// Numbers are printed with 12 significant digits, '.' separator, no locale.

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "sonocasimir/approx.hpp"
#include "sonocasimir/spectra.hpp"

namespace sono::io {

inline constexpr int kSignificantDigits = 12;

std::string format_number(double v);

/// v rounded to kSignificantDigits (the value that format_number prints).
double round_printed(double v);

/// Copy of the table with every x and dN/dx rounded as printed.
SpectrumTable rounded(const SpectrumTable& table);

struct TableLabel {
  std::string preset = "custom";
};

void write_csv(std::ostream& os, const SpectrumTable& table, const TableLabel& label);
nlohmann::ordered_json to_json(const SpectrumTable& table, const TableLabel& label);

/// Reads either format; the first non-blank character '{' selects JSON.
SpectrumTable read_table(std::istream& is, TableLabel* label = nullptr);

nlohmann::ordered_json to_json(const PhotonBudget& budget);
nlohmann::ordered_json to_json(const StaticEnergy& energy);
nlohmann::ordered_json to_json(const ApproximationReport& report);

/// Dumps with 2-space indentation and a trailing newline.
std::string dump(const nlohmann::ordered_json& j);

}  // namespace sono::io
