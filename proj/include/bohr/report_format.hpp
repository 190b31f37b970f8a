#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "bohr/constants.hpp"
#include "bohr/verify.hpp"

namespace bohr::report {

enum class Format { csv, json };

/// 12 significant digits, shortest form ("%.12g").
std::string number(double value);
/// value rounded to 12 significant digits, for JSON output.
double rounded(double value);

/// Rows of cells written as CSV with a mandatory header.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void write_csv(std::ostream& out) const;
};

Table constants_table(const ConstantsReport& report);
nlohmann::ordered_json constants_json(const ConstantsReport& report);

Table sweep_table(const SweepReport& report);
nlohmann::ordered_json sweep_json(const SweepReport& report);

std::string_view to_string(PerturbationTarget target);

}  // namespace bohr::report
