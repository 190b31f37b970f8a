#include "bohr/report_format.hpp"

#include <ostream>
#include <string>

#include <fmt/format.h>

namespace bohr::report {

std::string number(double value) { return fmt::format("{:.12g}", value); }

double rounded(double value) { return std::stod(number(value)); }

namespace {

std::string quoted(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void write_row(std::ostream& out, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out << ',';
    out << quoted(row[i]);
  }
  out << '\n';
}

std::string flag(bool b) { return b ? "true" : "false"; }

}  // namespace

void Table::write_csv(std::ostream& out) const {
  write_row(out, header);
  for (const auto& row : rows) write_row(out, row);
}

Table constants_table(const ConstantsReport& report) {
  Table t{{"name", "computed", "reference", "tolerance", "residual", "ok"}, {}};
  for (const auto& r : report.residuals) {
    t.rows.push_back({r.name, number(r.computed), number(r.reference), number(r.tolerance), number(r.residual()),
                      flag(r.ok())});
  }
  return t;
}

nlohmann::ordered_json constants_json(const ConstantsReport& report) {
  nlohmann::ordered_json j;
  j["aStar1"] = rounded(report.a_star1);
  j["aStar2"] = rounded(report.a_star2);
  j["lambda1"] = rounded(report.lambda1);
  j["lambda2"] = rounded(report.lambda2);
  j["p"] = rounded(report.p);
  j["radii"] = {{"classic", rounded(report.radii.classic)}, {"thmE", rounded(report.radii.thm_e)}};
  auto residuals = nlohmann::ordered_json::array();
  for (const auto& r : report.residuals) {
    residuals.push_back({{"name", r.name},
                         {"computed", rounded(r.computed)},
                         {"reference", rounded(r.reference)},
                         {"tolerance", rounded(r.tolerance)},
                         {"residual", rounded(r.residual())},
                         {"ok", r.ok()}});
  }
  j["residuals"] = residuals;
  j["withinTolerance"] = report.within_tolerance();
  return j;
}

Table sweep_table(const SweepReport& report) {
  Table t{{"theorem", "n", "a", "r", "interpretation", "head", "tail", "area", "area2", "extra", "total", "margin",
           "certified", "family", "violation"},
          {}};
  for (const auto& row : report.rows) {
    const auto& x = row.terms;
    t.rows.push_back({std::string(to_string(report.theorem)), std::to_string(row.n), number(row.a), number(row.r),
                      std::string(to_string(x.interpretation)), number(x.head_value), number(x.majorant_tail),
                      number(x.area_contribution), number(x.area_squared_contribution),
                      number(x.extra_area_contribution), number(x.total), number(x.margin), flag(x.certified),
                      row.family, flag(row.violation)});
  }
  return t;
}

nlohmann::ordered_json sweep_json(const SweepReport& report) {
  nlohmann::ordered_json j;
  j["theorem"] = std::string(to_string(report.theorem));
  j["worstMargin"] = rounded(report.worst_margin);
  j["violations"] = report.violations.size();
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    const auto& x = row.terms;
    rows.push_back({{"n", row.n},
                    {"a", rounded(row.a)},
                    {"r", rounded(row.r)},
                    {"family", row.family},
                    {"interpretation", std::string(to_string(x.interpretation))},
                    {"head", rounded(x.head_value)},
                    {"tail", rounded(x.majorant_tail)},
                    {"areaTerm", rounded(x.area_term)},
                    {"area", rounded(x.area_contribution)},
                    {"area2", rounded(x.area_squared_contribution)},
                    {"extra", rounded(x.extra_area_contribution)},
                    {"total", rounded(x.total)},
                    {"margin", rounded(x.margin)},
                    {"certified", x.certified},
                    {"closedForm", x.closed_form},
                    {"violation", row.violation}});
  }
  j["rows"] = rows;
  return j;
}

std::string_view to_string(PerturbationTarget target) {
  switch (target) {
    case PerturbationTarget::area:
      return "area";
    case PerturbationTarget::area_squared:
      return "area2";
    case PerturbationTarget::extra_area:
      return "extra";
    case PerturbationTarget::automatic:
      break;
  }
  return "auto";
}

}  // namespace bohr::report
