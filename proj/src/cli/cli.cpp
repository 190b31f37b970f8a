#include "bohr/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "bohr/errors.hpp"
#include "bohr/series_ops.hpp"
#include "bohr/report_format.hpp"
#include "bohr/verify.hpp"

namespace bohr::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string theorem;
  std::string family;
  std::string n = "1";
  std::string a_grid = "0:0.999:0.001";
  std::string r = "threshold";
  double epsilon = 0.0;
  std::string format = "csv";
  std::string out_path;
  std::optional<double> tol;
  std::uint64_t seed = 0;
  std::string interpretation = "literal";
  std::string scan_interpretation = "slice";
  std::string target = "auto";
  std::string part;
  std::optional<std::uint32_t> max_degree;
  bool oracle = false;
  double budget = kDefaultOracleBudget;
};

double parse_real(const std::string& text, const char* what) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError(fmt::format("{}: '{}' is not a number", what, text));
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, sep);) parts.push_back(item);
  return parts;
}

std::vector<std::size_t> parse_dimensions(const std::string& text) {
  std::vector<std::size_t> dims;
  for (const auto& item : split(text, ',')) {
    const double v = parse_real(item, "--n");
    if (v < 1.0 || v != static_cast<double>(static_cast<std::size_t>(v))) {
      throw UsageError(fmt::format("--n: '{}' is not a positive integer", item));
    }
    dims.push_back(static_cast<std::size_t>(v));
  }
  if (dims.empty()) throw UsageError("--n: empty list");
  return dims;
}

std::vector<double> parse_grid(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw UsageError(fmt::format("--a: expected start:stop:step, got '{}'", text));
  const double start = parse_real(parts[0], "--a");
  const double stop = parse_real(parts[1], "--a");
  const double step = parse_real(parts[2], "--a");
  if (!(step > 0.0) || !(start >= 0.0 && start <= stop && stop < 1.0)) {
    throw DomainError(fmt::format("--a: need step > 0 and 0 <= start <= stop < 1, got '{}'", text));
  }
  return make_grid(start, stop, step);
}

std::vector<double> parse_reals(const std::string& text, const char* what) {
  std::vector<double> values;
  for (const auto& item : split(text, ',')) values.push_back(parse_real(item, what));
  if (values.empty()) throw UsageError(fmt::format("{}: empty list", what));
  return values;
}

TheoremId parse_theorem(const std::string& text) {
  const auto id = parse_theorem_id(text);
  if (!id) throw UsageError(fmt::format("unknown theorem '{}'", text));
  return *id;
}

AreaInterpretation parse_interpretation(const std::string& text) {
  if (text == "literal") return AreaInterpretation::literal;
  if (text == "slice") return AreaInterpretation::slice;
  throw UsageError(fmt::format("unknown interpretation '{}'", text));
}

PerturbationTarget parse_target(const std::string& text) {
  if (text == "auto") return PerturbationTarget::automatic;
  if (text == "area") return PerturbationTarget::area;
  if (text == "area2") return PerturbationTarget::area_squared;
  if (text == "extra") return PerturbationTarget::extra_area;
  throw UsageError(fmt::format("unknown perturbation target '{}'", text));
}

FamilySpec parse_family(const std::string& text) {
  if (text.empty()) throw UsageError("--family is required");
  return FamilySpec::parse(text);
}

// The named theorem's radius, or the explicit --r values.
std::vector<double> radii_for(const RunConfig& cfg, TheoremId id, std::size_t n, const Radii& radii) {
  if (cfg.r == "threshold") return {threshold_radius(id, n, radii)};
  return parse_reals(cfg.r, "--r");
}

void emit(const RunConfig& cfg, std::ostream& out, const report::Table& table, const nlohmann::ordered_json& json) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path, std::ios::binary);
    if (!file) throw UsageError(fmt::format("cannot open '{}' for writing", cfg.out_path));
    sink = &file;
  }
  if (cfg.format == "json") {
    *sink << json.dump(2) << '\n';
  } else {
    table.write_csv(*sink);
  }
}

nlohmann::ordered_json table_json(const report::Table& table) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) {
      const auto& cell = row[i];
      if (cell == "true" || cell == "false") {
        obj[table.header[i]] = cell == "true";
      } else if (cell.empty()) {
        obj[table.header[i]] = nullptr;
      } else {
        char* end = nullptr;
        const double v = std::strtod(cell.c_str(), &end);
        if (end && *end == '\0') {
          obj[table.header[i]] = v;
        } else {
          obj[table.header[i]] = cell;
        }
      }
    }
    rows.push_back(obj);
  }
  return {{"rows", rows}};
}

int cmd_constants(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  ResidualTolerances tolerances;
  if (cfg.tol) tolerances = {*cfg.tol, *cfg.tol, *cfg.tol, *cfg.tol};
  const auto report = constants_report(tolerances);
  emit(cfg, out, report::constants_table(report), report::constants_json(report));
  if (const auto breach = report.first_breach()) {
    err << fmt::format("residual breach: {} computed {} reference {} residual {} > tolerance {}\n", breach->name,
                       report::number(breach->computed), report::number(breach->reference),
                       report::number(breach->residual()), report::number(breach->tolerance));
    return kResidualBreach;
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.theorem.empty()) throw UsageError("--theorem is required");
  const auto constants = constants_report();
  SweepConfig sweep;
  sweep.theorem = parse_theorem(cfg.theorem);
  if (!cfg.family.empty()) {
    sweep.family = parse_family(cfg.family);
  } else {
    sweep.dimensions = parse_dimensions(cfg.n);
    sweep.a_grid = parse_grid(cfg.a_grid);
  }
  if (cfg.r != "threshold") sweep.radii = parse_reals(cfg.r, "--r");
  if (cfg.tol) sweep.tolerances = {*cfg.tol, *cfg.tol};

  const auto report = theorem_sweep(sweep, constants);
  emit(cfg, out, report::sweep_table(report), report::sweep_json(report));
  if (!report.ok()) {
    const auto& first = report.rows[report.violations.front()];
    err << fmt::format("{} violation(s); first at n={} a={} r={} total={}\n", report.violations.size(), first.n,
                       report::number(first.a), report::number(first.r), report::number(first.terms.total));
    return kViolations;
  }
  return kOk;
}

int cmd_radius(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.theorem.empty()) throw UsageError("--functional is required");
  const auto id = parse_theorem(cfg.theorem);
  const auto family = parse_family(cfg.family);
  auto spec = preset(id, sharp_constants(constants_report()));
  spec.interpretation = parse_interpretation(cfg.interpretation);
  const auto result = radius_search(spec, family, cfg.tol.value_or(1e-12));

  report::Table table{{"functional", "family", "interpretation", "radius", "lo", "hi", "iterations", "binding",
                       "certified"},
                      {}};
  table.rows.push_back({spec.name, family.describe(), std::string(to_string(spec.interpretation)),
                        report::number(result.radius), report::number(result.lo), report::number(result.hi),
                        std::to_string(result.iterations), result.binding ? "true" : "false",
                        result.certified ? "true" : "false"});
  emit(cfg, out, table, table_json(table));
  return kOk;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.theorem.empty()) throw UsageError("--theorem is required");
  const auto id = parse_theorem(cfg.theorem);
  const auto dims = parse_dimensions(cfg.n);
  const auto grid = parse_grid(cfg.a_grid);
  const auto constants = constants_report();
  auto spec = preset(id, sharp_constants(constants));
  spec.interpretation = parse_interpretation(cfg.scan_interpretation);
  const auto target = parse_target(cfg.target);
  if (!(cfg.epsilon >= 0.0)) throw DomainError("--epsilon must be nonnegative");

  report::Table table{{"theorem", "n", "r", "interpretation", "epsilon", "target", "argmax_a", "max_total",
                       "refined_argmax_a", "refined_max_total", "perturbed_max", "perturbed_at_argmax"},
                      {}};
  for (auto n : dims) {
    const auto family = extremal_family(id, n, 0.0);
    const FamilyTemplate tmpl{family.kind(), n};
    for (double r : radii_for(cfg, id, n, constants.radii)) {
      const auto s = sharpness_scan(spec, tmpl, grid, r, cfg.epsilon, target);
      table.rows.push_back({spec.name, std::to_string(n), report::number(r),
                            std::string(to_string(spec.interpretation)), report::number(s.epsilon),
                            std::string(report::to_string(s.target)), report::number(s.argmax_a),
                            report::number(s.max_total), report::number(s.refined_argmax_a),
                            report::number(s.refined_max_total), report::number(s.perturbed_max),
                            report::number(s.perturbed_at_argmax)});
    }
  }
  emit(cfg, out, table, table_json(table));
  return kOk;
}

int cmd_lemma(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto family = parse_family(cfg.family);
  if (cfg.r == "threshold") throw UsageError("lemma needs explicit --r values");
  const auto radii = parse_reals(cfg.r, "--r");
  const auto route = cfg.oracle ? ExpansionRoute::oracle : ExpansionRoute::closed_form;

  report::Table table{{"part", "family", "r", "lhs", "mid", "rhs", "ok"}, {}};
  bool all_ok = true;
  for (double r : radii) {
    std::vector<std::string> row{cfg.part, family.describe(), report::number(r)};
    bool ok = false;
    if (cfg.part == "a" || cfg.part == "b" || cfg.part == "c") {
      LemmaCheck check;
      if (cfg.part == "a") {
        check = lemma1a_check(family, r, cfg.max_degree, route, cfg.budget);
      } else if (cfg.part == "b") {
        check = lemma1b_check(family, r, cfg.max_degree, route, cfg.budget);
      } else {
        check = lemma1c_check(family, r, cfg.max_degree);
      }
      ok = check.ok;
      row.insert(row.end(), {report::number(check.lhs), "", report::number(check.rhs)});
    } else if (cfg.part == "sp") {
      const std::vector<Complex> z(family.dimension(), Complex(-r));
      const auto chain = schwarz_pick_chain(family, z);
      // The inner bound presumes boundedness on the unit polydisk.
      ok = chain.outer_ok && (family.domain_radius_cap() < 1.0 || chain.inner_ok);
      row.insert(row.end(), {report::number(chain.modulus), report::number(chain.inner), report::number(chain.outer)});
    } else {
      throw UsageError(fmt::format("--part must be a, b, c or sp, got '{}'", cfg.part));
    }
    row.push_back(ok ? "true" : "false");
    all_ok = all_ok && ok;
    table.rows.push_back(std::move(row));
  }
  emit(cfg, out, table, table_json(table));
  if (!all_ok) {
    err << "lemma bound violated\n";
    return kViolations;
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Numerical checks of Bohr-type inequalities", "bohr"};
  app.require_subcommand(1);

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.out_path, "write the report to this path");
  };
  auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", cfg.seed, "reserved; currently unused"); };

  auto* constants = app.add_subcommand("constants", "sharp constants and their residuals");
  add_output(constants);
  constants->add_option("--tol", cfg.tol, "override every residual tolerance");

  auto* verify = app.add_subcommand("verify", "evaluate a theorem over a grid of extremal functions");
  verify->add_option("--theorem", cfg.theorem, "classic, A, B1, B2, C, D, E, T21, T22, T23");
  verify->add_option("--family", cfg.family, "fixed family, e.g. moebius:0.5 or scaled:0.6,2");
  verify->add_option("--n", cfg.n, "comma-separated dimensions");
  verify->add_option("--a", cfg.a_grid, "start:stop:step");
  verify->add_option("--r", cfg.r, "comma-separated radii or 'threshold'");
  verify->add_option("--tol", cfg.tol, "violation tolerance");
  add_output(verify);
  add_seed(verify);

  auto* radius = app.add_subcommand("radius", "largest radius keeping a functional <= 1");
  radius->add_option("--functional,--theorem", cfg.theorem, "functional name");
  radius->add_option("--family", cfg.family, "family, e.g. moebius:0.9");
  radius->add_option("--interpretation", cfg.interpretation, "literal or slice");
  radius->add_option("--tol", cfg.tol, "bisection tolerance");
  add_output(radius);

  auto* scan = app.add_subcommand("scan", "maximise a functional over the extremal family");
  scan->add_option("--theorem", cfg.theorem, "theorem id");
  scan->add_option("--n", cfg.n, "comma-separated dimensions");
  scan->add_option("--a", cfg.a_grid, "start:stop:step");
  scan->add_option("--r", cfg.r, "comma-separated radii or 'threshold'");
  scan->add_option("--epsilon", cfg.epsilon, "perturbation of the sharp weight");
  scan->add_option("--target", cfg.target, "auto, area, area2 or extra");
  scan->add_option("--interpretation", cfg.scan_interpretation, "slice (default) or literal");
  add_output(scan);
  add_seed(scan);

  auto* lemma = app.add_subcommand("lemma", "coefficient-sum lemmas and the Schwarz-Pick chain");
  lemma->add_option("--part", cfg.part, "a, b, c or sp")->required();
  lemma->add_option("--family", cfg.family, "family");
  lemma->add_option("--r", cfg.r, "comma-separated radii");
  lemma->add_option("--degree", cfg.max_degree, "truncation degree");
  lemma->add_flag("--oracle", cfg.oracle, "expand by power-series division");
  lemma->add_option("--budget", cfg.budget, "term budget of the division oracle");
  add_output(lemma);

  std::vector<const char*> argv{"bohr"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  const std::map<CLI::App*, std::function<int(const RunConfig&, std::ostream&, std::ostream&)>> commands{
      {constants, cmd_constants}, {verify, cmd_verify}, {radius, cmd_radius}, {scan, cmd_scan}, {lemma, cmd_lemma}};
  try {
    for (const auto& [sub, fn] : commands) {
      if (sub->parsed()) return fn(cfg, out, err);
    }
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const MonotonicityError& e) {
    err << "monotonicity: " << e.what() << '\n';
    return kMonotonicity;
  } catch (const BudgetError& e) {
    err << "budget: " << e.what() << '\n';
    return kBudget;
  } catch (const Error& e) {
    err << "domain: " << e.what() << '\n';
    return kDomain;
  }
}

}  // namespace bohr::cli
