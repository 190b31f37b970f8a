#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "bohr/errors.hpp"
#include "bohr/verify.hpp"

namespace bohr {

SharpConstants sharp_constants(const ConstantsReport& report) {
  return {report.lambda1, report.lambda2, report.p};
}

double threshold_radius(TheoremId id, std::size_t n, const Radii& radii) {
  switch (id) {
    case TheoremId::classic:
    case TheoremId::a:
    case TheoremId::b2:
    case TheoremId::c:
    case TheoremId::d:
      return radii.classic;
    case TheoremId::b1:
    case TheoremId::e:
      return radii.thm_e;
    case TheoremId::t21:
    case TheoremId::t22:
      return radii.multi(n);
    case TheoremId::t23:
      return radii.multi_e(n);
  }
  throw UnsupportedError("unknown theorem id");
}

FamilySpec extremal_family(TheoremId id, std::size_t n, double a) {
  if (!is_polydisk_theorem(id) && n != 1) {
    throw DomainError(fmt::format("theorem {} is single-variable; n = {} requested", to_string(id), n));
  }
  return n == 1 ? FamilySpec::moebius(a) : FamilySpec::extremal_unit(a, n);
}

std::vector<double> make_grid(double start, double stop, double step) {
  if (!(step > 0.0)) throw DomainError("grid step must be positive");
  if (!(start <= stop)) throw DomainError("grid start must not exceed stop");
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) grid[i] = start + static_cast<double>(i) * step;
  return grid;
}

SweepReport theorem_sweep(const SweepConfig& config, const ConstantsReport& constants) {
  const auto spec = preset(config.theorem, sharp_constants(constants));

  auto dims = config.family ? std::vector<std::size_t>{config.family->dimension()} : config.dimensions;
  auto a_grid = config.family ? std::vector<double>{std::abs(config.family->constant_term())} : config.a_grid;
  auto radii = config.radii;
  std::sort(dims.begin(), dims.end());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
  std::sort(a_grid.begin(), a_grid.end());
  std::sort(radii.begin(), radii.end());
  if (dims.empty() || a_grid.empty()) throw DomainError("theorem_sweep: empty grid");
  for (auto n : dims) {
    if (n == 0) throw DomainError("theorem_sweep: dimension must be at least 1");
    if (!is_polydisk_theorem(config.theorem) && n != 1) {
      throw DomainError(fmt::format("theorem {} is single-variable; n = {} requested", to_string(config.theorem), n));
    }
  }

  SweepReport report;
  report.theorem = config.theorem;
  for (auto n : dims) {
    const auto rs = radii.empty() ? std::vector<double>{threshold_radius(config.theorem, n, constants.radii)} : radii;
    for (double a : a_grid) {
      const FamilySpec family = config.family ? *config.family : extremal_family(config.theorem, n, a);
      for (double r : rs) {
        const auto radius = RadiusSpec::diagonal(n, r);
        for (auto interpretation : {AreaInterpretation::literal, AreaInterpretation::slice}) {
          if (interpretation == AreaInterpretation::slice && n == 1) continue;
          auto s = spec;
          s.interpretation = interpretation;
          SweepRow row{n, a, r, family.describe(), evaluate(s, family, radius), false};
          if (interpretation == AreaInterpretation::literal) {
            const double tol = row.terms.closed_form ? config.tolerances.closed_form : config.tolerances.truncated;
            row.violation = row.terms.total > 1.0 + tol;
            report.worst_margin = std::min(report.worst_margin, row.terms.margin);
            if (row.violation) report.violations.push_back(report.rows.size());
          }
          report.rows.push_back(std::move(row));
        }
      }
    }
  }
  return report;
}

}  // namespace bohr
