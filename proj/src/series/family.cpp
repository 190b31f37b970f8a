#include "bohr/family.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include <fmt/format.h>

#include "bohr/errors.hpp"

namespace bohr {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_parameter(double a) {
  if (!(a >= 0.0 && a < 1.0)) throw DomainError(fmt::format("family parameter a = {} outside [0,1)", a));
}

void check_dimension(std::size_t n) {
  if (n == 0) throw DomainError("family dimension must be at least 1");
}

Complex sum_of(std::span<const Complex> z) {
  Complex s = 0.0;
  for (const auto& v : z) s += v;
  return s;
}

Complex moebius_value(double a, Complex s) { return (a - s) / (1.0 - a * s); }

double parse_real(std::string_view text) {
  std::string s(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw DomainError("cannot parse number '" + s + "'");
  }
  if (used != s.size()) throw DomainError("cannot parse number '" + s + "'");
  return v;
}

std::size_t parse_natural(std::string_view text) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw DomainError("cannot parse natural number '" + std::string(text) + "'");
  }
  return v;
}

// Accepts "x", "x+yi", "x-yi", "yi".
Complex parse_complex(std::string_view text) {
  if (text.empty()) throw DomainError("empty complex number");
  if (text.back() != 'i') return {parse_real(text), 0.0};
  std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not an exponent sign or the leading sign.
  for (std::size_t pos = body.size(); pos-- > 1;) {
    const char c = body[pos];
    if ((c == '+' || c == '-') && body[pos - 1] != 'e' && body[pos - 1] != 'E') {
      std::string_view im = body.substr(pos);
      return {parse_real(body.substr(0, pos)), im == "+" ? 1.0 : im == "-" ? -1.0 : parse_real(im)};
    }
  }
  return {0.0, body.empty() || body == "+" ? 1.0 : body == "-" ? -1.0 : parse_real(body)};
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string format_complex(Complex c) {
  if (c.imag() == 0.0) return fmt::format("{:.12g}", c.real());
  return fmt::format("{:.12g}{:+.12g}i", c.real(), c.imag());
}

}  // namespace

FamilySpec FamilySpec::moebius(double a) {
  check_parameter(a);
  return FamilySpec(MoebiusDisk{a});
}

FamilySpec FamilySpec::extremal_unit(double a, std::size_t n) {
  check_parameter(a);
  check_dimension(n);
  return FamilySpec(ExtremalPolydiskUnit{a, n});
}

FamilySpec FamilySpec::extremal_scaled(double a, std::size_t n) {
  check_parameter(a);
  check_dimension(n);
  return FamilySpec(ExtremalPolydiskScaled{a, n});
}

FamilySpec FamilySpec::blaschke(std::vector<Complex> zeros) {
  for (const auto& w : zeros) {
    if (!(std::abs(w) < 1.0)) {
      throw DomainError(fmt::format("Blaschke zero {} has modulus >= 1", format_complex(w)));
    }
  }
  return FamilySpec(FiniteBlaschke{std::move(zeros)});
}

FamilySpec FamilySpec::constant(Complex c, std::size_t n) {
  if (!(std::abs(c) <= 1.0)) throw DomainError(fmt::format("constant {} has modulus > 1", format_complex(c)));
  check_dimension(n);
  return FamilySpec(ConstantFn{c, n});
}

FamilyKind FamilySpec::kind() const noexcept {
  static constexpr FamilyKind kinds[] = {FamilyKind::moebius, FamilyKind::unit, FamilyKind::scaled,
                                         FamilyKind::blaschke, FamilyKind::constant};
  return kinds[variant_.index()];
}

std::size_t FamilySpec::dimension() const noexcept {
  return std::visit(Overloaded{[](const MoebiusDisk&) -> std::size_t { return 1; },
                               [](const ExtremalPolydiskUnit& f) { return f.n; },
                               [](const ExtremalPolydiskScaled& f) { return f.n; },
                               [](const FiniteBlaschke&) -> std::size_t { return 1; },
                               [](const ConstantFn& f) { return f.n; }},
                    variant_);
}

double FamilySpec::domain_radius_cap() const noexcept {
  if (const auto* f = std::get_if<ExtremalPolydiskUnit>(&variant_)) return 1.0 / static_cast<double>(f->n);
  return 1.0;
}

bool FamilySpec::is_moebius_type() const noexcept {
  return std::holds_alternative<MoebiusDisk>(variant_) || std::holds_alternative<ExtremalPolydiskUnit>(variant_) ||
         std::holds_alternative<ExtremalPolydiskScaled>(variant_);
}

double FamilySpec::moebius_parameter() const {
  return std::visit(
      Overloaded{[](const MoebiusDisk& f) { return f.a; }, [](const ExtremalPolydiskUnit& f) { return f.a; },
                 [](const ExtremalPolydiskScaled& f) { return f.a; },
                 [](const auto&) -> double { throw UnsupportedError("family is not of Moebius type"); }},
      variant_);
}

double FamilySpec::slice_scale() const {
  if (const auto* f = std::get_if<ExtremalPolydiskScaled>(&variant_)) return 1.0 / static_cast<double>(f->n);
  if (is_moebius_type()) return 1.0;
  throw UnsupportedError("family has no slice structure");
}

Complex FamilySpec::constant_term() const {
  return std::visit(Overloaded{[](const MoebiusDisk& f) { return Complex(f.a); },
                               [](const ExtremalPolydiskUnit& f) { return Complex(f.a); },
                               [](const ExtremalPolydiskScaled& f) { return Complex(f.a); },
                               [](const FiniteBlaschke& f) {
                                 Complex p = 1.0;
                                 for (const auto& w : f.zeros) p *= -w;
                                 return p;
                               },
                               [](const ConstantFn& f) { return f.c; }},
                    variant_);
}

Complex FamilySpec::value_at(std::span<const Complex> z) const {
  if (z.size() != dimension()) throw DomainError("value_at: point has wrong dimension");
  return std::visit(Overloaded{[&](const MoebiusDisk& f) { return moebius_value(f.a, z[0]); },
                               [&](const ExtremalPolydiskUnit& f) { return moebius_value(f.a, sum_of(z)); },
                               [&](const ExtremalPolydiskScaled& f) {
                                 return moebius_value(f.a, sum_of(z) / static_cast<double>(f.n));
                               },
                               [&](const FiniteBlaschke& f) {
                                 Complex p = 1.0;
                                 for (const auto& w : f.zeros) p *= (z[0] - w) / (1.0 - std::conj(w) * z[0]);
                                 return p;
                               },
                               [](const ConstantFn& f) { return f.c; }},
                    variant_);
}

std::string FamilySpec::describe() const {
  return std::visit(Overloaded{[](const MoebiusDisk& f) { return fmt::format("moebius:{:.12g}", f.a); },
                               [](const ExtremalPolydiskUnit& f) { return fmt::format("unit:{:.12g},{}", f.a, f.n); },
                               [](const ExtremalPolydiskScaled& f) {
                                 return fmt::format("scaled:{:.12g},{}", f.a, f.n);
                               },
                               [](const FiniteBlaschke& f) {
                                 std::string s = "blaschke:";
                                 for (std::size_t i = 0; i < f.zeros.size(); ++i) {
                                   if (i) s += ',';
                                   s += format_complex(f.zeros[i]);
                                 }
                                 return s;
                               },
                               [](const ConstantFn& f) {
                                 return f.n == 1 ? "const:" + format_complex(f.c)
                                                 : fmt::format("const:{},{}", format_complex(f.c), f.n);
                               }},
                    variant_);
}

FamilySpec FamilySpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const std::string_view params =
      colon == std::string::npos ? std::string_view{} : std::string_view(text).substr(colon + 1);
  const auto args = params.empty() ? std::vector<std::string_view>{} : split(params, ',');

  auto expect = [&](std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi) {
      throw DomainError("family '" + text + "': wrong number of parameters");
    }
  };
  if (name == "moebius") {
    expect(1, 1);
    return moebius(parse_real(args[0]));
  }
  if (name == "unit") {
    expect(2, 2);
    return extremal_unit(parse_real(args[0]), parse_natural(args[1]));
  }
  if (name == "scaled") {
    expect(2, 2);
    return extremal_scaled(parse_real(args[0]), parse_natural(args[1]));
  }
  if (name == "blaschke") {
    std::vector<Complex> zeros;
    for (auto a : args) zeros.push_back(parse_complex(a));
    return blaschke(std::move(zeros));
  }
  if (name == "const") {
    expect(1, 2);
    return constant(parse_complex(args[0]), args.size() == 2 ? parse_natural(args[1]) : 1);
  }
  throw DomainError("unknown family '" + name + "' (expected moebius, unit, scaled, blaschke or const)");
}

FamilySpec FamilyTemplate::at(double a) const {
  switch (kind) {
    case FamilyKind::moebius:
      return FamilySpec::moebius(a);
    case FamilyKind::unit:
      return FamilySpec::extremal_unit(a, n);
    case FamilyKind::scaled:
      return FamilySpec::extremal_scaled(a, n);
    case FamilyKind::constant:
      return FamilySpec::constant(a, n);
    case FamilyKind::blaschke:
      return FamilySpec::blaschke({Complex(-a)});
  }
  throw UnsupportedError("unknown family kind");
}

}  // namespace bohr
