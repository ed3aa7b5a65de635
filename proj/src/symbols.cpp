#include "cdlab/symbols.hpp"

#include <cmath>
#include <sstream>

#include "cdlab/error.hpp"

namespace cdlab {

namespace {

double parse_number(const std::string& text, const std::string& spec) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    fail(ErrorKind::parse_error, "bad number '" + text + "' in symbol '" + spec + "'");
  }
}

}  // namespace

SymbolDesc make_symbol(const std::string& spec) {
  if (spec == "one") return {spec, [](Complex) { return 1.0; }};
  if (spec == "zero") return {spec, [](Complex) { return 0.0; }};
  if (spec == "cos" || spec == "x") return {spec, [](Complex z) { return z.real(); }};
  if (spec == "sin") return {spec, [](Complex z) { return z.imag(); }};
  if (spec == "x2") return {spec, [](Complex z) { return z.real() * z.real(); }};
  if (spec == "abs") return {spec, [](Complex z) { return std::abs(z.real()); }};
  if (spec.rfind("const:", 0) == 0) {
    const double c = parse_number(spec.substr(6), spec);
    return {spec, [c](Complex) { return c; }};
  }
  if (spec.rfind("poly:", 0) == 0) {
    std::vector<double> coeffs;
    std::stringstream ss(spec.substr(5));
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.push_back(parse_number(item, spec));
    if (coeffs.empty()) fail(ErrorKind::parse_error, "empty polynomial '" + spec + "'");
    return {spec, [coeffs](Complex z) {
              double acc = 0.0;
              for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
                acc = acc * z.real() + *it;
              return acc;
            }};
  }
  fail(ErrorKind::parse_error, "unknown symbol '" + spec + "'");
}

std::vector<SymbolDesc> shipped_symbols() {
  std::vector<SymbolDesc> out;
  for (const char* name : {"one", "const:0.5", "cos", "sin", "x", "x2", "abs",
                           "poly:0.25,-1,0.5,2"})
    out.push_back(make_symbol(name));
  return out;
}

RealFunction as_real_function(const SymbolDesc& s) {
  return [fn = s.fn](double t) { return fn(Complex(t, 0.0)); };
}

SymbolDesc product(const SymbolDesc& f, const SymbolDesc& g) {
  return {f.name + "*" + g.name,
          [ff = f.fn, gg = g.fn](Complex z) { return ff(z) * gg(z); }};
}

SymbolDesc difference(const SymbolDesc& f, const SymbolDesc& g) {
  return {f.name + "-" + g.name,
          [ff = f.fn, gg = g.fn](Complex z) { return ff(z) - gg(z); }};
}

SymbolDesc compose_outer(const RealFunction& g, const std::string& gname,
                         const SymbolDesc& f) {
  return {gname + "(" + f.name + ")",
          [g, ff = f.fn](Complex z) { return g(ff(z)); }};
}

}  // namespace cdlab
