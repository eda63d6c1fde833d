#include "cli/builtins.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <utility>

namespace trapcub::cli {

namespace {

// int_a^b e^{c t} dt
double exp_line_integral(double c, const Interval& iv) {
  if (c == 0.0) return iv.length();
  return std::exp(c * iv.a()) * std::expm1(c * iv.length()) / c;
}

// int_a^b sin(c t) dt = (cos(ca) - cos(cb))/c
double sin_line_integral(double c, const Interval& iv) {
  if (c == 0.0) return 0.0;
  return 2.0 * std::sin(0.5 * c * (iv.a() + iv.b())) *
         std::sin(0.5 * c * iv.length()) / c;
}

// int_a^b c^2 t^2 dt
double x2y2_line_integral(double c, const Interval& iv) {
  const double a = iv.a(), b = iv.b();
  return c * c * (b * b * b - a * a * a) / 3.0;
}

// int_a^b c t dt
double xy_line_integral(double c, const Interval& iv) {
  const double a = iv.a(), b = iv.b();
  return c * (b - a) * (b + a) / 2.0;
}

// Every builtin is f(x, y) = g(xy), so each trace is t -> g(c t) with c the
// fixed coordinate of the trace.
template <class LineIntegral>
std::map<Trace, ExactIntegral> product_traces(LineIntegral line) {
  auto fixed = [](Trace t, const Interval& iv) {
    switch (t) {
      case Trace::left:
      case Trace::down:
        return iv.a();
      case Trace::right:
      case Trace::up:
        return iv.b();
      case Trace::vertical_mid:
      case Trace::horizontal_mid:
        break;
    }
    return iv.midpoint();
  };
  std::map<Trace, ExactIntegral> traces;
  for (const Trace t : {Trace::left, Trace::right, Trace::down, Trace::up,
                        Trace::vertical_mid, Trace::horizontal_mid}) {
    traces[t] = [line, fixed, t](const Interval& iv) {
      return line(fixed(t, iv), iv);
    };
  }
  return traces;
}

// Range of xy over the square iv^2.
std::pair<double, double> product_range(const Interval& iv) {
  const double a = iv.a(), b = iv.b();
  return {std::min({a * a, b * b, a * b}), std::max({a * a, b * b, a * b})};
}

[[noreturn]] void sign_unverified(std::string_view name, const Interval& iv,
                                  std::string_view need) {
  std::ostringstream os;
  os << name << ": the sign of D22 is not guaranteed on [" << iv.a() << ", "
     << iv.b() << "]^2 (requires " << need << ")";
  throw InvalidArgument(os.str());
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"exp_xy", "sin_xy", "poly_x2y2", "bilinear_xy"};
}

std::string_view to_string(BuiltinId id) {
  switch (id) {
    case BuiltinId::exp_xy: return "exp_xy";
    case BuiltinId::sin_xy: return "sin_xy";
    case BuiltinId::poly_x2y2: return "poly_x2y2";
    case BuiltinId::bilinear_xy: return "bilinear_xy";
  }
  return "?";
}

BuiltinId parse_builtin(std::string_view name) {
  for (const BuiltinId id : {BuiltinId::exp_xy, BuiltinId::sin_xy,
                             BuiltinId::poly_x2y2, BuiltinId::bilinear_xy}) {
    if (name == to_string(id)) return id;
  }
  throw InvalidArgument("unknown builtin integrand '" + std::string(name) + "'");
}

BuiltinIntegrand make_builtin(BuiltinId id, const Interval& iv) {
  const auto [pmin, pmax] = product_range(iv);
  const std::string name(to_string(id));
  switch (id) {
    case BuiltinId::exp_xy:
      if (pmin < std::sqrt(2.0) - 2.0) sign_unverified(name, iv, "xy >= sqrt(2) - 2");
      return {id, name,
              {[](double x, double y) { return std::exp(x * y); },
               D22Sign::nonnegative, product_traces(exp_line_integral)}};
    case BuiltinId::sin_xy:
      if (pmin < 0.0 || pmax > 1.0) sign_unverified(name, iv, "0 <= xy <= 1");
      return {id, name,
              {[](double x, double y) { return std::sin(x * y); },
               D22Sign::nonpositive, product_traces(sin_line_integral)}};
    case BuiltinId::poly_x2y2:
      return {id, name,
              {[](double x, double y) { return x * x * y * y; },
               D22Sign::nonnegative, product_traces(x2y2_line_integral)}};
    case BuiltinId::bilinear_xy:
      return {id, name,
              {[](double x, double y) { return x * y; }, D22Sign::nonnegative,
               product_traces(xy_line_integral)}};
  }
  throw InvalidArgument("unknown builtin integrand");
}

}  // namespace trapcub::cli
