#include "trapcub/blending.hpp"

#include <array>
#include <cmath>

#include "trapcub/summation.hpp"

namespace trapcub {

namespace {

double trace_value(const Integrand2D& F, const Interval& iv, Trace which,
                   double trace_tol, double& budget) {
  const TraceIntegral r =
      trace_integral(F.trace(which, iv), iv, F.exact(which), trace_tol);
  budget += r.err_budget;
  return r.value;
}

void check_args(int n, double trace_tol) {
  if (n < 1) throw InvalidArgument("n must be >= 1, got " + std::to_string(n));
  if (!(trace_tol > 0.0)) throw InvalidArgument("trace_tol must be positive");
}

}  // namespace

Function2D hermite_midpoint_blend(const Function2D& f, const Interval& iv) {
  const double m = iv.midpoint();
  const double d = 1e-4 * iv.length();
  const double fmm = f(m, m);
  const double fx_mm = (f(m + d, m) - f(m - d, m)) / (2.0 * d);
  const double fy_mm = (f(m, m + d) - f(m, m - d)) / (2.0 * d);
  const double fxy_mm =
      (f(m + d, m + d) - f(m + d, m - d) - f(m - d, m + d) + f(m - d, m - d)) /
      (4.0 * d * d);
  return [f, m, d, fmm, fx_mm, fy_mm, fxy_mm](double x, double y) {
    const double fx_my = (f(m + d, y) - f(m - d, y)) / (2.0 * d);
    const double fy_xm = (f(x, m + d) - f(x, m - d)) / (2.0 * d);
    const double hx = f(m, y) + (x - m) * fx_my;
    const double hy = f(x, m) + (y - m) * fy_xm;
    const double hxy = fmm + (x - m) * fx_mm + (y - m) * fy_mm +
                       (x - m) * (y - m) * fxy_mm;
    return hx + hy - hxy;
  };
}

Function2D lagrange_edge_blend(const Function2D& f, const Interval& iv) {
  const double a = iv.a();
  const double b = iv.b();
  const double len = iv.length();
  const double faa = f(a, a), fab = f(a, b), fba = f(b, a), fbb = f(b, b);
  return [f, a, b, len, faa, fab, fba, fbb](double x, double y) {
    const double la_x = (b - x) / len, lb_x = (x - a) / len;
    const double la_y = (b - y) / len, lb_y = (y - a) / len;
    const double lx = la_x * f(a, y) + lb_x * f(b, y);
    const double ly = la_y * f(x, a) + lb_y * f(x, b);
    const double lxy = la_x * (la_y * faa + lb_y * fab) +
                       lb_x * (la_y * fba + lb_y * fbb);
    return lx + ly - lxy;
  };
}

CubatureEstimate s_minus_blending_form(const Integrand2D& F, const Interval& iv,
                                       int n, double trace_tol) {
  check_args(n, trace_tol);
  const double len = iv.length();
  const double m = iv.midpoint();
  double budget = 0.0;
  const double iv_int = trace_value(F, iv, Trace::vertical_mid, trace_tol, budget);
  const double ih_int = trace_value(F, iv, Trace::horizontal_mid, trace_tol, budget);

  // The linear Hermite terms integrate to zero over the symmetric interval.
  CompensatedSum acc;
  acc.add_product(len, iv_int);
  acc.add_product(len, ih_int);
  acc.add_product(-len * len, F.f(m, m));

  Integrand2D blend{hermite_midpoint_blend(F.f, iv), std::nullopt, {}};
  acc.add(product_trapezoid(F, iv, n).value);
  acc.add(-product_trapezoid(blend, iv, n).value);
  return {acc.value(), CubatureRule::s_minus, n, len * budget};
}

CubatureEstimate s_plus_blending_form(const Integrand2D& F, const Interval& iv,
                                      int n, double trace_tol) {
  check_args(n, trace_tol);
  const double a = iv.a();
  const double b = iv.b();
  const double len = iv.length();
  double budget = 0.0;

  CompensatedSum acc;
  for (const Trace which : {Trace::left, Trace::right, Trace::down, Trace::up}) {
    acc.add_product(0.5 * len, trace_value(F, iv, which, trace_tol, budget));
  }
  const double corners = F.f(a, a) + F.f(a, b) + F.f(b, a) + F.f(b, b);
  acc.add_product(-0.25 * len * len, corners);

  Integrand2D blend{lagrange_edge_blend(F.f, iv), std::nullopt, {}};
  acc.add(product_trapezoid(F, iv, n).value);
  acc.add(-product_trapezoid(blend, iv, n).value);
  return {acc.value(), CubatureRule::s_plus, n, 0.5 * len * budget};
}

}  // namespace trapcub
