#include "trapcub/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "trapcub/parallel.hpp"
#include "trapcub/univariate.hpp"

namespace trapcub {

namespace {

void check_n(int n) {
  if (n < 1) throw InvalidArgument("n must be >= 1, got " + std::to_string(n));
}

void check_point(const Interval& iv, double t, double tau) {
  require_in_domain(iv, t, "kernel argument t");
  require_in_domain(iv, tau, "kernel argument tau");
}

void check_c(double c) {
  if (!(c > 0.0)) {
    std::ostringstream os;
    os << "comparison constant c must be positive, got " << c;
    throw InvalidArgument(os.str());
  }
}

// Second kernel of the blending quadrature Q' = Q''.
double blending_k2(Variant v, const Interval& iv, double t) {
  return v == Variant::minus ? k2::midpoint(iv, t) : k2::trapezium(iv, 1, t);
}

double combine(double at, double atau, double bt, double btau) {
  return at * btau + atau * bt - bt * btau;
}

QuadratureRule blending_rule(Variant v, const Interval& iv) {
  return v == Variant::minus ? midpoint_rule(iv) : trapezium_rule(iv, 1);
}

// Q_n^Tr[Kc(., t)] as an explicit node sum.
double trapezium_of_error_kernel(Variant v, const Interval& iv, int n, double t) {
  const QuadratureRule rule = trapezium_rule(iv, n);
  return apply(rule, [&](double x) { return blending_error_kernel(v, iv, x, t); });
}

}  // namespace

double k22_s_minus(const Interval& iv, int n, double t, double tau) {
  return k22(Variant::minus, iv, n, t, tau);
}

double k22_s_plus(const Interval& iv, int n, double t, double tau) {
  return k22(Variant::plus, iv, n, t, tau);
}

double k22(Variant v, const Interval& iv, int n, double t, double tau) {
  check_n(n);
  check_point(iv, t, tau);
  return combine(blending_k2(v, iv, t), blending_k2(v, iv, tau),
                 k2::trapezium(iv, n, t), k2::trapezium(iv, n, tau));
}

double blending_error_kernel(Variant v, const Interval& iv, double x, double t) {
  const double xt = std::max(x - t, 0.0);
  if (v == Variant::plus) {
    return xt - (x - iv.a()) / iv.length() * (iv.b() - t);
  }
  const double m = iv.midpoint();
  const double slope = m > t ? 1.0 : 0.0;
  return xt - (std::max(m - t, 0.0) + (x - m) * slope);
}

double k22_first_mixed_form(Variant v, const Interval& iv, int n, double t,
                            double tau) {
  check_n(n);
  check_point(iv, t, tau);
  const QuadratureRule qn = trapezium_rule(iv, n);
  const QuadratureRule qb = blending_rule(v, iv);
  return peano_kernel(qb, 2, t) * peano_kernel(qn, 2, tau) +
         peano_kernel(qn, 2, t) * trapezium_of_error_kernel(v, iv, n, tau);
}

double k22_second_mixed_form(Variant v, const Interval& iv, int n, double t,
                             double tau) {
  check_n(n);
  check_point(iv, t, tau);
  const QuadratureRule qn = trapezium_rule(iv, n);
  const QuadratureRule qb = blending_rule(v, iv);
  return peano_kernel(qb, 2, tau) * peano_kernel(qn, 2, t) +
         peano_kernel(qn, 2, tau) * trapezium_of_error_kernel(v, iv, n, t);
}

double k22_s_plus_quadrature_form(const Interval& iv, int n, double t, double tau) {
  return k22_second_mixed_form(Variant::plus, iv, n, t, tau);
}

double phi(Variant v, const Interval& iv, int n, double c, double t, double tau) {
  check_c(c);
  return (c + 1.0) * k22(v, iv, 2 * n, t, tau) - c * k22(v, iv, n, t, tau);
}

double psi(Variant v, const Interval& iv, int k, int l, int n, double c,
           double u, double w) {
  check_n(n);
  check_c(c);
  if (k < 0 || l < 0 || 2 * k + 1 > n || 2 * l + 1 > n) {
    std::ostringstream os;
    os << "cell (" << k << ", " << l << ") is outside the lower-left quadrant for n = " << n;
    throw InvalidArgument(os.str());
  }
  if (u < 0.0 || u > 1.0 || w < 0.0 || w > 1.0) {
    throw InvalidArgument("local coordinates must lie in [0, 1]");
  }
  const double tk = 2.0 * k + u;
  const double tl = 2.0 * l + w;
  const double cross = -u * w * (1.0 - u) * (1.0 - w) + c * u * w * (3.0 - u - w);
  if (v == Variant::minus) {
    const double h = iv.length() / (2.0 * n);
    const double h4 = h * h * h * h;
    return h4 * (tk * tk * w * (w - 1.0 + c) + tl * tl * u * (u - 1.0 + c) + cross);
  }
  const double two_n = 2.0 * n;
  return tk * (tk - two_n) * w * (w - 1.0 + c) +
         tl * (tl - two_n) * u * (u - 1.0 + c) + cross;
}

double psi_scaled(Variant v, const Interval& iv, int k, int l, int n, double c,
                  double u, double w) {
  const double p = psi(v, iv, k, l, n, c, u, w);
  if (v == Variant::minus) return p;
  const double h = iv.length() / (2.0 * n);
  return h * h * h * h * p;
}

double sharpness_g(const Interval& iv, int k, int n, double c, double u) {
  check_n(n);
  if (k < 1 || 2 * k + 1 > n) {
    std::ostringstream os;
    os << "diagonal cell index k = " << k << " must satisfy 1 <= k <= (n-1)/2 for n = " << n;
    throw InvalidArgument(os.str());
  }
  if (u < 0.0 || u > 1.0) throw InvalidArgument("u must lie in [0, 1]");
  const double h = iv.length() / (2.0 * n);
  const double h4 = h * h * h * h;
  const double tk = 2.0 * k + u;
  return h4 * (2.0 * tk * tk * u * (u - 1.0 + c) -
               u * u * (1.0 - u) * (1.0 - u) + c * u * u * (3.0 - 2.0 * u));
}

std::string_view to_string(KernelKind kind) {
  switch (kind) {
    case KernelKind::k22_s_minus: return "k22-minus";
    case KernelKind::k22_s_plus: return "k22-plus";
    case KernelKind::phi_minus: return "phi-minus";
    case KernelKind::phi_plus: return "phi-plus";
  }
  return "?";
}

void validate(const KernelSpec& spec) {
  check_n(spec.n);
  if (spec.kind == KernelKind::phi_minus || spec.kind == KernelKind::phi_plus) {
    check_c(spec.c);
  }
}

double evaluate(const KernelSpec& spec, double t, double tau) {
  validate(spec);
  switch (spec.kind) {
    case KernelKind::k22_s_minus: return k22_s_minus(spec.iv, spec.n, t, tau);
    case KernelKind::k22_s_plus: return k22_s_plus(spec.iv, spec.n, t, tau);
    case KernelKind::phi_minus: return phi(Variant::minus, spec.iv, spec.n, spec.c, t, tau);
    case KernelKind::phi_plus: return phi(Variant::plus, spec.iv, spec.n, spec.c, t, tau);
  }
  throw InvalidArgument("unknown kernel kind");
}

D22Sign proven_sign(KernelKind kind) {
  switch (kind) {
    case KernelKind::k22_s_minus:
    case KernelKind::phi_plus:
      return D22Sign::nonpositive;
    case KernelKind::k22_s_plus:
    case KernelKind::phi_minus:
      return D22Sign::nonnegative;
  }
  return D22Sign::nonnegative;
}

ScanReport definiteness_scan(const KernelSpec& spec, D22Sign expected,
                             int resolution) {
  validate(spec);
  if (resolution < 2) {
    throw InvalidArgument("scan resolution must be >= 2, got " + std::to_string(resolution));
  }
  const Interval& iv = spec.iv;
  const bool is_phi = spec.kind == KernelKind::phi_minus || spec.kind == KernelKind::phi_plus;
  const Variant variant = (spec.kind == KernelKind::k22_s_minus || spec.kind == KernelKind::phi_minus)
                              ? Variant::minus
                              : Variant::plus;

  // The kernels are sums of products of univariate factors, so tabulate
  // those once per grid coordinate.
  const std::size_t m = static_cast<std::size_t>(resolution) + 1;
  std::vector<double> xs(m), a(m), bn(m), b2n(m);
  for (std::size_t j = 0; j < m; ++j) {
    xs[j] = grid_node(iv, resolution, static_cast<int>(j));
    a[j] = blending_k2(variant, iv, xs[j]);
    bn[j] = k2::trapezium(iv, spec.n, xs[j]);
    b2n[j] = is_phi ? k2::trapezium(iv, 2 * spec.n, xs[j]) : 0.0;
  }
  const double c = spec.c;
  auto value = [&](std::size_t i, std::size_t j) {
    const double coarse = combine(a[i], a[j], bn[i], bn[j]);
    if (!is_phi) return coarse;
    return (c + 1.0) * combine(a[i], a[j], b2n[i], b2n[j]) - c * coarse;
  };

  std::vector<double> row_max(m, 0.0);
  parallel_for(m, [&](std::size_t i) {
    double mx = 0.0;
    for (std::size_t j = 0; j < m; ++j) mx = std::max(mx, std::abs(value(i, j)));
    row_max[i] = mx;
  }, 32);
  const double max_abs = *std::max_element(row_max.begin(), row_max.end());
  const double slack = 1e-14 * max_abs;

  std::vector<std::vector<Violation>> row_violations(m);
  parallel_for(m, [&](std::size_t i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double v = value(i, j);
      const bool bad = expected == D22Sign::nonnegative ? v < -slack : v > slack;
      if (bad) row_violations[i].push_back({xs[i], xs[j], v});
    }
  }, 32);

  ScanReport report{resolution, expected, slack, max_abs, {}, 0.0};
  for (auto& row : row_violations) {
    for (const Violation& v : row) {
      if (std::abs(v.value) > report.max_abs_violation) {
        report.max_abs_violation = std::abs(v.value);
        report.worst = v;
      }
      report.violations.push_back(v);
    }
  }
  return report;
}

}  // namespace trapcub
