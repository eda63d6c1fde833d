#include "trapcub/univariate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "trapcub/summation.hpp"

namespace trapcub {

namespace {

constexpr std::array<double, 5> kFactorial = {1.0, 1.0, 2.0, 6.0, 24.0};

// u_+^p with 0_+ = 0, including for p = 0.
double plus_power(double u, int p) {
  if (u <= 0.0) return 0.0;
  double r = 1.0;
  for (int k = 0; k < p; ++k) r *= u;
  return r;
}

void check_order(int s) {
  if (s < 1 || s > 4) {
    throw InvalidArgument("Peano kernel order must be in 1..4, got " +
                          std::to_string(s));
  }
}

void check_panels(int n) {
  if (n < 1) {
    throw InvalidArgument("number of panels must be >= 1, got " +
                          std::to_string(n));
  }
}

double checked_eval(const Function1D& g, double x) {
  const double v = g(x);
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os.precision(17);
    os << "non-finite integrand value " << v << " at node x = " << x;
    throw NonFiniteValue(os.str());
  }
  return v;
}

}  // namespace

QuadratureRule::QuadratureRule(Interval domain, std::vector<double> nodes,
                               std::vector<double> weights)
    : domain_(domain), nodes_(std::move(nodes)), weights_(std::move(weights)) {
  if (nodes_.empty() || nodes_.size() != weights_.size()) {
    throw InvalidArgument("quadrature rule needs matching, non-empty nodes and weights");
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    require_in_domain(domain_, nodes_[i], "quadrature node");
    if (i > 0 && !(nodes_[i - 1] < nodes_[i])) {
      throw InvalidArgument("quadrature nodes must be strictly increasing");
    }
  }
}

double grid_node(const Interval& iv, int n, int i) noexcept {
  if (i == n) return iv.b();
  if (i == 0) return iv.a();
  return iv.a() + iv.length() * (static_cast<double>(i) / n);
}

QuadratureRule trapezium_rule(const Interval& iv, int n) {
  check_panels(n);
  const double h = iv.length() / n;
  std::vector<double> nodes(n + 1);
  std::vector<double> weights(n + 1, h);
  for (int i = 0; i <= n; ++i) nodes[i] = grid_node(iv, n, i);
  weights.front() = 0.5 * h;
  weights.back() = 0.5 * h;
  return QuadratureRule(iv, std::move(nodes), std::move(weights));
}

QuadratureRule midpoint_rule(const Interval& iv) {
  return QuadratureRule(iv, {iv.midpoint()}, {iv.length()});
}

double apply(const QuadratureRule& rule, const Function1D& g) {
  CompensatedSum acc;
  const auto nodes = rule.nodes();
  const auto weights = rule.weights();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    acc.add_product(weights[i], checked_eval(g, nodes[i]));
  }
  return acc.value();
}

double peano_kernel(const QuadratureRule& rule, int s, double t) {
  check_order(s);
  const Interval& iv = rule.domain();
  require_in_domain(iv, t, "kernel argument t");
  CompensatedSum acc;
  acc.add(plus_power(iv.b() - t, s) / kFactorial[s]);
  const auto nodes = rule.nodes();
  const auto weights = rule.weights();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    acc.add_product(-weights[i], plus_power(nodes[i] - t, s - 1) / kFactorial[s - 1]);
  }
  return acc.value();
}

double peano_kernel_left_form(const QuadratureRule& rule, int s, double t) {
  check_order(s);
  const Interval& iv = rule.domain();
  require_in_domain(iv, t, "kernel argument t");
  CompensatedSum acc;
  acc.add(plus_power(t - iv.a(), s) / kFactorial[s]);
  const auto nodes = rule.nodes();
  const auto weights = rule.weights();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    acc.add_product(-weights[i], plus_power(t - nodes[i], s - 1) / kFactorial[s - 1]);
  }
  return (s % 2 == 0) ? acc.value() : -acc.value();
}

namespace k2 {

double midpoint(const Interval& iv, double t) {
  require_in_domain(iv, t, "kernel argument t");
  if (t <= iv.midpoint()) {
    const double d = t - iv.a();
    return 0.5 * d * d;
  }
  const double d = iv.b() - t;
  return 0.5 * d * d;
}

double trapezium(const Interval& iv, int n, double t) {
  check_panels(n);
  require_in_domain(iv, t, "kernel argument t");
  const double q = (t - iv.a()) / iv.length() * n;
  const int i = std::clamp(static_cast<int>(std::floor(q)), 0, n - 1);
  const double left = grid_node(iv, n, i);
  const double right = grid_node(iv, n, i + 1);
  return 0.5 * (t - left) * (t - right);
}

}  // namespace k2

double peano_kernel_integral_k2(const RuleKind& kind, const Interval& iv) {
  const double l = iv.length();
  const double l3 = l * l * l;
  if (const auto* tr = std::get_if<Trapezium>(&kind)) {
    check_panels(tr->n);
    const double n = tr->n;
    return -l3 / (12.0 * n * n);
  }
  return l3 / 24.0;
}

double romberg(const Function1D& g, const Interval& iv,
               const RombergOptions& opts) {
  if (!(opts.abs_tol > 0.0)) {
    throw InvalidArgument("Romberg tolerance must be positive");
  }
  const int max_levels = std::max(opts.max_levels, 1);
  const double a = iv.a();
  const double len = iv.length();

  // prev[j] and cur[j] are rows of the Romberg tableau.
  std::vector<double> prev;
  std::vector<double> cur;
  prev.reserve(max_levels + 1);
  cur.reserve(max_levels + 1);

  double trap = 0.5 * len * (checked_eval(g, a) + checked_eval(g, iv.b()));
  prev.push_back(trap);
  double last_change = std::abs(trap);

  long long panels = 1;
  for (int level = 1; level <= max_levels; ++level) {
    const double h = len / static_cast<double>(panels);
    CompensatedSum mids;
    for (long long i = 0; i < panels; ++i) {
      const double x = a + len * ((static_cast<double>(i) + 0.5) / static_cast<double>(panels));
      mids.add(checked_eval(g, x));
    }
    trap = 0.5 * trap + 0.5 * h * mids.value();
    panels *= 2;

    cur.clear();
    cur.push_back(trap);
    double factor = 1.0;
    for (int j = 1; j <= level; ++j) {
      factor *= 4.0;
      cur.push_back(cur[j - 1] + (cur[j - 1] - prev[j - 1]) / (factor - 1.0));
    }
    last_change = std::abs(cur.back() - prev.back());
    if (level >= 4 && last_change <= opts.abs_tol) return cur.back();
    std::swap(prev, cur);
  }
  std::ostringstream os;
  os << "Romberg integration did not reach tolerance " << opts.abs_tol
     << " within " << max_levels << " levels (last change " << last_change
     << ")";
  throw ConvergenceFailure(os.str(), prev.back(), last_change);
}

TraceIntegral trace_integral(const Function1D& g, const Interval& iv,
                             const ExactIntegral& exact, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("trace tolerance must be positive");
  if (exact) return {exact(iv), 0.0};
  return {romberg(g, iv, RombergOptions{tol, 24}), tol};
}

}  // namespace trapcub
