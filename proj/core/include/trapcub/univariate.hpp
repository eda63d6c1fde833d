#pragma once

#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "trapcub/interval.hpp"

namespace trapcub {

using Function1D = std::function<double(double)>;

/// Supplies the exact value of a univariate integral over the given interval.
using ExactIntegral = std::function<double(const Interval&)>;

/// A quadrature rule sum_i w_i g(x_i) on a fixed interval.
class QuadratureRule {
 public:
  /// Nodes must be strictly increasing and lie in the interval.
  QuadratureRule(Interval domain, std::vector<double> nodes,
                 std::vector<double> weights);

  const Interval& domain() const noexcept { return domain_; }
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return nodes_.size(); }

 private:
  Interval domain_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Composite trapezium rule with n panels: n+1 equispaced nodes, end
/// weights h/2, interior weights h.
QuadratureRule trapezium_rule(const Interval& iv, int n);

/// One-point midpoint rule.
QuadratureRule midpoint_rule(const Interval& iv);

/// Node x_i = a + i*(b-a)/n of the n-panel uniform grid; the last node is b
/// exactly.
double grid_node(const Interval& iv, int n, int i) noexcept;

/// Weighted sum over the rule, with compensated summation in node order.
/// Throws NonFiniteValue naming the node if g returns NaN or inf.
double apply(const QuadratureRule& rule, const Function1D& g);

/// s-th Peano kernel K_s(rule; t) = (b-t)^s/s! - sum w_i (x_i - t)_+^{s-1}/(s-1)!
/// for 1 <= s <= 4. The rule must integrate pi_{s-1} exactly; this is not
/// checked.
double peano_kernel(const QuadratureRule& rule, int s, double t);

/// The same kernel written from the left end,
/// (-1)^s [ (t-a)^s/s! - sum w_i (t - x_i)_+^{s-1}/(s-1)! ].
/// Coincides with peano_kernel whenever the rule has the required degree.
double peano_kernel_left_form(const QuadratureRule& rule, int s, double t);

/// Closed-form second Peano kernels, piecewise quadratics. They agree with
/// peano_kernel(rule, 2, t) and vanish exactly at the nodes.
namespace k2 {

/// K_2(Q^Mi; t): (t-a)^2/2 left of the midpoint, (b-t)^2/2 right of it.
double midpoint(const Interval& iv, double t);

/// K_2(Q_n^Tr; t) = (t - x_i)(t - x_{i+1})/2 on panel [x_i, x_{i+1}].
double trapezium(const Interval& iv, int n, double t);

}  // namespace k2

struct Trapezium {
  int n;
};
struct Midpoint {};
using RuleKind = std::variant<Trapezium, Midpoint>;

/// Closed form of the integral of K_2 over [a, b]:
/// (b-a)^3/24 for the midpoint rule, -(b-a)^3/(12 n^2) for trapezium-n.
double peano_kernel_integral_k2(const RuleKind& kind, const Interval& iv);

struct RombergOptions {
  double abs_tol = 1e-12;
  int max_levels = 24;
};

/// Romberg integration of g over iv. Converged when two successive diagonal
/// entries differ by at most abs_tol (after a minimum of four levels).
/// Throws ConvergenceFailure with the best estimate otherwise.
double romberg(const Function1D& g, const Interval& iv,
               const RombergOptions& opts = {});

struct TraceIntegral {
  double value;
  double err_budget;
};

/// Integral of g over iv: the exact supplier if present (budget 0), else
/// Romberg at tolerance tol (budget tol).
TraceIntegral trace_integral(const Function1D& g, const Interval& iv,
                             const ExactIntegral& exact, double tol = 1e-12);

}  // namespace trapcub
