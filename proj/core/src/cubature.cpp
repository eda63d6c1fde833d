#include "trapcub/cubature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>
#include <vector>

#include "trapcub/parallel.hpp"
#include "trapcub/summation.hpp"

namespace trapcub {

std::string_view to_string(Trace trace) {
  switch (trace) {
    case Trace::left: return "left";
    case Trace::right: return "right";
    case Trace::down: return "down";
    case Trace::up: return "up";
    case Trace::vertical_mid: return "vertical-mid";
    case Trace::horizontal_mid: return "horizontal-mid";
  }
  return "?";
}

std::string_view to_string(D22Sign sign) {
  return sign == D22Sign::nonnegative ? "nonnegative" : "nonpositive";
}

std::string_view to_string(CubatureRule rule) {
  switch (rule) {
    case CubatureRule::product_trap: return "product_trap";
    case CubatureRule::s_minus: return "s_minus";
    case CubatureRule::s_plus: return "s_plus";
  }
  return "?";
}

Function1D Integrand2D::trace(Trace which, const Interval& iv) const {
  const Function2D& g = f;
  switch (which) {
    case Trace::left: return [g, x = iv.a()](double t) { return g(x, t); };
    case Trace::right: return [g, x = iv.b()](double t) { return g(x, t); };
    case Trace::down: return [g, y = iv.a()](double t) { return g(t, y); };
    case Trace::up: return [g, y = iv.b()](double t) { return g(t, y); };
    case Trace::vertical_mid:
      return [g, x = iv.midpoint()](double t) { return g(x, t); };
    case Trace::horizontal_mid:
      return [g, y = iv.midpoint()](double t) { return g(t, y); };
  }
  throw InvalidArgument("unknown trace");
}

ExactIntegral Integrand2D::exact(Trace which) const {
  const auto it = exact_traces.find(which);
  return it == exact_traces.end() ? ExactIntegral{} : it->second;
}

namespace {

void check_n(int n) {
  if (n < 1) {
    throw InvalidArgument("n must be >= 1, got " + std::to_string(n));
  }
}

double product_trapezoid_value(const Function2D& f, const Interval& iv, int n) {
  const std::size_t rows = static_cast<std::size_t>(n) + 1;
  std::vector<double> row_sums(rows);
  std::vector<double> xs(rows);
  for (int i = 0; i <= n; ++i) xs[i] = grid_node(iv, n, i);

  parallel_for(rows, [&](std::size_t j) {
    const double y = xs[j];
    CompensatedSum row;
    for (int i = 0; i <= n; ++i) {
      const double v = f(xs[i], y);
      if (!std::isfinite(v)) {
        std::ostringstream os;
        os.precision(17);
        os << "non-finite integrand value " << v << " at grid point ("
           << xs[i] << ", " << y << ")";
        throw NonFiniteValue(os.str());
      }
      row.add_product((i == 0 || i == n) ? 0.5 : 1.0, v);
    }
    row_sums[j] = row.value();
  }, 16);

  CompensatedSum total;
  for (int j = 0; j <= n; ++j) {
    total.add_product((j == 0 || j == n) ? 0.5 : 1.0, row_sums[j]);
  }
  const double h = iv.length() / n;
  return h * h * total.value();
}

// Adds coeff * sum over traces of (I[trace] - Q_n^Tr[trace]) to acc and
// returns coeff * sum of the trace budgets.
template <std::size_t N>
double add_trace_remainders(CompensatedSum& acc, const Integrand2D& F,
                            const Interval& iv, int n, double trace_tol,
                            double coeff, const std::array<Trace, N>& traces) {
  const QuadratureRule rule = trapezium_rule(iv, n);
  double budget = 0.0;
  for (const Trace which : traces) {
    const Function1D g = F.trace(which, iv);
    const TraceIntegral exact = trace_integral(g, iv, F.exact(which), trace_tol);
    const double quad = apply(rule, g);
    acc.add_product(coeff, exact.value);
    acc.add_product(-coeff, quad);
    budget += exact.err_budget;
  }
  return std::abs(coeff) * budget;
}

}  // namespace

CubatureEstimate product_trapezoid(const Integrand2D& F, const Interval& iv,
                                   int n) {
  check_n(n);
  return {product_trapezoid_value(F.f, iv, n), CubatureRule::product_trap, n,
          0.0};
}

CubatureEstimate s_minus(const Integrand2D& F, const Interval& iv, int n,
                         double trace_tol) {
  check_n(n);
  if (!(trace_tol > 0.0)) throw InvalidArgument("trace_tol must be positive");
  CompensatedSum acc;
  acc.add(product_trapezoid_value(F.f, iv, n));
  const double budget = add_trace_remainders(
      acc, F, iv, n, trace_tol, iv.length(),
      std::array{Trace::vertical_mid, Trace::horizontal_mid});
  return {acc.value(), CubatureRule::s_minus, n, budget};
}

CubatureEstimate s_plus(const Integrand2D& F, const Interval& iv, int n,
                        double trace_tol) {
  check_n(n);
  if (!(trace_tol > 0.0)) throw InvalidArgument("trace_tol must be positive");
  CompensatedSum acc;
  acc.add(product_trapezoid_value(F.f, iv, n));
  const double budget = add_trace_remainders(
      acc, F, iv, n, trace_tol, 0.5 * iv.length(),
      std::array{Trace::left, Trace::right, Trace::down, Trace::up});
  return {acc.value(), CubatureRule::s_plus, n, budget};
}

double error_constant(CubatureRule rule, const Interval& iv, int n) {
  check_n(n);
  const double l = iv.length();
  const double l6 = l * l * l * l * l * l;
  const double n2 = static_cast<double>(n) * n;
  switch (rule) {
    case CubatureRule::s_minus:
      return -l6 / (144.0 * n2) * (1.0 + 1.0 / n2);
    case CubatureRule::s_plus:
      return l6 / (72.0 * n2) * (1.0 - 1.0 / (2.0 * n2));
    case CubatureRule::product_trap:
      break;
  }
  throw InvalidArgument("the product trapezium rule has no definite error constant");
}

Enclosure enclosure(const Integrand2D& F, const Interval& iv, int n_plus,
                    int n_minus, double trace_tol) {
  if (!F.d22_sign) throw DefinitenessNotDeclared();
  const CubatureEstimate plus = s_plus(F, iv, n_plus, trace_tol);
  const CubatureEstimate minus = s_minus(F, iv, n_minus, trace_tol);
  const double slack = std::max(plus.trace_err_budget, minus.trace_err_budget);
  Enclosure e = (*F.d22_sign == D22Sign::nonnegative)
                    ? Enclosure{plus.value - slack, minus.value + slack, n_plus, n_minus, slack}
                    : Enclosure{minus.value - slack, plus.value + slack, n_minus, n_plus, slack};
  if (e.lower > e.upper) {
    // Both rules are exact when D^{2,2}f == 0; the ends may then cross by
    // rounding. A larger crossing means the declared sign is wrong.
    const double scale = std::max({std::abs(e.lower), std::abs(e.upper), 1e-300});
    if (e.lower - e.upper > 64.0 * std::numeric_limits<double>::epsilon() * scale) {
      std::ostringstream os;
      os.precision(17);
      os << "enclosure ends cross (" << e.lower << " > " << e.upper
         << "): declared D22 sign " << to_string(*F.d22_sign)
         << " is contradicted by the data";
      throw InvalidArgument(os.str());
    }
    std::swap(e.lower, e.upper);
  }
  return e;
}

}  // namespace trapcub
