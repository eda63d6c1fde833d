#include "trapcub/adaptive.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace trapcub {

std::string_view to_string(RefineRule rule) {
  switch (rule) {
    case RefineRule::s_minus: return "minus";
    case RefineRule::s_plus: return "plus";
    case RefineRule::mean: return "mean";
  }
  return "?";
}

std::string_view to_string(Termination t) {
  return t == Termination::tolerance_met ? "tolerance_met" : "max_n_reached";
}

namespace {

void check_options(const Integrand2D& F, const RefineOptions& opts) {
  if (!F.d22_sign) throw DefinitenessNotDeclared();
  if (!(opts.tol > 0.0)) {
    std::ostringstream os;
    os << "tolerance must be positive, got " << opts.tol;
    throw InvalidArgument(os.str());
  }
  if (opts.n0 < 1) throw InvalidArgument("n0 must be >= 1");
  if (opts.max_n < 2 * opts.n0) {
    throw InvalidArgument("max_n must be at least 2 * n0");
  }
  if (!(opts.trace_tol > 0.0)) throw InvalidArgument("trace_tol must be positive");
}

}  // namespace

double comparison_constant(CubatureRule rule, int n) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  switch (rule) {
    case CubatureRule::s_minus: return 1.0;
    case CubatureRule::s_plus: return (4.0 * n - 1.0) / (4.0 * n - 3.0);
    case CubatureRule::product_trap: break;
  }
  throw InvalidArgument("the product trapezium rule has no comparison constant");
}

PairBounds definite_pair_bounds(double c, double s_prime, double s_doubleprime) {
  if (!(c > 0.0)) throw InvalidArgument("comparison constant c must be positive");
  const double d = std::abs(s_prime - s_doubleprime);
  return {c * d, (c + 1.0) * d};
}

RefinementReport refine(const Integrand2D& F, const Interval& iv,
                        RefineRule rule, const RefineOptions& opts) {
  if (rule == RefineRule::mean) return refine_mean(F, iv, opts);
  check_options(F, opts);
  const CubatureRule cub = rule == RefineRule::s_minus ? CubatureRule::s_minus
                                                       : CubatureRule::s_plus;
  auto estimate = [&](int n) {
    return cub == CubatureRule::s_minus ? s_minus(F, iv, n, opts.trace_tol)
                                        : s_plus(F, iv, n, opts.trace_tol);
  };

  RefinementReport report{rule, {}, 0.0, 0.0, Termination::max_n_reached, *F.d22_sign};
  CubatureEstimate prev = estimate(opts.n0);
  report.levels.push_back({prev.n, prev.value, prev.trace_err_budget, {}, {}, {}, {}});

  // Each doubling yields a bound on the finer level only.
  for (int n = opts.n0; 2 * n <= opts.max_n; n *= 2) {
    const CubatureEstimate cur = estimate(2 * n);
    const double diff = cur.value - prev.value;
    // Pair (S' = S_{2n}, S'' = S_n).
    const double c = comparison_constant(cub, n);
    const double bound = definite_pair_bounds(c, cur.value, prev.value).finer;
    const double total =
        c * (std::abs(diff) + prev.trace_err_budget + cur.trace_err_budget) +
        cur.trace_err_budget;
    const double table = cub == CubatureRule::s_minus ? 0.5 * std::abs(diff) : bound;
    report.levels.push_back({cur.n, cur.value, cur.trace_err_budget, diff, bound, table, total});
    prev = cur;
    if (total <= opts.tol) {
      report.termination = Termination::tolerance_met;
      break;
    }
  }
  const RefinementLevel& last = report.levels.back();
  report.final_value = last.estimate;
  report.final_bound = *last.total_bound;
  return report;
}

RefinementReport refine_mean(const Integrand2D& F, const Interval& iv,
                             const RefineOptions& opts) {
  check_options(F, opts);
  RefinementReport report{RefineRule::mean, {}, 0.0, 0.0, Termination::max_n_reached, *F.d22_sign};
  std::optional<double> previous;
  for (int n = opts.n0; n <= opts.max_n; n *= 2) {
    const CubatureEstimate plus = s_plus(F, iv, n, opts.trace_tol);
    const CubatureEstimate minus = s_minus(F, iv, n, opts.trace_tol);
    const double mean = 0.5 * (plus.value + minus.value);
    const double signed_half = *F.d22_sign == D22Sign::nonnegative
                                   ? 0.5 * (minus.value - plus.value)
                                   : 0.5 * (plus.value - minus.value);
    const double half = std::abs(signed_half);
    const double budget = std::max(plus.trace_err_budget, minus.trace_err_budget);
    RefinementLevel level{n, mean, budget, {}, half, {}, half + budget};
    if (previous) level.diff = mean - *previous;
    previous = mean;
    report.levels.push_back(level);
    if (half + budget <= opts.tol) {
      report.termination = Termination::tolerance_met;
      break;
    }
    if (n > opts.max_n / 2) break;
  }
  const RefinementLevel& last = report.levels.back();
  report.final_value = last.estimate;
  report.final_bound = *last.total_bound;
  return report;
}

}  // namespace trapcub
