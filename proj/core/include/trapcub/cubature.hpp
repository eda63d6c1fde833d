#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string_view>

#include "trapcub/interval.hpp"
#include "trapcub/univariate.hpp"

namespace trapcub {

using Function2D = std::function<double(double, double)>;

/// Declared sign of the mixed derivative D^{2,2}f = f_xxyy on (a,b)^2.
enum class D22Sign { nonnegative, nonpositive };

/// Univariate restrictions of f to the edges and midlines of the square:
/// left f(a,t), right f(b,t), down f(t,a), up f(t,b),
/// vertical_mid f(m,t), horizontal_mid f(t,m) with m = (a+b)/2.
enum class Trace { left, right, down, up, vertical_mid, horizontal_mid };

std::string_view to_string(Trace trace);
std::string_view to_string(D22Sign sign);

/// Bivariate integrand with the metadata the definite rules rely on.
/// Callbacks must be safe to call concurrently.
struct Integrand2D {
  Function2D f;
  /// Only when set are enclosures and a posteriori bounds produced.
  std::optional<D22Sign> d22_sign;
  /// Closed forms for trace integrals; missing traces fall back to Romberg.
  std::map<Trace, ExactIntegral> exact_traces;

  /// The restriction of f selected by `trace`.
  Function1D trace(Trace which, const Interval& iv) const;
  ExactIntegral exact(Trace which) const;
};

enum class CubatureRule { product_trap, s_minus, s_plus };

std::string_view to_string(CubatureRule rule);

struct CubatureEstimate {
  double value;
  CubatureRule rule;
  int n;
  /// Coefficient-weighted sum of the trace-integral error budgets; zero for
  /// the product rule or when all traces are exact.
  double trace_err_budget;
};

/// Two-sided bracket of I[f], valid when the declared sign is correct.
struct Enclosure {
  double lower;
  double upper;
  int n_lower;
  int n_upper;
  /// Trace-integral inflation applied to both ends.
  double slack;

  double width() const noexcept { return upper - lower; }
  double midpoint() const noexcept { return 0.5 * (lower + upper); }
  bool contains(double x) const noexcept { return lower <= x && x <= upper; }
};

/// Product trapezium rule C_n^Tr[f] = h^2 sum'_i sum'_j f(x_i, y_j).
/// Rows are summed with compensated summation and combined in fixed order,
/// so the result does not depend on the thread count.
CubatureEstimate product_trapezoid(const Integrand2D& F, const Interval& iv,
                                   int n);

/// S_n^-[f] = C_n^Tr[f] + (b-a) (R[Q_n^Tr; f_v] + R[Q_n^Tr; f_h]).
/// Negative definite of order (2,2): S_n^- >= I[f] when D^{2,2}f >= 0.
CubatureEstimate s_minus(const Integrand2D& F, const Interval& iv, int n,
                         double trace_tol = 1e-12);

/// S_n^+[f] = C_n^Tr[f] + (b-a)/2 (R[Q_n^Tr; f_l] + R[Q_n^Tr; f_r]
///                                 + R[Q_n^Tr; f_d] + R[Q_n^Tr; f_u]).
/// Positive definite of order (2,2): S_n^+ <= I[f] when D^{2,2}f >= 0.
CubatureEstimate s_plus(const Integrand2D& F, const Interval& iv, int n,
                        double trace_tol = 1e-12);

/// Error constant c with I[f] - S_n[f] = c D^{2,2}f(P):
///   s_minus: -(b-a)^6/(144 n^2) (1 + 1/n^2)
///   s_plus:   (b-a)^6/(72 n^2)  (1 - 1/(2 n^2))
/// Throws InvalidArgument for product_trap.
double error_constant(CubatureRule rule, const Interval& iv, int n);

/// [S_{n_plus}^+, S_{n_minus}^-] for nonnegative D^{2,2}f, the reverse for
/// nonpositive, each end pushed outward by the trace budgets.
/// Throws DefinitenessNotDeclared if F.d22_sign is empty.
Enclosure enclosure(const Integrand2D& F, const Interval& iv, int n_plus,
                    int n_minus, double trace_tol = 1e-12);

}  // namespace trapcub
