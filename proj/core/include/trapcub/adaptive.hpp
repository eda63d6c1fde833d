#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "trapcub/cubature.hpp"

namespace trapcub {

enum class RefineRule { s_minus, s_plus, mean };
enum class Termination { tolerance_met, max_n_reached };

std::string_view to_string(RefineRule rule);
std::string_view to_string(Termination t);

/// One level of the doubling sequence n0, 2 n0, 4 n0, ...
struct RefinementLevel {
  int n;
  double estimate;
  /// Trace-integral budget of this level's estimate.
  double trace_err_budget;
  /// estimate(n) - estimate(n/2); empty on the first level.
  std::optional<double> diff;
  /// Certified a posteriori bound on |I - estimate| without trace budgets:
  ///   s_minus: |diff|
  ///   s_plus:  (4m-1)/(4m-3) |diff|, m = n/2
  ///   mean:    half the enclosure width |S_n^- - S_n^+| / 2 (present on
  ///            every level)
  std::optional<double> aposteriori_bound;
  /// The remainder-table column: |diff|/2 for s_minus, the
  /// a posteriori bound for s_plus, empty for mean.
  std::optional<double> table_column;
  /// aposteriori_bound with the trace budgets folded in.
  std::optional<double> total_bound;
};

struct RefinementReport {
  RefineRule rule;
  std::vector<RefinementLevel> levels;
  double final_value;
  double final_bound;
  Termination termination;
  /// Provenance of the guarantee: the sign the caller declared.
  D22Sign declared_sign;

  int final_n() const { return levels.back().n; }
};

struct RefineOptions {
  int n0 = 4;
  double tol = 1e-6;
  int max_n = 1024;
  double trace_tol = 1e-12;
};

/// Doubles n from n0 until the a posteriori bound of the finest level, plus
/// trace budgets, is at most tol, or the next n would exceed max_n.
/// rule must be s_minus or s_plus; use refine_mean for the mean rule.
/// Throws DefinitenessNotDeclared or InvalidArgument on bad options.
RefinementReport refine(const Integrand2D& F, const Interval& iv,
                        RefineRule rule, const RefineOptions& opts = {});

/// Runs S^+ and S^- in lockstep and reports their mean, bounded by half the
/// width of the enclosure they form. May stop at n0.
RefinementReport refine_mean(const Integrand2D& F, const Interval& iv,
                             const RefineOptions& opts = {});

/// Error bounds for a definite pair (S', S'') of the same definiteness for
/// which (c+1) S' - c S'' has the opposite definiteness:
///   |R[S']|  <= c     |S' - S''|
///   |R[S'']| <= (c+1) |S' - S''|
struct PairBounds {
  double finer;    ///< bound on |R[S']|
  double coarser;  ///< bound on |R[S'']|
};

PairBounds definite_pair_bounds(double c, double s_prime, double s_doubleprime);

/// The comparison constant that makes (c+1) S_{2n} - c S_n definite of the
/// opposite sign: 1 for S^-, (4n-1)/(4n-3) for S^+.
double comparison_constant(CubatureRule rule, int n);

}  // namespace trapcub
