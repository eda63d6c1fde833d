#pragma once

#include <string_view>
#include <vector>

#include "trapcub/cubature.hpp"
#include "trapcub/interval.hpp"

namespace trapcub {

/// Which of the two modified rules a kernel belongs to.
enum class Variant { minus, plus };

// ---------------------------------------------------------------------------
// Bivariate Peano kernels K_{2,2}(S_n^±; t, tau). With A the second kernel of
// the blending quadrature (midpoint rule for S^-, one-panel trapezium for
// S^+) and B = K_2(Q_n^Tr; .):
//
//   K_{2,2}(t, tau) = A(t) B(tau) + A(tau) B(t) - B(t) B(tau).
//
// R[S_n; f] = iint K_{2,2}(t, tau) D^{2,2}f(t, tau) dt dtau.
// ---------------------------------------------------------------------------

double k22_s_minus(const Interval& iv, int n, double t, double tau);
double k22_s_plus(const Interval& iv, int n, double t, double tau);
double k22(Variant v, const Interval& iv, int n, double t, double tau);

/// K_{2,2}(S_n^+) written as K_2(Q^Tr; tau) K_2(Q_n^Tr; t)
/// + K_2(Q_n^Tr; tau) Q_n^Tr[Kc(., t)], Kc(x, t) = (x-t)_+ - (x-a)(b-t)/(b-a).
/// Uses the generic node-sum Peano kernels, not the closed forms.
double k22_s_plus_quadrature_form(const Interval& iv, int n, double t, double tau);

/// First mixed representation: K_2(Q'; t) K_2(Q_n; tau) + K_2(Q_n; t) Q_n[Kc(., tau)],
/// with Kc the interpolation-error kernel of the blending operator in the
/// second variable. Generic node sums throughout.
double k22_first_mixed_form(Variant v, const Interval& iv, int n, double t, double tau);

/// Second mixed representation, the same with the roles of t and tau swapped.
double k22_second_mixed_form(Variant v, const Interval& iv, int n, double t, double tau);

/// Interpolation-error Peano kernel of the blending operator in one
/// variable: (x-t)_+ minus its interpolant (Hermite at the double midpoint
/// for minus, linear at {a, b} for plus).
double blending_error_kernel(Variant v, const Interval& iv, double x, double t);

/// Comparison kernel (c+1) K_{2,2}(S_{2n}; t, tau) - c K_{2,2}(S_n; t, tau).
/// Nonnegative for minus when c >= 1, nonpositive for plus when
/// c >= (4n-1)/(4n-3).
double phi(Variant v, const Interval& iv, int n, double c, double t, double tau);

/// Local polynomial of the comparison kernel on the sub-cell
/// [t_{2k}, t_{2k+1}] x [t_{2l}, t_{2l+1}] of the 2n-grid (h = (b-a)/(2n)),
/// in local coordinates t = t_{2k} + u h, tau = t_{2l} + v h.
///   minus: includes h^4, and 4 phi = psi.
///   plus:  excludes h^4, and 4 phi = h^4 psi.
/// The cell must lie in the lower-left quadrant: 0 <= 2k+1 <= n and
/// 0 <= 2l+1 <= n.
double psi(Variant v, const Interval& iv, int k, int l, int n, double c,
           double u, double w);

/// 4 phi expressed through psi, i.e. psi for minus and h^4 psi for plus.
double psi_scaled(Variant v, const Interval& iv, int k, int l, int n, double c,
                  double u, double w);

/// Diagonal trace of the minus comparison kernel in the cell (k, k):
/// g(u) = h^4 [2 (2k+u)^2 u (u-1+c) - u^2 (1-u)^2 + c u^2 (3-2u)].
/// g(0) = 0 and g'(0) = 8 (c-1) h^4 k^2, so g dips below zero when c < 1.
/// Requires 1 <= k <= (n-1)/2.
double sharpness_g(const Interval& iv, int k, int n, double c, double u);

enum class KernelKind { k22_s_minus, k22_s_plus, phi_minus, phi_plus };

std::string_view to_string(KernelKind kind);

struct KernelSpec {
  KernelKind kind;
  Interval iv;
  int n;
  double c = 0.0;  ///< used by phi kinds only; must be > 0 there
};

/// Throws InvalidArgument on n < 1 or, for phi kinds, c <= 0.
void validate(const KernelSpec& spec);

/// Evaluates the kernel described by spec.
double evaluate(const KernelSpec& spec, double t, double tau);

/// The sign each kernel kind is proven to have.
D22Sign proven_sign(KernelKind kind);

struct Violation {
  double t;
  double tau;
  double value;
};

struct ScanReport {
  int grid_resolution;
  D22Sign expected_sign;
  double slack;                     ///< 1e-14 * max |kernel| on the grid
  double max_abs_value;
  std::vector<Violation> violations;  ///< row-major order (t outer)
  double max_abs_violation;
  Violation worst{0.0, 0.0, 0.0};     ///< valid when violations is non-empty

  bool passed() const noexcept { return violations.empty(); }
};

/// Evaluates the kernel on the uniform (resolution+1)^2 grid over [a,b]^2 and
/// reports every point whose value has the wrong sign by more than
/// 1e-14 * max|kernel|. Grid nodes coincide with the rule nodes whenever
/// resolution is a multiple of 2n. Requires resolution >= 2.
ScanReport definiteness_scan(const KernelSpec& spec, D22Sign expected,
                             int resolution);

}  // namespace trapcub
