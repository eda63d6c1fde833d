#pragma once

#include "trapcub/cubature.hpp"

namespace trapcub {

// Construction of S_n^- and S_n^+ through blending interpolation:
//
//   S_n[f] = I[Bf] + C_n^Tr[f] - C_n^Tr[Bf],
//
// where Bf interpolates f on a blending grid and D^{2,2}(Bf) = 0. These are
// an independent route to the same rules, used to cross-check the direct
// formulas in cubature.hpp.

/// Hermite blending interpolant on the double node (m, m) in each variable,
/// m = (a+b)/2:  Bf = Hx f + Hy f - Hx Hy f with
/// Hx f(x, y) = f(m, y) + (x - m) f_x(m, y). First derivatives are taken by
/// central differences.
Function2D hermite_midpoint_blend(const Function2D& f, const Interval& iv);

/// Lagrange blending interpolant on the edges x, y in {a, b}.
Function2D lagrange_edge_blend(const Function2D& f, const Interval& iv);

/// S_n^- via the midpoint Hermite blending grid.
CubatureEstimate s_minus_blending_form(const Integrand2D& F, const Interval& iv,
                                       int n, double trace_tol = 1e-12);

/// S_n^+ via the {a, b} Lagrange blending grid.
CubatureEstimate s_plus_blending_form(const Integrand2D& F, const Interval& iv,
                                      int n, double trace_tol = 1e-12);

}  // namespace trapcub
