#pragma once

#include <string>

#include "trapcub/cubature.hpp"

namespace trapcub::oracle {

struct ReferenceValue {
  double value;
  double abs_err;  ///< truncation bound plus a rounding allowance
  std::string method;
};

/// iint_{[0,1]^2} e^{xy} = int_0^1 (e^x - 1)/x dx = sum_{k>=1} 1/(k k!).
ReferenceValue ref_exp_integral();

/// iint_{[0,1]^2} sin(xy) = int_0^1 (1 - cos x)/x dx
///                       = sum_{k>=1} (-1)^{k+1} / (2k (2k)!).
ReferenceValue ref_sin_integral();

/// Partial sum of the exp series with the first `terms` terms.
double exp_series_partial(int terms);

/// Partial sum of the sin series with the first `terms` terms.
double sin_series_partial(int terms);

/// Tensor-product Romberg: product trapezium sums on 2^j + 1 points per
/// axis for j = 0..level, extrapolated in h^2. Deliberately naive loops that
/// share no code with the cubature module. Requires 0 <= level <= 14.
double brute_force_integral(const Function2D& f, const Interval& iv, int level);

}  // namespace trapcub::oracle
