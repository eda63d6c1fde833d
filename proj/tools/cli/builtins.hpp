#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "trapcub/cubature.hpp"

namespace trapcub::cli {

/// Integrands shipped with the CLI. Each carries closed forms for all six
/// trace integrals and the sign of D^{2,2}f on the requested square.
///   exp_xy       e^{xy}      D22 = (2 + 4xy + x^2 y^2) e^{xy}
///   sin_xy       sin(xy)     D22 = (x^2 y^2 - 2) sin(xy) - 4xy cos(xy)
///   poly_x2y2    x^2 y^2     D22 = 4
///   bilinear_xy  xy          D22 = 0 (declared nonnegative)
enum class BuiltinId { exp_xy, sin_xy, poly_x2y2, bilinear_xy };

struct BuiltinIntegrand {
  BuiltinId id;
  std::string name;
  Integrand2D integrand;
};

std::vector<std::string> builtin_names();
BuiltinId parse_builtin(std::string_view name);
std::string_view to_string(BuiltinId id);

/// Builds the integrand for the square iv^2. Throws InvalidArgument when the
/// declared D22 sign cannot be guaranteed on that square (exp_xy needs
/// xy >= sqrt(2) - 2 throughout, sin_xy needs 0 <= xy <= 1).
BuiltinIntegrand make_builtin(BuiltinId id, const Interval& iv);

}  // namespace trapcub::cli
