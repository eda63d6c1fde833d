#pragma once

#include "trapcub/error.hpp"

namespace trapcub {

/// Closed interval [a, b] with a < b. The square [a, b]^2 uses the same
/// interval on both axes.
class Interval {
 public:
  Interval(double a, double b);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double length() const noexcept { return b_ - a_; }
  double midpoint() const noexcept { return 0.5 * (a_ + b_); }
  bool contains(double t) const noexcept { return a_ <= t && t <= b_; }

  /// Mirror image of t about the midpoint.
  double reflect(double t) const noexcept { return (a_ + b_) - t; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double a_;
  double b_;
};

/// Throws InvalidArgument unless t lies in iv.
void require_in_domain(const Interval& iv, double t, const char* what);

}  // namespace trapcub
