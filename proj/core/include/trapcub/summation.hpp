#pragma once

#include <cmath>

namespace trapcub {

/// Compensated accumulator for sums of products (the Dot2 scheme of Ogita,
/// Rump and Oishi): each product is split exactly with an fma, each addition
/// with TwoSum, and all rounding errors are collected in a second double.
/// The result is as accurate as if computed in twice the working precision
/// and then rounded, and depends only on the order of the calls.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double s = sum_ + x;
    const double bp = s - sum_;
    comp_ += (sum_ - (s - bp)) + (x - bp);
    sum_ = s;
  }

  void add_product(double w, double x) noexcept {
    const double p = w * x;
    const double perr = std::fma(w, x, -p);
    add(p);
    comp_ += perr;
  }

  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace trapcub
