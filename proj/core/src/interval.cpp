#include "trapcub/interval.hpp"

#include <cmath>
#include <sstream>

namespace trapcub {

Interval::Interval(double a, double b) : a_(a), b_(b) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    std::ostringstream os;
    os << "invalid interval [" << a << ", " << b << "]: need finite a < b";
    throw InvalidArgument(os.str());
  }
}

void require_in_domain(const Interval& iv, double t, const char* what) {
  if (!iv.contains(t)) {
    std::ostringstream os;
    os << what << " = " << t << " outside [" << iv.a() << ", " << iv.b()
       << "]";
    throw InvalidArgument(os.str());
  }
}

}  // namespace trapcub
