#include "trapcub/oracle.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace trapcub::oracle {

namespace {

constexpr double kTermCutoff = 1e-18;

// Plain Kahan summation, kept separate from the library's accumulator.
struct Kahan {
  double sum = 0.0;
  double c = 0.0;
  void add(double x) {
    const double y = x - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

int trailing_zeros(int i, int cap) {
  if (i == 0) return cap;
  int z = 0;
  while ((i & 1) == 0 && z < cap) {
    i >>= 1;
    ++z;
  }
  return z;
}

}  // namespace

double exp_series_partial(int terms) {
  Kahan s;
  double fact = 1.0;
  for (int k = 1; k <= terms; ++k) {
    fact *= k;
    s.add(1.0 / (k * fact));
  }
  return s.sum;
}

double sin_series_partial(int terms) {
  Kahan s;
  double fact = 1.0;  // (2k)!
  for (int k = 1; k <= terms; ++k) {
    fact *= (2.0 * k - 1.0) * (2.0 * k);
    const double term = 1.0 / (2.0 * k * fact);
    s.add(k % 2 == 1 ? term : -term);
  }
  return s.sum;
}

ReferenceValue ref_exp_integral() {
  // Terms 1/(k k!) fall by at least a factor 2, so the tail after the first
  // omitted term is bounded by twice that term.
  Kahan s;
  double fact = 1.0;
  double omitted = 0.0;
  for (int k = 1;; ++k) {
    fact *= k;
    const double term = 1.0 / (k * fact);
    if (term < kTermCutoff) {
      omitted = term;
      break;
    }
    s.add(term);
  }
  const double rounding = 8.0 * std::numeric_limits<double>::epsilon() * s.sum;
  return {s.sum, 2.0 * omitted + rounding, "series sum 1/(k k!)"};
}

ReferenceValue ref_sin_integral() {
  // Alternating with decreasing terms: the error is below the first omitted
  // term.
  Kahan s;
  double fact = 1.0;
  double omitted = 0.0;
  for (int k = 1;; ++k) {
    fact *= (2.0 * k - 1.0) * (2.0 * k);
    const double term = 1.0 / (2.0 * k * fact);
    if (term < kTermCutoff) {
      omitted = term;
      break;
    }
    s.add(k % 2 == 1 ? term : -term);
  }
  const double rounding = 8.0 * std::numeric_limits<double>::epsilon() * s.sum;
  return {s.sum, omitted + rounding, "alternating series sum (-1)^(k+1)/(2k (2k)!)"};
}

double brute_force_integral(const Function2D& f, const Interval& iv, int level) {
  if (level < 0 || level > 14) {
    throw InvalidArgument("brute-force level must be in 0..14");
  }
  const int fine = 1 << level;
  const double a = iv.a();
  const double len = iv.length();

  // One pass over the finest grid; point (i, j) belongs to every coarser
  // grid whose spacing divides both indices.
  std::vector<Kahan> sums(level + 1);
  std::vector<double> xs(fine + 1);
  std::vector<int> tz(fine + 1);
  for (int i = 0; i <= fine; ++i) {
    xs[i] = (i == fine) ? iv.b() : a + len * i / fine;
    tz[i] = trailing_zeros(i, level);
  }
  std::vector<Kahan> row(level + 1);
  for (int j = 0; j <= fine; ++j) {
    const double wy = (j == 0 || j == fine) ? 0.5 : 1.0;
    for (auto& r : row) r = Kahan{};
    for (int i = 0; i <= fine; ++i) {
      const double v = f(xs[i], xs[j]);
      if (!std::isfinite(v)) {
        std::ostringstream os;
        os << "non-finite value at (" << xs[i] << ", " << xs[j] << ")";
        throw NonFiniteValue(os.str());
      }
      const double wx = (i == 0 || i == fine) ? 0.5 : 1.0;
      const int coarsest = level - std::min(tz[i], tz[j]);
      for (int k = coarsest; k <= level; ++k) row[k].add(wx * v);
    }
    const int coarsest_row = level - tz[j];
    for (int k = 0; k <= level; ++k) {
      if (k >= coarsest_row) sums[k].add(wy * row[k].sum);
    }
  }

  std::vector<double> prev, cur;
  for (int k = 0; k <= level; ++k) {
    const double h = len / (1 << k);
    cur.assign(1, h * h * sums[k].sum);
    double factor = 1.0;
    for (int j = 1; j <= k; ++j) {
      factor *= 4.0;
      cur.push_back(cur[j - 1] + (cur[j - 1] - prev[j - 1]) / (factor - 1.0));
    }
    prev.swap(cur);
  }
  return prev.back();
}

}  // namespace trapcub::oracle
