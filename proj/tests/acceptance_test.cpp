// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "test_support.hpp"
#include "trapcub/blending.hpp"
#include "trapcub/kernels.hpp"
#include "trapcub/oracle.hpp"

using namespace trapcub;
using namespace trapcub::testkit;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_g(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

const Interval kUnit(0, 1);

// Reference remainder tables, n = 4 .. 128. The difference columns have no
// entry for n = 128.
struct ReferenceTable {
  const char* fn;
  double rem_minus[6];
  double half_diff_minus[5];
  double rem_plus[6];
  double bound_plus[5];
};

const ReferenceTable kTables[] = {
    {"exp_xy",
     {-1.947e-3, -4.648e-4, -1.148e-4, -2.862e-5, -7.149e-6, -1.787e-6},
     {7.411e-4, 1.750e-4, 4.310e-5, 1.073e-5, 2.681e-6},
     {3.615e-3, 9.274e-4, 2.333e-4, 5.842e-5, 1.461e-5, 3.653e-6},
     {3.101e-3, 7.419e-4, 1.806e-4, 4.451e-5, 1.104e-5}},
    {"sin_xy",
     {6.300e-4, 1.507e-4, 3.726e-5, 9.289e-6, 2.321e-6, 5.801e-7},
     {2.397e-4, 5.674e-5, 1.399e-5, 3.484e-6, 8.703e-7},
     {-1.129e-3, -2.886e-4, -7.254e-5, -1.816e-5, -4.541e-6, -1.135e-6},
     {9.697e-4, 2.309e-4, 5.616e-5, 1.384e-5, 3.433e-6}},
};

// One unit in the fourth significant digit.
double last_digit_unit(double printed) {
  return std::pow(10.0, std::floor(std::log10(std::abs(printed))) - 3);
}

Outcome ac1_tables() {
  const auto t0 = Clock::now();
  int checked = 0, bad = 0;
  std::string first_bad;
  for (const auto& tab : kTables) {
    const char* argv[] = {"trapcub", "table", "--fn", tab.fn, "--format", "csv"};
    std::ostringstream out, err;
    const int code = cli::run(6, argv, out, err);
    if (code != 0) return {false, std::string("table command failed: ") + err.str()};
    const auto rows = cli::parse_table_csv(out.str());
    if (rows.size() != 6) return {false, "expected 6 rows"};
    auto check = [&](double got, double printed, const char* col, int n) {
      ++checked;
      if (std::abs(got - printed) > last_digit_unit(printed)) {
        if (bad++ == 0) first_bad = std::string(tab.fn) + " " + col + " n=" + std::to_string(n) + ": " + fmt_g(got);
      }
    };
    for (int i = 0; i < 6; ++i) {
      check(rows[i].rem_minus, tab.rem_minus[i], "R-", rows[i].n);
      check(rows[i].rem_plus, tab.rem_plus[i], "R+", rows[i].n);
      if (i < 5) {
        check(rows[i].half_diff_minus, tab.half_diff_minus[i], "half-diff", rows[i].n);
        check(rows[i].bound_plus, tab.bound_plus[i], "plus-bound", rows[i].n);
      }
    }
  }
  const double secs = seconds_since(t0);
  std::string detail = std::to_string(checked - bad) + "/" + std::to_string(checked) +
                       " entries within 1 unit of the 4th digit, " + fmt_g(secs) + " s";
  if (bad) detail += "; first mismatch " + first_bad;
  return {bad == 0 && secs < 10.0, detail};
}

Outcome ac2_error_constants() {
  const auto F = monomial(1, 2, 2);
  const double I = 1.0 / 9;
  double worst = 0;
  for (int n = 1; n <= 16; ++n) {
    worst = std::max(worst, std::abs((I - s_minus(F, kUnit, n).value) - 4 * error_constant(CubatureRule::s_minus, kUnit, n)));
    worst = std::max(worst, std::abs((I - s_plus(F, kUnit, n).value) - 4 * error_constant(CubatureRule::s_plus, kUnit, n)));
  }
  return {worst <= 1e-12, "max |(I - S_n) - 4c| over n=1..16 = " + fmt_g(worst)};
}

Outcome ac3_kernel_scans() {
  const auto t0 = Clock::now();
  std::size_t violations = 0;
  for (int n : {1, 2, 3, 4, 8}) {
    violations += definiteness_scan({KernelKind::k22_s_minus, kUnit, n}, D22Sign::nonpositive, 200).violations.size();
    violations += definiteness_scan({KernelKind::k22_s_plus, kUnit, n}, D22Sign::nonnegative, 200).violations.size();
  }
  const double secs = seconds_since(t0);
  return {violations == 0 && secs < 5.0,
          std::to_string(violations) + " violations on 201x201 grids, n in {1,2,3,4,8}, " + fmt_g(secs) + " s"};
}

Outcome ac4_monotonicity() {
  struct Case {
    const char* name;
    Integrand2D F;
    double I;
  };
  const Case cases[] = {{"exp", exp_xy(), oracle::ref_exp_integral().value},
                        {"sin", sin_xy(), oracle::ref_sin_integral().value},
                        {"x2y2", monomial(1, 2, 2), 1.0 / 9}};
  int checks = 0, bad = 0;
  std::string first_bad;
  for (const auto& c : cases) {
    double m_prev = s_minus(c.F, kUnit, 1).value;
    double p_prev = s_plus(c.F, kUnit, 1).value;
    for (int n = 1; n <= 64; n *= 2) {
      const double m = s_minus(c.F, kUnit, 2 * n).value;
      const double p = s_plus(c.F, kUnit, 2 * n).value;
      const double em = std::abs(c.I - m), ep = std::abs(c.I - p);
      const bool ok[] = {em <= 0.5 * std::abs(c.I - m_prev),
                         ep <= (0.5 + 0.25 / (2 * n - 1)) * std::abs(c.I - p_prev),
                         em <= std::abs(m - m_prev),
                         ep <= (4.0 * n - 1) / (4.0 * n - 3) * std::abs(p - p_prev)};
      for (bool b : ok) {
        ++checks;
        if (!b && bad++ == 0) first_bad = std::string(c.name) + " n=" + std::to_string(n);
      }
      m_prev = m;
      p_prev = p;
    }
  }
  std::string detail = std::to_string(checks - bad) + "/" + std::to_string(checks) +
                       " decay and a posteriori checks hold (n = 1..64, three integrands)";
  if (bad) detail += "; first failure " + first_bad;
  return {bad == 0, detail};
}

Outcome ac5_threshold_sharpness() {
  int bad = 0;
  std::string detail;
  for (int n : {2, 4, 8}) {
    const int res = 800 * n;
    const double cp = (4.0 * n - 1) / (4.0 * n - 3);
    const bool minus_at = definiteness_scan({KernelKind::phi_minus, kUnit, n, 1.0}, D22Sign::nonnegative, res).passed();
    const bool minus_below = !definiteness_scan({KernelKind::phi_minus, kUnit, n, 1.0 - 1e-2}, D22Sign::nonnegative, res).passed();
    const bool plus_at = definiteness_scan({KernelKind::phi_plus, kUnit, n, cp}, D22Sign::nonpositive, res).passed();
    const bool plus_below = !definiteness_scan({KernelKind::phi_plus, kUnit, n, cp - 1e-2}, D22Sign::nonpositive, res).passed();
    bad += !minus_at + !minus_below + !plus_at + !plus_below;
    detail += " n=" + std::to_string(n) + ":" + (minus_at ? "+" : "x") + (minus_below ? "+" : "x") +
              (plus_at ? "+" : "x") + (plus_below ? "+" : "x");
  }
  return {bad == 0, "clean at threshold, violated 1e-2 below, resolution 800n;" + detail};
}

Outcome ac6_blending_exactness() {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> deg(0, 5), nn(1, 16);
  double worst = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Poly p = random_poly(rng, deg(rng)), q = random_poly(rng, deg(rng));
    const Poly r = random_poly(rng, deg(rng)), s = random_poly(rng, deg(rng));
    Integrand2D F;
    F.f = [=](double x, double y) { return p(x) + q(y) + x * r(y) + y * s(x); };
    const double I = p.integral(kUnit) + q.integral(kUnit) + 0.5 * r.integral(kUnit) + 0.5 * s.integral(kUnit);
    const int n = nn(rng);
    worst = std::max(worst, std::abs(s_minus(F, kUnit, n).value - I) / std::abs(I));
    worst = std::max(worst, std::abs(s_plus(F, kUnit, n).value - I) / std::abs(I));
  }
  return {worst <= 1e-12, "50 random blending-null polynomials, max relative error " + fmt_g(worst)};
}

Outcome ac7_kernel_integrals() {
  double worst = 0;
  for (int n : {1, 2, 4}) {
    const double im = tensor_gauss([&](double t, double s) { return k22_s_minus(kUnit, n, t, s); }, 0, 1, 4 * n);
    const double ip = tensor_gauss([&](double t, double s) { return k22_s_plus(kUnit, n, t, s); }, 0, 1, 4 * n);
    worst = std::max(worst, std::abs(im - error_constant(CubatureRule::s_minus, kUnit, n)));
    worst = std::max(worst, std::abs(ip - error_constant(CubatureRule::s_plus, kUnit, n)));
  }
  return {worst <= 1e-9, "max |iint K22 - c(S_n)| over n in {1,2,4} = " + fmt_g(worst)};
}

Outcome ac8_representations() {
  const double scale = 1.0 / 64.0;
  double worst_kernel = 0;
  for (int n : {1, 2, 4, 8}) {
    for (int i = 0; i <= 100; ++i) {
      for (int j = 0; j <= 100; ++j) {
        const double t = i / 100.0, s = j / 100.0;
        worst_kernel = std::max(worst_kernel, std::abs(k22_s_plus_quadrature_form(kUnit, n, t, s) - k22_s_plus(kUnit, n, t, s)));
      }
    }
  }
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  std::uniform_int_distribution<int> nn(1, 16);
  double worst_rule = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const double al = u(rng), be = u(rng), ga = u(rng), A = u(rng), B = u(rng);
    Integrand2D F;
    F.f = [=](double x, double y) { return A * std::exp(al * x + be * y) + B * std::cos(ga * x * y) + x * y * y; };
    const Interval iv(u(rng) - 2, u(rng) + 2);
    const int n = nn(rng);
    const double m = s_minus(F, iv, n, 1e-14).value;
    const double p = s_plus(F, iv, n, 1e-14).value;
    worst_rule = std::max(worst_rule, std::abs(s_minus_blending_form(F, iv, n, 1e-14).value - m) / std::abs(m));
    worst_rule = std::max(worst_rule, std::abs(s_plus_blending_form(F, iv, n, 1e-14).value - p) / std::abs(p));
  }
  return {worst_kernel <= 1e-13 * scale && worst_rule <= 1e-12,
          "kernel forms differ by " + fmt_g(worst_kernel / scale) + " x scale; rule forms by " + fmt_g(worst_rule) +
              " relative"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"AC1", "table reproduction", ac1_tables},
      {"AC2", "error-constant identity", ac2_error_constants},
      {"AC3", "kernel definiteness scans", ac3_kernel_scans},
      {"AC4", "monotonicity and a posteriori bounds", ac4_monotonicity},
      {"AC5", "threshold sharpness", ac5_threshold_sharpness},
      {"AC6", "blending exactness", ac6_blending_exactness},
      {"AC7", "kernel-integral identity", ac7_kernel_integrals},
      {"AC8", "representation cross-checks", ac8_representations},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("[%s] %s %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
