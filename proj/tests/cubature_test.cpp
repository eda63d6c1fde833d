#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"
#include "trapcub/blending.hpp"
#include "trapcub/cubature.hpp"
#include "trapcub/parallel.hpp"

using namespace trapcub;
using namespace trapcub::testkit;

namespace {

const Interval kUnit(0, 1);

Integrand2D plain(Function2D f) {
  Integrand2D F;
  F.f = std::move(f);
  return F;
}

double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

}  // namespace

TEST(ProductTrapezoid, ConstantFunction) {
  for (int n : {1, 2, 7, 32}) {
    EXPECT_NEAR(product_trapezoid(plain([](double, double) { return 1.0; }), kUnit, n).value, 1.0, 1e-15);
  }
}

TEST(ProductTrapezoid, BilinearIsExact) {
  const auto e = product_trapezoid(plain([](double x, double y) { return x * y; }), kUnit, 3);
  EXPECT_NEAR(e.value, 0.25, 1e-15);
  EXPECT_EQ(e.rule, CubatureRule::product_trap);
  EXPECT_EQ(e.n, 3);
  EXPECT_EQ(e.trace_err_budget, 0.0);
}

TEST(ProductTrapezoid, MatchesNaiveDoubleLoop) {
  auto f = [](double x, double y) { return std::exp(x * y); };
  EXPECT_NEAR(product_trapezoid(plain(f), kUnit, 4).value, naive_product_trapezoid(f, 0, 1, 4), 1e-12);
  EXPECT_NEAR(product_trapezoid(plain(f), Interval(-1, 2), 9).value,
              naive_product_trapezoid(f, -1, 2, 9), 1e-12);
}

TEST(ProductTrapezoid, NonFiniteNamesGridPoint) {
  try {
    product_trapezoid(plain([](double x, double) { return 1.0 / (x - 0.5); }), kUnit, 2);
    FAIL() << "expected NonFiniteValue";
  } catch (const NonFiniteValue& e) {
    EXPECT_NE(std::string(e.what()).find("0.5"), std::string::npos) << e.what();
  }
}

TEST(SMinus, CubicSumIsExact) {
  const auto F = plain([](double x, double y) { return x * x * x + y * y * y; });
  EXPECT_NEAR(s_minus(F, kUnit, 2).value, 0.5, 1e-13);
}

TEST(SMinus, SquareMonomialN2) {
  const auto e = s_minus(monomial(1, 2, 2), kUnit, 2);
  EXPECT_NEAR(e.value, 1.0 / 9 + 5.0 / 576, 1e-14);
  EXPECT_EQ(e.trace_err_budget, 0.0);
}

TEST(SMinus, ExpRemainderAtN4) {
  EXPECT_NEAR(kExpXYIntegral - s_minus(exp_xy(), kUnit, 4).value, -1.947e-3, 0.5e-6);
}

TEST(SMinus, RombergTracesCarryBudget) {
  const auto e = s_minus(plain([](double x, double y) { return std::exp(x * y); }), kUnit, 4, 1e-12);
  EXPECT_GT(e.trace_err_budget, 0.0);
  EXPECT_NEAR(e.value, s_minus(exp_xy(), kUnit, 4).value, 1e-11);
}

TEST(SPlus, MixedCubicIsExact) {
  const auto F = plain([](double x, double y) { return x * x * y + x * y * y; });
  EXPECT_NEAR(s_plus(F, kUnit, 3).value, 1.0 / 3, 1e-13);
}

TEST(SPlus, SquareMonomialN1) {
  EXPECT_NEAR(s_plus(monomial(1, 2, 2), kUnit, 1).value, 1.0 / 9 - 1.0 / 36, 1e-14);
}

TEST(SPlus, SinRemainderAtN8) {
  EXPECT_NEAR(kSinXYIntegral - s_plus(sin_xy(), kUnit, 8).value, -2.886e-4, 0.5e-7);
}

TEST(ErrorConstant, Values) {
  EXPECT_DOUBLE_EQ(error_constant(CubatureRule::s_minus, kUnit, 1), -1.0 / 72);
  EXPECT_DOUBLE_EQ(error_constant(CubatureRule::s_plus, kUnit, 1), 1.0 / 144);
  EXPECT_DOUBLE_EQ(error_constant(CubatureRule::s_minus, Interval(0, 2), 2), -5.0 / 36);
  EXPECT_THROW(error_constant(CubatureRule::product_trap, kUnit, 1), InvalidArgument);
  EXPECT_THROW(error_constant(CubatureRule::s_plus, kUnit, 0), InvalidArgument);
}

TEST(ErrorConstant, ConstantMixedDerivativeIdentity) {
  const double I = 1.0 / 9;
  const auto F = monomial(1, 2, 2);
  for (int n = 1; n <= 16; ++n) {
    for (auto [rule, S] : {std::pair{CubatureRule::s_minus, s_minus(F, kUnit, n).value},
                           std::pair{CubatureRule::s_plus, s_plus(F, kUnit, n).value}}) {
      const double want = 4 * error_constant(rule, kUnit, n);
      EXPECT_LE(rel_err(I - S, want), 1e-12) << "n=" << n << " " << to_string(rule);
    }
  }
}

TEST(ErrorConstant, ScalesWithIntervalLength) {
  // Same identity on [-1, 2] with f = x^2 y^2 (sign of D22 is irrelevant for
  // the value of S_n).
  const Interval iv(-1, 2);
  Integrand2D F = plain([](double x, double y) { return x * x * y * y; });
  const double I = 9.0;  // (int x^2)^2 = 3^2
  for (int n : {1, 3, 5}) {
    EXPECT_LE(rel_err(I - s_minus(F, iv, n).value, 4 * error_constant(CubatureRule::s_minus, iv, n)), 1e-11);
    EXPECT_LE(rel_err(I - s_plus(F, iv, n).value, 4 * error_constant(CubatureRule::s_plus, iv, n)), 1e-11);
  }
}

TEST(Enclosure, ExpXYAtN4) {
  const auto enc = enclosure(exp_xy(), kUnit, 4, 4);
  EXPECT_NEAR(enc.lower, 1.317902151 - 3.615e-3, 1e-6);
  EXPECT_NEAR(enc.upper, 1.317902151 + 1.947e-3, 1e-6);
  EXPECT_TRUE(enc.contains(kExpXYIntegral));
  EXPECT_EQ(enc.slack, 0.0);
  EXPECT_EQ(enc.n_lower, 4);
  EXPECT_EQ(enc.n_upper, 4);
}

TEST(Enclosure, SinXYReversesEnds) {
  const auto enc = enclosure(sin_xy(), kUnit, 4, 4);
  EXPECT_DOUBLE_EQ(enc.lower, s_minus(sin_xy(), kUnit, 4).value);
  EXPECT_DOUBLE_EQ(enc.upper, s_plus(sin_xy(), kUnit, 4).value);
  EXPECT_TRUE(enc.contains(0.239811742));
}

TEST(Enclosure, BilinearCollapses) {
  Integrand2D F = plain([](double x, double y) { return x * y; });
  F.d22_sign = D22Sign::nonnegative;
  const auto enc = enclosure(F, kUnit, 4, 4);
  // Traces fall back to Romberg, so the ends sit one slack away from 0.25.
  EXPECT_NEAR(enc.lower, 0.25, enc.slack + 1e-13);
  EXPECT_NEAR(enc.upper, 0.25, enc.slack + 1e-13);
  const auto exact = enclosure(monomial(1, 1, 1), kUnit, 4, 4);
  EXPECT_EQ(exact.slack, 0.0);
  EXPECT_NEAR(exact.lower, 0.25, 1e-15);
  EXPECT_NEAR(exact.upper, 0.25, 1e-15);
  EXPECT_LE(enc.lower, enc.upper);
}

TEST(Enclosure, RequiresDeclaredSign) {
  try {
    enclosure(plain([](double x, double y) { return x * y; }), kUnit, 2, 2);
    FAIL() << "expected DefinitenessNotDeclared";
  } catch (const DefinitenessNotDeclared& e) {
    EXPECT_NE(std::string(e.what()).find("definiteness not declared"), std::string::npos);
  }
}

TEST(Enclosure, RombergTracesWidenBothEnds) {
  Integrand2D F = plain([](double x, double y) { return std::exp(x * y); });
  F.d22_sign = D22Sign::nonnegative;
  const auto enc = enclosure(F, kUnit, 8, 8, 1e-10);
  EXPECT_GT(enc.slack, 0.0);
  EXPECT_NEAR(enc.lower + enc.slack, s_plus(exp_xy(), kUnit, 8).value, 1e-9);
  EXPECT_TRUE(enc.contains(kExpXYIntegral));
}

TEST(Enclosure, ContradictedSignIsReported) {
  Integrand2D F = exp_xy();
  F.d22_sign = D22Sign::nonpositive;
  EXPECT_THROW(enclosure(F, kUnit, 4, 4), InvalidArgument);
}

TEST(Cubature, BlendingNullPolynomialsAreExact) {
  // f = p(x) + q(y) + x r(y) + y s(x) has D^{2,2} f = 0.
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> end(-2, 2);
  std::uniform_int_distribution<int> deg(0, 5), nn(1, 12);
  for (int trial = 0; trial < 50; ++trial) {
    double a = end(rng), b = end(rng);
    if (a > b) std::swap(a, b);
    if (b - a < 0.1) b = a + 0.1;
    const Interval iv(a, b);
    const Poly p = random_poly(rng, deg(rng)), q = random_poly(rng, deg(rng));
    const Poly r = random_poly(rng, deg(rng)), s = random_poly(rng, deg(rng));
    const Integrand2D F = plain([=](double x, double y) { return p(x) + q(y) + x * r(y) + y * s(x); });
    const double L = iv.length();
    const double mx = 0.5 * (b * b - a * a);
    const double I = p.integral(iv) * L + q.integral(iv) * L + mx * r.integral(iv) + mx * s.integral(iv);
    const double scale = L * (p.abs_scale(iv) + q.abs_scale(iv)) +
                         std::max(std::abs(a), std::abs(b)) * L * (r.abs_scale(iv) + s.abs_scale(iv));
    const int n = nn(rng);
    EXPECT_LE(std::abs(s_minus(F, iv, n).value - I), 1e-12 * scale) << "trial " << trial;
    EXPECT_LE(std::abs(s_plus(F, iv, n).value - I), 1e-12 * scale) << "trial " << trial;
  }
}

TEST(Cubature, SignInvariants) {
  for (int n = 1; n <= 64; ++n) {
    EXPECT_LT(kExpXYIntegral - s_minus(exp_xy(), kUnit, n).value, 0.0) << n;
    EXPECT_GT(kExpXYIntegral - s_plus(exp_xy(), kUnit, n).value, 0.0) << n;
    EXPECT_GT(kSinXYIntegral - s_minus(sin_xy(), kUnit, n).value, 0.0) << n;
    EXPECT_LT(kSinXYIntegral - s_plus(sin_xy(), kUnit, n).value, 0.0) << n;
  }
}

TEST(Cubature, MonotonicityAndAPosterioriBounds) {
  struct Case {
    const char* name;
    Integrand2D F;
    double I;
  };
  const Case cases[] = {{"exp", exp_xy(), kExpXYIntegral},
                        {"sin", sin_xy(), kSinXYIntegral},
                        {"x2y2", monomial(1, 2, 2), 1.0 / 9}};
  for (const auto& c : cases) {
    double m_prev = s_minus(c.F, kUnit, 1).value;
    double p_prev = s_plus(c.F, kUnit, 1).value;
    for (int n = 1; n <= 32; n *= 2) {
      const double m = s_minus(c.F, kUnit, 2 * n).value;
      const double p = s_plus(c.F, kUnit, 2 * n).value;
      EXPECT_LE(std::abs(c.I - m), 0.5 * std::abs(c.I - m_prev)) << c.name << " n=" << n;
      EXPECT_LE(std::abs(c.I - p), (0.5 + 0.25 / (2 * n - 1)) * std::abs(c.I - p_prev)) << c.name << " n=" << n;
      EXPECT_LE(std::abs(c.I - m), std::abs(m - m_prev)) << c.name << " n=" << n;
      EXPECT_LE(std::abs(c.I - p), (4.0 * n - 1) / (4.0 * n - 3) * std::abs(p - p_prev)) << c.name << " n=" << n;
      m_prev = m;
      p_prev = p;
    }
  }
}

TEST(Cubature, BlendingFormAgreesWithDirectForm) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  std::uniform_int_distribution<int> nn(1, 16);
  for (int trial = 0; trial < 10; ++trial) {
    const double al = u(rng), be = u(rng), ga = u(rng), A = u(rng), B = u(rng);
    const Integrand2D F = plain([=](double x, double y) {
      return A * std::exp(al * x + be * y) + B * std::cos(ga * x * y) + x * y * y;
    });
    const Interval iv(u(rng) - 2, u(rng) + 2);
    const int n = nn(rng);
    const double m_direct = s_minus(F, iv, n, 1e-14).value;
    const double p_direct = s_plus(F, iv, n, 1e-14).value;
    EXPECT_LE(rel_err(s_minus_blending_form(F, iv, n, 1e-14).value, m_direct), 1e-12) << "trial " << trial;
    EXPECT_LE(rel_err(s_plus_blending_form(F, iv, n, 1e-14).value, p_direct), 1e-12) << "trial " << trial;
  }
}

TEST(Cubature, ThreadCountDoesNotChangeResults) {
  const auto F = exp_xy();
  const Interval iv(-0.3, 1.1);
  set_thread_limit(1);
  const double m1 = s_minus(F, iv, 300).value, p1 = s_plus(F, iv, 300).value;
  const double c1 = product_trapezoid(F, iv, 513).value;
  set_thread_limit(4);
  EXPECT_EQ(s_minus(F, iv, 300).value, m1);
  EXPECT_EQ(s_plus(F, iv, 300).value, p1);
  EXPECT_EQ(product_trapezoid(F, iv, 513).value, c1);
  set_thread_limit(0);
}

TEST(Cubature, RejectsBadArguments) {
  EXPECT_THROW(s_minus(exp_xy(), kUnit, 0), InvalidArgument);
  EXPECT_THROW(s_plus(exp_xy(), kUnit, -1), InvalidArgument);
  EXPECT_THROW(product_trapezoid(exp_xy(), kUnit, 0), InvalidArgument);
}
