#include "oracles.hpp"

#include <hurzeta/bernoulli.hpp>
#include <hurzeta/error.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <thread>
#include <vector>

using namespace hurzeta;

namespace {

// Polynomial from its ascending coefficients, for readable expectations.
std::vector<Rational> coeffs(std::initializer_list<Rational> c) { return {c}; }

std::vector<Rational> as_vector(const BernoulliPolynomial& p)
{
   return {p.coefficients().begin(), p.coefficients().end()};
}

} // namespace

TEST(BernoulliNumber, Examples)
{
   EXPECT_EQ(bernoulli_number(0), Rational(1));
   EXPECT_EQ(bernoulli_number(1), Rational(1, 2));
   EXPECT_EQ(bernoulli_number(2), Rational(1, 6));
   EXPECT_EQ(bernoulli_number(12), Rational(-691, 2730));
}

TEST(BernoulliNumber, MatchesSeriesExpansion)
{
   const auto series = oracle::bernoulli_by_series(40);
   for (int n = 0; n <= 40; ++n)
      EXPECT_EQ(bernoulli_number(n), series[static_cast<std::size_t>(n)]) << "n = " << n;
}

TEST(BernoulliNumber, RecurrenceConsistency)
{
   for (int n = 0; n <= 40; ++n) {
      Rational sum = 0;
      Integer c = 1; // C(n+1, k)
      for (int k = 0; k <= n; ++k) {
         sum += Rational(c) * bernoulli_number(k);
         c = c * (n + 1 - k) / (k + 1);
      }
      EXPECT_EQ(sum, Rational(n + 1)) << "n = " << n;
   }
}

TEST(BernoulliNumber, CapIsEnforced)
{
   EXPECT_THROW(bernoulli_number(kDefaultBernoulliCap + 1), CapExceeded);
   EXPECT_THROW(bernoulli_number(-1), DomainError);
   EXPECT_THROW(bernoulli_polynomial(kDefaultBernoulliCap + 1), CapExceeded);
   const Rational b70 = bernoulli_number(70, 80);
   EXPECT_EQ(b70, oracle::bernoulli_by_series(70)[70]);
}

TEST(BernoulliPolynomial, Examples)
{
   EXPECT_EQ(as_vector(bernoulli_polynomial(0)), coeffs({1}));
   EXPECT_EQ(as_vector(bernoulli_polynomial(2)), coeffs({Rational(1, 6), -1, 1}));
   EXPECT_EQ(as_vector(bernoulli_polynomial(3)), coeffs({0, Rational(1, 2), Rational(-3, 2), 1}));
   EXPECT_EQ(bernoulli_polynomial(7).degree(), 7);
}

TEST(BernoulliPolynomial, EvalExamples)
{
   EXPECT_EQ(eval_poly(bernoulli_polynomial(2), Rational(1)), Rational(1, 6));
   EXPECT_EQ(eval_poly(bernoulli_polynomial(3), Rational(1, 2)), Rational(0));
   EXPECT_EQ(eval_poly(bernoulli_polynomial(2), Rational(3, 10)), Rational(-13, 300));
   EXPECT_NEAR(eval_poly(bernoulli_polynomial(2), 0.3), -13.0 / 300.0, 1e-16);
}

TEST(BernoulliPolynomial, FloatEvaluationTracksExact)
{
   for (int i = 0; i < 500; ++i) {
      const int n = oracle::uniform_int(0, 30);
      const double x = oracle::uniform(0.0, 1.0);
      const auto& p = bernoulli_polynomial(n);
      const double exact = to_double(eval_poly(p, exact_rational(x)));
      // Horner error is bounded by the evaluation of |coefficients| at |x|.
      double scale = 0;
      for (std::size_t k = p.approx_coefficients().size(); k-- > 0;)
         scale = scale * x + std::abs(p.approx_coefficients()[k]);
      ASSERT_NEAR(eval_poly(p, x), exact, 4 * (n + 1) * 1.2e-16 * scale) << n << " " << x;
   }
}

TEST(BernoulliPolynomial, DerivativeIdentity)
{
   for (int n = 1; n <= 30; ++n) {
      std::vector<Rational> expected;
      const BernoulliPolynomial lower = bernoulli_polynomial(n - 1);
      for (const auto& c : lower.coefficients())
         expected.push_back(c * n);
      EXPECT_EQ(bernoulli_polynomial(n).derivative(), expected) << "n = " << n;
   }
}

TEST(BernoulliPolynomial, EndpointIdentity)
{
   for (int n = 0; n <= 30; ++n) {
      if (n == 1)
         continue;
      const auto& p = bernoulli_polynomial(n);
      EXPECT_EQ(eval_poly(p, Rational(0)), bernoulli_number(n)) << "n = " << n;
      EXPECT_EQ(eval_poly(p, Rational(1)), bernoulli_number(n)) << "n = " << n;
   }
   // B_1(x) = x - 1/2 under the B_1 = +1/2 convention.
   EXPECT_EQ(eval_poly(bernoulli_polynomial(1), Rational(1)), Rational(1, 2));
   EXPECT_EQ(eval_poly(bernoulli_polynomial(1), Rational(0)), Rational(-1, 2));
}

TEST(BernoulliPolynomial, OddVanishing)
{
   for (int n = 3; n <= 29; n += 2) {
      const auto& p = bernoulli_polynomial(n);
      EXPECT_EQ(eval_poly(p, Rational(0)), 0) << n;
      EXPECT_EQ(eval_poly(p, Rational(1, 2)), 0) << n;
      EXPECT_EQ(eval_poly(p, Rational(1)), 0) << n;
   }
}

TEST(BernoulliPolynomial, ReflectionSymmetry)
{
   for (int i = 0; i < 200; ++i) {
      const int n = oracle::uniform_int(0, 30);
      const Rational x(oracle::uniform_int(0, 997), 997);
      const auto& p = bernoulli_polynomial(n);
      const Rational lhs = eval_poly(p, Rational(1) - x);
      const Rational rhs = n % 2 ? -eval_poly(p, x) : eval_poly(p, x);
      ASSERT_EQ(lhs, rhs) << n;
   }
}

TEST(BernoulliPolynomial, ConcurrentAccessIsConsistent)
{
   std::vector<std::string> seen(8);
   {
      std::vector<std::jthread> pool;
      for (std::size_t t = 0; t < seen.size(); ++t)
         pool.emplace_back([&seen, t] {
            std::string s;
            for (int n = 0; n <= 40; ++n)
               s += to_string(eval_poly(bernoulli_polynomial(n), Rational(1, 3))) + ";";
            s += std::to_string(even_roots(18, 1e-13).b_minus);
            seen[t] = s;
         });
   }
   for (const auto& s : seen)
      EXPECT_EQ(s, seen.front());
}

TEST(EvenRoots, ClosedFormN2)
{
   const auto r = even_roots(2, 1e-12);
   EXPECT_NEAR(r.b_minus, (3.0 - std::sqrt(3.0)) / 6.0, 1e-12);
   EXPECT_NEAR(r.b_plus, (3.0 + std::sqrt(3.0)) / 6.0, 1e-12);
   EXPECT_EQ(r.n, 2);
}

TEST(EvenRoots, ClosedFormN4)
{
   // B_4(x) = (x^2 - x)^2 - 1/30, so x^2 - x = -1/sqrt(30).
   const double d = std::sqrt(1.0 - 4.0 / std::sqrt(30.0));
   const auto r = even_roots(4, 1e-12);
   EXPECT_NEAR(r.b_minus, (1.0 - d) / 2.0, 1e-12);
   EXPECT_NEAR(r.b_plus, (1.0 + d) / 2.0, 1e-12);
}

TEST(EvenRoots, Errors)
{
   EXPECT_THROW(even_roots(2, 0.0), InvalidParameter);
   EXPECT_THROW(even_roots(2, -1e-3), InvalidParameter);
   EXPECT_THROW(even_roots(3, 1e-12), InvalidParameter);
   EXPECT_THROW(even_roots(0, 1e-12), InvalidParameter);
}

TEST(EvenRoots, ResidualWithinTolerance)
{
   for (int n = 2; n <= 30; n += 2) {
      const double tol = 1e-13;
      const auto r = even_roots(n, tol);
      const auto& p = bernoulli_polynomial(n);
      const auto& dp = bernoulli_polynomial(n - 1);
      for (double b : {r.b_minus, r.b_plus}) {
         const double value = std::abs(to_double(eval_poly(p, exact_rational(b))));
         const double slope = n * std::abs(to_double(eval_poly(dp, exact_rational(b))));
         EXPECT_LT(value, tol * std::max(1.0, slope)) << "n = " << n << " b = " << b;
      }
      EXPECT_LT(r.b_minus, 0.5);
      EXPECT_GT(r.b_plus, 0.5);
      EXPECT_NEAR(r.b_minus + r.b_plus, 1.0, 2 * tol);
      EXPECT_LE(r.residual_bound, tol);
   }
}

TEST(EvenRoots, BracketStraddlesRoot)
{
   for (int n = 2; n <= 30; n += 2) {
      const auto r = even_roots(n, 1e-12);
      const auto& p = bernoulli_polynomial(n);
      for (double b : {r.b_minus, r.b_plus}) {
         const int lo = sign(eval_poly(p, exact_rational(b - r.residual_bound)));
         const int hi = sign(eval_poly(p, exact_rational(b + r.residual_bound)));
         EXPECT_LE(lo * hi, 0) << "n = " << n;
      }
   }
}

TEST(SignOnUnitInterval, Examples)
{
   EXPECT_EQ(sign_on_unit_interval(2, 0.4), -1);
   EXPECT_EQ(sign_on_unit_interval(3, 0.5), 0);
   EXPECT_EQ(sign_on_unit_interval(4, 0.1), -1);
   EXPECT_EQ(sign(eval_poly(bernoulli_polynomial(4), Rational(1, 10))), -1);
}

TEST(SignOnUnitInterval, Errors)
{
   EXPECT_THROW(sign_on_unit_interval(2, -0.1), DomainError);
   EXPECT_THROW(sign_on_unit_interval(2, 1.5), DomainError);
   EXPECT_THROW(sign_on_unit_interval(1, 0.5), DomainError);
   const auto r = even_roots(6, kDefaultRootTolerance);
   EXPECT_THROW(sign_on_unit_interval(6, r.b_minus), IndeterminateSign);
   EXPECT_THROW(sign_on_unit_interval(6, r.b_plus), IndeterminateSign);
}

TEST(SignOnUnitInterval, AgreesWithExactSign)
{
   for (int n = 2; n <= 30; ++n) {
      int checked = 0;
      for (int i = 0; i < 1000; ++i) {
         const double x = i / 999.0;
         int s = 0;
         try {
            s = sign_on_unit_interval(n, x);
         } catch (const IndeterminateSign&) {
            continue;
         }
         ++checked;
         ASSERT_EQ(s, sign(eval_poly(bernoulli_polynomial(n), exact_rational(x)))) << "n = " << n << " x = " << x;
      }
      EXPECT_GE(checked, 996) << "n = " << n;
   }
}

TEST(SignOnUnitInterval, FollowsSignPattern)
{
   // (-1)^{k-1} B_{2k} is negative strictly between the roots and positive outside.
   for (int k = 1; k <= 15; ++k) {
      const int n = 2 * k;
      const auto r = even_roots(n, 1e-13);
      const int outer = k % 2 == 1 ? 1 : -1;
      for (int i = 0; i < 200; ++i) {
         const double x = oracle::uniform(0.0, 1.0);
         if (std::abs(x - r.b_minus) < 1e-9 || std::abs(x - r.b_plus) < 1e-9)
            continue;
         const bool inside = x > r.b_minus && x < r.b_plus;
         ASSERT_EQ(sign_on_unit_interval(n, x), inside ? -outer : outer) << n << " " << x;
      }
   }
}
