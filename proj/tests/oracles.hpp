#ifndef HURZETA_TESTS_ORACLES_HPP
#define HURZETA_TESTS_ORACLES_HPP

// Reference computations that share no code path with the library.

#include <hurzeta/rational.hpp>

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using hurzeta::Rational;

// Taylor coefficients of t e^t / (e^t - 1) by power-series division,
// multiplied by n!. Gives B_n with B_1 = +1/2.
inline std::vector<Rational> bernoulli_by_series(int last)
{
   std::vector<Rational> inv_fact(static_cast<std::size_t>(last + 2));
   Rational f = 1;
   inv_fact[0] = 1;
   for (int k = 1; k <= last + 1; ++k) {
      f /= k;
      inv_fact[static_cast<std::size_t>(k)] = f;
   }
   // numerator e^t = sum t^k / k!, denominator (e^t - 1)/t = sum t^k / (k+1)!
   std::vector<Rational> q(static_cast<std::size_t>(last + 1));
   for (int n = 0; n <= last; ++n) {
      Rational acc = inv_fact[static_cast<std::size_t>(n)];
      for (int k = 1; k <= n; ++k)
         acc -= inv_fact[static_cast<std::size_t>(k + 1)] * q[static_cast<std::size_t>(n - k)];
      q[static_cast<std::size_t>(n)] = acc; // leading denominator coefficient is 1
   }
   std::vector<Rational> b(q.size());
   Rational fact = 1;
   for (int n = 0; n <= last; ++n) {
      if (n > 0)
         fact *= n;
      b[static_cast<std::size_t>(n)] = q[static_cast<std::size_t>(n)] * fact;
   }
   return b;
}

// B_n(x) = sum_k C(n,k) B_k^- x^{n-k} with the classical numbers
// (B_1^- = -1/2), taken from the series expansion above.
inline Rational bernoulli_poly_value(int n, const Rational& x)
{
   const auto b = bernoulli_by_series(n);
   Rational sum = 0;
   Rational x_pow = 1; // x^{n-k}, built from k = n downwards
   hurzeta::Integer c = 1; // C(n, k) for k = n downwards
   for (int k = n; k >= 0; --k) {
      Rational bk = b[static_cast<std::size_t>(k)];
      if (k == 1)
         bk = -bk;
      sum += Rational(c) * bk * x_pow;
      x_pow *= x;
      c = c * k / (n - k + 1);
   }
   return sum;
}

// Direct Dirichlet-type sum for sigma > 1: the first `terms` terms plus the
// midpoint-rule tail integral from terms - 1/2. Error is O(terms^{-sigma-2}).
inline long double hurwitz_series(long double sigma, long double a, int terms = 200000)
{
   long double sum = 0;
   for (int n = terms - 1; n >= 0; --n)
      sum += std::pow(n + a, -sigma);
   const long double x = terms - 0.5L + a;
   return sum + std::pow(x, 1 - sigma) / (sigma - 1);
}

// Fixed-seed generator shared by the property tests.
inline std::mt19937_64& rng()
{
   static std::mt19937_64 g(0x5eed2024u);
   return g;
}

inline double uniform(double lo, double hi)
{
   return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline int uniform_int(int lo, int hi)
{
   return std::uniform_int_distribution<int>(lo, hi)(rng());
}

} // namespace oracle

#endif
