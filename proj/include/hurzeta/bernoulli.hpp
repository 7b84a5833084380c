#ifndef HURZETA_BERNOULLI_HPP
#define HURZETA_BERNOULLI_HPP

//
// Bernoulli numbers and polynomials in exact rational arithmetic.
//
// Convention: everything derives from the generating functions
//
//    sum B_n t^n / n!    = t e^t / (e^t - 1),
//    sum B_n(x) t^n / n! = t e^{xt} / (e^t - 1),
//
// so B_1 = +1/2 and B_n = B_n(1) for every n. The polynomials themselves are
// the classical ones (B_1(x) = x - 1/2).
//

#include <hurzeta/error.hpp>
#include <hurzeta/rational.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hurzeta {

inline constexpr int kDefaultBernoulliCap = 64;

namespace detail {

inline Integer binomial(int n, int k)
{
   if (k < 0 || k > n)
      return 0;
   Integer c = 1;
   for (int i = 1; i <= k; ++i)
      c = c * (n - k + i) / i;
   return c;
}

// B_0..B_last via  sum_{k=0}^{n} C(n+1, k) B_k = n + 1.
inline std::vector<Rational> bernoulli_table(int last)
{
   std::vector<Rational> b;
   b.reserve(static_cast<std::size_t>(last) + 1);
   for (int n = 0; n <= last; ++n) {
      if (n >= 3 && n % 2 == 1) {
         b.emplace_back(0);
         continue;
      }
      Rational acc = n + 1;
      for (int k = 0; k < n; ++k)
         acc -= Rational(binomial(n + 1, k)) * b[static_cast<std::size_t>(k)];
      b.push_back(acc / (n + 1));
   }
   return b;
}

inline const std::vector<Rational>& default_bernoulli_table()
{
   static const std::vector<Rational> table = bernoulli_table(kDefaultBernoulliCap);
   return table;
}

inline void check_index(int n, int cap, const char* who)
{
   if (n < 0)
      throw DomainError(std::string(who) + ": negative index");
   if (n > cap)
      throw CapExceeded(std::string(who) + ": index " + std::to_string(n) + " exceeds exact-arithmetic cap "
                        + std::to_string(cap));
}

} // namespace detail

/// B_n with B_1 = +1/2. Refuses indices above `cap`.
inline Rational bernoulli_number(int n, int cap = kDefaultBernoulliCap)
{
   detail::check_index(n, cap, "bernoulli_number");
   if (n <= kDefaultBernoulliCap)
      return detail::default_bernoulli_table()[static_cast<std::size_t>(n)];
   return detail::bernoulli_table(n).back();
}

/// Monic degree-n polynomial in the power basis; c_k multiplies x^k.
///
/// Holds a double copy of the coefficients for the floating evaluation path.
class BernoulliPolynomial
{
public:
   BernoulliPolynomial(int degree, std::vector<Rational> coefficients)
      : degree_(degree), coefficients_(std::move(coefficients))
   {
      approx_.reserve(coefficients_.size());
      for (const auto& c : coefficients_)
         approx_.push_back(to_double(c));
   }

   int degree() const noexcept { return degree_; }
   std::span<const Rational> coefficients() const& noexcept { return coefficients_; }
   std::span<const double> approx_coefficients() const& noexcept { return approx_; }
   // Views into a temporary would dangle.
   std::span<const Rational> coefficients() const&& = delete;
   std::span<const double> approx_coefficients() const&& = delete;
   const Rational& operator[](std::size_t k) const { return coefficients_[k]; }

   /// Coefficients of d/dx, which equal n * B_{n-1}.
   std::vector<Rational> derivative() const
   {
      std::vector<Rational> d;
      for (std::size_t k = 1; k < coefficients_.size(); ++k)
         d.push_back(coefficients_[k] * static_cast<int>(k));
      if (d.empty())
         d.emplace_back(0);
      return d;
   }

private:
   int degree_;
   std::vector<Rational> coefficients_;
   std::vector<double> approx_;
};

namespace detail {

// B_n(x) = sum_k C(n,k) (-1)^k B_k x^{n-k}: the (-1)^k only touches k = 1
// and converts the B_1 = +1/2 numbers into the polynomial's constant shift.
inline BernoulliPolynomial make_bernoulli_polynomial(int n, const std::vector<Rational>& numbers)
{
   std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
   for (int k = 0; k <= n; ++k) {
      Rational term = Rational(binomial(n, k)) * numbers[static_cast<std::size_t>(k)];
      if (k == 1)
         term = -term;
      coeffs[static_cast<std::size_t>(n - k)] = term;
   }
   return BernoulliPolynomial(n, std::move(coeffs));
}

inline const std::vector<BernoulliPolynomial>& default_polynomial_table()
{
   static const std::vector<BernoulliPolynomial> table = [] {
      std::vector<BernoulliPolynomial> t;
      const auto& numbers = default_bernoulli_table();
      for (int n = 0; n <= kDefaultBernoulliCap; ++n)
         t.push_back(make_bernoulli_polynomial(n, numbers));
      return t;
   }();
   return table;
}

inline const BernoulliPolynomial& cached_polynomial(int n)
{
   check_index(n, kDefaultBernoulliCap, "bernoulli_polynomial");
   return default_polynomial_table()[static_cast<std::size_t>(n)];
}

} // namespace detail

inline BernoulliPolynomial bernoulli_polynomial(int n, int cap = kDefaultBernoulliCap)
{
   detail::check_index(n, cap, "bernoulli_polynomial");
   if (n <= kDefaultBernoulliCap)
      return detail::cached_polynomial(n);
   return detail::make_bernoulli_polynomial(n, detail::bernoulli_table(n));
}

/// Exact value p(x).
inline Rational eval_poly(const BernoulliPolynomial& p, const Rational& x)
{
   const auto c = p.coefficients();
   Rational acc = c.back();
   for (std::size_t k = c.size() - 1; k-- > 0;)
      acc = acc * x + c[k];
   return acc;
}

/// Floating value p(x): Horner's rule from the leading coefficient down,
/// multiply then add, in that fixed order.
inline double eval_poly(const BernoulliPolynomial& p, double x)
{
   const auto c = p.approx_coefficients();
   double acc = c.back();
   for (std::size_t k = c.size() - 1; k-- > 0;)
      acc = acc * x + c[k];
   return acc;
}

/// Exact sign of p at the dyadic rational a double represents.
inline int exact_sign_at(const BernoulliPolynomial& p, double x)
{
   return sign(eval_poly(p, exact_rational(x)));
}

/// The roots b_n^- in [0, 1/2) and b_n^+ in [1/2, 1) of an even-index
/// polynomial. Each root is known to lie within residual_bound of the
/// stored value (the final bracket width).
struct EvenRootPair
{
   int n = 0;
   double b_minus = 0.0;
   double b_plus = 0.0;
   double residual_bound = 0.0;
};

namespace detail {

// Bracketed root of p on [lo, hi] with sign change; bisection down to a
// coarse bracket, then Newton on p' = n B_{n-1} with bisection fallback.
// Sign decisions are exact so the final bracket really straddles the root.
inline std::pair<double, double> bracketed_root(const BernoulliPolynomial& p, const BernoulliPolynomial& dp_over_n,
                                                double lo, double hi, double tol)
{
   int sign_lo = exact_sign_at(p, lo);
   const int sign_hi = exact_sign_at(p, hi);
   if (sign_lo == 0)
      return {lo, 0.0};
   if (sign_hi == 0)
      return {hi, 0.0};
   if (sign_lo == sign_hi)
      throw InternalConsistencyError("even_roots: no sign change on bracket [" + std::to_string(lo) + ", "
                                     + std::to_string(hi) + "] for B_" + std::to_string(p.degree()));

   const double n = p.degree();
   auto shrink = [&](double x) -> bool {
      const int s = exact_sign_at(p, x);
      if (s == 0) {
         lo = hi = x;
         return true;
      }
      if (s == sign_lo)
         lo = x;
      else
         hi = x;
      return false;
   };

   // Coarse phase.
   while (hi - lo > 1e-3)
      if (shrink(0.5 * (lo + hi)))
         return {lo, 0.0};

   double x = 0.5 * (lo + hi);
   for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
      const double f = eval_poly(p, x);
      const double df = n * eval_poly(dp_over_n, x);
      double next = df != 0.0 ? x - f / df : 0.5 * (lo + hi);
      if (!(next > lo && next < hi))
         next = 0.5 * (lo + hi);
      if (shrink(next))
         return {lo, 0.0};
      // Try to collapse the bracket around the Newton iterate.
      const double h = 0.5 * tol;
      if (next - h > lo && next + h < hi) {
         if (shrink(next - h) || shrink(next + h))
            return {lo, 0.0};
      }
      x = next;
      if (std::abs(hi - lo) <= 4 * std::numeric_limits<double>::epsilon())
         break;
   }
   // The full width stays a valid radius after the midpoint is rounded.
   return {0.5 * (lo + hi), hi - lo};
}

} // namespace detail

/// Locates b_n^- and b_n^+ for even n >= 2, each to within tol.
inline EvenRootPair even_roots(int n, double tol)
{
   if (!(tol > 0.0))
      throw InvalidParameter("even_roots: tolerance must be positive");
   if (n < 2 || n % 2 != 0)
      throw InvalidParameter("even_roots: index must be even and >= 2, got " + std::to_string(n));
   const BernoulliPolynomial& p = detail::cached_polynomial(n);
   const BernoulliPolynomial& q = detail::cached_polynomial(n - 1);
   // B_n(0) = B_n and B_n(1/2) = (2^{1-n} - 1) B_n have opposite signs.
   const auto [lower, lower_err] = detail::bracketed_root(p, q, 0.0, 0.5, tol);
   const auto [upper, upper_err] = detail::bracketed_root(p, q, 0.5, 1.0, tol);
   if (!(0.0 < lower && lower < 0.5 && 0.5 < upper && upper < 1.0))
      throw InternalConsistencyError("even_roots: roots of B_" + std::to_string(n) + " left their half-intervals");
   return EvenRootPair{n, lower, upper, std::max(lower_err, upper_err)};
}

inline constexpr double kDefaultRootTolerance = 1e-14;

namespace detail {

// Memoized even_roots; guarded so concurrent callers observe a pure function.
inline EvenRootPair cached_even_roots(int n, double tol)
{
   static std::mutex mutex;
   static std::map<std::pair<int, double>, EvenRootPair> cache;
   {
      std::lock_guard lock(mutex);
      if (auto it = cache.find({n, tol}); it != cache.end())
         return it->second;
   }
   const EvenRootPair roots = even_roots(n, tol);
   std::lock_guard lock(mutex);
   cache.emplace(std::pair{n, tol}, roots);
   return roots;
}

} // namespace detail

/// Sign of B_n(x) on [0, 1] as dictated by the root structure:
///   n = 2k:   (-1)^{k-1} outside (b^-, b^+), the opposite inside;
///   n = 2k+1: (-1)^{k-1} on (0, 1/2), flipped on (1/2, 1), zero at 0, 1/2, 1.
/// Throws IndeterminateSign when x is within the root bracket of b^+-.
inline int sign_on_unit_interval(int n, double x, double root_tol = kDefaultRootTolerance)
{
   if (n < 2)
      throw DomainError("sign_on_unit_interval: n must be >= 2");
   if (!(x >= 0.0 && x <= 1.0))
      throw DomainError("sign_on_unit_interval: x must lie in [0, 1]");
   if (n % 2 == 0) {
      const int k = n / 2;
      const int outer = (k % 2 == 1) ? 1 : -1; // (-1)^{k-1}
      const EvenRootPair roots = detail::cached_even_roots(n, root_tol);
      const double band = std::max(roots.residual_bound, root_tol);
      if (std::abs(x - roots.b_minus) <= band || std::abs(x - roots.b_plus) <= band)
         throw IndeterminateSign("sign_on_unit_interval: x = " + std::to_string(x) + " is within " + std::to_string(band)
                                 + " of a root of B_" + std::to_string(n));
      const bool inside = x > roots.b_minus && x < roots.b_plus;
      return inside ? -outer : outer;
   }
   const int k = (n - 1) / 2;
   const int left = (k % 2 == 1) ? 1 : -1;
   if (x == 0.0 || x == 0.5 || x == 1.0)
      return 0;
   return x < 0.5 ? left : -left;
}

} // namespace hurzeta

#endif // HURZETA_BERNOULLI_HPP
