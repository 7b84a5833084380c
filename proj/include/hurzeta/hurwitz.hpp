#ifndef HURZETA_HURWITZ_HPP
#define HURZETA_HURWITZ_HPP

#include <hurzeta/bernoulli.hpp>
#include <hurzeta/error.hpp>
#include <hurzeta/quadrature.hpp>
#include <hurzeta/rational.hpp>
#include <hurzeta/working_real.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace hurzeta {

/// The shift a of zeta(s, a), restricted to 0 < a <= 1.
class ShiftParameter
{
public:
   explicit ShiftParameter(double a) : a_(a)
   {
      if (!(a > 0.0 && a <= 1.0))
         throw DomainError("shift parameter a must satisfy 0 < a <= 1, got " + std::to_string(a));
   }

   double value() const noexcept { return a_; }

private:
   double a_;
};

/// Accuracy and truncation configuration.
///
/// max_cutoff caps the length M of the directly summed head and
/// max_correction_order caps the number K of Bernoulli correction terms.
/// K + 1 <= kDefaultBernoulliCap / 2 keeps every coefficient exact.
struct EvalParams
{
   double target_abs_error = 1e-10;
   int max_cutoff = 4096;
   int max_correction_order = 31;

   void validate() const
   {
      if (!(target_abs_error > 0.0))
         throw InvalidParameter("target_abs_error must be positive");
      if (max_cutoff < 1 || max_correction_order < 1)
         throw InvalidParameter("truncation caps must be positive");
      if (2 * (max_correction_order + 1) > kDefaultBernoulliCap)
         throw InvalidParameter("max_correction_order exceeds the exact Bernoulli cap");
   }
};

/// N >= -1, labelling the open strip -N-1 < sigma < -N.
class StripIndex
{
public:
   explicit StripIndex(int n) : n_(n)
   {
      if (n < -1)
         throw DomainError("strip index must be >= -1, got " + std::to_string(n));
   }

   int value() const noexcept { return n_; }
   double left() const noexcept { return -n_ - 1.0; }
   double right() const noexcept { return -static_cast<double>(n_); }
   bool contains(double sigma) const noexcept { return sigma > left() && sigma < right(); }

private:
   int n_;
};

namespace detail {

// B_{2k} / (2k)! for k = 0 .. kDefaultBernoulliCap / 2, in working precision.
template <class Real>
const std::vector<Real>& scaled_even_bernoulli()
{
   static const std::vector<Real> table = [] {
      std::vector<Real> t;
      Integer factorial = 1;
      for (int n = 0; n <= kDefaultBernoulliCap; ++n) {
         if (n > 0)
            factorial *= n;
         if (n % 2 == 0)
            t.push_back(to_real<Real>(bernoulli_number(n) / Rational(factorial)));
      }
      return t;
   }();
   return table;
}

} // namespace detail

/// One Euler-Maclaurin evaluation at fixed head length.
template <class Real>
struct EulerMaclaurinResult
{
   Real value = 0;
   // Magnitude of the first omitted correction; valid once sigma + 2K > 0.
   Real truncation_bound = std::numeric_limits<Real>::infinity();
   // Sum of |terms|, the scale against which rounding accumulates.
   Real magnitude = 0;
   int cutoff = 0;
   int correction_order = 0;
};

/// zeta(s, a) ~ sum_{n<M} (n+a)^{-s} + (M+a)^{1-s}/(s-1) + (M+a)^{-s}/2
///              + sum_{k=1}^{K} B_{2k}/(2k)! (s)_{2k-1} (M+a)^{-s-2k+1}
///
/// Correction terms are added until the next one is at most `stop_at`, or
/// until K reaches max_order. Among all admissible stopping points the one
/// with the smallest first-omitted term is returned, so the reported
/// truncation bound never grows when max_order grows.
template <class Real>
EulerMaclaurinResult<Real> euler_maclaurin(const Real& s, const Real& a, int cutoff, int max_order, const Real& stop_at)
{
   using std::abs;
   using std::pow;
   EulerMaclaurinResult<Real> r;
   r.cutoff = cutoff;

   Real head = 0;
   for (int n = 0; n < cutoff; ++n) {
      const Real t = pow(Real(n) + a, -s);
      head += t;
      r.magnitude += abs(t);
   }
   const Real x = Real(cutoff) + a;
   const Real x_pow = pow(x, -s);
   const Real integral = x * x_pow / (s - 1);
   const Real half = x_pow / 2;
   Real partial = head + integral + half;
   r.magnitude += abs(integral) + abs(half);

   const auto& beta = detail::scaled_even_bernoulli<Real>();
   const Real inv_x2 = 1 / (x * x);
   Real rising = s;          // (s)_{2k-1}
   Real power = x_pow / x;   // x^{-s-2k+1}
   Real best_partial = partial;
   Real best_bound = std::numeric_limits<Real>::infinity();
   int best_order = 0;
   Real magnitude_at_best = r.magnitude;

   for (int k = 1; k <= max_order + 1; ++k) {
      const Real term = beta[static_cast<std::size_t>(k)] * rising * power;
      const int order = k - 1; // terms added so far
      // Remainder after `order` terms is bounded by |term| once s + 2*order > 0;
      // a vanishing term means the rising factorial hit zero and the sum is exact.
      if (term == 0 || s + 2 * order > 0) {
         if (abs(term) < best_bound) {
            best_bound = abs(term);
            best_partial = partial;
            best_order = order;
            magnitude_at_best = r.magnitude;
         }
         if (term == 0 || abs(term) <= stop_at)
            break;
      }
      if (k == max_order + 1)
         break;
      partial += term;
      r.magnitude += abs(term);
      rising *= (s + (2 * k - 1)) * (s + 2 * k);
      power *= inv_x2;
   }
   r.value = best_partial;
   r.truncation_bound = best_bound;
   r.correction_order = best_order;
   r.magnitude = magnitude_at_best;
   return r;
}

/// A floating value of zeta(sigma, a) with its certified error bound.
///
/// error_bound covers truncation, working-precision rounding, and the final
/// rounding to double. Only the first two are held against the target, as a
/// double result cannot be closer than half an ulp of itself.
struct ZetaEvaluation
{
   double value = 0.0;
   double error_bound = 0.0;
   int cutoff = 0;
   int correction_order = 0;
};

namespace detail {

// Head length where the corrections converge quickly: 2 pi (M + a) clears
// |sigma| with room to spare. Negative sigma keeps M small because the head
// terms grow like M^{-sigma} and cancel against the integral term.
inline int initial_cutoff(double sigma)
{
   return std::max(2, static_cast<int>(std::ceil((std::abs(sigma) + 8.0) / (2.0 * std::numbers::pi))));
}

} // namespace detail

inline ZetaEvaluation evaluate_hurwitz_zeta(double sigma, ShiftParameter a, const EvalParams& params = {})
{
   params.validate();
   if (!std::isfinite(sigma))
      throw DomainError("sigma must be finite");
   if (sigma == 1.0)
      throw PoleError("zeta(s, a) has a pole at s = 1");

   using Real = WorkingReal;
   const Real s = sigma;
   const Real shift = a.value();
   const Real eps = std::numeric_limits<Real>::epsilon();
   const Real target = params.target_abs_error;

   double best_bound = std::numeric_limits<double>::infinity();
   int cutoff = std::min(detail::initial_cutoff(sigma), params.max_cutoff);
   int direction = 0; // +1 growing the head, -1 shrinking it
   for (;;) {
      const auto em = euler_maclaurin<Real>(s, shift, cutoff, params.max_correction_order, target / 8);
      // First-order worst case: every term carries at most (M + K + 4) ulps
      // of its own error and every addition another ulp of the running scale.
      const Real rounding = 2 * eps * em.magnitude * Real(cutoff + em.correction_order + 4);
      const double bound = static_cast<double>(em.truncation_bound + rounding);
      best_bound = std::min(best_bound, bound);
      if (bound <= params.target_abs_error) {
         const double value = static_cast<double>(em.value);
         const double half_ulp = 0.5 * (std::nextafter(std::abs(value), std::numeric_limits<double>::infinity()) - std::abs(value));
         return ZetaEvaluation{value, bound + half_ulp, cutoff, em.correction_order};
      }
      // A longer head shortens the correction series but, for sigma < 1,
      // raises the cancellation scale M^{1-sigma}. Move M in whichever
      // direction relieves the binding error source, never reversing.
      const bool rounding_bound = rounding > target / 2 && sigma < 1.0;
      const int want = rounding_bound ? -1 : +1;
      if (direction != 0 && want != direction)
         break;
      direction = want;
      if (direction > 0) {
         if (cutoff >= params.max_cutoff)
            break;
         cutoff = std::min(params.max_cutoff, cutoff + std::max(2, cutoff / 2));
      } else {
         if (cutoff <= 1)
            break;
         --cutoff;
      }
   }
   char message[160];
   std::snprintf(message, sizeof message, "zeta(%.12g, %.12g): target %.3g not reached, best bound %.3g", sigma,
                 a.value(), params.target_abs_error, best_bound);
   throw AccuracyError(message, best_bound);
}

/// zeta(sigma, a) on the real line, sigma != 1.
inline double hurwitz_zeta(double sigma, ShiftParameter a, const EvalParams& params = {})
{
   return evaluate_hurwitz_zeta(sigma, a, params).value;
}

/// zeta(sigma) = zeta(sigma, 1).
inline double riemann_zeta(double sigma, const EvalParams& params = {})
{
   return hurwitz_zeta(sigma, ShiftParameter(1.0), params);
}

/// zeta(1 - n, a) = -B_n(a) / n, exactly.
inline Rational hurwitz_zeta_exact_at_nonpositive_integer(int n, const Rational& a)
{
   if (n < 1)
      throw DomainError("hurwitz_zeta_exact_at_nonpositive_integer: n must be >= 1");
   if (!(a > 0 && a <= 1))
      throw DomainError("hurwitz_zeta_exact_at_nonpositive_integer: a must lie in (0, 1]");
   return -eval_poly(detail::cached_polynomial(n), a) / n;
}

/// Sign of Gamma(sigma) for negative non-integer sigma: on (-k-1, -k) it is
/// (-1)^{k-1}, so negative on (-1, 0), positive on (-2, -1), and so on.
inline int gamma_sign(double sigma)
{
   if (!(sigma < 0.0) || sigma == std::floor(sigma) || !std::isfinite(sigma))
      throw DomainError("gamma_sign: sigma must be a negative non-integer, got " + std::to_string(sigma));
   const auto k = static_cast<long long>(std::floor(-sigma));
   return (k % 2 == 1) ? 1 : -1;
}

namespace detail {

// Classical-convention B_k / k! (B_1 = -1/2), the coefficients of t/(e^t - 1).
inline const std::vector<double>& scaled_bernoulli_minus()
{
   static const std::vector<double> table = [] {
      std::vector<double> t;
      Integer factorial = 1;
      for (int k = 0; k <= kDefaultBernoulliCap; ++k) {
         if (k > 0)
            factorial *= k;
         Rational b = bernoulli_number(k);
         if (k == 1)
            b = -b;
         t.push_back(to_double(b / Rational(factorial)));
      }
      return t;
   }();
   return table;
}

} // namespace detail

/// Coefficients c_n = B_n(1 - a) / n!, n = 0 .. count-1, of the Laurent
/// expansion  e^{(1-a)x} / (e^x - 1) = sum_n c_n x^{n-1}  (0 < |x| < 2 pi).
///
/// Built as sum_j (B_{n-j}/(n-j)!) * y^j / j! with y = 1 - a: every summand is
/// bounded by one, so each c_n carries an absolute error of a few ulps even
/// when c_n itself is tiny.
inline std::vector<double> laurent_coefficients(ShiftParameter a, int count)
{
   if (count < 0 || count > kDefaultBernoulliCap + 1)
      throw CapExceeded("laurent_coefficients: at most " + std::to_string(kDefaultBernoulliCap + 1) + " terms");
   const auto& beta = detail::scaled_bernoulli_minus();
   const double y = 1.0 - a.value();
   std::vector<double> y_pow(static_cast<std::size_t>(count) + 1); // y^j / j!
   if (count > 0)
      y_pow[0] = 1.0;
   for (int j = 1; j < count; ++j)
      y_pow[static_cast<std::size_t>(j)] = y_pow[static_cast<std::size_t>(j - 1)] * y / j;
   std::vector<double> c(static_cast<std::size_t>(count));
   for (int n = 0; n < count; ++n) {
      double acc = 0.0;
      for (int j = n; j >= 0; --j)
         acc += beta[static_cast<std::size_t>(n - j)] * y_pow[static_cast<std::size_t>(j)];
      c[static_cast<std::size_t>(n)] = acc;
   }
   return c;
}

/// Below this x the integrand is summed from its Laurent tail.
inline constexpr double kLaurentThreshold = 0.5;

namespace detail {

// G_N(a, x) / x^{N+1}, finite and smooth down to x = 0.
inline double integrand_G_scaled(int strip, const std::vector<double>& c, double a, double x)
{
   const int first = strip + 2;
   if (x < kLaurentThreshold) {
      // For n >= 2, |c_n| <= 2 zeta(n) / (2 pi)^n < 4 / (2 pi)^n, which
      // bounds the unsummed tail geometrically.
      const double ratio = x / (2.0 * std::numbers::pi);
      double sum = 0.0;
      double x_pow = 1.0;
      for (int n = first; n < static_cast<int>(c.size()); ++n) {
         sum += c[static_cast<std::size_t>(n)] * x_pow;
         x_pow *= x;
         const double tail = 4.0 * std::pow(2.0 * std::numbers::pi, -(n + 1)) * x_pow / (1.0 - ratio);
         if (n >= 2 && tail < 1e-18 * (std::abs(sum) + 1.0))
            return sum;
      }
      throw CapExceeded("integrand_G: Laurent tail did not converge within the coefficient cap");
   }
   // e^{(1-a)x} / (e^x - 1) written as e^{-ax} / (1 - e^{-x}).
   double value = std::exp(-a * x) / -std::expm1(-x);
   double x_pow = 1.0 / x;
   for (int n = 0; n < first; ++n) {
      value -= c[static_cast<std::size_t>(n)] * x_pow;
      x_pow *= x;
   }
   return value / std::pow(x, strip + 1);
}

inline int laurent_terms_needed(int strip)
{
   // The tail at x < 1/2 converges like 12.5^{-n}; 20 terms past the first
   // retained index reach 1e-18.
   return std::min(kDefaultBernoulliCap + 1, strip + 2 + 24);
}

} // namespace detail

/// G_N(a, x) = e^{(1-a)x}/(e^x - 1) - sum_{n=0}^{N+1} B_n(1-a)/n! x^{n-1}.
///
/// For x < kLaurentThreshold the value is the Laurent tail
/// sum_{n >= N+2} B_n(1-a)/n! x^{n-1}, which avoids subtracting the N+2
/// leading terms from the closed form.
inline double integrand_G(StripIndex strip, ShiftParameter a, double x)
{
   if (!(x > 0.0) || !std::isfinite(x))
      throw DomainError("integrand_G: x must be positive and finite");
   const int N = strip.value();
   const auto c = laurent_coefficients(a, detail::laurent_terms_needed(N));
   return detail::integrand_G_scaled(N, c, a.value(), x) * std::pow(x, N + 1);
}

/// Gamma(sigma) zeta(sigma, a) from the integral of G_N(a, x) x^{sigma-1}
/// over (0, infinity), valid on the open strip -N-1 < sigma < -N.
///
/// The range is split at x = 1:
///  - on (0, 1] the integrand behaves like x^{N+sigma}; substituting
///    u = x^{N+sigma+1} turns it into a smooth integral over [0, 1];
///  - on [1, infinity) the exponential part is integrated numerically up to
///    where e^{-ax} falls below the budget, and the polynomial part
///    -sum_{n<=N+1} c_n x^{n+sigma-2} integrates in closed form to
///    sum_{n<=N+1} c_n / (n + sigma - 1).
/// Each half receives half of quad_params.target_abs_error.
inline double integral_representation(double sigma, ShiftParameter a, StripIndex strip, const EvalParams& quad_params = {})
{
   quad_params.validate();
   if (!strip.contains(sigma))
      throw StripViolation("integral_representation: sigma = " + std::to_string(sigma) + " is outside the open strip ("
                           + std::to_string(strip.left()) + ", " + std::to_string(strip.right()) + ")");
   const int N = strip.value();
   const double shift = a.value();
   const double tol = quad_params.target_abs_error;
   const auto c = laurent_coefficients(a, detail::laurent_terms_needed(N));

   const double p = N + sigma + 1.0; // in (0, 1)
   auto near = [&](double u) {
      if (u <= 0.0)
         return 0.0;
      const double x = std::pow(u, 1.0 / p);
      if (!(x > 0.0))
         return detail::integrand_G_scaled(N, c, shift, std::numeric_limits<double>::min());
      return detail::integrand_G_scaled(N, c, shift, x);
   };
   const QuadratureResult lower = integrate_adaptive(near, 0.0, 1.0, 0.5 * tol * p);

   // tail past X: integral of e^{-ax} / (1 - e^{-1}) <= e^{-aX} / (a (1 - e^{-1}))
   const double tail_budget = 0.25 * tol;
   const double envelope = shift * (1.0 - std::exp(-1.0));
   const double x_max = std::max(2.0, std::log(1.0 / (tail_budget * envelope)) / shift);
   auto far = [&](double x) { return std::exp(-shift * x) / -std::expm1(-x) * std::pow(x, sigma - 1.0); };
   const QuadratureResult upper = integrate_adaptive(far, 1.0, x_max, 0.25 * tol);

   double closed = 0.0;
   for (int n = 0; n <= N + 1; ++n)
      closed += c[static_cast<std::size_t>(n)] / (n + sigma - 1.0);

   return lower.value / p + upper.value + closed;
}

} // namespace hurzeta

#endif // HURZETA_HURWITZ_HPP
