#ifndef HURZETA_ZERO_ANALYSIS_HPP
#define HURZETA_ZERO_ANALYSIS_HPP

//
// Real zeros of zeta(sigma, a) on the negative axis.
//
// For an interval index N >= -1, zeta(., a) has a zero in (-N-1, -N) exactly
// when B_{N+1}(a) B_{N+2}(a) < 0. This header states that criterion (and its
// explicit form in terms of the roots b_n^+-) as predicates, and checks them
// against zeros located numerically by sign-change scanning.
//

#include <hurzeta/bernoulli.hpp>
#include <hurzeta/error.hpp>
#include <hurzeta/hurwitz.hpp>
#include <hurzeta/rational.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace hurzeta {

/// N >= -1 labelling the open interval (-N-1, -N); same invariants as a strip.
using IntervalIndex = StripIndex;

enum class Existence
{
   yes,
   no,
   boundary, // one of the two Bernoulli factors vanishes
};

inline const char* to_string(Existence e)
{
   switch (e) {
   case Existence::yes:
      return "yes";
   case Existence::no:
      return "no";
   case Existence::boundary:
      return "boundary";
   }
   return "?";
}

struct ZeroPrediction
{
   int N = 0;
   double a = 0.0;
   Rational left_exact;  // B_{N+1}(a)
   Rational right_exact; // B_{N+2}(a)
   double b_left = 0.0;
   double b_right = 0.0;
   Existence exists = Existence::no;
};

/// Criterion evaluated exactly at a rational shift.
inline ZeroPrediction predict_zero(IntervalIndex interval, const Rational& a)
{
   if (!(a > 0 && a <= 1))
      throw DomainError("predict_zero: a must lie in (0, 1]");
   const int N = interval.value();
   ZeroPrediction p;
   p.N = N;
   p.a = to_double(a);
   p.left_exact = eval_poly(detail::cached_polynomial(N + 1), a);
   p.right_exact = eval_poly(detail::cached_polynomial(N + 2), a);
   p.b_left = to_double(p.left_exact);
   p.b_right = to_double(p.right_exact);
   const int product_sign = sign(p.left_exact) * sign(p.right_exact);
   p.exists = product_sign < 0 ? Existence::yes : product_sign > 0 ? Existence::no : Existence::boundary;
   return p;
}

/// Criterion at the exact value the double denotes, so the prediction refers
/// to the same a the numerical scan uses.
inline ZeroPrediction predict_zero(IntervalIndex interval, double a)
{
   if (!(a > 0.0 && a <= 1.0))
      throw DomainError("predict_zero: a must lie in (0, 1], got " + std::to_string(a));
   ZeroPrediction p = predict_zero(interval, exact_rational(a));
   p.a = a;
   return p;
}

using RootProvider = std::function<EvenRootPair(int)>;

inline RootProvider default_root_provider()
{
   return [](int n) { return detail::cached_even_roots(n, kDefaultRootTolerance); };
}

/// Width around each b_n^+- inside which explicit range membership is not asserted.
inline constexpr double kRootIndeterminacyBand = 1e-13;

/// The criterion in explicit form, for N >= 0 and 0 < a < 1:
///   N even:  0 < a < b_{N+2}^-   or  1/2 < a < b_{N+2}^+
///   N odd:   b_{N+1}^- < a < 1/2  or  b_{N+1}^+ < a < 1
inline bool predict_zero_explicit(int N, double a, const RootProvider& roots = default_root_provider())
{
   if (N < 0)
      throw DomainError("predict_zero_explicit: N must be >= 0");
   if (!(a > 0.0 && a < 1.0))
      throw DomainError("predict_zero_explicit: a must lie in (0, 1)");
   const bool even = N % 2 == 0;
   const EvenRootPair r = roots(even ? N + 2 : N + 1);
   const double band = std::max(r.residual_bound, kRootIndeterminacyBand);
   if (a == 0.5 || std::abs(a - r.b_minus) <= band || std::abs(a - r.b_plus) <= band)
      throw BoundaryError("predict_zero_explicit: a = " + std::to_string(a) + " sits on a range boundary for N = "
                          + std::to_string(N));
   if (even)
      return a < r.b_minus || (a > 0.5 && a < r.b_plus);
   return (a > r.b_minus && a < 0.5) || a > r.b_plus;
}

/// A numerically located zero: sigma is the midpoint of a bracket whose
/// endpoints gave opposite zeta signs.
struct LocatedZero
{
   double sigma = 0.0;
   double bracket_halfwidth = 0.0;
   double residual = 0.0; // |zeta(sigma, a)|
};

struct ScanParams
{
   int grid_points = 512; // per unit length of sigma
   double refine_tol = 1e-10;
   EvalParams eval;

   void validate() const
   {
      if (grid_points < 16)
         throw InvalidParameter("grid_points must be >= 16");
      if (!(refine_tol > 0.0))
         throw InvalidParameter("refine_tol must be positive");
      eval.validate();
   }

   double margin() const { return std::min(1e-4, refine_tol * 10); }
};

/// Scan window right of sigma = 1 is kept this far from the pole.
inline constexpr double kPoleMargin = 1e-2;

struct CurveSample
{
   double sigma = 0.0;
   double value = 0.0;
};

namespace detail {

inline int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

inline double checked_zeta(double sigma, ShiftParameter a, const EvalParams& params)
{
   const double v = hurwitz_zeta(sigma, a, params);
   if (std::isnan(v))
      throw InternalConsistencyError("zeta evaluation produced NaN at sigma = " + std::to_string(sigma));
   return v;
}

inline std::vector<CurveSample> sample_uniform(double lo, double hi, int points, ShiftParameter a, const EvalParams& params)
{
   std::vector<CurveSample> samples(static_cast<std::size_t>(points));
   for (int i = 0; i < points; ++i) {
      const double sigma = i + 1 == points ? hi : lo + (hi - lo) * i / (points - 1);
      samples[static_cast<std::size_t>(i)] = {sigma, checked_zeta(sigma, a, params)};
   }
   return samples;
}

inline LocatedZero bisect(CurveSample lo, CurveSample hi, ShiftParameter a, const ScanParams& params)
{
   if (sign_of(lo.value) * sign_of(hi.value) >= 0)
      throw InternalConsistencyError("bisect: bracket endpoints do not straddle a sign change");
   for (int iter = 0; iter < 200 && 0.5 * (hi.sigma - lo.sigma) > params.refine_tol; ++iter) {
      const double mid = 0.5 * (lo.sigma + hi.sigma);
      if (mid <= lo.sigma || mid >= hi.sigma)
         break;
      const double v = checked_zeta(mid, a, params.eval);
      if (v == 0.0)
         return {mid, 0.0, 0.0};
      if (sign_of(v) == sign_of(lo.value))
         lo = {mid, v};
      else
         hi = {mid, v};
   }
   if (sign_of(lo.value) == sign_of(hi.value))
      throw InternalConsistencyError("bisect: lost the sign change while refining");
   const double sigma = 0.5 * (lo.sigma + hi.sigma);
   return {sigma, 0.5 * (hi.sigma - lo.sigma), std::abs(checked_zeta(sigma, a, params.eval))};
}

inline std::vector<LocatedZero> zeros_from_samples(const std::vector<CurveSample>& samples, ShiftParameter a,
                                                   const ScanParams& params)
{
   std::vector<LocatedZero> zeros;
   for (std::size_t i = 0; i < samples.size(); ++i) {
      if (samples[i].value == 0.0) {
         zeros.push_back({samples[i].sigma, 0.0, 0.0});
         continue;
      }
      if (i + 1 < samples.size() && samples[i + 1].value != 0.0
          && sign_of(samples[i].value) != sign_of(samples[i + 1].value))
         zeros.push_back(bisect(samples[i], samples[i + 1], a, params));
   }
   std::sort(zeros.begin(), zeros.end(), [](const LocatedZero& x, const LocatedZero& y) { return x.sigma < y.sigma; });
   return zeros;
}

// The open interval (-N-1, -N) shrunk by the scan margins.
inline std::pair<double, double> scan_window(IntervalIndex interval, const ScanParams& params)
{
   const double m = params.margin();
   const double right_margin = interval.value() == -1 ? kPoleMargin : m;
   return {interval.left() + m, interval.right() - right_margin};
}

} // namespace detail

/// Samples of zeta(sigma, a) over the scan window of the interval.
inline std::vector<CurveSample> sample_curve(IntervalIndex interval, ShiftParameter a, const ScanParams& params = {})
{
   params.validate();
   const auto [lo, hi] = detail::scan_window(interval, params);
   return detail::sample_uniform(lo, hi, params.grid_points, a, params.eval);
}

/// Zeros of zeta(., a) in (-N-1, -N): sign changes on a uniform grid,
/// each refined by bisection to half-width <= refine_tol. Sorted by sigma.
inline std::vector<LocatedZero> locate_zeros(IntervalIndex interval, ShiftParameter a, const ScanParams& params = {})
{
   return detail::zeros_from_samples(sample_curve(interval, a, params), a, params);
}

/// Spira's region: below -(4a + 1 + 2 floor(1 - 2a)) every zero with
/// |t| <= 1 is real, one per length-2 interval.
inline double spira_region_bound(ShiftParameter a)
{
   const double x = a.value();
   return -(4.0 * x + 1.0 + 2.0 * std::floor(1.0 - 2.0 * x));
}

struct UniquenessResult
{
   int M = 0;
   double a = 0.0;
   int count = 0;
   bool endpoint_zero = false; // zeta(-2M-2, a) vanishes
   std::vector<LocatedZero> zeros;
};

/// Counts zeros of zeta(., a) on [-2M-2, -2M): interior sign changes plus a
/// zero value at the closed left endpoint. The expected count is one.
inline UniquenessResult uniqueness_check(int M, ShiftParameter a, const ScanParams& params = {})
{
   if (M < 2)
      throw DomainError("uniqueness_check: M must be >= 2");
   params.validate();
   const double left = -2.0 * M - 2.0;
   const double right = -2.0 * M;
   UniquenessResult result;
   result.M = M;
   result.a = a.value();

   const ZetaEvaluation at_left = evaluate_hurwitz_zeta(left, a, params.eval);
   const double endpoint_tol = 10.0 * std::max(at_left.error_bound, params.eval.target_abs_error);
   result.endpoint_zero = std::abs(at_left.value) <= endpoint_tol;

   const double m = params.margin();
   const double lo = result.endpoint_zero ? left + m : left;
   const auto samples = detail::sample_uniform(lo, right - m, 2 * params.grid_points, a, params.eval);
   result.zeros = detail::zeros_from_samples(samples, a, params);
   if (result.endpoint_zero)
      result.zeros.insert(result.zeros.begin(), LocatedZero{left, 0.0, std::abs(at_left.value)});
   result.count = static_cast<int>(result.zeros.size());
   return result;
}

enum class CaseStatus
{
   agree,
   disagree,
   skipped,
};

inline const char* to_string(CaseStatus s)
{
   switch (s) {
   case CaseStatus::agree:
      return "agree";
   case CaseStatus::disagree:
      return "disagree";
   case CaseStatus::skipped:
      return "skipped";
   }
   return "?";
}

struct ZeroReport
{
   ZeroPrediction prediction;
   std::vector<LocatedZero> zeros;
   CaseStatus status = CaseStatus::skipped;
   bool agrees = false;
   std::string notes;
};

struct VerificationReport
{
   int agree = 0;
   int disagree = 0;
   int skipped = 0;
   std::vector<ZeroReport> cases; // ordered by (N, a) as requested
};

/// Roots of B_n in (0, 1]: none for n = 0, {1/2} for n = 1, {1/2, 1} for
/// odd n >= 3 and {b_n^-, b_n^+} for even n >= 2.
inline std::vector<double> roots_in_unit_interval(int n)
{
   if (n == 0)
      return {};
   if (n == 1)
      return {0.5};
   if (n % 2 == 1)
      return {0.5, 1.0};
   const EvenRootPair r = detail::cached_even_roots(n, kDefaultRootTolerance);
   return {r.b_minus, r.b_plus};
}

/// Checks one (N, a) case: prediction against located zeros.
inline ZeroReport verify_case(IntervalIndex interval, double a, double exclusion_delta, const ScanParams& params)
{
   const int N = interval.value();
   ZeroReport report;
   report.prediction = predict_zero(interval, a);

   if (report.prediction.exists == Existence::boundary) {
      report.status = CaseStatus::skipped;
      report.notes = "boundary: Bernoulli factor vanishes";
      return report;
   }
   for (int n : {N + 1, N + 2})
      for (double root : roots_in_unit_interval(n))
         if (std::abs(a - root) <= exclusion_delta) {
            report.status = CaseStatus::skipped;
            report.notes = "within delta of a root of B_" + std::to_string(n);
            return report;
         }
   try {
      report.zeros = locate_zeros(interval, ShiftParameter(a), params);
   } catch (const AccuracyError& e) {
      report.status = CaseStatus::skipped;
      report.notes = std::string("evaluator: ") + e.what();
      return report;
   }
   const bool predicted = report.prediction.exists == Existence::yes;
   report.agrees = predicted == !report.zeros.empty();
   report.status = report.agrees ? CaseStatus::agree : CaseStatus::disagree;
   if (predicted && report.zeros.size() % 2 == 0 && !report.zeros.empty())
      report.notes = "even number of sign changes";
   return report;
}

/// Sweeps every (N, a) with N in [N_min, N_max] and a in a_grid. Cases are
/// independent and run on a small thread pool; the report order is fixed
/// (N outer, a inner) regardless of scheduling.
inline VerificationReport verify_theorem(std::span<const double> a_grid, int N_min, int N_max, double exclusion_delta,
                                         const ScanParams& params = {}, unsigned threads = 0)
{
   if (N_min < -1 || N_max < N_min)
      throw DomainError("verify_theorem: need -1 <= N_min <= N_max");
   if (!(exclusion_delta > 0.0))
      throw InvalidParameter("verify_theorem: exclusion_delta must be positive");
   for (double a : a_grid)
      if (!(a > 0.0 && a <= 1.0))
         throw DomainError("verify_theorem: every a must lie in (0, 1], got " + std::to_string(a));
   params.validate();

   std::vector<std::pair<int, double>> jobs;
   for (int N = N_min; N <= N_max; ++N)
      for (double a : a_grid)
         jobs.emplace_back(N, a);

   VerificationReport report;
   report.cases.resize(jobs.size());
   std::atomic<std::size_t> next{0};
   auto worker = [&] {
      for (std::size_t i = next++; i < jobs.size(); i = next++) {
         const auto [N, a] = jobs[i];
         try {
            report.cases[i] = verify_case(IntervalIndex(N), a, exclusion_delta, params);
         } catch (const Error& e) {
            ZeroReport failed;
            failed.prediction.N = N;
            failed.prediction.a = a;
            failed.status = CaseStatus::skipped;
            failed.notes = e.what();
            report.cases[i] = std::move(failed);
         }
      }
   };
   if (threads == 0)
      threads = std::max(1u, std::thread::hardware_concurrency());
   threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, jobs.size())));
   {
      std::vector<std::jthread> pool;
      for (unsigned t = 1; t < threads; ++t)
         pool.emplace_back(worker);
      worker();
   }

   for (const auto& c : report.cases) {
      switch (c.status) {
      case CaseStatus::agree:
         ++report.agree;
         break;
      case CaseStatus::disagree:
         ++report.disagree;
         break;
      case CaseStatus::skipped:
         ++report.skipped;
         break;
      }
   }
   return report;
}

} // namespace hurzeta

#endif // HURZETA_ZERO_ANALYSIS_HPP
