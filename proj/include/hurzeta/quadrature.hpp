#ifndef HURZETA_QUADRATURE_HPP
#define HURZETA_QUADRATURE_HPP

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace hurzeta {

struct QuadratureResult
{
   double value = 0.0;
   double error_estimate = 0.0;
};

// Adaptive 15-point Gauss-Kronrod on [lo, hi] against an absolute tolerance.
// Boost's stopping rule is relative to the L1 norm, so a single 15-point pass
// sizes the norm first.
template <class F>
QuadratureResult integrate_adaptive(F f, double lo, double hi, double abs_tol, unsigned max_depth = 30)
{
   using boost::math::quadrature::gauss_kronrod;
   double l1 = 0.0;
   gauss_kronrod<double, 15>::integrate(f, lo, hi, 0, 0.0, nullptr, &l1);
   const double rel_tol = std::max(abs_tol / std::max(l1, std::numeric_limits<double>::min()),
                                   4 * std::numeric_limits<double>::epsilon());
   double error = 0.0;
   const double value = gauss_kronrod<double, 15>::integrate(f, lo, hi, max_depth, rel_tol, &error, &l1);
   return {value, error};
}

} // namespace hurzeta

#endif // HURZETA_QUADRATURE_HPP
