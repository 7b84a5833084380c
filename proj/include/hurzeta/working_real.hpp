#ifndef HURZETA_WORKING_REAL_HPP
#define HURZETA_WORKING_REAL_HPP

// Internal floating type of the zeta evaluator. At sigma = -20 the
// Euler-Maclaurin head and integral terms reach ~1e20 and cancel down to a
// result of order 10, so 113-bit precision is needed to keep 1e-10 absolute.

#if defined(__SIZEOF_FLOAT128__) && !defined(HURZETA_NO_FLOAT128)
#include <boost/multiprecision/float128.hpp>
#else
#include <boost/multiprecision/cpp_bin_float.hpp>
#endif

namespace hurzeta {

#if defined(__SIZEOF_FLOAT128__) && !defined(HURZETA_NO_FLOAT128)
using WorkingReal = boost::multiprecision::float128;
#else
using WorkingReal = boost::multiprecision::cpp_bin_float_quad;
#endif

} // namespace hurzeta

#endif // HURZETA_WORKING_REAL_HPP
