#ifndef HURZETA_RATIONAL_HPP
#define HURZETA_RATIONAL_HPP

#include <hurzeta/error.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

namespace hurzeta {

using Integer = boost::multiprecision::cpp_int;

// Exact fraction kept in canonical form: gcd(|p|, q) = 1 and q > 0.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline int sign(const Rational& r) { return r.sign(); }

// Serialized as "p/q", sign carried by p, q = 1 written out.
inline std::string to_string(const Rational& r)
{
   return numerator_of(r).str() + "/" + denominator_of(r).str();
}

// Every finite double is a dyadic rational; this returns it without rounding.
inline Rational exact_rational(double x)
{
   if (!std::isfinite(x))
      throw DomainError("exact_rational: non-finite value");
   if (x == 0.0)
      return Rational(0);
   int exponent = 0;
   const double mantissa = std::frexp(x, &exponent); // x = mantissa * 2^exponent, 0.5 <= |m| < 1
   const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
   exponent -= 53;
   Integer num = scaled;
   if (exponent >= 0)
      return Rational(num << exponent);
   Integer den = 1;
   den <<= -exponent;
   return Rational(num, den);
}

// Correctly rounded (outside the subnormal range) even when numerator and
// denominator lie far outside the double range.
inline double to_double(const Rational& r)
{
   Integer num = numerator_of(r);
   const Integer den = denominator_of(r);
   if (num == 0)
      return 0.0;
   const bool negative = num < 0;
   if (negative)
      num = -num;
   const long shift = static_cast<long>(msb(num)) - static_cast<long>(msb(den));
   // Bring the quotient into [2^63, 2^65) so the integer division keeps 64 bits.
   const long scale = 64 - shift;
   Integer q;
   Integer rem;
   if (scale >= 0)
      divide_qr(Integer(num << scale), den, q, rem);
   else
      divide_qr(num, Integer(den << -scale), q, rem);
   const long q_bits = static_cast<long>(msb(q)) + 1;
   const long drop = q_bits > 64 ? q_bits - 64 : 0;
   auto top = static_cast<std::uint64_t>(q >> drop);
   // Sticky bit: anything discarded below the 64 kept bits.
   if (rem != 0 || (drop > 0 && (q & 1) != 0))
      top |= 1;
   const double value = std::ldexp(static_cast<double>(top), static_cast<int>(drop - scale));
   return negative ? -value : value;
}

// Exact conversion into a wide floating type (float128 and friends), limb by limb.
template <class Real>
Real to_real(const Integer& value)
{
   Integer v = value < 0 ? Integer(-value) : value;
   Real out = 0;
   Real weight = 1;
   const Real limb_base = Real(std::uint64_t{1} << 32) * Real(std::uint64_t{1} << 32);
   while (v != 0) {
      out += weight * Real(static_cast<std::uint64_t>(v & std::numeric_limits<std::uint64_t>::max()));
      weight *= limb_base;
      v >>= 64;
   }
   return value < 0 ? Real(-out) : out;
}

template <class Real>
Real to_real(const Rational& r)
{
   return to_real<Real>(numerator_of(r)) / to_real<Real>(denominator_of(r));
}

// Parses "p/q", an integer, or a decimal with optional exponent ("0.05",
// "-1.5e-3") into the exact rational it denotes.
inline Rational parse_rational(std::string_view text)
{
   auto fail = [&]() -> Rational {
      throw InvalidParameter("cannot parse '" + std::string(text) + "' as a rational number");
   };
   if (text.empty())
      return fail();

   if (const auto slash = text.find('/'); slash != std::string_view::npos) {
      const Rational p = parse_rational(text.substr(0, slash));
      const Rational q = parse_rational(text.substr(slash + 1));
      if (q == 0)
         throw InvalidParameter("zero denominator in '" + std::string(text) + "'");
      return p / q;
   }

   std::size_t pos = 0;
   bool negative = false;
   if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
   }
   Integer digits = 0;
   long exponent10 = 0;
   bool seen_digit = false;
   bool seen_point = false;
   for (; pos < text.size(); ++pos) {
      const char c = text[pos];
      if (c >= '0' && c <= '9') {
         digits = digits * 10 + (c - '0');
         seen_digit = true;
         if (seen_point)
            --exponent10;
      } else if (c == '.' && !seen_point) {
         seen_point = true;
      } else {
         break;
      }
   }
   if (!seen_digit)
      return fail();
   if (pos < text.size()) {
      if (text[pos] != 'e' && text[pos] != 'E')
         return fail();
      ++pos;
      bool exp_negative = false;
      if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
         exp_negative = text[pos] == '-';
         ++pos;
      }
      if (pos == text.size())
         return fail();
      long e = 0;
      for (; pos < text.size(); ++pos) {
         const char c = text[pos];
         if (c < '0' || c > '9' || e > 100000)
            return fail();
         e = e * 10 + (c - '0');
      }
      exponent10 += exp_negative ? -e : e;
   }
   Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(exponent10 < 0 ? -exponent10 : exponent10));
   Rational value = exponent10 >= 0 ? Rational(digits * scale) : Rational(digits, scale);
   return negative ? Rational(-value) : value;
}

} // namespace hurzeta

#endif // HURZETA_RATIONAL_HPP
