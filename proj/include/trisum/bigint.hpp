#ifndef TRISUM_BIGINT_HPP
#define TRISUM_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>

namespace trisum {

// All arithmetic in this library is exact. BigInt is an arbitrary-precision
// signed integer; Rational is always kept in lowest terms with a positive
// denominator, and equality on it is structural.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

// Renders "p/q", or just "p" when the value is an integer.
inline std::string to_ratio(const Rational& v)
{
    if (denominator(v) == 1)
        return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

inline BigInt factorial(std::size_t n)
{
    BigInt acc = 1;
    for (std::size_t i = 2; i <= n; ++i)
        acc *= static_cast<unsigned long>(i);
    return acc;
}

} // namespace trisum

#endif
