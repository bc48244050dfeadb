#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

#include "sincsum/error.hpp"

namespace sincsum {

using BigInt = boost::multiprecision::cpp_int;
// Always stored gcd-reduced with a positive denominator.
using BigRational = boost::multiprecision::cpp_rational;

inline constexpr unsigned max_exact_factorial = 201;

inline BigInt factorial(unsigned n)
{
    if (n > max_exact_factorial)
        throw size_limit_error("factorial: n = " + std::to_string(n) + " exceeds " +
                               std::to_string(max_exact_factorial));
    BigInt f = 1;
    for (unsigned k = 2; k <= n; ++k)
        f *= k;
    return f;
}

inline BigInt binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt c = 1;
    for (unsigned i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i;
    }
    return c;
}

// Nearest-ish double (error below one ulp) without going through
// arbitrary-width floating conversion: take a 64-bit quotient and scale.
inline double to_double(const BigRational& q)
{
    using boost::multiprecision::msb;
    BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (num == 0)
        return 0.0;
    const bool negative = num < 0;
    if (negative)
        num = -num;
    const long shift = 64 - (static_cast<long>(msb(num)) - static_cast<long>(msb(den)));
    BigInt quotient;
    if (shift >= 0)
        quotient = (num << static_cast<unsigned>(shift)) / den;
    else
        quotient = num / (den << static_cast<unsigned>(-shift));
    const double mantissa = quotient.convert_to<double>();
    const double value = std::ldexp(mantissa, static_cast<int>(-shift));
    return negative ? -value : value;
}

// "num/den", or just "num" for integers.
inline std::string to_fraction_string(const BigRational& q)
{
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1)
        return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

inline BigRational parse_fraction(const std::string& text)
{
    const auto slash = text.find('/');
    if (slash == std::string::npos)
        return BigRational(BigInt(text));
    return BigRational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

inline BigRational pow2(unsigned n)
{
    return BigRational(BigInt(1) << n);
}

} // namespace sincsum
