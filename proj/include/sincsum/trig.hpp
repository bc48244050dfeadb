#pragma once

#include <cmath>
#include <numbers>

namespace sincsum {

inline constexpr double pi = std::numbers::pi;

// sin(pi*x) with exact argument reduction: exact zeros at integers and
// exact +-1 at half-integers.
inline double sin_pi(double x)
{
    const double r = std::remainder(x, 2.0); // exact, in [-1, 1]
    const double a = std::fabs(r);
    double s;
    if (a <= 0.25)
        s = std::sin(pi * a);
    else if (a <= 0.75)
        s = std::cos(pi * (a - 0.5));
    else
        s = std::sin(pi * (1.0 - a));
    return r < 0 ? -s : s;
}

inline double cos_pi(double x)
{
    const double a = std::fabs(std::remainder(x, 2.0));
    if (a <= 0.25)
        return std::cos(pi * a);
    if (a <= 0.75)
        return std::sin(pi * (0.5 - a));
    return -std::cos(pi * (1.0 - a));
}

// Normalized sinc, sin(pi x)/(pi x), continuous at 0.
inline double sinc_pi(double x)
{
    if (std::fabs(x) < 1e-4) {
        const double t2 = (pi * x) * (pi * x);
        return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
    }
    return sin_pi(x) / (pi * x);
}

// cos(pi x) - sinc(x); series near 0 where the two cancel.
inline double cos_minus_sinc(double x)
{
    const double t = pi * x;
    if (std::fabs(t) < 0.1) {
        const double t2 = t * t;
        // -t^2/3 + t^4/30 - t^6/840 + t^8/45360 - t^10/3991680
        return t2 * (-1.0 / 3.0 + t2 * (1.0 / 30.0 + t2 * (-1.0 / 840.0 + t2 * (1.0 / 45360.0 - t2 / 3991680.0))));
    }
    return cos_pi(x) - sinc_pi(x);
}

} // namespace sincsum
