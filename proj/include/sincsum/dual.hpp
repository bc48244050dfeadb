#pragma once

// Forward-mode dual numbers over any scalar that supports the operations
// below (double, Interval, Dual<Interval>, ...). Dual<Interval> encloses
// (f(X), f'(X)); Dual<Dual<Interval>> also carries f''(X).

#include <cmath>

#include "sincsum/interval.hpp"

namespace sincsum {

// Scalar overloads so one generic expression works for double too.
inline double sqr(double x) { return x * x; }
inline double sqrt(double x) { return std::sqrt(x); }
inline double pow(double x, double p) { return std::pow(x, p); }
inline double pow_int(double x, unsigned n)
{
    double r = 1.0;
    for (unsigned i = 0; i < n; ++i)
        r *= x;
    return r;
}
inline double pi_of(double) { return pi; }
inline Interval pi_of(const Interval&) { return pi_interval(); }

inline double sinc_pi_d1(double x)
{
    if (std::fabs(x) < 1e-4) {
        const double t = pi * pi * x;
        return -t / 3.0 + t * pi * pi * x * x / 30.0;
    }
    return (cos_pi(x) - sinc_pi(x)) / x;
}

inline double sinc_pi_d2(double x)
{
    if (std::fabs(x) < 1e-3)
        return -pi * pi / 3.0 + pi * pi * pi * pi * x * x / 10.0;
    return -pi * pi * sinc_pi(x) - 2.0 * sinc_pi_d1(x) / x;
}

template <class T>
struct Dual {
    T v{}; // value
    T d{}; // derivative

    Dual() = default;
    Dual(double c) : v(c), d(0.0) {}
    Dual(T value, T deriv) : v(std::move(value)), d(std::move(deriv)) {}

    static Dual variable(const T& x) { return {x, T(1.0)}; }

    friend Dual operator+(const Dual& a, const Dual& b) { return {a.v + b.v, a.d + b.d}; }
    friend Dual operator-(const Dual& a, const Dual& b) { return {a.v - b.v, a.d - b.d}; }
    friend Dual operator-(const Dual& a) { return {-a.v, -a.d}; }
    friend Dual operator*(const Dual& a, const Dual& b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }
    friend Dual operator/(const Dual& a, const Dual& b)
    {
        const T q = a.v / b.v;
        return {q, (a.d - q * b.d) / b.v};
    }
};

template <class T>
Dual<T> sqr(const Dual<T>& a)
{
    return {sqr(a.v), T(2.0) * a.v * a.d};
}

template <class T>
Dual<T> sqrt(const Dual<T>& a)
{
    const T s = sqrt(a.v);
    return {s, a.d / (T(2.0) * s)};
}

template <class T>
Dual<T> pow_int(const Dual<T>& a, unsigned n)
{
    if (n == 0)
        return Dual<T>(1.0);
    return {pow_int(a.v, n), T(static_cast<double>(n)) * pow_int(a.v, n - 1) * a.d};
}

template <class T>
Dual<T> pow(const Dual<T>& a, double p)
{
    if (p == 0.0)
        return Dual<T>(1.0);
    if (p == 1.0)
        return a;
    return {pow(a.v, p), T(p) * pow(a.v, p - 1.0) * a.d};
}

template <class T>
Dual<T> sin_pi(const Dual<T>& a)
{
    return {sin_pi(a.v), pi_of(a.v) * cos_pi(a.v) * a.d};
}

template <class T>
Dual<T> cos_pi(const Dual<T>& a)
{
    return {cos_pi(a.v), -(pi_of(a.v) * sin_pi(a.v) * a.d)};
}

template <class T>
Dual<T> sinc_pi(const Dual<T>& a)
{
    return {sinc_pi(a.v), sinc_pi_d1(a.v) * a.d};
}

template <class T>
Dual<T> sinc_pi_d1(const Dual<T>& a)
{
    return {sinc_pi_d1(a.v), sinc_pi_d2(a.v) * a.d};
}

template <class T>
Dual<T> pi_of(const Dual<T>& a)
{
    return {pi_of(a.v), T(0.0)};
}

using Dual1 = Dual<Interval>;
using Dual2 = Dual<Dual<Interval>>;

// f and f' on X
inline Dual1 seed1(const Interval& x)
{
    return Dual1::variable(x);
}

// f, f', f'' on X
inline Dual2 seed2(const Interval& x)
{
    return {Dual1{x, Interval(1.0)}, Dual1{Interval(1.0), Interval(0.0)}};
}

} // namespace sincsum
