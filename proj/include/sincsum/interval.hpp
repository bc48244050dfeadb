#pragma once

// Outward-rounded interval arithmetic. Every operation computes its result
// in round-to-nearest and then widens each endpoint by a few units in the
// last place, which covers the rounding of +,-,*,/ and the documented error
// of the libm functions used. Validated at floating-point rigor, not a
// formal proof.

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "sincsum/error.hpp"
#include "sincsum/trig.hpp"

namespace sincsum {

namespace detail {

    inline constexpr int inflate_ulps = 4;

    inline double step_down(double v, int n = inflate_ulps)
    {
        for (int i = 0; i < n; ++i)
            v = std::nextafter(v, -std::numeric_limits<double>::infinity());
        return v;
    }

    inline double step_up(double v, int n = inflate_ulps)
    {
        for (int i = 0; i < n; ++i)
            v = std::nextafter(v, std::numeric_limits<double>::infinity());
        return v;
    }

    // relative slack for results of exp/log chains
    inline double slack_down(double v, double rel)
    {
        return step_down(v - std::fabs(v) * rel);
    }

    inline double slack_up(double v, double rel)
    {
        return step_up(v + std::fabs(v) * rel);
    }

} // namespace detail

class Interval {
public:
    double lo = 0.0;
    double hi = 0.0;

    constexpr Interval() = default;
    constexpr Interval(double v) : lo(v), hi(v) {} // exact point, no widening
    Interval(double l, double h) : lo(l), hi(h)
    {
        if (!(l <= h) && !(std::isnan(l) || std::isnan(h)))
            throw domain_error("Interval: lo > hi");
    }

    static Interval entire()
    {
        constexpr double inf = std::numeric_limits<double>::infinity();
        return {-inf, inf};
    }

    // Outward-widened [l, h].
    static Interval widen(double l, double h) { return {detail::step_down(l), detail::step_up(h)}; }

    double mid() const { return lo + 0.5 * (hi - lo); }
    double width() const { return hi - lo; }
    double mag() const { return std::max(std::fabs(lo), std::fabs(hi)); }
    double mig() const { return contains(0.0) ? 0.0 : std::min(std::fabs(lo), std::fabs(hi)); }
    bool contains(double v) const { return lo <= v && v <= hi; }
    bool subset_of(const Interval& o) const { return o.lo <= lo && hi <= o.hi; }
    bool is_finite() const { return std::isfinite(lo) && std::isfinite(hi); }
    bool is_point() const { return lo == hi; }

    friend Interval operator+(const Interval& a, const Interval& b) { return widen(a.lo + b.lo, a.hi + b.hi); }
    friend Interval operator-(const Interval& a, const Interval& b) { return widen(a.lo - b.hi, a.hi - b.lo); }
    friend Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

    friend Interval operator*(const Interval& a, const Interval& b)
    {
        if (a.is_point() && a.lo == 0.0)
            return 0.0;
        if (b.is_point() && b.lo == 0.0)
            return 0.0;
        const double p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
        return widen(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
    }

    friend Interval operator/(const Interval& a, const Interval& b)
    {
        if (b.contains(0.0))
            return entire();
        const double q[4] = {a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
        return widen(*std::min_element(q, q + 4), *std::max_element(q, q + 4));
    }

    Interval& operator+=(const Interval& o) { return *this = *this + o; }
    Interval& operator-=(const Interval& o) { return *this = *this - o; }
    Interval& operator*=(const Interval& o) { return *this = *this * o; }
    Interval& operator/=(const Interval& o) { return *this = *this / o; }

    friend std::ostream& operator<<(std::ostream& os, const Interval& x)
    {
        return os << '[' << x.lo << ", " << x.hi << ']';
    }
};

inline Interval hull(const Interval& a, const Interval& b)
{
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

inline Interval sqr(const Interval& x)
{
    const double a = x.mig(), b = x.mag();
    return {a == 0.0 ? 0.0 : detail::step_down(a * a), detail::step_up(b * b)};
}

inline Interval sqrt(const Interval& x)
{
    if (x.lo < 0.0)
        return Interval::entire();
    return {x.lo == 0.0 ? 0.0 : detail::step_down(std::sqrt(x.lo)), detail::step_up(std::sqrt(x.hi))};
}

inline Interval pow_int(const Interval& x, unsigned n)
{
    if (n == 0)
        return 1.0;
    if (n == 1)
        return x;
    const int slack = static_cast<int>(n) + 4;
    auto p = [n](double v) {
        double r = 1.0;
        for (unsigned i = 0; i < n; ++i)
            r *= v;
        return r;
    };
    if (n % 2 == 0) {
        const double a = x.mig(), b = x.mag();
        return {a == 0.0 ? 0.0 : std::max(0.0, detail::step_down(p(a), slack)), detail::step_up(p(b), slack)};
    }
    return {detail::step_down(p(x.lo), slack), detail::step_up(p(x.hi), slack)};
}

// x^p for real p, x >= 0 (x > 0 when p < 0). Monotone in x.
inline Interval pow(const Interval& x, double p)
{
    if (p == 0.0)
        return 1.0;
    if (p == 1.0)
        return x;
    if (x.lo < 0.0 || (p < 0.0 && x.lo == 0.0))
        return Interval::entire();
    constexpr double eps = std::numeric_limits<double>::epsilon();
    auto one = [p](double v, bool upper) {
        if (v == 0.0)
            return 0.0;
        const double r = std::pow(v, p);
        const double rel = (std::fabs(p * std::log(v)) + 4.0) * eps;
        return upper ? detail::slack_up(r, rel) : std::max(0.0, detail::slack_down(r, rel));
    };
    if (p > 0.0)
        return {one(x.lo, false), one(x.hi, true)};
    return {one(x.hi, false), one(x.lo, true)};
}

inline Interval pi_interval()
{
    // the double nearest pi lies below pi
    return {pi, std::nextafter(pi, 4.0)};
}

namespace detail {

    // Does [lo, hi] contain a point c + 2k?
    inline bool hits_mod2(double lo, double hi, double c)
    {
        const double k = std::ceil((lo - c) / 2.0);
        for (double j = k - 1.0; j <= k + 1.0; j += 1.0) {
            const double pt = c + 2.0 * j;
            if (pt >= lo - 1e-15 && pt <= hi + 1e-15)
                return true;
        }
        return false;
    }

    inline Interval periodic_range(double f_lo, double f_hi, bool has_max, bool has_min)
    {
        double l = std::min(f_lo, f_hi), h = std::max(f_lo, f_hi);
        l = std::max(-1.0, detail::slack_down(l, 4 * std::numeric_limits<double>::epsilon()));
        h = std::min(1.0, detail::slack_up(h, 4 * std::numeric_limits<double>::epsilon()));
        if (has_max)
            h = 1.0;
        if (has_min)
            l = -1.0;
        return {l, h};
    }

} // namespace detail

// sin(pi x): endpoint values plus the extrema at 1/2 + 2k and -1/2 + 2k.
inline Interval sin_pi(const Interval& x)
{
    if (!x.is_finite() || x.width() >= 2.0)
        return {-1.0, 1.0};
    return detail::periodic_range(sincsum::sin_pi(x.lo), sincsum::sin_pi(x.hi), detail::hits_mod2(x.lo, x.hi, 0.5),
                                  detail::hits_mod2(x.lo, x.hi, -0.5));
}

inline Interval cos_pi(const Interval& x)
{
    if (!x.is_finite() || x.width() >= 2.0)
        return {-1.0, 1.0};
    return detail::periodic_range(sincsum::cos_pi(x.lo), sincsum::cos_pi(x.hi), detail::hits_mod2(x.lo, x.hi, 0.0),
                                  detail::hits_mod2(x.lo, x.hi, 1.0));
}

namespace detail {

    // Taylor data for sinc and its first two derivatives around 0, valid for
    // |x| <= series_radius. With t = x^2 and c_k = (-1)^k pi^{2k} / (2k+1)!:
    //   sinc   = sum_{k>=0} c_k t^k
    //   sinc'  = x * sum_{k>=1} 2k c_k t^{k-1}
    //   sinc'' = sum_{k>=1} 2k (2k-1) c_k t^{k-1}
    // The series alternate with decreasing terms there, so the first omitted
    // term bounds the remainder.
    inline constexpr double series_radius = 0.25;
    inline constexpr int series_terms = 10;

    inline Interval series_coeff(int k, int deriv)
    {
        Interval c = 1.0;
        const Interval pi2 = sqr(pi_interval());
        for (int j = 0; j < k; ++j)
            c = c * pi2;
        Interval fact = 1.0;
        for (int j = 2; j <= 2 * k + 1; ++j)
            fact = fact * Interval(j);
        c = c / fact;
        if (deriv == 1)
            c = c * Interval(2.0 * k);
        else if (deriv == 2)
            c = c * Interval(2.0 * k * (2.0 * k - 1.0));
        return k % 2 ? -c : c;
    }

    inline Interval sinc_series(const Interval& x, int deriv)
    {
        const Interval t = sqr(x);
        const int first = deriv == 0 ? 0 : 1;
        Interval acc = 0.0;
        for (int k = series_terms; k >= first; --k) {
            acc = acc * t + series_coeff(k, deriv);
        }
        // omitted term at k = series_terms + 1
        const double m = x.mag();
        const double om = series_coeff(series_terms + 1, deriv).mag() * std::pow(m, 2.0 * series_terms) * 2.0;
        acc = acc + Interval(-om, om);
        return deriv == 1 ? acc * x : acc;
    }

} // namespace detail

inline Interval sinc_pi(const Interval& x)
{
    if (!x.is_finite())
        return Interval::entire();
    if (x.mag() <= detail::series_radius)
        return detail::sinc_series(x, 0);
    if (x.contains(0.0))
        return {-0.22, 1.0}; // global range of sinc
    return sin_pi(x) / (pi_interval() * x);
}

// d/dx sinc(x) = (cos(pi x) - sinc(x)) / x
inline Interval sinc_pi_d1(const Interval& x)
{
    if (!x.is_finite())
        return Interval::entire();
    if (x.mag() <= detail::series_radius)
        return detail::sinc_series(x, 1);
    const double bound = detail::step_up(pi / 2.0, 8); // |sinc'| <= pi/2
    if (x.contains(0.0))
        return {-bound, bound};
    return (cos_pi(x) - sinc_pi(x)) / x;
}

// sinc'' = -pi^2 sinc - 2 sinc' / x
inline Interval sinc_pi_d2(const Interval& x)
{
    if (!x.is_finite())
        return Interval::entire();
    if (x.mag() <= detail::series_radius)
        return detail::sinc_series(x, 2);
    const double bound = detail::step_up(pi * pi / 3.0, 8); // |sinc''| <= pi^2/3
    if (x.contains(0.0))
        return {-bound, bound};
    return -(sqr(pi_interval()) * sinc_pi(x)) - Interval(2.0) * sinc_pi_d1(x) / x;
}

} // namespace sincsum
