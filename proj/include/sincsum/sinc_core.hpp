#pragma once

// Direct evaluation of the periodic sinc-power sum
//
//     f_r(x) = sum_{m in Z} |sinc(x + m)|^{2r},   x in [0, 1],
//
// with a proven bound on everything that is not summed explicitly.
//
// Tail control. The terms |m| <= M are summed. For m > M write
// u = m + x, for m < -M write u = |m| - x; in both cases
// |sinc(x+m)|^{2r} = w * u^{-2r} with w = (|sin(pi x)| / pi)^{2r} <= pi^{-2r}
// and G(u) = u^{-2r} convex and decreasing. Per side the omitted mass is
// sum_{j >= 0} G(u0 + 1/2 + j) with u0 = M + 1/2 +- x. Convexity gives the
// midpoint inequality G(c) <= int_{c-1/2}^{c+1/2} G, so
//
//     sum <= I(u0) = int_{u0}^inf G = u0^{1-2r} / (2r - 1),
//
// and the midpoint remainder int_cell G - G(c) = G''(xi)/24 <= G''(c-1/2)/24,
// summed with an integral comparison, gives
//
//     I(u0) - sum <= E(u0) = (2r/24) u0^{-2r-1} ((2r+1)/u0 + 1).
//
// The omitted mass therefore lies in w*[I - E, I]; f_direct adds w*(I - E/2)
// and reports w*E/2 (both sides) plus a rounding allowance as tail_bound.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>

#include "sincsum/error.hpp"
#include "sincsum/summation.hpp"
#include "sincsum/trig.hpp"

namespace sincsum {

// Series for f_r diverge at r = 1/2; anything at or below this is rejected.
inline constexpr double min_exponent_r = 0.501;

enum class EvalMode { direct, hurwitz, polynomial, consensus };

struct EvalConfig {
    double target_tol = 1e-12;
    std::int64_t max_terms = 10'000'000;
    EvalMode mode = EvalMode::direct;

    void validate() const
    {
        if (!(target_tol > 0.0) || !std::isfinite(target_tol))
            throw domain_error("EvalConfig: target_tol must be a positive finite number");
        if (max_terms < 1)
            throw domain_error("EvalConfig: max_terms must be at least 1");
    }
};

struct EvalPoint {
    double r;
    double x;

    void validate() const
    {
        if (!std::isfinite(r) || r <= min_exponent_r)
            throw domain_error("EvalPoint: r must be finite and > " + std::to_string(min_exponent_r));
        if (!std::isfinite(x) || x < 0.0 || x > 1.0)
            throw domain_error("EvalPoint: x must lie in [0, 1]");
    }
};

struct DirectResult {
    double value;
    double tail_bound;
    std::int64_t terms; // the summation index M
};

inline double sinc(double x)
{
    if (!std::isfinite(x))
        throw domain_error("sinc: non-finite argument");
    return sinc_pi(x);
}

inline double h(double x)
{
    const double s = sinc(x);
    return s * s;
}

namespace detail {

    inline bool is_small_integer(double v, int limit)
    {
        return v == std::floor(v) && v >= 0 && v <= limit;
    }

    inline double pow_uint(double base, unsigned n)
    {
        double result = 1.0;
        while (n) {
            if (n & 1u)
                result *= base;
            base *= base;
            n >>= 1u;
        }
        return result;
    }

    // |q|^p for p > 0; exp(p ln|q|) unless p is a small integer. Also returns
    // a relative rounding estimate for the result.
    inline double abs_pow(double q, double p, double& rel_err)
    {
        const double a = std::fabs(q);
        if (a == 0.0) {
            rel_err = 0.0;
            return 0.0;
        }
        constexpr double eps = std::numeric_limits<double>::epsilon();
        if (is_small_integer(p, 64)) {
            rel_err = (p + 2.0) * eps;
            return pow_uint(a, static_cast<unsigned>(p));
        }
        const double arg = p * std::log(a);
        rel_err = (std::fabs(arg) + 4.0) * eps;
        return std::exp(arg);
    }

    struct TailModel {
        double estimate;
        double bound;
    };

    // Omitted mass of sum_{|m| > M} u^{-2r} (unweighted), see header comment.
    inline TailModel tail_model(double r, double x, double m)
    {
        const double two_r = 2.0 * r;
        auto side = [&](double u0, double& integral, double& remainder) {
            integral = std::pow(u0, 1.0 - two_r) / (two_r - 1.0);
            remainder = (two_r / 24.0) * std::pow(u0, -two_r - 1.0) * ((two_r + 1.0) / u0 + 1.0);
        };
        double ip, ep, in, en;
        side(m + 0.5 + x, ip, ep);
        side(m + 0.5 - x, in, en);
        return {ip + in - 0.5 * (ep + en), 0.5 * (ep + en)};
    }

    inline std::string unreachable_message(const EvalConfig& cfg)
    {
        std::ostringstream os;
        os << "f_direct: tolerance " << cfg.target_tol << " not reachable with max_terms = " << cfg.max_terms;
        return os.str();
    }

    inline double tail_weight(double r, double x)
    {
        const double s = std::fabs(sin_pi(x)) / pi;
        if (s == 0.0)
            return 0.0;
        return std::exp(2.0 * r * std::log(s));
    }

} // namespace detail

// Sum the terms |m| <= M, largest |m| first, and add the tail estimate.
inline DirectResult f_direct_fixed(const EvalPoint& p, std::int64_t M)
{
    p.validate();
    if (M < 1)
        throw domain_error("f_direct_fixed: M must be at least 1");
    if (p.x == 0.0 || p.x == 1.0)
        return {1.0, 0.0, M}; // a single surviving term, exactly 1

    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double two_r = 2.0 * p.r;
    const double x = p.x;
    const double weight = detail::tail_weight(p.r, x);

    CompensatedSum sum;
    double rounding = 0.0;
    double rel = 0.0;

    const auto tail = detail::tail_model(p.r, x, static_cast<double>(M));
    const double tail_estimate = weight * tail.estimate;
    sum.add(tail_estimate);
    rounding += tail_estimate * 4.0 * eps * (std::fabs(two_r * std::log(M + 1.0)) + 8.0);

    const bool integral_power = detail::is_small_integer(two_r, 64);
    for (std::int64_t k = M; k >= 2; --k) {
        const double kd = static_cast<double>(k);
        for (const double u : {kd + x, kd - x}) {
            double t;
            if (integral_power) {
                t = weight / detail::pow_uint(u, static_cast<unsigned>(two_r));
                rel = (two_r + 4.0) * eps;
            } else {
                const double arg = -two_r * std::log(u);
                t = weight * std::exp(arg);
                rel = (std::fabs(arg) + 8.0) * eps;
            }
            sum.add(t);
            rounding += t * rel;
        }
    }
    // m = 1 (u = 1 + x) still uses the weight form; m = 0 and m = -1 go
    // through sinc so the removable singularities stay accurate.
    {
        double t;
        if (integral_power) {
            t = weight / detail::pow_uint(1.0 + x, static_cast<unsigned>(two_r));
            rel = (two_r + 4.0) * eps;
        } else {
            const double arg = -two_r * std::log(1.0 + x);
            t = weight * std::exp(arg);
            rel = (std::fabs(arg) + 8.0) * eps;
        }
        sum.add(t);
        rounding += t * rel;
    }
    for (const double arg : {x - 1.0, x}) {
        const double t = detail::abs_pow(sinc_pi(arg), two_r, rel);
        sum.add(t);
        rounding += t * (rel + 8.0 * eps * two_r);
    }

    const double value = sum.value();
    // The shared weight carries one rounding error for every term but m = 0, -1.
    const double weight_rel = (std::fabs(two_r * std::log(std::fabs(sin_pi(x)) / pi)) + 4.0) * eps;
    const double bound = weight * tail.bound + rounding + weight_rel * value + 4.0 * eps * value;
    return {value, bound, M};
}

// f_r(x) to within cfg.target_tol using the smallest admissible M.
inline DirectResult f_direct(const EvalPoint& p, const EvalConfig& cfg = {})
{
    p.validate();
    cfg.validate();
    if (p.x == 0.0 || p.x == 1.0)
        return {1.0, 0.0, 1};

    const double weight = detail::tail_weight(p.r, p.x);
    const double budget = 0.5 * cfg.target_tol;
    auto truncation = [&](std::int64_t m) {
        return weight * detail::tail_model(p.r, p.x, static_cast<double>(m)).bound;
    };

    // Leading-order guess from E ~ (r/3) M^{-2r-1}, then walk up.
    const double two_r = 2.0 * p.r;
    double guess = 1.0;
    if (weight > 0.0)
        guess = std::ceil(std::pow(weight * (p.r / 3.0) / budget, 1.0 / (two_r + 1.0)));
    std::int64_t M = static_cast<std::int64_t>(std::clamp(guess, 1.0, static_cast<double>(cfg.max_terms)));
    while (M > 2 && truncation(M / 2 + 1) <= budget)
        M = M / 2 + 1;
    while (truncation(M) > budget && M < cfg.max_terms)
        M = std::min<std::int64_t>(cfg.max_terms, M + M / 4 + 1);

    const DirectResult result = f_direct_fixed(p, M);
    if (result.tail_bound > cfg.target_tol)
        throw precision_unreachable(detail::unreachable_message(cfg), result.tail_bound);
    return result;
}

// Central difference of f_direct; each endpoint evaluated to min(step^3, 1e-12).
inline double f_deriv_fd(const EvalPoint& p, double step)
{
    p.validate();
    if (!(step > 0.0) || !(p.x - step > 0.0) || !(p.x + step < 1.0))
        throw domain_error("f_deriv_fd: x +- step must stay inside (0, 1)");
    EvalConfig cfg;
    cfg.target_tol = std::min(step * step * step, 1e-12);
    const double plus = f_direct({p.r, p.x + step}, cfg).value;
    const double minus = f_direct({p.r, p.x - step}, cfg).value;
    return (plus - minus) / (2.0 * step);
}

} // namespace sincsum
