#pragma once

// Numeric factors of the torus / real-line transference inequality. Only the
// multiplicative factors are computed; the operator norms depend on the
// Banach space and are out of reach.

#include <cmath>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "sincsum/error.hpp"
#include "sincsum/rational.hpp"
#include "sincsum/specfun.hpp"
#include "sincsum/trig.hpp"

namespace sincsum {

struct ConstantQuery {
    double q = 2.0; // dual exponent, q = 2r
    unsigned d = 1;

    void validate() const
    {
        if (!std::isfinite(q) || q < 2.0)
            throw domain_error("ConstantQuery: q must be >= 2");
        if (d < 1)
            throw domain_error("ConstantQuery: d must be >= 1");
    }
};

struct ConstantReport {
    double q;
    unsigned d;
    double c_q;
    double factor;
    double crude;
    std::optional<BigRational> exact_c_q;
};

namespace detail {

    inline void require_q(double q)
    {
        if (!std::isfinite(q) || q < 2.0)
            throw domain_error("q must be a finite number >= 2");
    }

    // 2 (1 - 2^{-q}) zeta(q); equals 2^{-q} * sum_m |1/2 + m|^{-q}.
    inline double scaled_halfshift_sum(double q)
    {
        return 2.0 * (1.0 - std::exp2(-q)) * hurwitz_zeta(q, 1.0);
    }

} // namespace detail

// C_q = 2 (2^q - 1) zeta(q) / pi^q, the minimum of x -> sum_m |sinc(x+m)|^q.
inline double c_q(double q)
{
    detail::require_q(q);
    return detail::scaled_halfshift_sum(q) * std::pow(2.0 / pi, q);
}

// (2^{2n} - 1) 2^{2n} |B_{2n}| / (2n)!, i.e. C_{2n} exactly.
inline BigRational c_q_exact(unsigned n)
{
    if (n < 1)
        throw domain_error("c_q_exact: n must be positive");
    const auto b = bernoulli(2 * n);
    BigRational bn = b[2 * n];
    if (bn < 0)
        bn = -bn;
    const BigRational p = pow2(2 * n);
    return (p - 1) * p * bn / BigRational(factorial(2 * n));
}

inline double crude_bound(unsigned d)
{
    if (d < 1)
        throw domain_error("crude_bound: d must be >= 1");
    return std::pow(pi / 2.0, static_cast<double>(d));
}

// (sum_m |1/2 + m|^{-q})^{1/q}; >= 2 and nonincreasing in q.
inline double lq_norm_halfshift(double q)
{
    detail::require_q(q);
    return 2.0 * std::pow(detail::scaled_halfshift_sum(q), 1.0 / q);
}

inline ConstantReport transference_factor(const ConstantQuery& query)
{
    query.validate();
    ConstantReport report{query.q, query.d, c_q(query.q), 0.0, crude_bound(query.d), std::nullopt};
    report.factor = std::pow(report.c_q, -static_cast<double>(query.d) / query.q);
    const double half = query.q / 2.0;
    if (half == std::floor(half) && half <= 100.0)
        report.exact_c_q = c_q_exact(static_cast<unsigned>(half));
    return report;
}

inline nlohmann::json to_json(const ConstantReport& report)
{
    nlohmann::json j;
    j["q"] = report.q;
    j["d"] = report.d;
    j["c_q"] = report.c_q;
    j["factor"] = report.factor;
    j["crude"] = report.crude;
    if (report.exact_c_q)
        j["exact_c_q"] = to_fraction_string(*report.exact_c_q);
    else
        j["exact_c_q"] = nullptr;
    return j;
}

} // namespace sincsum
