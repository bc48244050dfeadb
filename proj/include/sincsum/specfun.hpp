#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "sincsum/error.hpp"
#include "sincsum/rational.hpp"
#include "sincsum/sinc_core.hpp"
#include "sincsum/summation.hpp"
#include "sincsum/trig.hpp"

namespace sincsum {

// B_0 .. B_{n_max} from sum_{k<=n} C(n+1,k) B_k = 0 (so B_1 = -1/2).
inline std::vector<BigRational> bernoulli(unsigned n_max)
{
    std::vector<BigRational> b;
    b.reserve(n_max + 1);
    b.emplace_back(1);
    for (unsigned n = 1; n <= n_max; ++n) {
        if (n > 1 && n % 2 == 1) {
            b.emplace_back(0);
            continue;
        }
        BigRational acc = 0;
        for (unsigned k = 0; k < n; ++k)
            acc += BigRational(binomial(n + 1, k)) * b[k];
        b.push_back(-acc / BigRational(n + 1));
    }
    return b;
}

struct ZetaEvenValue {
    unsigned n;                // argument is 2n
    BigRational rational_part; // zeta(2n) = rational_part * pi^{2n}
    double float_value;
};

// zeta(2n) = (-1)^{n+1} B_{2n} (2 pi)^{2n} / (2 (2n)!)
inline ZetaEvenValue zeta_even(unsigned n)
{
    if (n == 0)
        throw domain_error("zeta_even: n must be positive");
    const auto b = bernoulli(2 * n);
    BigRational coeff = b[2 * n] * pow2(2 * n) / (BigRational(2) * BigRational(factorial(2 * n)));
    if (n % 2 == 0)
        coeff = -coeff;
    const double value = to_double(coeff) * std::pow(pi, 2.0 * n);
    return {n, coeff, value};
}

namespace detail {

    // B_{2j} / (2j)! for j = 1..9, computed once from the exact recurrence.
    inline const std::array<double, 10>& euler_maclaurin_coefficients()
    {
        static const std::array<double, 10> table = [] {
            std::array<double, 10> t{};
            const auto b = bernoulli(18);
            for (unsigned j = 1; j <= 9; ++j)
                t[j] = to_double(b[2 * j] / BigRational(factorial(2 * j)));
            return t;
        }();
        return table;
    }

    struct HurwitzEstimate {
        double value;
        double error;
    };

    // Euler-Maclaurin: N leading terms, integral, half term and 8 Bernoulli
    // corrections; the first omitted correction bounds the remainder.
    inline HurwitzEstimate hurwitz_em(double s, double a, long N)
    {
        const auto& c = euler_maclaurin_coefficients();
        CompensatedSum sum;
        for (long k = N - 1; k >= 0; --k)
            sum.add(std::pow(k + a, -s));
        const double w = N + a;
        const double ws = std::pow(w, -s);
        sum.add(w * ws / (s - 1.0));
        sum.add(0.5 * ws);
        // rising factorial s (s+1) ... (s+2j-2) times w^{-s-2j+1}
        double factor = s * ws / w;
        double omitted = 0.0;
        for (unsigned j = 1; j <= 9; ++j) {
            const double term = c[j] * factor;
            if (j == 9)
                omitted = std::fabs(term);
            else
                sum.add(term);
            factor *= (s + 2.0 * j - 1.0) * (s + 2.0 * j) / (w * w);
        }
        return {sum.value(), omitted};
    }

} // namespace detail

// Hurwitz zeta sum_{k>=0} (k+a)^{-s} for s > 1, a in (0, 2].
inline double hurwitz_zeta(double s, double a)
{
    if (!std::isfinite(s) || !(s > 1.0 + 1e-9))
        throw domain_error("hurwitz_zeta: s must exceed 1 + 1e-9");
    if (!std::isfinite(a) || !(a > 0.0) || a > 2.0)
        throw domain_error("hurwitz_zeta: a must lie in (0, 2]");
    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (long N = 25; N <= (1L << 22); N *= 2) {
        const auto est = detail::hurwitz_em(s, a, N);
        if (est.error <= 5.0 * eps * std::fabs(est.value))
            return est.value;
    }
    throw precision_unreachable("hurwitz_zeta: Euler-Maclaurin did not converge", 0.0);
}

// d/da zeta(s, a) = -s zeta(s+1, a)
inline double hurwitz_zeta_da(double s, double a)
{
    return -s * hurwitz_zeta(s + 1.0, a);
}

// pi^{-2r} sin^{2r}(pi x) (zeta(2r, x) + zeta(2r, 1-x)), with the k = 0 terms
// of both zetas taken out as sinc powers so every zeta call has a in (1, 2).
inline double f_hurwitz(const EvalPoint& p)
{
    p.validate();
    if (p.x == 0.0 || p.x == 1.0)
        return 1.0;
    const double two_r = 2.0 * p.r;
    const double x = p.x;
    const double u = std::fabs(sin_pi(x)) / pi;
    const double weight = std::exp(two_r * std::log(u));
    double rel;
    CompensatedSum sum;
    if (weight > 0.0)
        sum.add(weight * (hurwitz_zeta(two_r, 1.0 + x) + hurwitz_zeta(two_r, 2.0 - x)));
    sum.add(detail::abs_pow(sinc_pi(1.0 - x), two_r, rel));
    sum.add(detail::abs_pow(sinc_pi(x), two_r, rel));
    return sum.value();
}

// Derivative of the Hurwitz form. With u = sin(pi x)/pi, u' = cos(pi x):
//   k = 0 terms:  (2r/x) sinc(x)^{2r-1} (cos pi x - sinc x)
//              - (2r/(1-x)) sinc(1-x)^{2r-1} (cos pi(1-x) - sinc(1-x))
//   k >= 1:      2r u^{2r-1} cos(pi x) [Z(1+x) + Z(2-x)]
//              + u^{2r} [Z_a(1+x) - Z_a(2-x)]
// where Z = zeta(2r, .) and Z_a = d/da zeta(2r, .).
inline double f_deriv_analytic(const EvalPoint& p)
{
    p.validate();
    if (!(p.x > 0.0 && p.x < 1.0))
        throw domain_error("f_deriv_analytic: x must lie in (0, 1)");
    const double two_r = 2.0 * p.r;
    const double x = p.x;
    const double y = 1.0 - x;
    double rel;

    CompensatedSum sum;
    const double q0 = sinc_pi(x);
    const double q1 = sinc_pi(y);
    sum.add((two_r / x) * detail::abs_pow(q0, two_r - 1.0, rel) * cos_minus_sinc(x));
    sum.add(-(two_r / y) * detail::abs_pow(q1, two_r - 1.0, rel) * cos_minus_sinc(y));

    const double u = std::fabs(sin_pi(x)) / pi;
    const double log_u = std::log(u);
    const double u_pow_m1 = std::exp((two_r - 1.0) * log_u);
    if (u_pow_m1 > 0.0) {
        const double c = cos_pi(x);
        sum.add(two_r * u_pow_m1 * c * (hurwitz_zeta(two_r, 1.0 + x) + hurwitz_zeta(two_r, 2.0 - x)));
        sum.add(u_pow_m1 * u * (hurwitz_zeta_da(two_r, 1.0 + x) - hurwitz_zeta_da(two_r, 2.0 - x)));
    }
    return sum.value();
}

// psi^{(2n)}(x) = -(2n)! zeta(2n+1, x)
inline double polygamma_even_series(unsigned n, double x)
{
    if (n == 0)
        throw domain_error("polygamma_even_series: n must be positive");
    if (!(x > 0.0 && x < 1.0))
        throw domain_error("polygamma_even_series: x must lie in (0, 1)");
    const double fact = to_double(BigRational(factorial(2 * n)));
    return -fact * hurwitz_zeta(2.0 * n + 1.0, x);
}

// f_{n+1/2}(x) through the polygamma route:
// pi^{-(2n+1)} |sin pi x|^{2n+1} (-1/(2n)!) (psi^{(2n)}(x) + psi^{(2n)}(1-x)).
inline double f_half_integer_polygamma(unsigned n, double x)
{
    const double fact = to_double(BigRational(factorial(2 * n)));
    const double s = std::fabs(sin_pi(x)) / pi;
    const double weight = std::pow(s, 2.0 * n + 1.0);
    return weight * (-1.0 / fact) * (polygamma_even_series(n, x) + polygamma_even_series(n, 1.0 - x));
}

} // namespace sincsum
