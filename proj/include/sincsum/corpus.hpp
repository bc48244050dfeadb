#pragma once

// The registered inequality corpus. Each entry is a generic expression in x
// (instantiated for double, Interval and the dual types), a claimed sign on
// a domain, and the points where the claim is tight.
//
// Monotonicity claims are stated on the derivative, which is obtained by
// running the function itself through one extra level of dual numbers.

#include <string>
#include <vector>

#include "sincsum/certify.hpp"
#include "sincsum/dual.hpp"

namespace sincsum {

namespace corpus_detail {

    template <class T>
    T h(const T& t)
    {
        return sqr(sinc_pi(t));
    }

    // x -> f'(x) for a generic f
    template <class F>
    auto derivative_of(F f)
    {
        return [f](auto x) {
            using T = decltype(x);
            return f(Dual<T>::variable(x)).d;
        };
    }

    inline std::string num(double v)
    {
        std::string s = std::to_string(v);
        s.erase(s.find_last_not_of('0') + 1);
        if (s.back() == '.')
            s.pop_back();
        return s;
    }

    inline CertifiedInequality entry(std::string id, double lo, double hi, Claim claim, std::vector<double> eq,
                                     std::string statement, Expression e)
    {
        CertifiedInequality q;
        q.id = std::move(id);
        q.domain = Interval(lo, hi);
        q.claim = claim;
        q.equality_points = std::move(eq);
        q.statement = std::move(statement);
        q.expression = std::move(e);
        return q;
    }

} // namespace corpus_detail

inline std::vector<CertifiedInequality> corpus()
{
    using namespace corpus_detail;
    std::vector<CertifiedInequality> out;

    out.push_back(entry("sin_quarter_chord", 0.0, 1.0, Claim::nonnegative, {0.0, 1.0},
                        "sqrt(2)*sin(pi*x/4) - x >= 0",
                        make_expression([](auto x) {
                            using T = decltype(x);
                            return sqrt(T(2.0)) * sin_pi(x * 0.25) - x;
                        })));

    out.push_back(entry("cos_half_parabola", 0.0, 1.0, Claim::nonnegative, {0.0, 1.0},
                        "1 - x^2 - cos(pi*x/2) >= 0",
                        make_expression([](auto x) { return 1.0 - sqr(x) - cos_pi(x * 0.5); })));

    out.push_back(entry("cos_sq_quartic", 0.0, 1.0, Claim::nonnegative, {0.0, 1.0},
                        "(x^2 + 1)*cos(pi*x/2)^2 - (1 - x^2)^2 >= 0",
                        make_expression([](auto x) {
                            return (sqr(x) + 1.0) * sqr(cos_pi(x * 0.5)) - sqr(1.0 - sqr(x));
                        })));

    // scalar facts used on [0, 1/2] in the previous entry; x is a dummy
    out.push_back(entry("cos_sq_quartic_coef", 0.0, 1.0, Claim::nonnegative, {},
                        "(1 - pi^2/4) + (pi^4/64 - pi^2/4 - 1)/4 + 2 >= 0",
                        make_expression([](auto x) {
                            const auto p2 = sqr(pi_of(x));
                            return (1.0 - p2 * 0.25) + 0.25 * (sqr(p2) / 64.0 - p2 * 0.25 - 1.0) + 2.0;
                        })));
    out.push_back(entry("cos_sq_quartic_x4_coef", 0.0, 1.0, Claim::nonpositive, {},
                        "pi^4/64 - pi^2/4 - 1 <= 0", make_expression([](auto x) {
                            const auto p2 = sqr(pi_of(x));
                            return sqr(p2) / 64.0 - p2 * 0.25 - 1.0;
                        })));

    out.push_back(entry("pair_sum_min", 0.0, 1.0, Claim::nonnegative, {0.5},
                        "h(x) + h(x - 1) - 8/pi^2 >= 0, h = sinc^2",
                        make_expression([](auto x) { return h(x) + h(x - 1.0) - 8.0 / sqr(pi_of(x)); })));

    for (int m = 1; m <= 10; ++m) {
        const double md = m;
        out.push_back(entry("pair_sum_max_m" + std::to_string(m), 0.0, 1.0, Claim::nonnegative, {0.5},
                            "2/(pi^2 (m + 1/2)^2) - h(x + m) - h(x - m - 1) >= 0, m = " + std::to_string(m),
                            make_expression([md](auto x) {
                                return 2.0 / (sqr(pi_of(x)) * ((md + 0.5) * (md + 0.5))) -
                                       (h(x + md) + h(x - (md + 1.0)));
                            })));
    }

    for (int M = 3; M <= 10; ++M) {
        const double M2 = M * M;
        auto psi = [M2](auto x) { return sqrt(sqr(x) + 1.0) * cos_pi(x * 0.5) / (M2 - sqr(x)); };
        out.push_back(entry("psi_decreasing_M" + std::to_string(M), 0.0, 1.0, Claim::nonpositive, {0.0},
                            "d/dx [sqrt(x^2 + 1) cos(pi*x/2) / (M^2 - x^2)] <= 0, M = " + std::to_string(M),
                            make_expression(derivative_of(psi))));
    }

    out.push_back(entry("psi_key_ineq", 3.0, 1000.0, Claim::nonnegative, {},
                        "(pi - 2) M^2 - pi - 4 >= 0 for M in [3, 1000]", make_expression([](auto M) {
                            const auto p = pi_of(M);
                            return (p - 2.0) * sqr(M) - p - 4.0;
                        })));

    for (const double r : {1.0, 1.5, 2.0, 3.0, 5.0}) {
        const unsigned two_r = static_cast<unsigned>(2.0 * r);
        auto phi = [two_r, r](auto x) {
            const auto a = 0.5 + x;
            const auto b = 0.5 - x;
            return sqr(b) + sqr(a) - pow(pow_int(b, two_r) + pow_int(a, two_r), 1.0 / r);
        };
        auto q = entry("phi_decreasing_r" + num(r), 0.0, 0.5, Claim::nonpositive, {0.0, 0.5},
                       "d/dx [(1/2 - x)^2 + (1/2 + x)^2 - ((1/2 - x)^(2r) + (1/2 + x)^(2r))^(1/r)] <= 0, r = " +
                           num(r),
                       make_expression(derivative_of(phi)));
        q.tight_everywhere = r == 1.0; // the bracket vanishes identically
        out.push_back(std::move(q));
    }

    for (int m = 1; m <= 10; ++m) {
        const double a = m + 0.5;
        const double c2 = 1.0 - 12.0 * a * a;
        const double c0 = 3.0 * a * a - 8.0 * a * a * a * a;
        const std::string ms = std::to_string(m);
        out.push_back(entry("quartic_k_m" + ms, 0.0, 0.5, Claim::nonpositive, {0.0},
                            "4x (4x^4 + (1 - 12a^2) x^2 + 3a^2 - 8a^4) <= 0, a = m + 1/2, m = " + ms,
                            make_expression([c2, c0](auto x) {
                                return 4.0 * x * (4.0 * pow_int(x, 4) + c2 * sqr(x) + c0);
                            })));
        out.push_back(entry("quartic_p_m" + ms, 0.0, 0.25, Claim::nonpositive, {},
                            "4y^2 + (1 - 12a^2) y + 3a^2 - 8a^4 <= 0, a = m + 1/2, m = " + ms,
                            make_expression([c2, c0](auto y) { return 4.0 * sqr(y) + c2 * y + c0; })));
    }
    return out;
}

} // namespace sincsum
