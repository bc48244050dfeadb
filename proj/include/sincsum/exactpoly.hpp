#pragma once

// Exact polynomial form of f_r for integer r: f_r(x) = P_r(y), y = cos^2(pi x).
//
// P_1 = 1 and
//
//     2r(2r+1) P_{r+1} = [4y L^2 + 8 L(yD) + 2yD + 2r + 4yD^2 + 2D] P_r,
//
// where D = d/dy and L = r - yD. Since L y^k = (r-k) y^k, L keeps
// nonnegative coefficients below degree r, and so does the whole bracket.

#include <cmath>
#include <string>
#include <vector>

#include "sincsum/error.hpp"
#include "sincsum/rational.hpp"
#include "sincsum/trig.hpp"

namespace sincsum {

inline constexpr unsigned max_poly_r = 100;

struct SincPolynomial {
    unsigned r = 1;
    std::vector<BigRational> coeffs{BigRational(1)}; // ascending powers of y

    unsigned degree() const { return coeffs.empty() ? 0 : static_cast<unsigned>(coeffs.size() - 1); }

    // Throws certificate_failure naming the first broken invariant.
    void validate() const
    {
        if (r < 1 || coeffs.size() != r)
            throw certificate_failure("SincPolynomial: degree must be r - 1 for r = " + std::to_string(r));
        if (coeffs.back() == 0)
            throw certificate_failure("SincPolynomial: leading coefficient vanishes");
        BigRational total = 0;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k] < 0)
                throw certificate_failure("SincPolynomial: negative coefficient at y^" + std::to_string(k));
            total += coeffs[k];
        }
        if (total != 1)
            throw certificate_failure("SincPolynomial: coefficients sum to " + to_fraction_string(total));
    }
};

namespace poly_ops {

    using Coeffs = std::vector<BigRational>;

    inline Coeffs derivative(const Coeffs& p)
    {
        if (p.size() <= 1)
            return {BigRational(0)};
        Coeffs d(p.size() - 1);
        for (std::size_t k = 1; k < p.size(); ++k)
            d[k - 1] = p[k] * BigRational(k);
        return d;
    }

    inline Coeffs times_y(const Coeffs& p)
    {
        Coeffs out(p.size() + 1);
        out[0] = 0;
        for (std::size_t k = 0; k < p.size(); ++k)
            out[k + 1] = p[k];
        return out;
    }

    inline Coeffs scaled(const Coeffs& p, const BigRational& c)
    {
        Coeffs out(p);
        for (auto& v : out)
            v *= c;
        return out;
    }

    inline void accumulate(Coeffs& acc, const Coeffs& p)
    {
        if (acc.size() < p.size())
            acc.resize(p.size(), BigRational(0));
        for (std::size_t k = 0; k < p.size(); ++k)
            acc[k] += p[k];
    }

    inline void trim(Coeffs& p)
    {
        while (p.size() > 1 && p.back() == 0)
            p.pop_back();
    }

    // (r - yD) p
    inline Coeffs euler_shift(const Coeffs& p, unsigned r)
    {
        Coeffs out = scaled(p, BigRational(r));
        accumulate(out, scaled(times_y(derivative(p)), BigRational(-1)));
        return out;
    }

} // namespace poly_ops

inline SincPolynomial poly_step(const SincPolynomial& P)
{
    using namespace poly_ops;
    if (P.r + 1 > max_poly_r)
        throw size_limit_error("poly_step: r + 1 = " + std::to_string(P.r + 1) + " exceeds " +
                               std::to_string(max_poly_r));
    P.validate();
    const unsigned r = P.r;
    const Coeffs& p = P.coeffs;
    const Coeffs dp = derivative(p);
    const Coeffs ydp = times_y(dp);

    Coeffs acc;
    accumulate(acc, scaled(times_y(euler_shift(euler_shift(p, r), r)), BigRational(4))); // 4y(r-yD)^2
    accumulate(acc, scaled(euler_shift(ydp, r), BigRational(8)));                       // 8(r-yD)yD
    accumulate(acc, scaled(ydp, BigRational(2)));                                       // 2yD
    accumulate(acc, scaled(p, BigRational(2 * r)));                                     // 2r
    accumulate(acc, scaled(times_y(derivative(dp)), BigRational(4)));                   // 4yD^2
    accumulate(acc, scaled(dp, BigRational(2)));                                        // 2D

    // (2r-1)!/(2r+1)!
    const BigRational scale(BigInt(1), BigInt(2 * r) * BigInt(2 * r + 1));
    Coeffs next = scaled(acc, scale);
    trim(next);
    return {r + 1, std::move(next)};
}

inline SincPolynomial poly_f(unsigned r)
{
    if (r < 1 || r > max_poly_r)
        throw size_limit_error("poly_f: r must lie in [1, " + std::to_string(max_poly_r) + "]");
    SincPolynomial P;
    while (P.r < r)
        P = poly_step(P);
    P.validate();
    return P;
}

// Horner evaluation with float coefficients converted once.
class PolyEvaluator {
public:
    explicit PolyEvaluator(const SincPolynomial& P)
    {
        coeffs_.reserve(P.coeffs.size());
        for (const auto& c : P.coeffs)
            coeffs_.push_back(to_double(c));
    }

    double at_y(double y) const
    {
        double acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * y + *it;
        return acc;
    }

    double operator()(double x) const
    {
        const double c = cos_pi(x);
        return at_y(c * c);
    }

private:
    std::vector<double> coeffs_;
};

inline double poly_eval(const SincPolynomial& P, double x)
{
    if (!std::isfinite(x) || x < 0.0 || x > 1.0)
        throw domain_error("poly_eval: x must lie in [0, 1]");
    return PolyEvaluator(P)(x);
}

struct MinCertificate {
    BigRational min_value;
    std::string location;
};

// Nonnegative coefficients make P increasing on y in [0, 1], so the minimum
// is P(0) = coeffs[0], reached at y = 0, i.e. x = 1/2.
inline MinCertificate poly_min_certificate(const SincPolynomial& P)
{
    for (std::size_t k = 0; k < P.coeffs.size(); ++k)
        if (P.coeffs[k] < 0)
            throw certificate_failure("poly_min_certificate: coefficient of y^" + std::to_string(k) +
                                      " is negative (" + to_fraction_string(P.coeffs[k]) + ")");
    if (P.coeffs.empty())
        throw certificate_failure("poly_min_certificate: empty polynomial");
    return {P.coeffs.front(), "minimum of P over [0,1] at y=0, hence f_r minimum at x=1/2"};
}

} // namespace sincsum
