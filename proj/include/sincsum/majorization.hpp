#pragma once

// Randomized check of the convex majorization lemma: if sum x >= sum y and
// there is a threshold t with x_i <= y_i whenever y_i < t and x_i >= y_i
// whenever y_i >= t, then sum g(x) >= sum g(y) for every nondecreasing convex
// g >= 0 on [0, inf).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sincsum/error.hpp"
#include "sincsum/summation.hpp"

namespace sincsum {

enum class ConvexKind { power, expm1, hinge_sq };

struct ConvexFunction {
    ConvexKind kind = ConvexKind::power;
    double param = 2.0; // exponent rho >= 1, or hinge point c

    double operator()(double v) const
    {
        switch (kind) {
        case ConvexKind::power:
            return std::pow(v, param);
        case ConvexKind::expm1:
            return std::expm1(v);
        case ConvexKind::hinge_sq: {
            const double d = std::max(0.0, v - param);
            return d * d;
        }
        }
        return 0.0;
    }

    std::string describe() const
    {
        switch (kind) {
        case ConvexKind::power:
            return "x^" + std::to_string(param);
        case ConvexKind::expm1:
            return "exp(x)-1";
        case ConvexKind::hinge_sq:
            return "max(0,x-" + std::to_string(param) + ")^2";
        }
        return "?";
    }
};

struct MajorizationInstance {
    std::vector<double> x;
    std::vector<double> y;
    double t = 0.0;
    ConvexFunction g;
};

// Do (i) and (ii) hold? slack absorbs the rounding of the generator.
inline bool hypotheses_hold(const MajorizationInstance& in, double slack = 0.0)
{
    if (in.x.size() != in.y.size() || in.x.empty())
        return false;
    CompensatedSum sx, sy;
    for (std::size_t i = 0; i < in.x.size(); ++i) {
        if (in.x[i] < 0.0 || in.y[i] < 0.0)
            return false;
        if (in.y[i] < in.t && in.x[i] > in.y[i])
            return false;
        if (in.y[i] >= in.t && in.x[i] < in.y[i])
            return false;
        sx.add(in.x[i]);
        sy.add(in.y[i]);
    }
    return sx.value() >= sy.value() - slack;
}

// sum g(x) - sum g(y)
inline double majorization_margin(const MajorizationInstance& in)
{
    CompensatedSum s;
    for (double v : in.x)
        s.add(in.g(v));
    for (double v : in.y)
        s.add(-in.g(v));
    return s.value();
}

inline double majorization_scale(const MajorizationInstance& in)
{
    double s = 1.0;
    for (double v : in.y)
        s += std::fabs(in.g(v));
    return s;
}

struct MajorizationReport {
    std::int64_t trials = 0;
    std::int64_t violations = 0;
    double tightest_margin = std::numeric_limits<double>::infinity(); // relative to the instance scale
    std::optional<MajorizationInstance> counterexample;
    std::int64_t equal_instances = 0;
};

namespace detail {

    inline MajorizationInstance random_instance(std::mt19937_64& rng)
    {
        std::uniform_int_distribution<int> size_dist(1, 12);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        MajorizationInstance in;
        const int n = size_dist(rng);
        in.y.resize(n);
        for (auto& v : in.y)
            v = 2.0 * unit(rng);

        // threshold: a random order statistic of y
        std::vector<double> sorted = in.y;
        std::sort(sorted.begin(), sorted.end());
        in.t = sorted[std::uniform_int_distribution<int>(0, n - 1)(rng)];

        in.x = in.y;
        const double mode = unit(rng);
        if (mode >= 0.1) {
            double down = 0.0, up = 0.0;
            std::vector<int> above;
            for (int i = 0; i < n; ++i) {
                const double u = unit(rng) < 0.2 ? 0.0 : unit(rng);
                if (in.y[i] < in.t) {
                    in.x[i] = in.y[i] * (1.0 - u);
                    down += in.y[i] - in.x[i];
                } else {
                    in.x[i] = in.y[i] + u;
                    up += in.x[i] - in.y[i];
                    above.push_back(i);
                }
            }
            // enforce sum x >= sum y by stretching the increments above t
            if (up < down) {
                const double extra = unit(rng) * 0.1;
                if (up > 0.0) {
                    const double f = (down / up) * (1.0 + extra);
                    for (int i : above)
                        in.x[i] = in.y[i] + (in.x[i] - in.y[i]) * f;
                } else {
                    in.x[above.front()] = in.y[above.front()] + down * (1.0 + extra);
                }
            }
        }

        const int which = std::uniform_int_distribution<int>(0, 2)(rng);
        if (which == 0)
            in.g = {ConvexKind::power, 1.0 + 3.0 * unit(rng)};
        else if (which == 1)
            in.g = {ConvexKind::expm1, 0.0};
        else
            in.g = {ConvexKind::hinge_sq, 2.0 * unit(rng)};
        return in;
    }

} // namespace detail

inline MajorizationReport lemma3_property(std::int64_t trials, std::uint64_t seed)
{
    if (trials < 1)
        throw domain_error("lemma3_property: trials must be >= 1");
    std::mt19937_64 rng(seed);
    MajorizationReport rep;
    for (std::int64_t k = 0; k < trials; ++k) {
        const MajorizationInstance in = detail::random_instance(rng);
        ++rep.trials;
        if (in.x == in.y)
            ++rep.equal_instances;
        const double scale = majorization_scale(in);
        if (!hypotheses_hold(in, 1e-12 * scale))
            throw certificate_failure("lemma3_property: generator produced an instance outside the hypotheses");
        const double rel = majorization_margin(in) / scale;
        rep.tightest_margin = std::min(rep.tightest_margin, rel);
        if (rel < -1e-12) {
            ++rep.violations;
            if (!rep.counterexample)
                rep.counterexample = in;
        }
    }
    return rep;
}

} // namespace sincsum
