#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "sincsum/exactpoly.hpp"
#include "sincsum/sinc_core.hpp"
#include "sincsum/specfun.hpp"

namespace sincsum {

struct ConsensusResult {
    double value;         // the direct sum (carries the proven bound)
    double tail_bound;    // of the direct sum
    double method_spread; // max pairwise gap among the methods that apply
    std::vector<EvalMode> methods;
};

inline bool polynomial_applies(double r)
{
    return r == std::floor(r) && r >= 1.0 && r <= max_poly_r;
}

// Direct sum, Hurwitz form and (integer r) the exact polynomial side by side.
inline ConsensusResult f_consensus(const EvalPoint& p, const EvalConfig& cfg = {})
{
    p.validate();
    const DirectResult direct = f_direct(p, cfg);
    std::vector<double> values{direct.value};
    std::vector<EvalMode> methods{EvalMode::direct};
    values.push_back(f_hurwitz(p));
    methods.push_back(EvalMode::hurwitz);
    if (polynomial_applies(p.r)) {
        values.push_back(poly_eval(poly_f(static_cast<unsigned>(p.r)), p.x));
        methods.push_back(EvalMode::polynomial);
    }
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    return {direct.value, direct.tail_bound, *hi - *lo, methods};
}

// Single entry point keyed on cfg.mode.
inline double evaluate(const EvalPoint& p, const EvalConfig& cfg = {})
{
    switch (cfg.mode) {
    case EvalMode::direct:
        return f_direct(p, cfg).value;
    case EvalMode::hurwitz:
        return f_hurwitz(p);
    case EvalMode::polynomial:
        p.validate();
        if (!polynomial_applies(p.r))
            throw domain_error("polynomial mode needs an integer r in [1, 100]");
        return poly_eval(poly_f(static_cast<unsigned>(p.r)), p.x);
    case EvalMode::consensus:
        return f_consensus(p, cfg).value;
    }
    return f_direct(p, cfg).value;
}

} // namespace sincsum
