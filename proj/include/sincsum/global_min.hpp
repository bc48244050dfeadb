#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "sincsum/error.hpp"
#include "sincsum/evaluate.hpp"
#include "sincsum/exactpoly.hpp"
#include "sincsum/sinc_core.hpp"
#include "sincsum/specfun.hpp"

namespace sincsum {

enum class CheckStatus { passed, violated, inconclusive };

inline const char* to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::passed:
        return "passed";
    case CheckStatus::violated:
        return "violated";
    default:
        return "inconclusive";
    }
}

struct GlobalMinReport {
    double r = 0.0;
    int grid_n = 0;
    double tol = 0.0;
    CheckStatus status = CheckStatus::passed;
    double min_value = 0.0;     // f_r(1/2)
    double worst_margin = 0.0;  // min over the checks of (slack left before the claim fails)
    std::optional<double> witness;
    double eval_error = 0.0;    // largest tail bound + method spread seen
    double worst_antisymmetry = 0.0;
    std::string detail;
};

namespace detail {

    struct ConsensusEvaluator {
        double r;
        EvalConfig cfg;
        std::optional<PolyEvaluator> poly;

        ConsensusEvaluator(double r_, double tol) : r(r_)
        {
            cfg.target_tol = std::clamp(tol / 4.0, 1e-13, 1e-10);
            if (polynomial_applies(r))
                poly.emplace(poly_f(static_cast<unsigned>(r)));
        }

        // value and error (tail bound + spread among methods)
        std::pair<double, double> operator()(double x) const
        {
            const DirectResult d = f_direct({r, x}, cfg);
            double lo = d.value, hi = d.value;
            const double hz = f_hurwitz({r, x});
            lo = std::min(lo, hz);
            hi = std::max(hi, hz);
            if (poly) {
                const double pv = (*poly)(x);
                lo = std::min(lo, pv);
                hi = std::max(hi, pv);
            }
            return {d.value, d.tail_bound + (hi - lo)};
        }
    };

} // namespace detail

// Grid check that 1/2 minimizes f_r, plus derivative signs on either side.
inline GlobalMinReport verify_global_min(double r, int grid_n, double tol)
{
    if (!std::isfinite(r) || r < 1.0)
        throw domain_error("verify_global_min: r must be >= 1");
    if (grid_n < 16)
        throw domain_error("verify_global_min: grid_n must be >= 16");
    if (!(tol > 0.0) || !std::isfinite(tol))
        throw domain_error("verify_global_min: tol must be positive");

    GlobalMinReport rep;
    rep.r = r;
    rep.grid_n = grid_n;
    rep.tol = tol;
    const detail::ConsensusEvaluator f(r, tol);
    try {
        const auto [fmin, emin] = f(0.5);
        rep.min_value = fmin;
        rep.eval_error = emin;
        rep.worst_margin = std::numeric_limits<double>::infinity();

        bool violated = false;
        auto record = [&](double margin, double x) {
            if (margin < rep.worst_margin) {
                rep.worst_margin = margin;
                if (margin < 0.0)
                    rep.witness = x;
            }
            if (margin < 0.0)
                violated = true;
        };

        const int n = grid_n;
        std::vector<double> deriv(n, 0.0);
        for (int i = 0; i < n; ++i) {
            const double x = static_cast<double>(i) / (n - 1);
            const auto [v, e] = f(x);
            rep.eval_error = std::max(rep.eval_error, e);
            record(v - fmin + tol, x);
            if (x > 0.0 && x < 1.0 && x != 0.5) {
                const double d = f_deriv_analytic({r, x});
                deriv[i] = d;
                record(x < 0.5 ? tol - d : d + tol, x);
            }
        }
        for (int i = 1; i < n - 1; ++i)
            rep.worst_antisymmetry = std::max(rep.worst_antisymmetry, std::fabs(deriv[i] + deriv[n - 1 - i]));

        if (rep.worst_antisymmetry > 1e-9) {
            rep.status = CheckStatus::violated;
            rep.detail = "derivative antisymmetry above 1e-9";
            return rep;
        }
        if (violated && rep.worst_margin < -2.0 * rep.eval_error) {
            rep.status = CheckStatus::violated;
            rep.detail = "grid value below f(1/2) - tol";
            return rep;
        }
        if (violated || tol < 4.0 * rep.eval_error) {
            rep.status = CheckStatus::inconclusive;
            rep.detail = "tol below the achievable evaluation error";
            return rep;
        }
        rep.status = CheckStatus::passed;
        return rep;
    } catch (const precision_unreachable& e) {
        rep.status = CheckStatus::inconclusive;
        rep.detail = e.what();
        return rep;
    }
}

} // namespace sincsum
