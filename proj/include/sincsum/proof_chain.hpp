#pragma once

// Numerical instance of the majorization argument for the minimum at 1/2.
// With h = sinc^2,
//   s_m(x)  = h(x + m) + h(x - (m + 1)),          m = 0, 1, ...
//   s~_0(x) = (h(x)^r + h(x - 1)^r)^(1/r),
// x_m = s_m(x), y_m = s_m(1/2), and the chain of inequalities that lets the
// convex map v -> v^r through with threshold t = 4/pi^2.

#include <cmath>
#include <string>
#include <vector>

#include "sincsum/error.hpp"
#include "sincsum/sinc_core.hpp"
#include "sincsum/summation.hpp"

namespace sincsum {

inline constexpr double chain_tau = 1e-12;

struct ChainCheck {
    std::string name;
    double margin; // >= 0 means the inequality holds within its tolerance
    bool passed;
};

struct ProofChainWitness {
    double r = 1.0;
    double x = 0.0;
    int M = 0;
    std::vector<double> x_seq;
    std::vector<double> y_seq;
    double x0_tilde = 0.0;
    double y0_tilde = 0.0;
    double threshold = 4.0 / (pi * pi);
    double tail_tol = 0.0;
    std::vector<ChainCheck> checks;

    bool passed() const
    {
        for (const auto& c : checks)
            if (!c.passed)
                return false;
        return !checks.empty();
    }

    double worst_margin() const
    {
        double w = std::numeric_limits<double>::infinity();
        for (const auto& c : checks)
            w = std::min(w, c.margin);
        return w;
    }
};

inline double pair_sum(double x, int m)
{
    return h(x + m) + h(x - (m + 1));
}

inline ProofChainWitness proof_chain(double r, double x, int M)
{
    if (!std::isfinite(r) || r < 1.0)
        throw domain_error("proof_chain: r must be >= 1");
    if (!(x >= 0.0 && x <= 1.0))
        throw domain_error("proof_chain: x must lie in [0, 1]");
    if (M < 8)
        throw domain_error("proof_chain: M must be >= 8");

    ProofChainWitness w;
    w.r = r;
    w.x = x;
    w.M = M;
    // each full sum equals 1; the omitted part beyond M is at most
    // sum_{m > M} 2 / (pi^2 m^2) <= 2 / (pi^2 M)
    w.tail_tol = 2.0 / (pi * pi * M);
    for (int m = 0; m <= M; ++m) {
        w.x_seq.push_back(pair_sum(x, m));
        w.y_seq.push_back(pair_sum(0.5, m));
    }
    auto tilde = [r](double v) { return std::pow(std::pow(h(v), r) + std::pow(h(v - 1.0), r), 1.0 / r); };
    w.x0_tilde = tilde(x);
    w.y0_tilde = tilde(0.5);

    auto check = [&](std::string name, double margin, double tol) {
        w.checks.push_back({std::move(name), margin + tol, margin + tol >= 0.0});
    };
    const auto& xs = w.x_seq;
    const auto& ys = w.y_seq;

    // x_0 >= y_0 and x_i <= y_i
    check("head_dominates", xs[0] - ys[0], chain_tau);
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= M; ++i)
        worst = std::min(worst, ys[i] - xs[i]);
    check("tail_dominated", worst, chain_tau);

    // equal totals
    CompensatedSum sx, sy;
    for (int i = 0; i <= M; ++i) {
        sx.add(xs[i]);
        sy.add(ys[i]);
    }
    check("equal_totals", w.tail_tol - std::fabs(sx.value() - sy.value()), chain_tau);

    // partial sums of x dominate
    CompensatedSum px, py;
    worst = std::numeric_limits<double>::infinity();
    for (int n = 0; n <= M; ++n) {
        px.add(xs[n]);
        py.add(ys[n]);
        worst = std::min(worst, px.value() - py.value());
    }
    check("partial_sums", worst, chain_tau);

    // x~_0 - x_0 >= y~_0 - y_0
    check("tilde_gap", (w.x0_tilde - xs[0]) - (w.y0_tilde - ys[0]), chain_tau);

    // x~_0 + x_1 + ... + x_n >= y~_0 + y_1 + ... + y_n
    CompensatedSum tx, ty;
    tx.add(w.x0_tilde);
    ty.add(w.y0_tilde);
    worst = tx.value() - ty.value();
    for (int n = 1; n <= M; ++n) {
        tx.add(xs[n]);
        ty.add(ys[n]);
        worst = std::min(worst, tx.value() - ty.value());
    }
    check("tilde_partial_sums", worst, chain_tau);

    // x~_0 >= y~_0
    check("tilde_head", w.x0_tilde - w.y0_tilde, chain_tau);

    // threshold separation: y~_0 > t > y_i
    check("threshold_head", w.y0_tilde - w.threshold, 0.0);
    double gap = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= M; ++i)
        gap = std::min(gap, w.threshold - ys[i]);
    check("threshold_tail", gap, 0.0);
    w.checks[w.checks.size() - 2].passed = w.y0_tilde > w.threshold;
    w.checks.back().passed = gap > 0.0;

    // conclusion for g(v) = v^r
    CompensatedSum gx, gy;
    gx.add(std::pow(w.x0_tilde, r));
    gy.add(std::pow(w.y0_tilde, r));
    worst = gx.value() - gy.value();
    for (int n = 1; n <= M; ++n) {
        gx.add(std::pow(xs[n], r));
        gy.add(std::pow(ys[n], r));
        worst = std::min(worst, gx.value() - gy.value());
    }
    check("conclusion_powers", worst, chain_tau);
    return w;
}

} // namespace sincsum
