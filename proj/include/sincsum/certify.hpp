#pragma once

// Sign certification of one-variable expressions by adaptive bisection.
//
// A box is closed as soon as one of these proves the claim on it:
//   1. plain interval enclosure;
//   2. first derivative of one sign (then the minimum sits at an endpoint);
//   3. mean-value form around an anchor;
//   4. second-order Taylor form around an anchor;
//   5. concavity (minimum at an endpoint) or convexity with a monotone start.
// Boxes that touch an equality point only need to clear -eps_cert.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sincsum/dual.hpp"
#include "sincsum/error.hpp"
#include "sincsum/interval.hpp"

namespace sincsum {

enum class Claim { nonnegative, nonpositive };
enum class CertStatus { unchecked, certified, violated, inconclusive };

inline const char* to_string(Claim c)
{
    return c == Claim::nonnegative ? "nonnegative" : "nonpositive";
}

inline const char* to_string(CertStatus s)
{
    switch (s) {
    case CertStatus::certified:
        return "certified";
    case CertStatus::violated:
        return "violated";
    case CertStatus::inconclusive:
        return "inconclusive";
    default:
        return "unchecked";
    }
}

inline constexpr double eps_cert = 1e-13;
inline constexpr int max_certify_depth = 60;

// One expression, instantiated for every scalar the engine needs.
struct Expression {
    std::function<double(double)> point;
    std::function<Interval(const Interval&)> enclose;
    std::function<Dual1(const Dual1&)> enclose_d1;
    std::function<Dual2(const Dual2&)> enclose_d2;
};

template <class F>
Expression make_expression(F f)
{
    return {[f](double x) { return f(x); }, [f](const Interval& x) { return f(x); },
            [f](const Dual1& x) { return f(x); }, [f](const Dual2& x) { return f(x); }};
}

struct CertifiedInequality {
    std::string id;
    Interval domain;
    Expression expression;
    Claim claim = Claim::nonnegative;
    std::vector<double> equality_points;
    bool tight_everywhere = false; // the claim holds with equality on the whole domain
    std::string statement;

    CertStatus status = CertStatus::unchecked;
    double min_width = 1e-8;
    std::optional<double> witness;
    std::string diagnostic;
    double worst_margin = 0.0;
    std::int64_t boxes_visited = 0;
};

namespace detail {

    struct Box {
        double lo, hi;
        int depth;
    };

    class Certifier {
    public:
        explicit Certifier(const CertifiedInequality& q) : q_(q), sign_(q.claim == Claim::nonnegative ? 1.0 : -1.0) {}

        // claimed-sign version of the expression
        Interval g(const Interval& x) const { return scale(q_.expression.enclose(x)); }
        Dual1 g1(const Interval& x) const
        {
            const Dual1 r = q_.expression.enclose_d1(seed1(x));
            return {scale(r.v), scale(r.d)};
        }
        Dual2 g2(const Interval& x) const { return q_.expression.enclose_d2(seed2(x)); }
        Interval g2_second(const Interval& x) const { return scale(g2(x).d.d); }

        bool touches_equality(double lo, double hi) const
        {
            if (q_.tight_everywhere)
                return true;
            return std::any_of(q_.equality_points.begin(), q_.equality_points.end(),
                               [&](double e) { return lo <= e && e <= hi; });
        }

        std::optional<double> anchor_in(double lo, double hi) const
        {
            for (double e : q_.equality_points)
                if (lo <= e && e <= hi)
                    return e;
            return std::nullopt;
        }

        double threshold(double lo, double hi) const { return touches_equality(lo, hi) ? -eps_cert : 0.0; }

        // A point where the claim provably fails.
        bool violated_at(double x) const
        {
            const Interval v = g(Interval(x));
            if (!v.is_finite())
                return false;
            return v.hi < threshold(x, x);
        }

        // Lower bound for g on [lo, hi], best of the available forms; -inf if
        // no finite enclosure was found.
        double lower_bound(double lo, double hi, double need) const
        {
            const Interval X(lo, hi);
            double best = -std::numeric_limits<double>::infinity();
            auto take = [&](const Interval& v) {
                if (v.is_finite())
                    best = std::max(best, v.lo);
                return best >= need;
            };

            if (take(g(X)))
                return best;

            const Dual1 d = g1(X);
            const Interval dX = d.d;
            if (dX.is_finite()) {
                if (dX.lo >= 0.0 && take(g(Interval(lo))))
                    return best;
                if (dX.hi <= 0.0 && take(g(Interval(hi))))
                    return best;
            }

            const double c = anchor_in(lo, hi).value_or(X.mid());
            const Interval C(c);
            const Dual1 dc = g1(C);
            const Interval off = X - C;
            if (dX.is_finite() && take(dc.v + dX * off))
                return best;

            const Interval ddX = g2_second(X);
            if (!ddX.is_finite())
                return best;
            if (take(dc.v + dc.d * off + Interval(0.5) * ddX * sqr(off)))
                return best;
            if (ddX.hi <= 0.0) {
                // concave: minimum at an endpoint
                const Interval a = g(Interval(lo)), b = g(Interval(hi));
                if (a.is_finite() && b.is_finite() && take(Interval(std::min(a.lo, b.lo))))
                    return best;
            }
            if (ddX.lo >= 0.0) {
                // convex: g' is increasing, so its sign at the ends settles monotonicity
                const Interval da = g1(Interval(lo)).d, db = g1(Interval(hi)).d;
                if (da.lo >= 0.0 && take(g(Interval(lo))))
                    return best;
                if (db.hi <= 0.0 && take(g(Interval(hi))))
                    return best;
            }
            return best;
        }

    private:
        Interval scale(const Interval& v) const { return sign_ > 0 ? v : -v; }

        const CertifiedInequality& q_;
        double sign_;
    };

} // namespace detail

// Runs the bisection and returns a copy with status, witness and counters set.
inline CertifiedInequality certify(CertifiedInequality ineq, int max_depth, std::int64_t max_boxes = 2'000'000)
{
    if (max_depth < 1 || max_depth > max_certify_depth)
        throw domain_error("certify: max_depth must lie in [1, 60]");
    if (!(ineq.min_width > 0.0))
        throw domain_error("certify: min_width must be positive");
    if (!ineq.expression.enclose || !ineq.expression.enclose_d1 || !ineq.expression.enclose_d2)
        throw domain_error("certify: expression is not evaluable");

    const detail::Certifier cert(ineq);
    ineq.witness.reset();
    ineq.diagnostic.clear();
    ineq.boxes_visited = 0;
    ineq.worst_margin = std::numeric_limits<double>::infinity();

    for (double x : {ineq.domain.lo, ineq.domain.mid(), ineq.domain.hi}) {
        if (cert.violated_at(x)) {
            ineq.status = CertStatus::violated;
            ineq.witness = x;
            ineq.worst_margin = cert.g(Interval(x)).hi;
            return ineq;
        }
    }

    bool undecided = false;
    std::vector<detail::Box> stack{{ineq.domain.lo, ineq.domain.hi, 0}};
    while (!stack.empty()) {
        const detail::Box box = stack.back();
        stack.pop_back();
        if (++ineq.boxes_visited > max_boxes) {
            undecided = true;
            ineq.diagnostic = "box budget exhausted";
            break;
        }
        const double need = cert.threshold(box.lo, box.hi);
        const double lb = cert.lower_bound(box.lo, box.hi, need);
        if (lb >= need) {
            ineq.worst_margin = std::min(ineq.worst_margin, lb);
            continue;
        }
        const double mid = box.lo + 0.5 * (box.hi - box.lo);
        if (cert.violated_at(mid)) {
            ineq.status = CertStatus::violated;
            ineq.witness = mid;
            ineq.worst_margin = cert.g(Interval(mid)).hi;
            return ineq;
        }
        if (box.depth >= max_depth || box.hi - box.lo <= ineq.min_width || mid <= box.lo || mid >= box.hi) {
            undecided = true;
            ineq.worst_margin = std::min(ineq.worst_margin, lb);
            if (ineq.diagnostic.empty()) {
                ineq.diagnostic = std::isfinite(lb) ? "undecided box" : "non-finite enclosure";
                ineq.diagnostic += " on [" + std::to_string(box.lo) + ", " + std::to_string(box.hi) + "]";
            }
            continue; // keep looking for a violation elsewhere
        }
        stack.push_back({mid, box.hi, box.depth + 1});
        stack.push_back({box.lo, mid, box.depth + 1});
    }
    ineq.status = undecided ? CertStatus::inconclusive : CertStatus::certified;
    return ineq;
}

} // namespace sincsum
