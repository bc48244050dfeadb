// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sincsum/sincsum.hpp>

#include "sincsum_cli.hpp"

using namespace sincsum;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
};

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

BigRational q(long long n, long long d = 1)
{
    return BigRational(n, d);
}

Outcome polynomial_table()
{
    const std::map<unsigned, std::vector<BigRational>> table{
        {1, {q(1)}},
        {2, {q(1, 3), q(2, 3)}},
        {3, {q(2, 15), q(11, 15), q(2, 15)}},
        {4, {q(17, 315), q(4, 7), q(38, 105), q(4, 315)}},
        {5, {q(62, 2835), q(1072, 2835), q(484, 945), q(247, 2835), q(2, 2835)}},
    };
    Outcome o;
    for (const auto& [r, want] : table)
        if (poly_f(r).coeffs != want) {
            o.pass = false;
            o.detail += "r=" + std::to_string(r) + " differs; ";
        }
    if (o.pass)
        o.detail = "r=1..5 exact";
    return o;
}

Outcome partition_of_unity()
{
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    EvalConfig cfg;
    cfg.target_tol = 1e-12;
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i)
        worst = std::max(worst, std::fabs(f_direct({1.0, unit(rng)}, cfg).value - 1.0));
    return {worst <= 1e-11, "max |f_1 - 1| = " + sci(worst)};
}

Outcome constant_cross_check()
{
    const auto B = bernoulli(30);
    Outcome o;
    double worst = 0.0;
    for (unsigned n = 1; n <= 15; ++n) {
        BigRational fact(1);
        for (unsigned k = 2; k <= 2 * n; ++k)
            fact *= k;
        const boost::multiprecision::cpp_int p = boost::multiprecision::cpp_int(1) << (2 * n);
        BigRational b = B[2 * n];
        if (b < 0)
            b = -b;
        const BigRational want = BigRational(p - 1) * BigRational(p) * b / fact;
        const BigRational exact = c_q_exact(n);
        if (exact != want || poly_f(n).coeffs.front() != want) {
            o.pass = false;
            o.detail += "n=" + std::to_string(n) + " exact mismatch; ";
        }
        worst = std::max(worst, std::fabs(c_q(2.0 * n) - to_double(want)));
    }
    if (c_q_exact(2) != q(1, 3) || c_q_exact(3) != q(2, 15) || c_q_exact(4) != q(17, 315))
        o.pass = false, o.detail += "tabulated values differ; ";
    if (worst > 1e-13)
        o.pass = false;
    o.detail += "float gap " + sci(worst);
    return o;
}

Outcome minimum_at_half()
{
    Outcome o;
    for (double r : global_min_exponents()) {
        const auto rep = verify_global_min(r, 4096, 1e-9);
        if (rep.status != CheckStatus::passed) {
            o.pass = false;
            o.detail += "r=" + sci(r) + " " + to_string(rep.status) + " (" + rep.detail + "); ";
        }
    }
    SincPolynomial P;
    for (unsigned k = 1; k <= 50; ++k) {
        if (k > 1)
            P = poly_step(P);
        try {
            poly_min_certificate(P);
        } catch (const certificate_failure& e) {
            o.pass = false;
            o.detail += e.what();
        }
    }
    if (o.pass)
        o.detail = std::to_string(global_min_exponents().size()) + " exponents on 4096 points, r=1..50 exact";
    return o;
}

Outcome inequality_corpus()
{
    int certified = 0, violated = 0, inconclusive = 0;
    std::int64_t boxes = 0;
    std::string bad;
    for (const auto& e : corpus()) {
        const auto res = certify(e, 40);
        boxes += res.boxes_visited;
        if (res.status == CertStatus::certified)
            ++certified;
        else {
            (res.status == CertStatus::violated ? violated : inconclusive)++;
            bad += e.id + " ";
        }
    }
    return {violated == 0 && inconclusive == 0,
            std::to_string(certified) + " certified, " + std::to_string(violated) + " violated, " +
                std::to_string(inconclusive) + " inconclusive, " + std::to_string(boxes) + " boxes " + bad};
}

Outcome majorization_property()
{
    const auto rep = lemma3_property(100000, 42);
    return {rep.violations == 0, std::to_string(rep.trials) + " trials, " + std::to_string(rep.violations) +
                                     " violations, tightest " + sci(rep.tightest_margin)};
}

Outcome chain_witness()
{
    Outcome o;
    double worst = std::numeric_limits<double>::infinity();
    for (double r : {1.0, 1.5, 2.0, 4.0})
        for (int k = 1; k <= 19; ++k) {
            const auto w = proof_chain(r, k / 20.0, 64);
            worst = std::min(worst, w.worst_margin());
            if (!w.passed()) {
                o.pass = false;
                o.detail += "r=" + sci(r) + " x=" + sci(k / 20.0) + "; ";
            }
        }
    o.detail += "worst margin " + sci(worst);
    return o;
}

Outcome method_consensus()
{
    EvalConfig cfg;
    cfg.target_tol = 1e-12;
    double gap = 0.0;
    for (unsigned r : {2u, 3u, 4u, 5u, 8u, 16u}) {
        const PolyEvaluator P(poly_f(r));
        for (int i = 0; i < 128; ++i) {
            const double x = i / 127.0;
            const double a = f_direct({double(r), x}, cfg).value, b = f_hurwitz({double(r), x}), c = P(x);
            gap = std::max({gap, std::fabs(a - b), std::fabs(a - c), std::fabs(b - c)});
        }
    }
    double half_gap = 0.0;
    for (unsigned n : {1u, 2u, 3u})
        for (int i = 1; i < 127; ++i) {
            const double x = i / 127.0;
            half_gap = std::max(half_gap, std::fabs(f_half_integer_polygamma(n, x) - f_hurwitz({n + 0.5, x})));
        }
    return {gap <= 1e-10 && half_gap <= 1e-10, "integer gap " + sci(gap) + ", half-integer gap " + sci(half_gap)};
}

Outcome gradient_check()
{
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> rd(1.0, 8.0), xd(0.05, 0.95);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const EvalPoint p{rd(rng), xd(rng)};
        const double an = f_deriv_analytic(p), fd = f_deriv_fd(p, 1e-4);
        worst = std::max(worst, std::fabs(fd - an) / std::max(std::fabs(an), 1.0));
    }
    return {worst <= 1e-6, "max relative gap " + sci(worst)};
}

Outcome transference()
{
    Outcome o;
    const double f21 = transference_factor({2.0, 1}).factor, f41 = transference_factor({4.0, 1}).factor;
    if (std::fabs(f21 - 1.0) > 1e-12 || std::fabs(f41 - std::pow(3.0, 0.25)) > 1e-12)
        o.pass = false, o.detail += "factor(2,1)=" + sci(f21) + " factor(4,1)=" + sci(f41) + "; ";
    double prev = std::numeric_limits<double>::infinity(), slack = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 124; ++i) {
        const double qq = 2.0 + 0.5 * i;
        for (unsigned d : {1u, 2u, 3u})
            slack = std::min(slack, std::pow(pi / 2.0, d) + 1e-12 - transference_factor({qq, d}).factor);
        const double l = lq_norm_halfshift(qq);
        if (l > prev || l < 2.0)
            o.pass = false, o.detail += "lq norm at q=" + sci(qq) + "; ";
        prev = l;
    }
    if (slack < 0.0)
        o.pass = false;
    o.detail += "smallest slack to (pi/2)^d " + sci(slack);
    return o;
}

Outcome figure_curves()
{
    std::ostringstream out, err;
    const int code = cli::run({"figure"}, out, err);
    if (code != 0)
        return {false, "figure exited with " + std::to_string(code) + ": " + err.str()};
    std::map<double, std::vector<std::pair<double, double>>> curves;
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        double x, r, f;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &x, &r, &f) == 3)
            curves[r].push_back({x, f});
    }
    Outcome o;
    double asym = 0.0;
    for (const auto& [r, pts] : curves) {
        const std::size_t n = pts.size();
        for (std::size_t i = 0; i < n; ++i)
            asym = std::max(asym, std::fabs(pts[i].second - pts[n - 1 - i].second));
        const auto it = std::min_element(pts.begin(), pts.end(),
                                         [](const auto& a, const auto& b) { return a.second < b.second; });
        double nearest = std::numeric_limits<double>::infinity();
        for (const auto& p : pts)
            nearest = std::min(nearest, std::fabs(p.first - 0.5));
        if (std::fabs(it->first - 0.5) != nearest)
            o.pass = false, o.detail += "r=" + sci(r) + " minimum at x=" + sci(it->first) + "; ";
    }
    if (curves.size() != 9)
        o.pass = false;
    if (asym > 1e-9)
        o.pass = false;
    o.detail += std::to_string(curves.size()) + " curves, asymmetry " + sci(asym);
    return o;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "exact polynomial table", 1.0, polynomial_table},
        {2, "sinc^2 lattice sum equals one", 5.0, partition_of_unity},
        {3, "constant cross-check", 1.0, constant_cross_check},
        {4, "minimum at 1/2", 30.0, minimum_at_half},
        {5, "inequality corpus", 60.0, inequality_corpus},
        {6, "majorization property", 10.0, majorization_property},
        {7, "chain witness", 10.0, chain_witness},
        {8, "cross-method consensus", 20.0, method_consensus},
        {9, "gradient check", 10.0, gradient_check},
        {10, "transference factors", 5.0, transference},
        {11, "figure curves", 10.0, figure_curves},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.budget_s)
            o.pass = false, o.detail += " (over the " + sci(c.budget_s) + " s budget)";
        failed += !o.pass;
        std::printf("%-4s criterion %2d  %-30s %8.3f s  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
