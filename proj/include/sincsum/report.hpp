#pragma once

// The full verification suite and its JSON report. Reports are sorted by
// check id; timings are left out unless asked for, so two runs with the
// same options produce identical bytes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sincsum/certify.hpp"
#include "sincsum/corpus.hpp"
#include "sincsum/exactpoly.hpp"
#include "sincsum/global_min.hpp"
#include "sincsum/majorization.hpp"
#include "sincsum/manifest.hpp"
#include "sincsum/proof_chain.hpp"

namespace sincsum {

struct VerificationReport {
    std::string check_id;
    std::string status; // certified | passed | violated | inconclusive
    double worst_margin = 0.0;
    std::optional<double> witness;
    std::int64_t boxes_visited = 0;
    std::optional<double> wall_time_ms;
    std::string detail;

    bool ok() const { return status == "certified" || status == "passed"; }
};

inline nlohmann::json to_json(const VerificationReport& r)
{
    nlohmann::json j;
    j["check_id"] = r.check_id;
    j["status"] = r.status;
    j["worst_margin"] = std::isfinite(r.worst_margin) ? nlohmann::json(r.worst_margin) : nlohmann::json(nullptr);
    j["witness"] = r.witness ? nlohmann::json(*r.witness) : nlohmann::json(nullptr);
    j["boxes_visited"] = r.boxes_visited;
    j["wall_time_ms"] = r.wall_time_ms ? nlohmann::json(*r.wall_time_ms) : nlohmann::json(nullptr);
    if (!r.detail.empty())
        j["detail"] = r.detail;
    return j;
}

struct VerifyOptions {
    double tol = 1e-10;
    std::uint64_t seed = 0;
    int grid = 1024;
    bool timings = false;
    std::string manifest_path; // empty: skip the manifest check
    int max_depth = 40;
    std::int64_t majorization_trials = 100'000;
};

inline const std::vector<double>& global_min_exponents()
{
    static const std::vector<double> rs{1.0, 1.25, 1.5, 2.0, 3.0, 5.0, 8.0, std::pow(1.02, 256)};
    return rs;
}

namespace detail {

    template <class F>
    VerificationReport timed(bool timings, F&& run)
    {
        const auto t0 = std::chrono::steady_clock::now();
        VerificationReport r = run();
        if (timings)
            r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return r;
    }

    inline std::string exponent_label(double r)
    {
        if (r == std::pow(1.02, 256))
            return "1.02^256";
        return format_double(r);
    }

} // namespace detail

inline VerificationReport report_for(const CertifiedInequality& q)
{
    VerificationReport r;
    r.check_id = "corpus/" + q.id;
    r.status = to_string(q.status);
    r.worst_margin = q.worst_margin;
    r.witness = q.witness;
    r.boxes_visited = q.boxes_visited;
    r.detail = q.diagnostic;
    return r;
}

inline std::vector<VerificationReport> run_verify_suite(const VerifyOptions& opt)
{
    std::vector<VerificationReport> out;

    for (const auto& q : corpus())
        out.push_back(detail::timed(opt.timings, [&] { return report_for(certify(q, opt.max_depth)); }));

    if (!opt.manifest_path.empty()) {
        out.push_back(detail::timed(opt.timings, [&] {
            VerificationReport r;
            r.check_id = "manifest";
            try {
                const ManifestReport m = manifest_check(load_manifest(opt.manifest_path));
                r.status = m.passed ? "passed" : "violated";
                r.worst_margin = equality_tolerance - m.worst_equality_residual;
                for (const auto& id : m.orphans)
                    r.detail += "orphan " + id + "; ";
                for (const auto& id : m.missing)
                    r.detail += "unlisted " + id + "; ";
                for (const auto& id : m.duplicates)
                    r.detail += "duplicate " + id + "; ";
                for (const auto& s : m.mismatches)
                    r.detail += "mismatch " + s + "; ";
                for (const auto& s : m.not_tight)
                    r.detail += "not tight " + s + "; ";
            } catch (const std::exception& e) {
                r.status = "violated";
                r.detail = e.what();
            }
            return r;
        }));
    }

    for (double rr : global_min_exponents()) {
        out.push_back(detail::timed(opt.timings, [&] {
            const GlobalMinReport g = verify_global_min(rr, opt.grid, opt.tol);
            VerificationReport r;
            r.check_id = "global_min/r=" + detail::exponent_label(rr);
            r.status = to_string(g.status);
            r.worst_margin = g.worst_margin;
            r.witness = g.witness;
            r.boxes_visited = g.grid_n;
            r.detail = g.detail;
            return r;
        }));
    }

    out.push_back(detail::timed(opt.timings, [&] {
        const MajorizationReport l = lemma3_property(opt.majorization_trials, opt.seed);
        VerificationReport r;
        r.check_id = "majorization";
        r.status = l.violations == 0 ? "passed" : "violated";
        r.worst_margin = l.tightest_margin;
        r.boxes_visited = l.trials;
        if (l.violations)
            r.detail = std::to_string(l.violations) + " violations";
        return r;
    }));

    for (double rr : {1.0, 1.5, 2.0, 4.0}) {
        out.push_back(detail::timed(opt.timings, [&] {
            VerificationReport r;
            r.check_id = "proof_chain/r=" + detail::exponent_label(rr);
            r.status = "passed";
            r.worst_margin = std::numeric_limits<double>::infinity();
            for (int k = 1; k <= 19; ++k) {
                const double x = k / 20.0;
                const ProofChainWitness w = proof_chain(rr, x, 64);
                ++r.boxes_visited;
                r.worst_margin = std::min(r.worst_margin, w.worst_margin());
                if (!w.passed() && r.status == "passed") {
                    r.status = "violated";
                    r.witness = x;
                    for (const auto& c : w.checks)
                        if (!c.passed)
                            r.detail += c.name + " ";
                }
            }
            return r;
        }));
    }

    out.push_back(detail::timed(opt.timings, [&] {
        VerificationReport r;
        r.check_id = "poly_min_certificate";
        r.status = "passed";
        SincPolynomial P;
        double smallest = 1.0;
        for (unsigned k = 1; k <= 50; ++k) {
            if (k > 1)
                P = poly_step(P);
            try {
                smallest = std::min(smallest, to_double(poly_min_certificate(P).min_value));
            } catch (const certificate_failure& e) {
                r.status = "violated";
                r.witness = k;
                r.detail = e.what();
                break;
            }
            ++r.boxes_visited;
        }
        r.worst_margin = smallest;
        return r;
    }));

    std::sort(out.begin(), out.end(),
              [](const VerificationReport& a, const VerificationReport& b) { return a.check_id < b.check_id; });
    return out;
}

// 0: all passed, 1: something violated, 2: otherwise inconclusive
inline int suite_exit_code(const std::vector<VerificationReport>& reports)
{
    bool inconclusive = false;
    for (const auto& r : reports) {
        if (r.status == "violated")
            return 1;
        if (!r.ok())
            inconclusive = true;
    }
    return inconclusive ? 2 : 0;
}

inline nlohmann::json to_json(const std::vector<VerificationReport>& reports)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports)
        arr.push_back(to_json(r));
    return {{"exit_code", suite_exit_code(reports)}, {"checks", arr}};
}

} // namespace sincsum
