#pragma once

// Command-line front end. Kept in a header so the tests can drive it
// in-process with string streams.
//
// exit codes: 0 ok, 1 a check was violated, 2 bad input or a check was
// inconclusive, 3 requested precision unreachable, 4 output not writable

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <sincsum/constants.hpp>
#include <sincsum/evaluate.hpp>
#include <sincsum/exactpoly.hpp>
#include <sincsum/report.hpp>
#include <sincsum/specfun.hpp>

namespace sincsum::cli {

enum exit_code : int { ok = 0, violated = 1, bad_input = 2, unreachable = 3, unwritable = 4 };

struct CliConfig {
    std::string subcommand;
    std::optional<double> r, q, x;
    std::optional<int> d;
    int grid = 1024;
    double tol = 1e-10;
    std::uint64_t seed = 0;
    std::string format = "csv";
    std::string output; // empty: standard output
    std::string manifest;
    bool timings = false;
};

// 15 significant digits, locale independent
inline std::string fmt15(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 15);
    return std::string(buf, res.ptr);
}

inline const std::vector<int>& figure_powers()
{
    static const std::vector<int> ks{1, 2, 4, 8, 16, 32, 64, 128, 256};
    return ks;
}

inline double figure_exponent(int k)
{
    return std::pow(1.02, k);
}

struct FigureCurve {
    double r;
    std::vector<double> x, f;
};

inline std::vector<FigureCurve> figure_data(int grid)
{
    std::vector<FigureCurve> curves;
    for (int k : figure_powers()) {
        FigureCurve c{figure_exponent(k), {}, {}};
        for (int i = 0; i < grid; ++i) {
            const double x = static_cast<double>(i) / (grid - 1);
            c.x.push_back(x);
            c.f.push_back(f_hurwitz({c.r, x}));
        }
        curves.push_back(std::move(c));
    }
    return curves;
}

inline void write_svg(std::ostream& os, const std::vector<FigureCurve>& curves)
{
    const double W = 640, H = 400, pad = 40;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    os << "<rect x=\"" << pad << "\" y=\"" << pad << "\" width=\"" << W - 2 * pad << "\" height=\"" << H - 2 * pad
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (const auto& c : curves) {
        os << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1\" points=\"";
        for (std::size_t i = 0; i < c.x.size(); ++i) {
            const double px = pad + c.x[i] * (W - 2 * pad);
            const double py = H - pad - c.f[i] * (H - 2 * pad);
            os << fmt15(px) << ',' << fmt15(py) << (i + 1 < c.x.size() ? " " : "");
        }
        os << "\"><title>r=" << fmt15(c.r) << "</title></polyline>\n";
    }
    os << "</svg>\n";
}

inline int cmd_figure(const CliConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.grid < 2) {
        err << "figure: --grid must be at least 2\n";
        return bad_input;
    }
    const auto curves = figure_data(cfg.grid);
    if (cfg.format == "svg") {
        write_svg(out, curves);
        return ok;
    }
    if (cfg.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& c : curves)
            j.push_back({{"r", c.r}, {"x", c.x}, {"f", c.f}});
        out << j.dump() << '\n';
        return ok;
    }
    out << "x,r,f_r(x)\n";
    for (const auto& c : curves)
        for (std::size_t i = 0; i < c.x.size(); ++i)
            out << fmt15(c.x[i]) << ',' << fmt15(c.r) << ',' << fmt15(c.f[i]) << '\n';
    return ok;
}

inline int cmd_eval(const CliConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (!cfg.r || !cfg.x) {
        err << "eval: --r and --x are required\n";
        return bad_input;
    }
    try {
        EvalConfig ec;
        ec.target_tol = std::min(cfg.tol, 1e-13); // --tol is an upper bound
        const ConsensusResult res = f_consensus({*cfg.r, *cfg.x}, ec);
        if (cfg.format == "json") {
            nlohmann::json methods = nlohmann::json::array();
            for (auto m : res.methods)
                methods.push_back(m == EvalMode::direct ? "direct" : m == EvalMode::hurwitz ? "hurwitz" : "polynomial");
            out << nlohmann::json{{"r", *cfg.r},
                                  {"x", *cfg.x},
                                  {"value", res.value},
                                  {"method_spread", res.method_spread},
                                  {"tail_bound", res.tail_bound},
                                  {"methods", methods}}
                       .dump()
                << '\n';
        } else {
            out << "r,x,value,method_spread\n"
                << fmt15(*cfg.r) << ',' << fmt15(*cfg.x) << ',' << fmt15(res.value) << ','
                << fmt15(res.method_spread) << '\n';
        }
        return ok;
    } catch (const precision_unreachable& e) {
        err << "eval: " << e.what() << " (achieved " << e.achieved_bound() << ")\n";
        return unreachable;
    } catch (const domain_error& e) {
        err << "eval: " << e.what() << '\n';
        return bad_input;
    }
}

inline int cmd_poly(const CliConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (!cfg.r || *cfg.r != std::floor(*cfg.r) || *cfg.r < 1 || *cfg.r > max_poly_r) {
        err << "poly: --r must be an integer in [1, " << max_poly_r << "]\n";
        return bad_input;
    }
    const SincPolynomial P = poly_f(static_cast<unsigned>(*cfg.r));
    const MinCertificate cert = poly_min_certificate(P);
    if (cfg.format == "json") {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& c : P.coeffs)
            coeffs.push_back(to_fraction_string(c));
        out << nlohmann::json{{"r", P.r}, {"coeffs", coeffs}, {"min_value", to_fraction_string(cert.min_value)}}.dump()
            << '\n';
        return ok;
    }
    for (std::size_t i = 0; i < P.coeffs.size(); ++i)
        out << (i ? ", " : "") << to_fraction_string(P.coeffs[i]);
    out << '\n';
    return ok;
}

inline int cmd_constants(const CliConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (!cfg.q) {
        err << "constants: --q is required\n";
        return bad_input;
    }
    const int d = cfg.d.value_or(1);
    if (d < 1) {
        err << "constants: --d must be a positive integer\n";
        return bad_input;
    }
    try {
        const ConstantReport rep = transference_factor({*cfg.q, static_cast<unsigned>(d)});
        if (cfg.format == "json") {
            out << to_json(rep).dump() << '\n';
        } else {
            out << "q,d,c_q,factor,crude,exact_c_q\n"
                << fmt15(rep.q) << ',' << rep.d << ',' << fmt15(rep.c_q) << ',' << fmt15(rep.factor) << ','
                << fmt15(rep.crude) << ',' << (rep.exact_c_q ? to_fraction_string(*rep.exact_c_q) : "") << '\n';
        }
        return ok;
    } catch (const domain_error& e) {
        err << "constants: " << e.what() << '\n';
        return bad_input;
    }
}

inline int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (!(cfg.tol > 0.0) || cfg.grid < 16) {
        err << "verify: --tol must be positive and --grid at least 16\n";
        return bad_input;
    }
    VerifyOptions opt;
    opt.tol = cfg.tol;
    opt.seed = cfg.seed;
    opt.grid = cfg.grid;
    opt.timings = cfg.timings;
    opt.manifest_path = cfg.manifest;
    const auto reports = run_verify_suite(opt);
    out << to_json(reports).dump(2) << '\n';
    return suite_exit_code(reports);
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Periodic sinc-power sums: evaluation, constants and verification", "sincsum"};
    app.require_subcommand(1);
    CliConfig cfg;
#ifdef SINCSUM_DEFAULT_MANIFEST
    cfg.manifest = SINCSUM_DEFAULT_MANIFEST;
#endif

    auto common = [&](CLI::App* sub) {
        sub->add_option("--r", cfg.r, "exponent r");
        sub->add_option("--q", cfg.q, "exponent q = 2r");
        sub->add_option("--d", cfg.d, "dimension");
        sub->add_option("--x", cfg.x, "point in [0, 1]");
        sub->add_option("--grid", cfg.grid, "grid points")->capture_default_str();
        sub->add_option("--tol", cfg.tol, "tolerance")->capture_default_str();
        sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
        sub->add_option("--format", cfg.format, "csv, json or svg")
            ->check(CLI::IsMember({"csv", "json", "svg"}))
            ->capture_default_str();
        sub->add_option("--output", cfg.output, "output file (default: standard output)");
        sub->add_option("--manifest", cfg.manifest, "corpus manifest path");
        sub->add_flag("--timings", cfg.timings, "record wall time per check");
    };
    for (const char* name : {"eval", "poly", "constants", "verify", "figure"}) {
        CLI::App* sub = app.add_subcommand(name);
        common(sub);
        sub->callback([&cfg, name] { cfg.subcommand = name; });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return ok;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return bad_input;
    }

    std::unique_ptr<std::ofstream> file;
    std::ostream* sink = &out;
    if (!cfg.output.empty()) {
        file = std::make_unique<std::ofstream>(cfg.output, std::ios::binary | std::ios::trunc);
        if (!*file) {
            err << "cannot write " << cfg.output << '\n';
            return unwritable;
        }
        sink = file.get();
    }

    int code = bad_input;
    if (cfg.subcommand == "eval")
        code = cmd_eval(cfg, *sink, err);
    else if (cfg.subcommand == "poly")
        code = cmd_poly(cfg, *sink, err);
    else if (cfg.subcommand == "constants")
        code = cmd_constants(cfg, *sink, err);
    else if (cfg.subcommand == "verify")
        code = cmd_verify(cfg, *sink, err);
    else if (cfg.subcommand == "figure")
        code = cmd_figure(cfg, *sink, err);

    if (file) {
        file->flush();
        if (!*file) {
            err << "write to " << cfg.output << " failed\n";
            return unwritable;
        }
    }
    return code;
}

} // namespace sincsum::cli
