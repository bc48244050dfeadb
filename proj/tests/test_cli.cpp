#include "sincsum_cli.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <sstream>

using sincsum::cli::run;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);)
        v.push_back(l);
    return v;
}

} // namespace

TEST(Cli, EvalCsv)
{
    const auto r = call({"eval", "--r", "2", "--x", "0.5"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 2u);
    EXPECT_EQ(ls[0], "r,x,value,method_spread");
    std::istringstream row(ls[1]);
    std::string f[4];
    for (auto& s : f)
        std::getline(row, s, ',');
    EXPECT_NEAR(std::stod(f[2]), 1.0 / 3.0, 1e-12);
    EXPECT_LT(std::stod(f[3]), 1e-11);
}

TEST(Cli, EvalJson)
{
    const auto r = call({"eval", "--r", "1", "--x", "0.123", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["value"].get<double>(), 1.0, 1e-12);
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(call({"eval", "--r", "0.5", "--x", "0.3"}).code, 2);
    EXPECT_EQ(call({"eval", "--r", "2"}).code, 2);
    EXPECT_EQ(call({"eval", "--r", "1", "--x", "0.3", "--tol", "1e-30"}).code, 3);
    EXPECT_EQ(call({"poly", "--r", "101"}).code, 2);
    EXPECT_EQ(call({"poly", "--r", "2.5"}).code, 2);
    EXPECT_EQ(call({"constants", "--q", "1"}).code, 2);
    EXPECT_EQ(call({"figure", "--output", "/nonexistent/dir/f.csv"}).code, 4);
    EXPECT_EQ(call({"frobnicate"}).code, 2);
    EXPECT_EQ(call({"eval", "--format", "xml"}).code, 2);
    EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, PolyText)
{
    EXPECT_EQ(call({"poly", "--r", "2"}).out, "1/3, 2/3\n");
    EXPECT_EQ(call({"poly", "--r", "5"}).out, "62/2835, 1072/2835, 484/945, 247/2835, 2/2835\n");
}

TEST(Cli, PolyJson)
{
    const auto j = nlohmann::json::parse(call({"poly", "--r", "3", "--format", "json"}).out);
    EXPECT_EQ(j["coeffs"], (nlohmann::json{"2/15", "11/15", "2/15"}));
    EXPECT_EQ(j["min_value"], "2/15");
}

TEST(Cli, Constants)
{
    const auto r = call({"constants", "--q", "4", "--d", "2"});
    ASSERT_EQ(r.code, 0);
    const auto ls = lines(r.out);
    EXPECT_EQ(ls[0], "q,d,c_q,factor,crude,exact_c_q");
    EXPECT_NE(ls[1].find(",1/3"), std::string::npos);
}

TEST(Cli, FigureCsv)
{
    const auto r = call({"figure", "--grid", "9"});
    ASSERT_EQ(r.code, 0);
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 1u + 9 * 9);
    EXPECT_EQ(ls[0], "x,r,f_r(x)");
    std::map<std::string, std::vector<double>> curves;
    for (std::size_t i = 1; i < ls.size(); ++i) {
        std::istringstream row(ls[i]);
        std::string x, rr, f;
        std::getline(row, x, ',');
        std::getline(row, rr, ',');
        std::getline(row, f, ',');
        curves[rr].push_back(std::stod(f));
    }
    ASSERT_EQ(curves.size(), 9u);
    for (const auto& [rr, f] : curves) {
        ASSERT_EQ(f.size(), 9u);
        for (std::size_t i = 0; i < 9; ++i)
            EXPECT_NEAR(f[i], f[8 - i], 1e-9) << rr;
        EXPECT_EQ(std::min_element(f.begin(), f.end()) - f.begin(), 4) << rr;
    }
}

TEST(Cli, FigureSvg)
{
    const auto r = call({"figure", "--grid", "5", "--format", "svg"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("<svg", 0), 0u);
    EXPECT_NE(r.out.find("</svg>"), std::string::npos);
}

TEST(Cli, VerifyIsDeterministic)
{
    const auto a = call({"verify", "--grid", "64", "--seed", "3"});
    const auto b = call({"verify", "--grid", "64", "--seed", "3"});
    ASSERT_EQ(a.code, 0) << a.out;
    EXPECT_EQ(a.out, b.out);
    const auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j["exit_code"], 0);
    std::vector<std::string> ids;
    for (const auto& c : j["checks"]) {
        ids.push_back(c["check_id"]);
        EXPECT_TRUE(c["wall_time_ms"].is_null());
    }
    EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
    EXPECT_TRUE(std::count(ids.begin(), ids.end(), "manifest"));
}

TEST(Cli, VerifyReportsTimingsWhenAsked)
{
    const auto a = call({"verify", "--grid", "32", "--timings"});
    const auto j = nlohmann::json::parse(a.out);
    EXPECT_TRUE(j["checks"][0]["wall_time_ms"].is_number());
}

TEST(Cli, VerifyBrokenManifestFails)
{
    const auto a = call({"verify", "--grid", "32", "--manifest", "/nonexistent/manifest.txt"});
    EXPECT_EQ(a.code, 1);
}
