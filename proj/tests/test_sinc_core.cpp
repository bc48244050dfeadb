#include <sincsum/sinc_core.hpp>
#include <sincsum/specfun.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"

using namespace sincsum;

TEST(Sinc, RemovableSingularityAndZeros)
{
    EXPECT_EQ(sinc(0.0), 1.0);
    EXPECT_EQ(sinc(1.0), 0.0);
    EXPECT_EQ(sinc(-3.0), 0.0);
    EXPECT_NEAR(sinc(0.5), 2.0 / std::numbers::pi, 1e-16);
}

TEST(Sinc, SeriesBranchMatchesQuotientAtSwitch)
{
    // just below and above the 1e-4 switch
    const double below = sinc(0.99999e-4);
    const double above = sinc(1.00001e-4);
    EXPECT_NEAR(below, above, 1e-12);
    const double t = std::numbers::pi * 1e-5;
    EXPECT_NEAR(sinc(1e-5), std::sin(t) / t, 1e-16);
}

TEST(Sinc, EvenAndBounded)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> dist(-50.0, 50.0);
    for (int i = 0; i < 1000; ++i) {
        const double x = dist(rng);
        EXPECT_EQ(sinc(x), sinc(-x));
        EXPECT_LE(std::fabs(sinc(x)), 1.0);
    }
}

TEST(Sinc, NonFiniteIsDomainError)
{
    EXPECT_THROW(sinc(std::nan("")), domain_error);
    EXPECT_THROW(h(INFINITY), domain_error);
}

TEST(H, KnownValues)
{
    const double pi = std::numbers::pi;
    EXPECT_EQ(h(0.0), 1.0);
    EXPECT_NEAR(h(0.5), 4.0 / (pi * pi), 1e-16);
    EXPECT_NEAR(h(1.5), 4.0 / (9.0 * pi * pi), 1e-17); // 0.0450316371743723
    EXPECT_EQ(h(2.0), 0.0);
    EXPECT_EQ(h(-7.0), 0.0);
}

TEST(FDirect, SquaredSincSumIsOneAtRequestedTolerance)
{
    EvalConfig cfg;
    cfg.target_tol = 1e-12;
    const auto res = f_direct({1.0, 0.3}, cfg);
    EXPECT_NEAR(res.value, 1.0, 1e-12);
    EXPECT_LE(res.tail_bound, 1e-12);
}

TEST(FDirect, TableValuesForRTwo)
{
    EvalConfig cfg;
    cfg.target_tol = 1e-12;
    EXPECT_NEAR(f_direct({2.0, 0.5}, cfg).value, 1.0 / 3.0, 1e-12);
    // P_2(y) = 1/3 + 2/3 y at y = cos^2(pi/4) = 1/2
    EXPECT_NEAR(f_direct({2.0, 0.25}, cfg).value, 2.0 / 3.0, 1e-12);
}

TEST(FDirect, EndpointsAreExactlyOne)
{
    for (double r : {0.6, 1.0, 2.5, 40.0}) {
        EXPECT_EQ(f_direct({r, 0.0}).value, 1.0);
        EXPECT_EQ(f_direct({r, 1.0}).value, 1.0);
    }
}

TEST(FDirect, AgreesWithBruteForceOracle)
{
    EvalConfig cfg;
    cfg.target_tol = 1e-13;
    for (double r : {0.75, 1.5, 2.5}) {
        for (double x : {0.1, 0.37, 0.5}) {
            const auto res = f_direct({r, x}, cfg);
            const double ref = static_cast<double>(oracle::lattice_sum(r, x));
            EXPECT_NEAR(res.value, ref, 2e-12) << "r=" << r << " x=" << x;
        }
    }
}

TEST(FDirect, DomainChecks)
{
    EXPECT_THROW(f_direct({0.5, 0.3}), domain_error);
    EXPECT_THROW(f_direct({0.501, 0.3}), domain_error);
    EXPECT_THROW(f_direct({2.0, -0.1}), domain_error);
    EXPECT_THROW(f_direct({2.0, 1.1}), domain_error);
    EvalConfig bad;
    bad.target_tol = 0.0;
    EXPECT_THROW(f_direct({2.0, 0.3}, bad), domain_error);
}

TEST(FDirect, PrecisionUnreachableCarriesAchievedBound)
{
    EvalConfig cfg;
    cfg.target_tol = 1e-14;
    cfg.max_terms = 10;
    try {
        f_direct({1.0, 0.3}, cfg);
        FAIL() << "expected precision_unreachable";
    } catch (const precision_unreachable& e) {
        EXPECT_GT(e.achieved_bound(), 1e-14);
    }
}

TEST(FDirect, SymmetryAboutHalf)
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> rd(0.55, 8.0), xd(0.0, 1.0);
    EvalConfig cfg;
    cfg.target_tol = 1e-12;
    for (int i = 0; i < 50; ++i) {
        const double r = rd(rng), x = xd(rng);
        const double a = f_direct({r, x}, cfg).value;
        const double b = f_direct({r, 1.0 - x}, cfg).value;
        EXPECT_NEAR(a, b, 2 * cfg.target_tol) << "r=" << r << " x=" << x;
    }
}

TEST(FDirect, NonincreasingInR)
{
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> rd(0.55, 10.0), xd(0.01, 0.99);
    EvalConfig cfg;
    cfg.target_tol = 1e-12;
    for (int i = 0; i < 50; ++i) {
        double r1 = rd(rng), r2 = rd(rng);
        if (r1 > r2)
            std::swap(r1, r2);
        const double x = xd(rng);
        EXPECT_GE(f_direct({r1, x}, cfg).value, f_direct({r2, x}, cfg).value - 2 * cfg.target_tol);
    }
}

TEST(FDirect, ReportedTailBoundIsSound)
{
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> rd(0.6, 6.0), xd(0.0, 1.0);
    std::uniform_int_distribution<int> md(1, 200);
    for (int i = 0; i < 100; ++i) {
        const EvalPoint p{rd(rng), xd(rng)};
        const int M = md(rng);
        const auto coarse = f_direct_fixed(p, M);
        const auto fine = f_direct_fixed(p, 2 * M);
        EXPECT_LE(std::fabs(coarse.value - fine.value), coarse.tail_bound) << "r=" << p.r << " x=" << p.x << " M=" << M;
        // and against an independent evaluation of the full sum
        EXPECT_LE(std::fabs(coarse.value - f_hurwitz(p)), coarse.tail_bound + 1e-14);
    }
}

TEST(FDerivFd, VanishesWhereExpected)
{
    EXPECT_NEAR(f_deriv_fd({2.0, 0.5}, 1e-4), 0.0, 1e-6);
    EXPECT_NEAR(f_deriv_fd({1.0, 0.3}, 1e-4), 0.0, 1e-6);
}

TEST(FDerivFd, MatchesAnalyticDerivative)
{
    // f_2 = 1/3 + 2/3 cos^2(pi x)  =>  f_2'(1/4) = -2 pi / 3
    const double fd = f_deriv_fd({2.0, 0.25}, 1e-4);
    EXPECT_NEAR(fd, -2.0 * std::numbers::pi / 3.0, 1e-6 * 2.1);
    EXPECT_NEAR(fd, f_deriv_analytic({2.0, 0.25}), 1e-6 * std::fabs(fd));
}

TEST(FDerivFd, StepMustStayInside)
{
    EXPECT_THROW(f_deriv_fd({2.0, 0.5}, 0.6), domain_error);
    EXPECT_THROW(f_deriv_fd({2.0, 1e-5}, 1e-4), domain_error);
    EXPECT_THROW(f_deriv_fd({2.0, 0.5}, 0.0), domain_error);
}
