#include <sincsum/global_min.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace sincsum;

TEST(GlobalMin, SquaredSincPasses)
{
    const auto rep = verify_global_min(2.0, 512, 1e-9);
    EXPECT_EQ(rep.status, CheckStatus::passed) << rep.detail;
    EXPECT_NEAR(rep.min_value, 1.0 / 3.0, 1e-11);
    EXPECT_GE(rep.worst_margin, 0.0);
    EXPECT_FALSE(rep.witness.has_value());
}

TEST(GlobalMin, ConstantCaseIsFlat)
{
    // f_1 == 1, so every grid value sits on the minimum
    const auto rep = verify_global_min(1.0, 256, 1e-9);
    EXPECT_EQ(rep.status, CheckStatus::passed) << rep.detail;
    EXPECT_NEAR(rep.min_value, 1.0, rep.eval_error);
    EXPECT_LT(rep.eval_error, 1e-10);
    EXPECT_LT(rep.worst_antisymmetry, 1e-9);
}

TEST(GlobalMin, FractionalExponent)
{
    const auto rep = verify_global_min(1.5, 256, 1e-9);
    EXPECT_EQ(rep.status, CheckStatus::passed) << rep.detail;
    EXPECT_NEAR(rep.min_value, 0.5427545144, 1e-9);
}

TEST(GlobalMin, LargeExponent)
{
    const auto rep = verify_global_min(std::pow(1.02, 256), 256, 1e-9);
    EXPECT_EQ(rep.status, CheckStatus::passed) << rep.detail;
    EXPECT_LT(rep.min_value, 1e-50);
}

TEST(GlobalMin, UnreachableToleranceIsInconclusive)
{
    const auto rep = verify_global_min(3.0, 64, 1e-30);
    EXPECT_EQ(rep.status, CheckStatus::inconclusive);
}

TEST(GlobalMin, RejectsBadArguments)
{
    EXPECT_THROW(verify_global_min(0.9, 64, 1e-9), domain_error);
    EXPECT_THROW(verify_global_min(2.0, 8, 1e-9), domain_error);
    EXPECT_THROW(verify_global_min(2.0, 64, 0.0), domain_error);
}
