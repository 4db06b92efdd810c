#include <gtest/gtest.h>

#include <cmath>

#include "mbd/moments.hpp"
#include "mbd/oracle.hpp"
#include "support.hpp"

using namespace mbd;
using mbd::testing::ParamDraw;
using mbd::testing::rel_err;

TEST(Mean, StationaryStartIsLinear) {
    const auto p = make_stationary_params(0.13, 0.42);
    const auto d = derive(p);
    for (long n : {1L, 7L, 300L}) EXPECT_LE(rel_err(mean(p, n), n * d.pi_F), 1e-14);
}

TEST(Mean, SingleStep) {
    const auto p = make_params(0.3, 0.6, 0.35);
    EXPECT_DOUBLE_EQ(mean(p, 1), 0.35);
}

TEST(Mean, TrimodalExampleMatchesPmfSum) {
    const auto p = make_params(0.01, 0.03, 0.1);
    EXPECT_LE(rel_err(mean(p, 200), pmf_mean(pmf(p, 200))), 1e-10);
}

TEST(Variance, SingleStepIsBernoulli) {
    const auto p = make_params(0.3, 0.6, 0.35);
    EXPECT_NEAR(variance(p, 1), 0.35 * 0.65, 1e-15);
}

TEST(Variance, BinomialReduction) {
    for (double b : {0.1, 0.37, 0.8}) {
        const auto p = make_params(1.0 - b, b, b);
        for (long n : {1L, 5L, 200L}) EXPECT_LE(rel_err(variance(p, n), n * b * (1.0 - b)), 1e-12);
    }
}

TEST(Variance, MatchesPmfSum) {
    const auto p = make_stationary_params(0.05, 0.2);
    EXPECT_LE(rel_err(variance(p, 50), pmf_variance(pmf(p, 50))), 1e-9);
}

TEST(CondMean, SureEvent) {
    EXPECT_DOUBLE_EQ(cond_mean(make_params(0.3, 0.4, 1.0), 1, State::F), 1.0);
    EXPECT_THROW(cond_mean(make_params(0.3, 0.4, 1.0), 1, State::A), ConditioningError);
}

TEST(CondMean, MatchesConditionalPmf) {
    const auto p = make_stationary_params(0.3, 0.5);
    for (State s : {State::F, State::A}) {
        EXPECT_LE(rel_err(cond_mean(p, 40, s), pmf_mean(conditional_pmf(p, 40, s))), 1e-10);
    }
}

TEST(CondMean, TimeReversalSymmetry) {
    const auto from_A = make_params(0.2, 0.35, 0.0);
    const auto from_F = make_params(0.2, 0.35, 1.0);
    EXPECT_LE(rel_err(cond_mean(from_A, 15, State::F), cond_mean(from_F, 15, State::A)), 1e-11);
}

TEST(CondVariance, DegenerateConditionalLaw) {
    EXPECT_NEAR(cond_variance(make_params(0.3, 0.4, 1.0), 1, State::F), 0.0, 1e-15);
}

TEST(CondVariance, TimeReversalSymmetry) {
    const auto from_A = make_params(0.2, 0.35, 0.0);
    const auto from_F = make_params(0.2, 0.35, 1.0);
    EXPECT_LE(rel_err(cond_variance(from_A, 15, State::F), cond_variance(from_F, 15, State::A)), 1e-11);
}

TEST(CondVariance, MatchesConditionalPmf) {
    const auto p = make_params(0.07, 0.4, 0.6);
    EXPECT_LE(rel_err(cond_variance(p, 30, State::A), pmf_variance(conditional_pmf(p, 30, State::A))), 1e-9);
}

TEST(CondMoment, LowOrdersAgreeWithClosedForms) {
    const auto p = make_params(0.21, 0.33, 0.45);
    for (State s : {State::F, State::A}) {
        const double m1 = cond_mean(p, 25, s);
        EXPECT_LE(rel_err(cond_moment(p, 25, s, 1), m1), 1e-10);
        EXPECT_LE(rel_err(cond_moment(p, 25, s, 2), cond_variance(p, 25, s) + m1 * m1), 1e-9);
    }
    EXPECT_THROW(cond_moment(p, 25, State::F, 0), std::invalid_argument);
}

TEST(CondMoment, ThirdMomentSymmetry) {
    const auto from_A = make_params(0.25, 0.15, 0.0);
    const auto from_F = make_params(0.25, 0.15, 1.0);
    EXPECT_LE(rel_err(cond_moment(from_A, 12, State::F, 3), cond_moment(from_F, 12, State::A, 3)), 1e-11);
}

TEST(Moments, ClosedFormsMatchPmfSumsOnRandomGrid) {
    ParamDraw draw(31);
    for (int t = 0; t < 200; ++t) {
        const auto p = draw.params();
        const long n = draw.integer(1, 300);
        const auto f = pmf(p, n);
        ASSERT_LE(rel_err(mean(p, n), pmf_mean(f)), 1e-9) << t;
        if (n >= 2) ASSERT_LE(rel_err(variance(p, n), pmf_variance(f)), 1e-9) << t;
        for (State s : {State::F, State::A}) {
            const auto g = conditional_pmf(p, n, s);
            ASSERT_LE(rel_err(cond_mean(p, n, s), pmf_mean(g)), 1e-9) << t;
            const double v = pmf_variance(g);
            // A conditional law concentrated on one point has variance zero up to rounding.
            if (v > 1e-12) {
                ASSERT_LE(rel_err(cond_variance(p, n, s), v), 1e-9) << t;
            } else {
                ASSERT_NEAR(cond_variance(p, n, s), v, 1e-12) << t;
            }
        }
    }
}

TEST(Moments, ConditionalLawsMatchEnumeration) {
    ParamDraw draw(32);
    for (int t = 0; t < 30; ++t) {
        const auto p = draw.params(0.02, 0.98);
        const long n = draw.integer(2, 14);
        const auto en = enumerate(p, n);
        for (State s : {State::F, State::A}) {
            const auto part = en.partial(s);
            const double mass = en.state_mass(s);
            double m1 = 0.0;
            double m2 = 0.0;
            for (long j = 0; j <= n; ++j) {
                m1 += j * part[j] / mass;
                m2 += double(j) * j * part[j] / mass;
            }
            EXPECT_LE(rel_err(cond_mean(p, n, s), m1), 1e-11);
            EXPECT_LE(rel_err(cond_variance(p, n, s), m2 - m1 * m1), 1e-10);
        }
    }
}

TEST(Moments, SymmetryOfConditionalMoments) {
    ParamDraw draw(33);
    for (int t = 0; t < 100; ++t) {
        const double a = draw.prob();
        const double b = draw.prob();
        const auto from_A = make_params(a, b, 0.0);
        const auto from_F = make_params(a, b, 1.0);
        const long n = draw.integer(1, 14);
        // m > n is covered too.
        for (int m = 1; m <= std::max<long>(5, n + 3); ++m) {
            if (n == 1) {
                // Starting in A and ending in F in one step is impossible.
                EXPECT_THROW(cond_moment(from_A, n, State::F, m), ConditioningError);
                continue;
            }
            ASSERT_LE(rel_err(cond_moment(from_A, n, State::F, m), cond_moment(from_F, n, State::A, m)), 1e-10)
                << "a=" << a << " b=" << b << " n=" << n << " m=" << m;
        }
    }
}

TEST(Moments, TotalLawIdentities) {
    ParamDraw draw(34);
    for (int t = 0; t < 200; ++t) {
        const auto p = draw.params();
        const long n = draw.integer(2, 300);
        const double pF = state_prob(p, n, State::F);
        const double pA = state_prob(p, n, State::A);
        const double mF = cond_mean(p, n, State::F);
        const double mA = cond_mean(p, n, State::A);
        EXPECT_LE(rel_err(pF * mF + pA * mA, mean(p, n)), 1e-9);
        const double second = variance(p, n) + mean(p, n) * mean(p, n);
        const double second_split =
            pF * (cond_variance(p, n, State::F) + mF * mF) + pA * (cond_variance(p, n, State::A) + mA * mA);
        EXPECT_LE(rel_err(second_split, second), 1e-9);
    }
}

TEST(Moments, ReportRangesAndPositivity) {
    ParamDraw draw(35);
    for (int t = 0; t < 300; ++t) {
        const auto p = draw.params();
        const long n = draw.integer(2, 300);
        const auto r = moment_report(p, n);
        EXPECT_GT(r.variance, 0.0);
        EXPECT_GE(r.mean, 0.0);
        EXPECT_LE(r.mean, double(n));
        EXPECT_GE(r.cond_mean_F, 1.0 - 1e-12);
        EXPECT_LE(r.cond_mean_F, n + 1e-12);
        EXPECT_GE(r.cond_mean_A, -1e-12);
        EXPECT_LE(r.cond_mean_A, n - 1 + 1e-12);
        EXPECT_GE(r.cond_var_F, 0.0);
        EXPECT_GE(r.cond_var_A, 0.0);
    }
}

TEST(Moments, ReportMarksImpossibleConditioningAsNaN) {
    const auto r = moment_report(make_params(0.3, 0.4, 1.0), 1);
    EXPECT_DOUBLE_EQ(r.cond_mean_F, 1.0);
    EXPECT_TRUE(std::isnan(r.cond_mean_A));
    EXPECT_TRUE(std::isnan(r.cond_var_A));
}
