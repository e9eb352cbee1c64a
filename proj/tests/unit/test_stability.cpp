#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sgl/errors.hpp"
#include "sgl/stability.hpp"

namespace sgl {
namespace {

TEST(Symbols, ZeroWavenumber) {
    StabilityParams p{.c = 3.0, .beta = 0.4, .gamma = 0.6, .m2 = 0.5, .dt = 0.1};
    for (Scheme s : {Scheme::s1, Scheme::s2}) {
        const auto t = symbols(s, p, 0.0);
        EXPECT_DOUBLE_EQ(t.f_hat, 2.0);
        EXPECT_DOUBLE_EQ(t.g_hat, 1.0 + (0.5 * 0.01 + 0.06) / 2);
        EXPECT_DOUBLE_EQ(t.h_hat, 1.0 + (0.5 * 0.01 - 0.06) / 2);
    }
}

TEST(Symbols, NyquistValues) {
    StabilityParams p{.c = 5.0, .dt = 0.2};
    const auto s2 = symbols(Scheme::s2, p, std::numbers::pi);
    EXPECT_NEAR(s2.f_hat, 0.0, 1e-15);
    EXPECT_NEAR(s2.g_hat, 2.0, 1e-15);
    EXPECT_NEAR(s2.h_hat, 2.0, 1e-15);
    const auto s1 = symbols(Scheme::s1, p, std::numbers::pi);
    EXPECT_EQ(s1.f_hat, 2.0);
    EXPECT_NEAR(s1.g_hat, 2.0, 1e-15);
    EXPECT_NEAR(s1.h_hat, 2.0, 1e-15);
}

TEST(Eigenvalues, ClosedForms) {
    const auto d = eigenvalues({2.0, 1.0, 1.0});
    EXPECT_NEAR(std::abs(d[0] - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(d[1] - 1.0), 0.0, 1e-15);
    const auto i = eigenvalues({0.0, 2.0, 2.0});
    EXPECT_NEAR(std::abs(i[0]), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(i[0].imag()), 1.0, 1e-15);
    EXPECT_THROW(eigenvalues({1.0, 0.0, 1.0}), ValidationError);
}

TEST(Eigenvalues, ComplexPairModulusAndCharacteristicPolynomial) {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(0.1, 3.0);
    for (int i = 0; i < 200; ++i) {
        const double g = u(rng);
        const double h = u(rng);
        const double f = std::sqrt(4 * g * h) * (2 * std::uniform_real_distribution<double>(0, 1)(rng) - 1) * 0.99;
        const auto lam = eigenvalues({f, g, h});
        for (const auto& l : lam) {
            EXPECT_NEAR(std::abs(l), std::sqrt(h / g), 1e-12);
            // lambda^2 - (f/g) lambda + h/g = 0 (trace/determinant of [[f/g, -h/g], [1, 0]])
            EXPECT_NEAR(std::abs(l * l - (f / g) * l + h / g), 0.0, 1e-12);
        }
    }
}

TEST(InfNorm, Definition) {
    EXPECT_DOUBLE_EQ(amplification_inf_norm({2.0, 1.0, 1.0}), 3.0);
    EXPECT_DOUBLE_EQ(amplification_inf_norm({0.2, 2.0, 0.4}), 1.0);
    EXPECT_DOUBLE_EQ(amplification_inf_norm({-4.0, 2.0, -1.0}), 2.5);
}

TEST(Scan, GridEndpointsAndCourantCase) {
    const auto r = scan(Scheme::s2, StabilityParams{.c = 5.0, .dt = 0.2}, 1025);
    ASSERT_EQ(r.xi.size(), 1025u);
    EXPECT_EQ(r.xi.front(), 0.0);
    EXPECT_EQ(r.xi.back(), std::numbers::pi);
    EXPECT_LE(r.max_rho, 1.0 + 1e-12);
    EXPECT_TRUE(r.necessary_ok);
    EXPECT_FALSE(r.sufficient_applicable);
    EXPECT_THROW(scan(Scheme::s2, StabilityParams{.c = 1.0, .dt = 0.1}, 1), ValidationError);
    EXPECT_THROW(scan(Scheme::s2, StabilityParams{.c = 1.0, .dt = 0.0}, 10), ValidationError);
}

TEST(Scan, LargeExternalDampingBoundsNorm) {
    const auto r = scan(Scheme::s2, StabilityParams{.c = 1.0, .gamma = 4.0, .dt = 0.5}, 513);
    EXPECT_TRUE(r.norm_condition_all_xi);
    EXPECT_LE(r.max_inf_norm, 1.0 + 1e-12);
}

TEST(Scan, UndampedS2IsNeutralEvenPastCourantLimit) {
    // g = h and |f| <= 2g for every xi, so both roots sit on the unit circle;
    // the dt <= 1/c predicate is conservative here.
    const auto r = scan(Scheme::s2, StabilityParams{.c = 5.0, .m2 = 0.3, .dt = 0.5}, 1025);
    EXPECT_FALSE(r.necessary_ok);
    for (double rho : r.rho) EXPECT_NEAR(rho, 1.0, 1e-12);
}

TEST(Scan, NegativeMassTermIsUnstable) {
    const auto r = scan(Scheme::s2, StabilityParams{.c = 1.0, .m2 = -3.0, .dt = 0.1}, 65);
    EXPECT_GT(r.max_rho, 1.0 + 1e-6);
}

TEST(Predicates, ClosedForm) {
    StabilityReport r;
    r.params = {.c = 2.0, .gamma = 5.0, .dt = 0.45};
    evaluate_predicates(r);
    EXPECT_TRUE(r.necessary_ok);
    EXPECT_TRUE(r.sufficient_applicable);
    EXPECT_TRUE(r.sufficient_ok);   // 0.4 < 0.45 < 0.707
    EXPECT_TRUE(r.corollary_ok);    // 0.4 <= 0.45 <= 0.5
    EXPECT_TRUE(r.norm_condition_all_xi);
    r.params.dt = 0.6;
    evaluate_predicates(r);
    EXPECT_FALSE(r.necessary_ok);
    EXPECT_TRUE(r.sufficient_ok);
    EXPECT_FALSE(r.corollary_ok);
    r.params.gamma = 0.0;
    evaluate_predicates(r);
    EXPECT_FALSE(r.sufficient_applicable);
    EXPECT_FALSE(r.sufficient_ok);
}

}  // namespace
}  // namespace sgl
