#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sgl/energy.hpp"
#include "sgl/errors.hpp"
#include "sgl/simulation.hpp"
#include "support/oracles.hpp"

namespace sgl {
namespace {

class EnergyTest : public ::testing::TestWithParam<Scheme> {};

INSTANTIATE_TEST_SUITE_P(BothSchemes, EnergyTest, ::testing::Values(Scheme::s1, Scheme::s2),
                         [](const auto& info) { return std::string(to_string(info.param)); });

TEST_P(EnergyTest, ZeroStateHasZeroEnergy) {
    ModelParams p{.c = 2.0, .m2 = 1.0, .N = 4};
    const std::vector<double> z(6, 0.0);
    EXPECT_EQ(total_energy(GetParam(), p, 0.1, z, z), 0.0);
    EXPECT_EQ(rate_rhs(GetParam(), p, 0.1, z, z, z).rhs, 0.0);
}

TEST_P(EnergyTest, PurePotentialSite) {
    ModelParams p{.c = 3.0, .N = 1};
    const std::vector<double> level(3, std::numbers::pi);
    EXPECT_NEAR(site_hamiltonian(GetParam(), p, 0.1, level, level, 1), 2.0, 1e-15);
}

TEST_P(EnergyTest, HamiltonianMatchesTermwiseOracle) {
    std::mt19937_64 rng(23);
    ModelParams p{.c = 1.3, .m2 = 0.7, .J = 0.2, .N = 5};
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = testing::random_vector(7, 1.0, rng);
        const auto b = testing::random_vector(7, 1.0, rng);
        const auto h = site_energies(GetParam(), p, 0.05, a, b);
        for (int n = 1; n <= 5; ++n)
            EXPECT_NEAR(h[n - 1], testing::oracle_hamiltonian(GetParam(), p, 0.05, a, b, n), 1e-11);
        EXPECT_NEAR(total_energy(GetParam(), p, 0.05, a, b),
                    testing::oracle_total_energy(GetParam(), p, 0.05, a, b), 1e-10);
    }
}

TEST_P(EnergyTest, BoundaryBondTermIsolated) {
    // Only u_0 differs from zero: the site Hamiltonian of n = 1 sees the bond
    // once and the boundary term adds the extra coupling.
    ModelParams p{.c = 2.0, .N = 3};
    std::vector<double> a(5, 0.0), b(5, 0.0);
    a[0] = 0.3;
    b[0] = 0.5;
    const double c2 = 4.0;
    const double boundary = GetParam() == Scheme::s1 ? c2 / 4.0 * (0.25 + 0.09) / 2.0
                                                     : c2 / 4.0 * std::pow(0.4, 2);
    const double site1 = GetParam() == Scheme::s1 ? c2 / 8.0 * (0.25 + 0.09) : c2 / 4.0 * std::pow(0.4, 2);
    EXPECT_NEAR(total_energy(GetParam(), p, 0.1, a, b), site1 + boundary, 1e-15);
}

TEST(RateRhs, UndampedUndrivenS1HasZeroRate) {
    // beta = gamma = 0 with delta-bar(u_0 - u_1) = 0 from the constraint.
    ModelParams p{.c = 2.0, .N = 4};
    std::vector<double> prev{0.2, 0.3, 0.1, 0.0, 0.2, 0.2};
    std::vector<double> curr{0.1, 0.1, 0.1, 0.1, 0.1, 0.1};
    std::vector<double> next{0.5, 0.6, 0.2, 0.1, 0.0, 0.0};
    next[0] = next[1] - (prev[0] - prev[1]);
    EXPECT_NEAR(rate_rhs(Scheme::s1, p, 0.1, prev, curr, next).rhs, 0.0, 1e-15);
}

TEST_P(EnergyTest, IdentityHoldsAlongTrajectoryWithSponge) {
    // Per-site damping (sponge + load) still satisfies the identity stepwise.
    ModelParams p{.c = 2.0, .beta = 0.05, .gamma = 0.1, .m2 = 0.2, .J = 0.05, .R = 2.0, .N = 20,
                  .N0 = 6, .sponge = SpongeMode::ramp};
    DriveSpec drive{.amplitude = 1.2, .omega = 0.7};
    SolverConfig cfg{.dt = 0.05, .steps = 150, .newton_tol_audit = 1e-13, .scheme = GetParam()};
    const auto result = simulate(p, drive, cfg, {.energy_stride = 1, .audit_tolerance = true});
    ASSERT_EQ(result.ledger.records.size(), 150u);
    for (const auto& r : result.ledger.records) {
        EXPECT_NEAR(r.rate_lhs, r.rate_rhs, 1e-7 * std::max(1.0, std::abs(r.E)));
        EXPECT_NEAR(r.rate_rhs, r.boundary_flux - r.diss_beta - r.diss_gamma, 1e-14);
        EXPECT_GE(r.diss_gamma, 0.0);
    }
    EXPECT_THROW(audit_trajectory(p, drive, cfg.dt, result.ledger.records), AuditPreconditionError);
}

TEST_P(EnergyTest, IdentityDefectShrinksWithNewtonTolerance) {
    ModelParams p{.c = 2.0, .beta = 0.1, .gamma = 0.2, .m2 = 0.5, .J = 0.1, .N = 16};
    DriveSpec drive{.amplitude = 1.0, .omega = 0.6};
    auto defect = [&](double tol) {
        SolverConfig cfg{.dt = 0.05, .steps = 100, .newton_tol_audit = tol, .scheme = GetParam()};
        const auto res = simulate(p, drive, cfg, {.energy_stride = 1, .audit_tolerance = true});
        return audit_trajectory(p, drive, cfg.dt, res.ledger.records).max_identity_defect;
    };
    EXPECT_LT(defect(1e-12), 1e-9);
    EXPECT_LE(defect(1e-12), defect(1e-4));
}

TEST_P(EnergyTest, ConservationAndTelescopingWhenUndamped) {
    ModelParams p{.c = 2.0, .N = 24};
    DriveSpec drive{.amplitude = 0.8, .omega = 0.9, .shutoff_step = 60};
    SolverConfig cfg{.dt = 0.05, .steps = 600, .newton_tol_audit = 1e-12, .scheme = GetParam()};
    const auto res = simulate(p, drive, cfg, {.energy_stride = 1, .audit_tolerance = true});
    const auto report = audit_trajectory(p, drive, cfg.dt, res.ledger.records);
    ASSERT_TRUE(report.max_post_shutoff_drift);
    EXPECT_LT(*report.max_post_shutoff_drift, 1e-9);
    ASSERT_TRUE(report.telescoped_flux_relative_error);
    EXPECT_LT(*report.telescoped_flux_relative_error, 1e-7);
    EXPECT_GT(report.final_energy, 0.0);
}

TEST(Energy, PrintedClosureLeaksEnergyInS2) {
    // Documents why the matched closure is the default for s2.
    ModelParams p{.c = 2.0, .N = 32, .closure = BoundaryClosure::printed};
    DriveSpec drive{.amplitude = 1.0, .omega = 0.8, .shutoff_step = 100};
    SolverConfig cfg{.dt = 0.05, .steps = 600, .newton_tol_audit = 1e-12, .scheme = Scheme::s2};
    const auto res = simulate(p, drive, cfg, {.energy_stride = 1, .audit_tolerance = true});
    const auto report = audit_trajectory(p, drive, cfg.dt, res.ledger.records);
    EXPECT_LT(report.max_scaled_defect, 1e-7);
    EXPECT_GT(*report.max_post_shutoff_drift, 1e-3);

    cfg.scheme = Scheme::s1;
    const auto s1 = simulate(p, drive, cfg, {.energy_stride = 1, .audit_tolerance = true});
    EXPECT_LT(*audit_trajectory(p, drive, cfg.dt, s1.ledger.records).max_post_shutoff_drift, 1e-9);
}

TEST_P(EnergyTest, DampedEnergyDecaysAfterShutoff) {
    ModelParams p{.c = 2.0, .gamma = 0.2, .N = 32};
    DriveSpec drive{.amplitude = 1.0, .omega = 0.8, .shutoff_step = 100};
    SolverConfig cfg{.dt = 0.05, .steps = 800, .newton_tol_audit = 1e-12, .scheme = GetParam()};
    const auto res = simulate(p, drive, cfg, {.energy_stride = 1, .audit_tolerance = true});
    const auto report = audit_trajectory(p, drive, cfg.dt, res.ledger.records);
    ASSERT_TRUE(report.nonincreasing_after_shutoff);
    EXPECT_TRUE(*report.nonincreasing_after_shutoff);
    EXPECT_FALSE(report.telescoped_flux_error);
}

TEST(Audit, RejectsGappedRecords) {
    ModelParams p{.c = 1.0, .N = 4};
    std::vector<EnergyRecord> records(3);
    records[0].step = 1;
    records[1].step = 2;
    records[2].step = 4;
    EXPECT_THROW(audit_trajectory(p, DriveSpec{}, 0.1, records), AuditPreconditionError);
}

TEST(EnergyRecord, OutputCurrentUsesLoad) {
    ModelParams p{.c = 1.0, .R = 4.0, .N = 2};
    const std::vector<double> prev{0, 0, 0.1, 0.1};
    const std::vector<double> curr{0, 0, 0.2, 0.2};
    const std::vector<double> next{0, 0, 0.5, 0.5};
    const auto damping = p.damping_profile();
    const auto r = make_energy_record(Scheme::s1, p, damping, 0.1, 7, prev, curr, next);
    EXPECT_EQ(r.step, 7);
    EXPECT_NEAR(r.time, 0.7, 1e-15);
    EXPECT_NEAR(r.I_out, (0.5 - 0.1) / 0.2 / 4.0, 1e-15);
}

}  // namespace
}  // namespace sgl
