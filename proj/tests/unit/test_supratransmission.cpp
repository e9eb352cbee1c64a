#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <limits>

#include "sgl/errors.hpp"
#include "sgl/supratransmission.hpp"

namespace sgl {
namespace {

SweepSpec base_spec() {
    SweepSpec s;
    s.variable = SweepVariable::amplitude;
    s.lo = 2.0;
    s.hi = 5.5;
    s.step = 0.05;
    s.drive = DriveSpec{.omega = 0.8, .ramp_steps = 2000};
    s.params = ModelParams{.c = 5.0, .N = 100, .N0 = 50, .sponge = SpongeMode::ramp};
    s.solver = SolverConfig{.dt = 0.05};
    return s;
}

TEST(Grid, InclusiveUniform) {
    const auto g = uniform_grid(2.0, 5.5, 0.05);
    EXPECT_EQ(g.size(), 71u);
    EXPECT_DOUBLE_EQ(g.front(), 2.0);
    EXPECT_NEAR(g.back(), 5.5, 1e-12);
    EXPECT_EQ(uniform_grid(0.1, 0.9, 0.1).size(), 9u);
    EXPECT_THROW(uniform_grid(1.0, 1.0, 0.1), ValidationError);
    EXPECT_EQ(base_spec().steps(), 12000);
}

TEST(DetectJump, SyntheticCurves) {
    const std::vector<double> step{1, 1, 1, 1, 100, 100, 200};
    const auto j = detect_jump(step, 5.0);
    ASSERT_TRUE(j.index);
    EXPECT_EQ(*j.index, 4u);
    EXPECT_DOUBLE_EQ(j.ratio, 100.0);

    std::vector<double> linear;
    for (int i = 1; i <= 50; ++i) linear.push_back(i);
    EXPECT_FALSE(detect_jump(linear, 5.0).index);

    // Dips do not fake a jump: the base is the running maximum.
    const std::vector<double> dip{10, 1, 9, 11};
    EXPECT_FALSE(detect_jump(dip, 5.0).index);

    // The floor keeps zero energies from dividing by zero.
    const std::vector<double> zeros{0, 0, 1e-13, 1e-9};
    const auto z = detect_jump(zeros, 5.0);
    ASSERT_TRUE(z.index);
    EXPECT_EQ(*z.index, 3u);
}

TEST(Sweep, InjectedEvaluatorFindsThreshold) {
    auto spec = base_spec();
    SweepOptions opts;
    opts.threads = 3;
    opts.evaluator = [](double a) { return a < 3.75 - 1e-9 ? 1.0 : 100.0; };
    const auto r = sweep(spec, opts);
    ASSERT_TRUE(r.threshold);
    EXPECT_NEAR(*r.threshold, 3.75, 1e-12);
    EXPECT_DOUBLE_EQ(r.jump_ratio, 100.0);
    EXPECT_EQ(onset_or_beyond(r), *r.threshold);

    opts.evaluator = [](double a) { return a; };
    const auto none = sweep(spec, opts);
    EXPECT_FALSE(none.threshold);
    EXPECT_EQ(onset_or_beyond(none), std::numeric_limits<double>::infinity());
    EXPECT_TRUE(monotonicity_violations(none).empty());
}

TEST(Sweep, ThreadCountDoesNotChangeResults) {
    auto spec = base_spec();
    spec.lo = 2.0;
    spec.hi = 2.2;
    spec.sim_time = 50.0;
    const auto one = sweep(spec, {.threads = 1});
    const auto many = sweep(spec, {.threads = 4});
    EXPECT_EQ(one.energies, many.energies);
    EXPECT_EQ(one.grid.size(), 5u);
}

TEST(Sweep, ErrorsPropagateWithValue) {
    auto spec = base_spec();
    SweepOptions opts;
    opts.evaluator = [](double a) -> double {
        if (a > 3.0) throw SolverError("boom");
        return 1.0;
    };
    try {
        sweep(spec, opts);
        FAIL();
    } catch (const SolverError& e) {
        const std::string what = e.what();
        EXPECT_EQ(what.rfind("amplitude 3.0", 0), 0u) << what;
        EXPECT_NE(what.find("boom"), std::string::npos) << what;
    }
}

TEST(SweepSpec, Validation) {
    auto s = base_spec();
    EXPECT_NO_THROW(s.validate());
    s.variable = SweepVariable::frequency;
    s.lo = 0.5;
    s.hi = 1.2;
    s.step = 0.1;
    EXPECT_THROW(s.validate(), ValidationError);
    s.hi = 0.9;
    EXPECT_NO_THROW(s.validate());
    s = base_spec();
    s.jump_factor = 1.0;
    EXPECT_THROW(s.validate(), ValidationError);
    s = base_spec();
    s.params.c = 0.0;
    EXPECT_THROW(s.validate(), ValidationError);
}

TEST(Diagram, SingleFrequencyReducesToSweep) {
    auto spec = base_spec();
    SweepOptions opts;
    opts.evaluator = [](double a) { return a < 4.0 - 1e-9 ? 1.0 : 50.0; };
    const std::vector<double> omegas{0.8};
    const std::vector<ParameterVariant> variants{{"base", spec.params}};
    const auto d = frequency_diagram(spec, omegas, variants, opts);
    ASSERT_EQ(d.size(), 1u);
    ASSERT_EQ(d[0].thresholds.size(), 1u);
    EXPECT_NEAR(*d[0].thresholds[0], 4.0, 1e-12);
    EXPECT_EQ(d[0].sweeps[0].energies, sweep(spec, opts).energies);

    const std::vector<double> outside{1.5};
    EXPECT_THROW(frequency_diagram(spec, outside, variants, opts), ValidationError);
}

TEST(CrossCheck, SplitsAtThreshold) {
    auto spec = base_spec();
    SweepOptions opts;
    opts.evaluator = [](double a) { return a < 3.0 ? 1.0 : 10.0; };
    const auto r = scheme_cross_check(spec, opts);
    ASSERT_TRUE(r.split);
    EXPECT_EQ(r.max_abs_below, 0.0);
    EXPECT_EQ(r.max_rel_below, 0.0);
}

TEST(Threads, EnvironmentOverride) {
    ::setenv("SG_LATTICE_THREADS", "3", 1);
    EXPECT_EQ(default_thread_count(), 3u);
    ::setenv("SG_LATTICE_THREADS", "junk", 1);
    EXPECT_GE(default_thread_count(), 1u);
    ::unsetenv("SG_LATTICE_THREADS");
}

TEST(Monotonicity, FlagsDropsBelowThreshold) {
    ThresholdResult r;
    r.grid = {1, 2, 3, 4};
    r.energies = {1.0, 2.0, 1.5, 1.6};
    EXPECT_EQ(monotonicity_violations(r, 0.05), std::vector<std::size_t>{2});
    r.threshold_index = 2;
    EXPECT_TRUE(monotonicity_violations(r, 0.05).empty());
}

}  // namespace
}  // namespace sgl
