#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "sgl/integrator.hpp"
#include "sgl/stability.hpp"
#include "sgl/supratransmission.hpp"
#include "sgl/tridiagonal.hpp"

namespace {

void BM_CroutSolve(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    sgl::TridiagonalMatrix a(n);
    std::vector<double> rhs(n), x(n), scratch(n);
    for (std::size_t i = 0; i < n; ++i) {
        a.diag[i] = 4.0;
        if (i > 0) a.lower[i] = -1.0;
        if (i + 1 < n) a.upper[i] = -1.0;
        rhs[i] = std::sin(0.1 * static_cast<double>(i));
    }
    for (auto _ : state) {
        sgl::crout_solve(a, rhs, x, scratch);
        benchmark::DoNotOptimize(x.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(n));
}
BENCHMARK(BM_CroutSolve)->Arg(100)->Arg(1000)->Arg(10000);

// One implicit step of the driven lattice at the default sweep settings.
void BM_Step(benchmark::State& state) {
    const auto scheme = state.range(0) == 1 ? sgl::Scheme::s1 : sgl::Scheme::s2;
    const sgl::ModelParams p{.c = 5.0, .N = 100, .N0 = 50, .sponge = sgl::SpongeMode::ramp};
    const double dt = 0.05;
    sgl::Stepper stepper(scheme, p, dt, 1e-12, 50);
    auto lattice = sgl::LatticeState::at_rest(p.N, dt);
    long k = 0;
    for (auto _ : state) {
        stepper.step(lattice, 3.0 * std::sin(0.8 * dt * static_cast<double>(++k)));
        benchmark::DoNotOptimize(lattice.u_curr.data());
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Step)->Arg(1)->Arg(2)->ArgName("scheme");

void BM_SweepPoint(benchmark::State& state) {
    sgl::SweepSpec spec;
    spec.lo = 2.0;
    spec.hi = 5.5;
    spec.step = 0.05;
    spec.drive = sgl::DriveSpec{.omega = 0.8, .ramp_steps = 2000};
    spec.params = sgl::ModelParams{.c = 5.0, .N = 100, .N0 = 50, .sponge = sgl::SpongeMode::ramp};
    spec.solver = sgl::SolverConfig{.dt = 0.05};
    spec.sim_time = 100.0;
    for (auto _ : state) benchmark::DoNotOptimize(sgl::sweep_point_energy(spec, 3.0));
}
BENCHMARK(BM_SweepPoint)->Unit(benchmark::kMillisecond);

void BM_StabilityScan(benchmark::State& state) {
    const sgl::StabilityParams p{.c = 5.0, .beta = 0.1, .gamma = 0.1, .dt = 0.05};
    for (auto _ : state) benchmark::DoNotOptimize(sgl::scan(sgl::Scheme::s2, p, 1025).max_rho);
}
BENCHMARK(BM_StabilityScan);

}  // namespace

BENCHMARK_MAIN();
