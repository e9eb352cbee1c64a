#include "sgl/supratransmission.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

#include "sgl/errors.hpp"
#include "sgl/simulation.hpp"

namespace sgl {

std::string_view to_string(SweepVariable variable) {
    return variable == SweepVariable::amplitude ? "amplitude" : "frequency";
}

std::vector<double> uniform_grid(double lo, double hi, double step) {
    if (!(step > 0.0) || !(hi > lo)) throw ValidationError("grid needs lo < hi and step > 0");
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) grid[i] = lo + static_cast<double>(i) * step;
    return grid;
}

void SweepSpec::validate() const {
    params.validate();
    solver.validate();
    drive.validate();
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
        throw ValidationError("sweep needs lo < hi");
    if (!(step > 0.0)) throw ValidationError("sweep step must be > 0");
    if (!(sim_time > 0.0)) throw ValidationError("sim_time must be > 0");
    if (!(jump_factor > 1.0)) throw ValidationError("jump_factor must be > 1");
    if (variable == SweepVariable::frequency) {
        const double edge = band_gap_edge(params.m2);
        if (!(lo > 0.0) || !(hi < edge))
            throw ValidationError("frequency sweep must stay inside the band gap (0, sqrt(m2 + 1))");
    } else if (lo < 0.0) {
        throw ValidationError("amplitude sweep must start at A >= 0");
    }
    if (params.c == 0.0 && params.beta == 0.0)
        throw ValidationError("a boundary drive needs c > 0 or beta > 0");
}

long SweepSpec::steps() const {
    return std::lround(sim_time / solver.dt);
}

std::vector<double> SweepSpec::grid() const {
    return uniform_grid(lo, hi, step);
}

JumpDetection detect_jump(std::span<const double> energies, double jump_factor) {
    constexpr double floor = 1e-12;
    JumpDetection out;
    if (energies.empty()) return out;
    double running_max = energies[0];
    for (std::size_t i = 1; i < energies.size(); ++i) {
        const double base = std::max(running_max, floor);
        const double ratio = energies[i] / base;
        if (ratio > out.largest_ratio) {
            out.largest_ratio = ratio;
            out.largest_index = i;
        }
        if (!out.index && energies[i] >= jump_factor * base) {
            out.index = i;
            out.ratio = ratio;
        }
        running_max = std::max(running_max, energies[i]);
    }
    return out;
}

double onset_or_beyond(const ThresholdResult& result) {
    return result.threshold ? *result.threshold : std::numeric_limits<double>::infinity();
}

unsigned default_thread_count() {
    if (const char* env = std::getenv("SG_LATTICE_THREADS")) {
        char* end = nullptr;
        const long value = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(value);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

double sweep_point_energy(const SweepSpec& spec, double value, int* newton_iters) {
    DriveSpec drive = spec.drive;
    if (spec.variable == SweepVariable::amplitude)
        drive.amplitude = value;
    else
        drive.omega = value;
    SolverConfig config = spec.solver;
    config.steps = spec.steps();
    const auto result = simulate(spec.params, drive, config);
    if (newton_iters) *newton_iters = result.max_newton_iters;
    return result.final_energy;
}

namespace {

/// Evaluates fn(i) for i in [0, count) on up to `threads` workers. The
/// first failure (by index) is rethrown after all workers stop.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

std::string format_value(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

ThresholdResult sweep(const SweepSpec& spec, const SweepOptions& options) {
    spec.validate();
    ThresholdResult result;
    result.grid = spec.grid();
    const std::size_t count = result.grid.size();
    result.energies.assign(count, 0.0);
    std::vector<int> iters(count, 0);

    const unsigned threads = options.threads ? options.threads : default_thread_count();
    parallel_for(count, threads, [&](std::size_t i) {
        const double value = result.grid[i];
        try {
            result.energies[i] = options.evaluator ? options.evaluator(value)
                                                   : sweep_point_energy(spec, value, &iters[i]);
        } catch (const SolverError& e) {
            throw SolverError(std::string(to_string(spec.variable)) + " " + format_value(value) +
                              ": " + e.what());
        }
    });

    result.max_newton_iters = *std::max_element(iters.begin(), iters.end());
    const auto jump = detect_jump(result.energies, spec.jump_factor);
    if (jump.index) {
        result.threshold_index = jump.index;
        result.threshold = result.grid[*jump.index];
        result.jump_ratio = jump.ratio;
    }
    result.largest_jump_ratio = jump.largest_ratio;
    if (jump.largest_index) result.largest_jump_at = result.grid[*jump.largest_index];
    return result;
}

std::vector<DiagramSeries> frequency_diagram(const SweepSpec& amplitude_sweep,
                                             std::span<const double> frequencies,
                                             std::span<const ParameterVariant> variants,
                                             const SweepOptions& options) {
    if (amplitude_sweep.variable != SweepVariable::amplitude)
        throw ValidationError("frequency diagram expects an amplitude sweep");
    std::vector<DiagramSeries> out;
    out.reserve(variants.size());
    for (const auto& variant : variants) {
        variant.params.validate();
        const double edge = band_gap_edge(variant.params.m2);
        for (double omega : frequencies) {
            if (!(omega > 0.0) || !(omega < edge))
                throw ValidationError("diagram frequency " + format_value(omega) +
                                      " lies outside the band gap of variant '" + variant.label + "'");
        }
    }
    for (const auto& variant : variants) {
        DiagramSeries series;
        series.label = variant.label;
        series.frequencies.assign(frequencies.begin(), frequencies.end());
        for (double omega : frequencies) {
            SweepSpec spec = amplitude_sweep;
            spec.params = variant.params;
            spec.drive.omega = omega;
            auto result = sweep(spec, options);
            series.thresholds.push_back(result.threshold);
            series.sweeps.push_back(std::move(result));
        }
        out.push_back(std::move(series));
    }
    return out;
}

CrossCheckReport scheme_cross_check(const SweepSpec& spec, const SweepOptions& options) {
    CrossCheckReport report;
    SweepSpec s1 = spec;
    s1.solver.scheme = Scheme::s1;
    SweepSpec s2 = spec;
    s2.solver.scheme = Scheme::s2;
    report.s1 = sweep(s1, options);
    report.s2 = sweep(s2, options);
    report.split = report.s1.threshold;

    for (std::size_t i = 0; i < report.s1.grid.size(); ++i) {
        const double e1 = report.s1.energies[i];
        const double e2 = report.s2.energies[i];
        const double diff = std::abs(e1 - e2);
        const bool below = !report.split || report.s1.grid[i] < *report.split;
        if (below) {
            report.max_abs_below = std::max(report.max_abs_below, diff);
            const double scale = std::max(std::abs(e1), std::abs(e2));
            if (scale > 0.0) report.max_rel_below = std::max(report.max_rel_below, diff / scale);
        } else {
            report.max_abs_above = std::max(report.max_abs_above, diff);
        }
    }
    return report;
}

std::vector<std::size_t> monotonicity_violations(const ThresholdResult& result, double tolerance) {
    std::vector<std::size_t> out;
    const std::size_t end = result.threshold_index.value_or(result.energies.size());
    for (std::size_t i = 1; i < end; ++i) {
        if (result.energies[i] < (1.0 - tolerance) * result.energies[i - 1]) out.push_back(i);
    }
    return out;
}

}  // namespace sgl
