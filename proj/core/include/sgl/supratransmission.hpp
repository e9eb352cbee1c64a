#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgl/integrator.hpp"
#include "sgl/model.hpp"

namespace sgl {

enum class SweepVariable { amplitude, frequency };

std::string_view to_string(SweepVariable variable);

/// One family of simulations that differ only in the swept drive value.
///
/// For an amplitude sweep `drive.omega` (and `drive.ramp_steps`) stay fixed
/// and `drive.amplitude` is ignored; for a frequency sweep the roles swap.
/// Each simulation runs round(sim_time / solver.dt) steps.
struct SweepSpec {
    SweepVariable variable = SweepVariable::amplitude;
    double lo = 0.0;
    double hi = 0.0;
    double step = 0.0;
    DriveSpec drive;
    double sim_time = 600.0;
    ModelParams params;
    SolverConfig solver;
    double jump_factor = 5.0;

    void validate() const;
    long steps() const;
    std::vector<double> grid() const;
};

/// Uniform grid lo, lo + step, ... up to hi (inclusive within 1e-9 steps).
std::vector<double> uniform_grid(double lo, double hi, double step);

struct ThresholdResult {
    std::vector<double> grid;
    std::vector<double> energies;
    std::optional<double> threshold;
    std::optional<std::size_t> threshold_index;
    /// E(threshold) / max(E below, 1e-12); zero when nothing was detected.
    double jump_ratio = 0.0;
    /// Largest E(v) / max(E below, 1e-12) over the grid and where it occurs,
    /// reported whether or not it reached the jump factor.
    double largest_jump_ratio = 0.0;
    std::optional<double> largest_jump_at;
    int max_newton_iters = 0;
};

struct JumpDetection {
    std::optional<std::size_t> index;
    double ratio = 0.0;
    double largest_ratio = 0.0;
    std::optional<std::size_t> largest_index;
};

/// Smallest i >= 1 with E_i >= jump_factor * max(E_0..E_{i-1}, 1e-12).
JumpDetection detect_jump(std::span<const double> energies, double jump_factor);

/// The detected threshold, or +infinity when the grid never reached it.
double onset_or_beyond(const ThresholdResult& result);

struct SweepOptions {
    /// Worker threads; 0 picks SG_LATTICE_THREADS or hardware concurrency.
    unsigned threads = 0;
    /// Replaces the simulation with E = evaluator(value) (test hook).
    std::function<double(double)> evaluator;
};

/// Worker count from SG_LATTICE_THREADS (if set and positive), otherwise
/// hardware concurrency, never less than one.
unsigned default_thread_count();

/// Runs one simulation per grid value and detects the energy jump. Results
/// are merged by grid index, so the thread count never changes them.
ThresholdResult sweep(const SweepSpec& spec, const SweepOptions& options = {});

/// Final total energy of one simulation at the given swept value.
double sweep_point_energy(const SweepSpec& spec, double value, int* newton_iters = nullptr);

struct ParameterVariant {
    std::string label;
    ModelParams params;
};

struct DiagramSeries {
    std::string label;
    std::vector<double> frequencies;
    std::vector<std::optional<double>> thresholds;
    std::vector<ThresholdResult> sweeps;
};

/// For every variant and every frequency, an amplitude sweep with
/// `amplitude_sweep` (its drive.omega is replaced by each frequency).
std::vector<DiagramSeries> frequency_diagram(const SweepSpec& amplitude_sweep,
                                             std::span<const double> frequencies,
                                             std::span<const ParameterVariant> variants,
                                             const SweepOptions& options = {});

struct CrossCheckReport {
    ThresholdResult s1;
    ThresholdResult s2;
    /// Split point: the s1 threshold (everything counts as "below" when none).
    std::optional<double> split;
    double max_abs_below = 0.0;
    double max_rel_below = 0.0;
    double max_abs_above = 0.0;
};

/// Runs the sweep with both schemes on the same grid and compares energies.
CrossCheckReport scheme_cross_check(const SweepSpec& spec, const SweepOptions& options = {});

/// Indices i below the detected threshold where E_i < (1 - tolerance) E_{i-1}.
std::vector<std::size_t> monotonicity_violations(const ThresholdResult& result,
                                                 double tolerance = 0.05);

}  // namespace sgl
