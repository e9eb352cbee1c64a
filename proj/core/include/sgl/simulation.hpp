#pragma once

#include <functional>
#include <span>
#include <vector>

#include "sgl/energy.hpp"
#include "sgl/integrator.hpp"
#include "sgl/model.hpp"

namespace sgl {

/// Levels around the step that just produced u^{k+1}.
struct StepView {
    long k = 0;
    double phi = 0.0;
    std::span<const double> u_prev;
    std::span<const double> u_curr;
    std::span<const double> u_next;
    const StepDiagnostics* diagnostics = nullptr;
};

using StepObserver = std::function<void(const StepView&)>;

struct SimulationOptions {
    /// Record the energy ledger every `energy_stride` steps (0 = never).
    long energy_stride = 0;
    /// Store u_1..u_N of the new level every `snapshot_stride` steps (0 = never).
    long snapshot_stride = 0;
    /// Store H_n^k alongside each energy record.
    bool record_site_energies = false;
    /// Solve with SolverConfig::newton_tol_audit instead of newton_tol.
    bool audit_tolerance = false;
    /// Called after every solved step, before the levels rotate.
    StepObserver observer;
};

struct Snapshot {
    /// Time index of the stored level (k + 1).
    long step = 0;
    /// u_1^{k+1} .. u_N^{k+1}.
    std::vector<double> u;
};

struct SimulationResult {
    LatticeState final_state;
    EnergyLedger ledger;
    std::vector<Snapshot> snapshots;
    /// E_M for the last level pair (u^M, u^{M+1}); zero when no step ran.
    double final_energy = 0.0;
    long steps = 0;
    int max_newton_iters = 0;
    double min_jacobian_dominance = 0.0;
};

/// Runs `config.steps` steps from the zero initial data u^0 = u^1 = 0 with
/// phi_k = drive.value(k, dt). Errors from a step are rethrown as
/// SolverError carrying the step index.
SimulationResult simulate(const ModelParams& params, const DriveSpec& drive,
                          const SolverConfig& config, const SimulationOptions& options = {});

}  // namespace sgl
