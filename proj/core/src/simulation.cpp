#include "sgl/simulation.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "sgl/errors.hpp"

namespace sgl {

SimulationResult simulate(const ModelParams& params, const DriveSpec& drive,
                          const SolverConfig& config, const SimulationOptions& options) {
    params.validate();
    drive.validate();
    config.validate();
    validate_drive_compatibility(params, drive);
    if (options.energy_stride < 0 || options.snapshot_stride < 0)
        throw ValidationError("record strides must be >= 0");

    const double tol = options.audit_tolerance ? config.newton_tol_audit : config.newton_tol;
    Stepper stepper(config.scheme, params, config.dt, tol, config.newton_max_iter);

    SimulationResult result;
    result.final_state = LatticeState::at_rest(params.N, config.dt);
    result.min_jacobian_dominance = std::numeric_limits<double>::infinity();
    LatticeState& state = result.final_state;
    const auto N = static_cast<std::size_t>(params.N);

    if (options.energy_stride > 0)
        result.ledger.records.reserve(static_cast<std::size_t>(config.steps / options.energy_stride));

    for (long s = 1; s <= config.steps; ++s) {
        const long k = state.k;
        const double phi = drive.value(k, config.dt);
        StepDiagnostics diag;
        try {
            diag = stepper.solve_next(state, phi);
        } catch (const SolverError& e) {
            throw SolverError("step " + std::to_string(k) + ": " + e.what());
        }
        result.max_newton_iters = std::max(result.max_newton_iters, diag.newton_iters);
        result.min_jacobian_dominance =
            std::min(result.min_jacobian_dominance, diag.jacobian_min_dominance);

        if (options.energy_stride > 0 && s % options.energy_stride == 0) {
            result.ledger.records.push_back(make_energy_record(config.scheme, params,
                                                               stepper.damping(), config.dt, k,
                                                               state.u_prev, state.u_curr,
                                                               state.u_next));
            if (options.record_site_energies)
                result.ledger.site_energies.push_back(
                    site_energies(config.scheme, params, config.dt, state.u_curr, state.u_next));
        }
        if (options.snapshot_stride > 0 && s % options.snapshot_stride == 0) {
            result.snapshots.push_back(
                {k + 1, std::vector<double>(state.u_next.begin() + 1, state.u_next.begin() + 1 + N)});
        }
        if (options.observer)
            options.observer(StepView{k, phi, state.u_prev, state.u_curr, state.u_next, &diag});
        state.rotate();
        ++result.steps;
    }

    if (result.steps > 0) {
        result.final_energy =
            total_energy(config.scheme, params, config.dt, state.u_prev, state.u_curr);
    } else {
        result.min_jacobian_dominance = 0.0;
    }
    return result;
}

}  // namespace sgl
