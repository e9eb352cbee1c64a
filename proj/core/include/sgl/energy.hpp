#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sgl/model.hpp"

namespace sgl {

/// Discrete Hamiltonian of site n (1 <= n <= N) for the level pair
/// (u^k, u^{k+1}). Ghost values of both levels are read as stored.
double site_hamiltonian(Scheme scheme, const ModelParams& params, double dt,
                        std::span<const double> u_curr, std::span<const double> u_next, int n);

/// H_n^k for n = 1..N.
std::vector<double> site_energies(Scheme scheme, const ModelParams& params, double dt,
                                  std::span<const double> u_curr, std::span<const double> u_next);

/// E_k: site Hamiltonians plus the coupling energy of the driven boundary
/// bond (u_0, u_1).
double total_energy(Scheme scheme, const ModelParams& params, double dt,
                    std::span<const double> u_curr, std::span<const double> u_next);

/// Right-hand side of the discrete energy-rate identity, split by source.
///
/// `rhs = boundary_flux - dissipation_beta - dissipation_gamma`. The gamma
/// sum uses the per-site damping, which reduces to the uniform identity
/// when params.uniform_damping() holds.
struct RateBreakdown {
    double rhs = 0.0;
    double boundary_flux = 0.0;
    double dissipation_beta = 0.0;
    double dissipation_gamma = 0.0;
};

RateBreakdown rate_rhs(Scheme scheme, const ModelParams& params, std::span<const double> damping,
                       double dt, std::span<const double> u_prev, std::span<const double> u_curr,
                       std::span<const double> u_next);

RateBreakdown rate_rhs(Scheme scheme, const ModelParams& params, double dt,
                       std::span<const double> u_prev, std::span<const double> u_curr,
                       std::span<const double> u_next);

/// One row of the energy ledger. E is E_k for the level pair (k, k+1);
/// rate_lhs = (E_k - E_{k-1}) / dt.
struct EnergyRecord {
    long step = 0;
    double time = 0.0;
    double E = 0.0;
    double rate_lhs = 0.0;
    double rate_rhs = 0.0;
    double boundary_flux = 0.0;
    double diss_beta = 0.0;
    double diss_gamma = 0.0;
    double I_out = 0.0;
};

struct EnergyLedger {
    std::vector<EnergyRecord> records;
    /// H_n^k per record, filled only when site energies were requested.
    std::vector<std::vector<double>> site_energies;
};

/// Builds a ledger row from three consecutive levels u^{k-1}, u^k, u^{k+1}.
EnergyRecord make_energy_record(Scheme scheme, const ModelParams& params,
                                std::span<const double> damping, double dt, long k,
                                std::span<const double> u_prev, std::span<const double> u_curr,
                                std::span<const double> u_next);

struct AuditReport {
    long records = 0;
    /// max_k |rate_lhs - rate_rhs|.
    double max_identity_defect = 0.0;
    /// max_k |rate_lhs - rate_rhs| / max(1, |E_k|).
    double max_scaled_defect = 0.0;
    double final_energy = 0.0;

    /// Set when the drive was switched off inside the recorded window:
    /// max_{k > M1+1} |E_k - E_{M1+1}|.
    std::optional<double> max_post_shutoff_drift;
    /// Set with the drift: every consecutive pair after shutoff satisfies
    /// E_k <= E_{k-1}.
    std::optional<bool> nonincreasing_after_shutoff;
    /// Strict version of the above (E_k < E_{k-1} for every pair).
    std::optional<bool> strictly_decreasing_after_shutoff;

    /// Undamped runs only: |E_K - E_0 - dt sum_k boundary_flux_k|, and the
    /// same divided by max(1, |E_K|).
    std::optional<double> telescoped_flux_error;
    std::optional<double> telescoped_flux_relative_error;
};

/// Checks a ledger recorded at every step against the discrete energy
/// identities. Throws AuditPreconditionError when the damping is not
/// uniform or the records are not consecutive.
AuditReport audit_trajectory(const ModelParams& params, const DriveSpec& drive, double dt,
                             std::span<const EnergyRecord> records);

}  // namespace sgl
