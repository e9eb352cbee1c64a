#pragma once

#include <span>
#include <vector>

#include "sgl/model.hpp"
#include "sgl/tridiagonal.hpp"

namespace sgl {

struct SolverConfig {
    double dt = 0.05;
    long steps = 0;
    double newton_tol = 1e-5;
    /// Tolerance used when the trajectory feeds the energy audit.
    double newton_tol_audit = 1e-12;
    int newton_max_iter = 50;
    Scheme scheme = Scheme::s1;

    void validate() const;

    bool operator==(const SolverConfig&) const = default;
};

struct StepDiagnostics {
    int newton_iters = 0;
    /// max_n |u^{(i+1)}_n - u^{(i)}_n| of the last Newton update.
    double final_update_norm = 0.0;
    /// Smallest row margin |diag| - |off-diagonals| seen during the solve.
    double jacobian_min_dominance = 0.0;
};

/// Weight w of the u^{k+1} Laplacian in the residual:
/// c^2/2 + beta/(2 dt) for s1, c^2/4 + beta/(2 dt) for s2.
double implicit_coupling_weight(Scheme scheme, const ModelParams& params, double dt);

/// Scheme residual F_n for n = 1..N, written to out[0..N-1].
///
/// All three levels carry N + 2 entries and their ghost values are used as
/// given. `damping` is indexed 0..N+1; the overload without it uses
/// params.damping_profile().
void residual(Scheme scheme, const ModelParams& params, std::span<const double> damping, double dt,
              std::span<const double> u_prev, std::span<const double> u_curr,
              std::span<const double> u_next, std::span<double> out);

std::vector<double> residual(Scheme scheme, const ModelParams& params, double dt,
                             std::span<const double> u_prev, std::span<const double> u_curr,
                             std::span<const double> u_next);

/// Left ghost value u_0^{k+1} from the discrete boundary constraint
///   c^2 (g^{k+1} + g^{k-1}) + beta (g^{k+1} - g^{k-1}) / dt = 2 phi_k,
/// with g = u_0 - u_1. Throws SolverError when c = beta = 0.
double ghost_update(const ModelParams& params, double dt, std::span<const double> u_prev,
                    std::span<const double> u_next, double phi);

/// Left ghost u_0^{k+1} under params.closure. For s2 with the matched
/// closure the constraint reads
///   (c^2 / 2)(g^{k+1} + 2 g^k + g^{k-1}) + beta (g^{k+1} - g^{k-1}) / dt = 2 phi_k;
/// every other combination defers to the printed constraint above.
double ghost_update(Scheme scheme, const ModelParams& params, double dt,
                    std::span<const double> u_prev, std::span<const double> u_curr,
                    std::span<const double> u_next, double phi);

/// Jacobian of the residual with respect to u_1^{k+1}..u_N^{k+1}, with the
/// ghost nodes eliminated through the boundary constraints.
void jacobian_tridiagonal(Scheme scheme, const ModelParams& params,
                          std::span<const double> damping, double dt,
                          std::span<const double> u_prev, std::span<const double> u_next,
                          TridiagonalMatrix& out);

TridiagonalMatrix jacobian_tridiagonal(Scheme scheme, const ModelParams& params, double dt,
                                       std::span<const double> u_prev,
                                       std::span<const double> u_next);

/// Newton/Crout solver for one lattice. Holds the damping profile and work
/// buffers so repeated steps do not allocate.
class Stepper {
public:
    Stepper(Scheme scheme, ModelParams params, double dt, double tolerance, int max_iterations);

    /// Solves for state.u_next (ghosts included) without rotating levels.
    StepDiagnostics solve_next(LatticeState& state, double phi);

    /// solve_next followed by state.rotate().
    StepDiagnostics step(LatticeState& state, double phi);

    const ModelParams& params() const { return params_; }
    std::span<const double> damping() const { return damping_; }
    Scheme scheme() const { return scheme_; }
    double dt() const { return dt_; }

private:
    void refresh_ghosts(std::span<const double> u_prev, std::span<const double> u_curr,
                        std::span<double> u_next, double phi) const;

    Scheme scheme_;
    ModelParams params_;
    double dt_;
    double tolerance_;
    int max_iterations_;
    std::vector<double> damping_;
    std::vector<double> f_;
    std::vector<double> delta_;
    std::vector<double> scratch_;
    TridiagonalMatrix jac_;
};

/// One step with the scheme and tolerance taken from `config`.
StepDiagnostics step(LatticeState& state, Scheme scheme, const ModelParams& params,
                     const SolverConfig& config, double phi);

}  // namespace sgl
