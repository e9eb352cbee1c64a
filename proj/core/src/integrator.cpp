#include "sgl/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sgl/errors.hpp"

namespace sgl {

void SolverConfig::validate() const {
    if (!std::isfinite(dt) || dt <= 0.0) throw ValidationError("dt must be finite and > 0");
    if (steps < 0) throw ValidationError("steps must be >= 0");
    if (!(newton_tol > 0.0)) throw ValidationError("newton_tol must be > 0");
    if (!(newton_tol_audit > 0.0)) throw ValidationError("newton_tol_audit must be > 0");
    if (newton_max_iter < 1) throw ValidationError("newton_max_iter must be >= 1");
}

double implicit_coupling_weight(Scheme scheme, const ModelParams& params, double dt) {
    const double c2 = params.c * params.c;
    const double internal = params.beta / (2.0 * dt);
    return (scheme == Scheme::s1 ? 0.5 * c2 : 0.25 * c2) + internal;
}

namespace {

inline double laplacian(std::span<const double> u, int n) {
    return u[n + 1] - 2.0 * u[n] + u[n - 1];
}

void check_levels(const ModelParams& params, std::span<const double> a,
                  std::span<const double> b) {
    const auto size = static_cast<std::size_t>(params.N) + 2;
    if (a.size() != size || b.size() != size)
        throw ValidationError("lattice levels must hold N + 2 values");
}

}  // namespace

void residual(Scheme scheme, const ModelParams& params, std::span<const double> damping, double dt,
              std::span<const double> u_prev, std::span<const double> u_curr,
              std::span<const double> u_next, std::span<double> out) {
    const int N = params.N;
    const double inv_dt2 = 1.0 / (dt * dt);
    const double c2 = params.c * params.c;
    const double internal = params.beta / (2.0 * dt);
    const double half_m2 = 0.5 * params.m2;
    for (int n = 1; n <= N; ++n) {
        const double lap_next = laplacian(u_next, n);
        const double lap_prev = laplacian(u_prev, n);
        const double coupling = scheme == Scheme::s1
                                    ? 0.5 * c2 * (lap_next + lap_prev)
                                    : 0.25 * c2 * (lap_next + 2.0 * laplacian(u_curr, n) + lap_prev);
        const double up = u_next[n];
        const double um = u_prev[n];
        out[n - 1] = (up - 2.0 * u_curr[n] + um) * inv_dt2 - coupling -
                     internal * (lap_next - lap_prev) + damping[n] / (2.0 * dt) * (up - um) +
                     half_m2 * (up + um) + nonlinear_ratio(up, um) - params.J;
    }
}

std::vector<double> residual(Scheme scheme, const ModelParams& params, double dt,
                             std::span<const double> u_prev, std::span<const double> u_curr,
                             std::span<const double> u_next) {
    check_levels(params, u_prev, u_curr);
    check_levels(params, u_curr, u_next);
    const auto damping = params.damping_profile();
    std::vector<double> out(static_cast<std::size_t>(params.N));
    residual(scheme, params, damping, dt, u_prev, u_curr, u_next, out);
    return out;
}

double ghost_update(const ModelParams& params, double dt, std::span<const double> u_prev,
                    std::span<const double> u_next, double phi) {
    const double c2 = params.c * params.c;
    const double a = c2 + params.beta / dt;
    if (!(a > 0.0)) throw SolverError("degenerate boundary: c = beta = 0 cannot carry a drive");
    const double prior_gap = u_prev[0] - u_prev[1];
    return u_next[1] + (2.0 * phi - (c2 - params.beta / dt) * prior_gap) / a;
}

double ghost_update(Scheme scheme, const ModelParams& params, double dt,
                    std::span<const double> u_prev, std::span<const double> u_curr,
                    std::span<const double> u_next, double phi) {
    if (scheme == Scheme::s1 || params.closure == BoundaryClosure::printed)
        return ghost_update(params, dt, u_prev, u_next, phi);
    const double half_c2 = 0.5 * params.c * params.c;
    const double b = params.beta / dt;
    const double a = half_c2 + b;
    if (!(a > 0.0)) throw SolverError("degenerate boundary: c = beta = 0 cannot carry a drive");
    const double gap_curr = u_curr[0] - u_curr[1];
    const double gap_prev = u_prev[0] - u_prev[1];
    return u_next[1] + (2.0 * phi - 2.0 * half_c2 * gap_curr - (half_c2 - b) * gap_prev) / a;
}

void jacobian_tridiagonal(Scheme scheme, const ModelParams& params,
                          std::span<const double> damping, double dt,
                          std::span<const double> u_prev, std::span<const double> u_next,
                          TridiagonalMatrix& out) {
    const int N = params.N;
    if (out.size() != static_cast<std::size_t>(N)) out = TridiagonalMatrix(static_cast<std::size_t>(N));
    const double w = implicit_coupling_weight(scheme, params, dt);
    const double base = 1.0 / (dt * dt) + 0.5 * params.m2;
    for (int n = 1; n <= N; ++n) {
        const auto i = static_cast<std::size_t>(n - 1);
        const int neighbours = (n > 1 ? 1 : 0) + (n < N ? 1 : 0);
        out.diag[i] = base + w * neighbours + damping[n] / (2.0 * dt) +
                      nonlinear_ratio_dplus(u_next[n], u_prev[n]);
        out.lower[i] = n > 1 ? -w : 0.0;
        out.upper[i] = n < N ? -w : 0.0;
    }
}

TridiagonalMatrix jacobian_tridiagonal(Scheme scheme, const ModelParams& params, double dt,
                                       std::span<const double> u_prev,
                                       std::span<const double> u_next) {
    check_levels(params, u_prev, u_next);
    TridiagonalMatrix out(static_cast<std::size_t>(params.N));
    const auto damping = params.damping_profile();
    jacobian_tridiagonal(scheme, params, damping, dt, u_prev, u_next, out);
    return out;
}

Stepper::Stepper(Scheme scheme, ModelParams params, double dt, double tolerance,
                 int max_iterations)
    : scheme_(scheme),
      params_(params),
      dt_(dt),
      tolerance_(tolerance),
      max_iterations_(max_iterations) {
    params_.validate();
    if (!std::isfinite(dt) || dt <= 0.0) throw ValidationError("dt must be finite and > 0");
    if (!(tolerance > 0.0)) throw ValidationError("Newton tolerance must be > 0");
    if (max_iterations < 1) throw ValidationError("newton_max_iter must be >= 1");
    damping_ = params_.damping_profile();
    const auto n = static_cast<std::size_t>(params_.N);
    f_.resize(n);
    delta_.resize(n);
    scratch_.resize(n);
    jac_ = TridiagonalMatrix(n);
}

void Stepper::refresh_ghosts(std::span<const double> u_prev, std::span<const double> u_curr,
                             std::span<double> u_next, double phi) const {
    const int N = params_.N;
    const double a = params_.c * params_.c + params_.beta / dt_;
    if (a > 0.0) {
        u_next[0] = ghost_update(scheme_, params_, dt_, u_prev, u_curr, u_next, phi);
    } else if (phi == 0.0) {
        // No coupling at all: the ghost never enters a residual.
        u_next[0] = u_next[1];
    } else {
        throw SolverError("degenerate boundary: c = beta = 0 cannot carry a drive");
    }
    u_next[N + 1] = u_next[N];
}

StepDiagnostics Stepper::solve_next(LatticeState& state, double phi) {
    const int N = params_.N;
    if (state.sites() != N) throw ValidationError("state size does not match N");
    std::span<const double> prev = state.u_prev;
    std::span<const double> curr = state.u_curr;
    std::span<double> next = state.u_next;

    for (int n = 1; n <= N; ++n) next[n] = 2.0 * curr[n] - prev[n];

    StepDiagnostics diag;
    diag.jacobian_min_dominance = std::numeric_limits<double>::infinity();
    for (int iter = 1; iter <= max_iterations_; ++iter) {
        refresh_ghosts(prev, curr, next, phi);
        residual(scheme_, params_, damping_, dt_, prev, curr, next, f_);
        jacobian_tridiagonal(scheme_, params_, damping_, dt_, prev, next, jac_);
        const double dominance = jac_.min_dominance();
        diag.jacobian_min_dominance = std::min(diag.jacobian_min_dominance, dominance);
        if (!(dominance > 0.0))
            throw SolverError("Newton Jacobian lost diagonal dominance (margin " +
                              std::to_string(dominance) + ")");
        for (auto& v : f_) v = -v;
        crout_solve(jac_, f_, delta_, scratch_);

        double norm = 0.0;
        for (int n = 1; n <= N; ++n) {
            const double d = delta_[static_cast<std::size_t>(n - 1)];
            next[n] += d;
            norm = std::max(norm, std::abs(d));
        }
        if (!std::isfinite(norm)) throw SolverError("Newton iterate became non-finite");
        diag.newton_iters = iter;
        diag.final_update_norm = norm;
        if (norm < tolerance_) {
            refresh_ghosts(prev, curr, next, phi);
            return diag;
        }
    }
    throw SolverError("Newton did not converge after " + std::to_string(max_iterations_) +
                      " iterations (last update " + std::to_string(diag.final_update_norm) + ")");
}

StepDiagnostics Stepper::step(LatticeState& state, double phi) {
    const auto diag = solve_next(state, phi);
    state.rotate();
    return diag;
}

StepDiagnostics step(LatticeState& state, Scheme scheme, const ModelParams& params,
                     const SolverConfig& config, double phi) {
    config.validate();
    Stepper stepper(scheme, params, config.dt, config.newton_tol, config.newton_max_iter);
    return stepper.step(state, phi);
}

}  // namespace sgl
