#include "sgl/energy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sgl/errors.hpp"

namespace sgl {

namespace {

inline double sq(double x) { return x * x; }

}  // namespace

double site_hamiltonian(Scheme scheme, const ModelParams& params, double dt,
                        std::span<const double> u_curr, std::span<const double> u_next, int n) {
    const double c2 = params.c * params.c;
    const double a = u_curr[n];
    const double b = u_next[n];

    const double kinetic = 0.5 * sq((b - a) / dt);
    double coupling = 0.0;
    if (scheme == Scheme::s1) {
        coupling = c2 / 8.0 *
                   (sq(u_next[n + 1] - b) + sq(u_next[n - 1] - b) + sq(u_curr[n + 1] - a) +
                    sq(u_curr[n - 1] - a));
    } else {
        const double mid = 0.5 * (b + a);
        const double right = 0.5 * (u_next[n + 1] + u_curr[n + 1]);
        const double left = 0.5 * (u_next[n - 1] + u_curr[n - 1]);
        coupling = c2 / 4.0 * (sq(right - mid) + sq(left - mid));
    }
    const double mass = 0.5 * params.m2 * 0.5 * (b * b + a * a);
    const double pot = 0.5 * (potential(b) + potential(a));
    const double current = params.J * 0.5 * (b + a);
    return kinetic + coupling + mass + pot - current;
}

std::vector<double> site_energies(Scheme scheme, const ModelParams& params, double dt,
                                  std::span<const double> u_curr, std::span<const double> u_next) {
    std::vector<double> out(static_cast<std::size_t>(params.N));
    for (int n = 1; n <= params.N; ++n)
        out[static_cast<std::size_t>(n - 1)] = site_hamiltonian(scheme, params, dt, u_curr, u_next, n);
    return out;
}

double total_energy(Scheme scheme, const ModelParams& params, double dt,
                    std::span<const double> u_curr, std::span<const double> u_next) {
    double sum = 0.0;
    for (int n = 1; n <= params.N; ++n) sum += site_hamiltonian(scheme, params, dt, u_curr, u_next, n);

    const double c2 = params.c * params.c;
    if (scheme == Scheme::s1) {
        sum += c2 / 4.0 * 0.5 * (sq(u_next[1] - u_next[0]) + sq(u_curr[1] - u_curr[0]));
    } else {
        const double gap = 0.5 * (u_next[1] + u_curr[1]) - 0.5 * (u_next[0] + u_curr[0]);
        sum += c2 / 4.0 * sq(gap);
    }
    return sum;
}

RateBreakdown rate_rhs(Scheme scheme, const ModelParams& params, std::span<const double> damping,
                       double dt, std::span<const double> u_prev, std::span<const double> u_curr,
                       std::span<const double> u_next) {
    const int N = params.N;
    const double two_dt = 2.0 * dt;
    auto velocity = [&](int n) { return (u_next[n] - u_prev[n]) / two_dt; };

    double beta_sum = 0.0;
    double gamma_sum = 0.0;
    for (int n = 1; n <= N; ++n) {
        beta_sum += sq(velocity(n) - velocity(n - 1));
        gamma_sum += damping[n] * sq(velocity(n));
    }
    beta_sum += (velocity(1) - velocity(0)) * velocity(0);

    double boundary_avg = 0.0;
    if (scheme == Scheme::s1) {
        const double bar0 = u_next[0] + u_prev[0];
        const double bar1 = u_next[1] + u_prev[1];
        boundary_avg = (bar0 - bar1) / 2.0;
    } else {
        const double w0 = u_next[0] + 2.0 * u_curr[0] + u_prev[0];
        const double w1 = u_next[1] + 2.0 * u_curr[1] + u_prev[1];
        boundary_avg = (w0 - w1) / 4.0;
    }

    RateBreakdown out;
    out.boundary_flux = params.c * params.c * boundary_avg * velocity(0);
    out.dissipation_beta = params.beta * beta_sum;
    out.dissipation_gamma = gamma_sum;
    out.rhs = out.boundary_flux - out.dissipation_beta - out.dissipation_gamma;
    return out;
}

RateBreakdown rate_rhs(Scheme scheme, const ModelParams& params, double dt,
                       std::span<const double> u_prev, std::span<const double> u_curr,
                       std::span<const double> u_next) {
    const auto damping = params.damping_profile();
    return rate_rhs(scheme, params, damping, dt, u_prev, u_curr, u_next);
}

EnergyRecord make_energy_record(Scheme scheme, const ModelParams& params,
                                std::span<const double> damping, double dt, long k,
                                std::span<const double> u_prev, std::span<const double> u_curr,
                                std::span<const double> u_next) {
    EnergyRecord rec;
    rec.step = k;
    rec.time = static_cast<double>(k) * dt;
    rec.E = total_energy(scheme, params, dt, u_curr, u_next);
    const double previous = total_energy(scheme, params, dt, u_prev, u_curr);
    rec.rate_lhs = (rec.E - previous) / dt;
    const auto rate = rate_rhs(scheme, params, damping, dt, u_prev, u_curr, u_next);
    rec.rate_rhs = rate.rhs;
    rec.boundary_flux = rate.boundary_flux;
    rec.diss_beta = rate.dissipation_beta;
    rec.diss_gamma = rate.dissipation_gamma;
    const int N = params.N;
    rec.I_out = (u_next[N] - u_prev[N]) / (2.0 * dt) * params.inverse_resistance();
    return rec;
}

AuditReport audit_trajectory(const ModelParams& params, const DriveSpec& drive, double dt,
                             std::span<const EnergyRecord> records) {
    if (!params.uniform_damping())
        throw AuditPreconditionError(
            "energy identities need uniform damping (sponge off, infinite R)");
    for (std::size_t i = 1; i < records.size(); ++i) {
        if (records[i].step != records[i - 1].step + 1)
            throw AuditPreconditionError("energy audit needs a record at every step (stride 1)");
    }

    AuditReport report;
    report.records = static_cast<long>(records.size());
    if (records.empty()) return report;

    for (const auto& r : records) {
        const double defect = std::abs(r.rate_lhs - r.rate_rhs);
        report.max_identity_defect = std::max(report.max_identity_defect, defect);
        report.max_scaled_defect =
            std::max(report.max_scaled_defect, defect / std::max(1.0, std::abs(r.E)));
    }
    report.final_energy = records.back().E;

    if (drive.shutoff_step) {
        const long reference_step = *drive.shutoff_step + 1;
        auto ref = std::find_if(records.begin(), records.end(),
                                [&](const EnergyRecord& r) { return r.step == reference_step; });
        if (ref != records.end() && std::next(ref) != records.end()) {
            double drift = 0.0;
            bool nonincreasing = true;
            bool strictly = true;
            for (auto it = std::next(ref); it != records.end(); ++it) {
                drift = std::max(drift, std::abs(it->E - ref->E));
                if (it->E > std::prev(it)->E) nonincreasing = false;
                if (!(it->E < std::prev(it)->E)) strictly = false;
            }
            report.max_post_shutoff_drift = drift;
            report.nonincreasing_after_shutoff = nonincreasing;
            report.strictly_decreasing_after_shutoff = strictly;
        }
    }

    if (params.beta == 0.0 && params.gamma == 0.0) {
        const double e0 = records.front().E - dt * records.front().rate_lhs;
        double flux = 0.0;
        for (const auto& r : records) flux += r.boundary_flux;
        const double err = std::abs(records.back().E - e0 - dt * flux);
        report.telescoped_flux_error = err;
        report.telescoped_flux_relative_error = err / std::max(1.0, std::abs(records.back().E));
    }
    return report;
}

}  // namespace sgl
