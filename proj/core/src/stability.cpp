#include "sgl/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "sgl/errors.hpp"

namespace sgl {

StabilityParams StabilityParams::from(const ModelParams& params, double dt) {
    return {params.c, params.beta, params.gamma, params.m2, dt};
}

SymbolTriple symbols(Scheme scheme, const StabilityParams& p, double xi) {
    const double s = std::sin(0.5 * xi);
    const double s2 = s * s;
    const double cdt2 = p.c * p.c * p.dt * p.dt;
    const double bdt = 2.0 * p.beta * p.dt;
    const double mdt2 = p.m2 * p.dt * p.dt;
    const double gdt = p.gamma * p.dt;

    SymbolTriple out;
    out.f_hat = scheme == Scheme::s1 ? 2.0 : 2.0 - 2.0 * cdt2 * s2;
    out.g_hat = 1.0 + (cdt2 + bdt) * s2 + 0.5 * (mdt2 + gdt);
    out.h_hat = 1.0 + (cdt2 - bdt) * s2 + 0.5 * (mdt2 - gdt);
    return out;
}

std::array<std::complex<double>, 2> eigenvalues(const SymbolTriple& s) {
    if (s.g_hat == 0.0) throw ValidationError("amplification matrix has g_hat = 0");
    const std::complex<double> disc = s.f_hat * s.f_hat - 4.0 * s.g_hat * s.h_hat;
    const std::complex<double> root = std::sqrt(disc);
    const double denom = 2.0 * s.g_hat;
    return {(s.f_hat + root) / denom, (s.f_hat - root) / denom};
}

double spectral_radius(const SymbolTriple& s) {
    const auto lambda = eigenvalues(s);
    return std::max(std::abs(lambda[0]), std::abs(lambda[1]));
}

double amplification_inf_norm(const SymbolTriple& s) {
    if (s.g_hat == 0.0) throw ValidationError("amplification matrix has g_hat = 0");
    return std::max(std::abs(s.f_hat / s.g_hat) + std::abs(s.h_hat / s.g_hat), 1.0);
}

void evaluate_predicates(StabilityReport& report) {
    const auto& p = report.params;
    const bool coupled = p.c > 0.0;
    const double courant = coupled ? 1.0 / p.c : std::numeric_limits<double>::infinity();
    const double norm_limit = coupled ? std::sqrt(2.0) / p.c : std::numeric_limits<double>::infinity();

    report.necessary_ok = p.dt <= courant;
    report.sufficient_applicable = p.gamma > 0.0;
    if (report.sufficient_applicable) {
        const double lower = 2.0 / p.gamma;
        report.sufficient_ok = lower < p.dt && p.dt < norm_limit;
        report.corollary_ok = lower <= p.dt && p.dt <= courant;
    } else {
        report.sufficient_ok = false;
        report.corollary_ok = false;
    }
    report.norm_condition_all_xi = 0.5 * p.gamma * p.dt >= 1.0;
}

StabilityReport scan(Scheme scheme, const StabilityParams& p, int grid_points) {
    if (grid_points < 2) throw ValidationError("stability scan needs at least 2 grid points");
    if (!(p.dt > 0.0)) throw ValidationError("stability scan needs dt > 0");

    StabilityReport report;
    report.scheme = scheme;
    report.params = p;
    const auto n = static_cast<std::size_t>(grid_points);
    report.xi.resize(n);
    report.rho.resize(n);
    report.inf_norm.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = i + 1 == n ? std::numbers::pi
                                     : std::numbers::pi * static_cast<double>(i) /
                                           static_cast<double>(n - 1);
        const auto sym = symbols(scheme, p, xi);
        report.xi[i] = xi;
        report.rho[i] = spectral_radius(sym);
        report.inf_norm[i] = amplification_inf_norm(sym);
    }
    report.max_rho = *std::max_element(report.rho.begin(), report.rho.end());
    report.max_inf_norm = *std::max_element(report.inf_norm.begin(), report.inf_norm.end());
    evaluate_predicates(report);
    return report;
}

}  // namespace sgl
