#include "sgl/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sgl/errors.hpp"

namespace sgl {

std::string_view to_string(Scheme scheme) {
    return scheme == Scheme::s1 ? "s1" : "s2";
}

std::string_view to_string(SpongeMode mode) {
    switch (mode) {
        case SpongeMode::off: return "off";
        case SpongeMode::verbatim: return "verbatim";
        case SpongeMode::ramp: return "ramp";
    }
    return "off";
}

std::string_view to_string(BoundaryClosure closure) {
    return closure == BoundaryClosure::matched ? "matched" : "printed";
}

Scheme parse_scheme(std::string_view text) {
    if (text == "s1" || text == "S1") return Scheme::s1;
    if (text == "s2" || text == "S2") return Scheme::s2;
    throw ValidationError("unknown scheme '" + std::string(text) + "' (expected s1 or s2)");
}

SpongeMode parse_sponge_mode(std::string_view text) {
    if (text == "off") return SpongeMode::off;
    if (text == "verbatim") return SpongeMode::verbatim;
    if (text == "ramp") return SpongeMode::ramp;
    throw ValidationError("unknown sponge mode '" + std::string(text) +
                          "' (expected off, verbatim or ramp)");
}

BoundaryClosure parse_boundary_closure(std::string_view text) {
    if (text == "matched") return BoundaryClosure::matched;
    if (text == "printed") return BoundaryClosure::printed;
    throw ValidationError("unknown boundary closure '" + std::string(text) +
                          "' (expected matched or printed)");
}

void ModelParams::validate() const {
    auto finite = [](double v) { return std::isfinite(v); };
    if (!finite(c) || c < 0.0) throw ValidationError("c must be finite and >= 0");
    if (!finite(beta) || beta < 0.0) throw ValidationError("beta must be finite and >= 0");
    if (!finite(gamma) || gamma < 0.0) throw ValidationError("gamma must be finite and >= 0");
    if (!finite(m2)) throw ValidationError("m2 must be finite");
    if (!finite(J)) throw ValidationError("J must be finite");
    if (std::isnan(R) || R <= 0.0) throw ValidationError("R must be positive (or infinite)");
    if (N < 1) throw ValidationError("N must be >= 1");
    if (N0 < 1 || N0 > N) throw ValidationError("N0 must satisfy 1 <= N0 <= N");
}

double ModelParams::inverse_resistance() const {
    return std::isinf(R) ? 0.0 : 1.0 / R;
}

double ModelParams::site_damping(int n) const {
    double g = gamma + sponge_gamma(n, N, N0, sponge);
    if (n == N) g += inverse_resistance();
    return g;
}

std::vector<double> ModelParams::damping_profile() const {
    std::vector<double> profile(static_cast<std::size_t>(N) + 2, 0.0);
    for (int n = 1; n <= N; ++n) profile[n] = site_damping(n);
    return profile;
}

bool ModelParams::uniform_damping() const {
    return sponge == SpongeMode::off && inverse_resistance() == 0.0;
}

void DriveSpec::validate() const {
    if (!std::isfinite(amplitude) || amplitude < 0.0)
        throw ValidationError("drive amplitude must be finite and >= 0");
    if (!std::isfinite(omega) || omega <= 0.0)
        throw ValidationError("drive frequency must be finite and > 0");
    if (ramp_steps < 0) throw ValidationError("ramp_steps must be >= 0");
    if (shutoff_step && *shutoff_step < 0) throw ValidationError("shutoff_step must be >= 0");
}

double DriveSpec::value(long k, double dt) const {
    if (shutoff_step && k > *shutoff_step) return 0.0;
    double phi = amplitude * std::sin(omega * static_cast<double>(k) * dt);
    if (ramp_steps > 0 && k < ramp_steps)
        phi *= static_cast<double>(k) / static_cast<double>(ramp_steps);
    return phi;
}

void validate_drive_compatibility(const ModelParams& params, const DriveSpec& drive) {
    if (drive.amplitude > 0.0 && params.c == 0.0 && params.beta == 0.0)
        throw ValidationError("a boundary drive needs c > 0 or beta > 0");
}

double potential(double u) {
    return 1.0 - std::cos(u);
}

double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

double sinc_derivative(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return x * (-1.0 / 3.0 + x2 / 30.0);
    }
    return (x * std::cos(x) - std::sin(x)) / (x * x);
}

double nonlinear_ratio(double u_plus, double u_minus) {
    const double s = 0.5 * (u_plus + u_minus);
    const double d = 0.5 * (u_plus - u_minus);
    return std::sin(s) * sinc(d);
}

double nonlinear_ratio_dplus(double u_plus, double u_minus) {
    const double s = 0.5 * (u_plus + u_minus);
    const double d = 0.5 * (u_plus - u_minus);
    return 0.5 * (std::cos(s) * sinc(d) + std::sin(s) * sinc_derivative(d));
}

double dispersion_omega2(double wavenumber, double c, double m2) {
    return m2 + 1.0 + 2.0 * c * c * (1.0 - std::cos(wavenumber));
}

double dispersion_omega2(double wavenumber, const ModelParams& params) {
    return dispersion_omega2(wavenumber, params.c, params.m2);
}

double band_gap_edge(double m2) {
    if (!(m2 > -1.0)) throw ValidationError("band gap requires m2 > -1");
    return std::sqrt(m2 + 1.0);
}

double continuum_threshold(double c, double omega) {
    if (!(omega > 0.0) || omega > 1.0)
        throw ValidationError("continuum threshold needs 0 < Omega <= 1 (inside the band gap)");
    return 2.0 * c * (1.0 - omega * omega);
}

double sponge_gamma(int n, int N, int N0, SpongeMode mode) {
    switch (mode) {
        case SpongeMode::off: return 0.0;
        case SpongeMode::verbatim:
            return 0.5 * (1.0 + std::tanh((2.0 * n - N0 + N) / 6.0));
        case SpongeMode::ramp:
            return 0.5 * (1.0 + std::tanh((2.0 * n - N - N0) / 6.0));
    }
    return 0.0;
}

namespace {

double bisect(double m2, double J, double lo, double hi) {
    auto f = [&](double u) { return m2 * u + std::sin(u) - J; };
    double flo = f(lo);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    const double a = std::abs(f(lo));
    const double b = std::abs(f(hi));
    return a <= b ? lo : hi;
}

}  // namespace

double uniform_equilibrium(double m2, double J) {
    if (!std::isfinite(m2) || !std::isfinite(J)) throw NoRootError("non-finite equilibrium input");
    auto f = [&](double u) { return m2 * u + std::sin(u) - J; };
    auto brackets = [&](double a, double b) { return f(a) * f(b) <= 0.0; };

    constexpr double half_pi = std::numbers::pi / 2.0;
    double lo = 0.0;
    double hi = 0.0;
    bool found = false;
    if (brackets(-half_pi, half_pi)) {
        lo = -half_pi;
        hi = half_pi;
        found = true;
    } else if (m2 > 0.0) {
        lo = (J - 1.0) / m2;
        hi = (J + 1.0) / m2;
        found = true;
    } else {
        // Outward scan; stop at the first sign change on either side.
        constexpr double h = 0.05;
        for (int i = 0; i < 20000 && !found; ++i) {
            const double a = i * h;
            if (brackets(a, a + h)) {
                lo = a;
                hi = a + h;
                found = true;
            } else if (brackets(-a - h, -a)) {
                lo = -a - h;
                hi = -a;
                found = true;
            }
        }
    }
    if (!found)
        throw NoRootError("no root of m2*u + sin(u) = J could be bracketed");

    const double root = bisect(m2, J, lo, hi);
    if (std::abs(f(root)) >= 1e-12)
        throw NoRootError("bisection did not reach a residual below 1e-12");
    return root;
}

LatticeState LatticeState::at_rest(int N, double dt) {
    if (N < 1) throw ValidationError("N must be >= 1");
    LatticeState s;
    const auto size = static_cast<std::size_t>(N) + 2;
    s.u_prev.assign(size, 0.0);
    s.u_curr.assign(size, 0.0);
    s.u_next.assign(size, 0.0);
    s.k = 1;
    s.dt = dt;
    return s;
}

void LatticeState::rotate() {
    std::swap(u_prev, u_curr);
    std::swap(u_curr, u_next);
    ++k;
}

}  // namespace sgl
