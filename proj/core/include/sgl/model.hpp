#pragma once

#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace sgl {

/// Which implicit scheme advances the lattice.
///
/// s1 averages the spatial Laplacian over the outer levels,
/// (L^{k+1} + L^{k-1}) / 2. s2 uses the three-level weighting
/// (L^{k+1} + 2 L^k + L^{k-1}) / 4.
enum class Scheme { s1, s2 };

/// Artificial damping profile on the far end of the lattice.
///
/// `verbatim` evaluates 0.5 [1 + tanh((2n - N0 + N) / 6)], which is ~1 at
/// every site for realistic N. `ramp` evaluates the centred profile
/// 0.5 [1 + tanh((2n - N - N0) / 6)], which rises from ~0 to ~1 around
/// n = (N + N0) / 2.
enum class SpongeMode { off, verbatim, ramp };

/// Discrete boundary constraint that fixes the driven ghost u_0.
///
/// `printed` imposes c^2 (g^{k+1} + g^{k-1}) + beta (g^{k+1} - g^{k-1}) / dt
/// = 2 phi_k on the gap g = u_0 - u_1 for both schemes. `matched` keeps that
/// for s1 but weights the s2 coupling term like the s2 Laplacian,
/// (c^2 / 2)(g^{k+1} + 2 g^k + g^{k-1}), which makes the boundary flux of
/// the s2 energy identity vanish when phi = beta = 0.
enum class BoundaryClosure { matched, printed };

std::string_view to_string(Scheme scheme);
std::string_view to_string(SpongeMode mode);
std::string_view to_string(BoundaryClosure closure);
Scheme parse_scheme(std::string_view text);
SpongeMode parse_sponge_mode(std::string_view text);
BoundaryClosure parse_boundary_closure(std::string_view text);

/// Physical constants of the driven Josephson array and its lattice size.
///
/// Sites are numbered 1..N; indices 0 and N+1 are ghost nodes. `R` is the
/// output reading resistance; infinity means an open output (1/R = 0).
struct ModelParams {
    double c = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double m2 = 0.0;
    double J = 0.0;
    double R = std::numeric_limits<double>::infinity();
    int N = 1;
    int N0 = 1;
    SpongeMode sponge = SpongeMode::off;
    BoundaryClosure closure = BoundaryClosure::matched;

    /// Throws ValidationError on any violated invariant.
    void validate() const;

    double inverse_resistance() const;

    /// gamma + (1/R at n = N) + sponge(n), for 1 <= n <= N.
    double site_damping(int n) const;

    /// Per-site damping indexed 0..N+1 (ghost entries are zero).
    std::vector<double> damping_profile() const;

    /// True when every site sees the same damping gamma.
    bool uniform_damping() const;

    bool operator==(const ModelParams&) const = default;
};

/// Harmonic boundary forcing phi(t) = A sin(Omega t).
///
/// With `ramp_steps > 0` the value at step k is scaled by
/// min(k / ramp_steps, 1). With `shutoff_step` set, phi_k = 0 for every
/// k > shutoff_step.
struct DriveSpec {
    double amplitude = 0.0;
    double omega = 1.0;
    int ramp_steps = 0;
    std::optional<long> shutoff_step;

    void validate() const;

    /// phi_k evaluated at t_k = k dt.
    double value(long k, double dt) const;

    bool operator==(const DriveSpec&) const = default;
};

/// Rejects a drive that cannot be imposed on the given lattice
/// (c = beta = 0 leaves the boundary constraint without a solution).
void validate_drive_compatibility(const ModelParams& params, const DriveSpec& drive);

/// V(u) = 1 - cos u.
double potential(double u);

/// sin(x) / x with sinc(0) = 1.
double sinc(double x);

/// d/dx sinc(x), with a series branch near zero.
double sinc_derivative(double x);

/// [V(u+) - V(u-)] / (u+ - u-) in the closed form sin(s) sinc(d),
/// s = (u+ + u-) / 2, d = (u+ - u-) / 2. Equals sin(u) when u+ = u- = u.
double nonlinear_ratio(double u_plus, double u_minus);

/// Partial derivative of nonlinear_ratio with respect to u_plus.
double nonlinear_ratio_dplus(double u_plus, double u_minus);

/// omega^2(k) = m2 + 1 + 2 c^2 (1 - cos k).
double dispersion_omega2(double wavenumber, double c, double m2);
double dispersion_omega2(double wavenumber, const ModelParams& params);

/// Upper edge sqrt(m2 + 1) of the forbidden band. Requires m2 > -1.
double band_gap_edge(double m2);

/// Continuum-limit supratransmission amplitude 2c(1 - Omega^2), defined
/// for 0 < Omega <= 1.
double continuum_threshold(double c, double omega);

/// Sponge damping added to site n (1 <= n <= N).
double sponge_gamma(int n, int N, int N0, SpongeMode mode);

/// Root of m2 u + sin u = J with residual below 1e-12, found by bisection.
/// Prefers the branch in [-pi/2, pi/2] when it brackets a root. Throws
/// NoRootError when no sign change can be found.
double uniform_equilibrium(double m2, double J);

/// Lattice levels u^{k-1}, u^k and the level u^{k+1} being solved for.
///
/// Each level holds N + 2 values; index 0 and N + 1 are ghost nodes. `k` is
/// the time index of `u_curr`, so the initial state (two zero levels u^0 and
/// u^1) has k = 1.
struct LatticeState {
    std::vector<double> u_prev;
    std::vector<double> u_curr;
    std::vector<double> u_next;
    long k = 1;
    double dt = 0.0;

    /// Zero initial data u^0 = u^1 = 0 with zero ghosts.
    static LatticeState at_rest(int N, double dt);

    int sites() const { return static_cast<int>(u_curr.size()) - 2; }
    double time() const { return static_cast<double>(k) * dt; }

    /// prev <- curr, curr <- next, k += 1. The retired level ends up in
    /// `u_next` and is overwritten by the next solve.
    void rotate();
};

}  // namespace sgl
