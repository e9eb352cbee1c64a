#pragma once

#include <array>
#include <complex>
#include <vector>

#include "sgl/model.hpp"

namespace sgl {

/// Linear-stability parameters; the nonlinearity and J are dropped.
struct StabilityParams {
    double c = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double m2 = 0.0;
    double dt = 0.0;

    static StabilityParams from(const ModelParams& params, double dt);
};

/// Symbols of the two-level von Neumann recurrence
/// g u^{k+1} = f u^k - h u^{k-1}.
struct SymbolTriple {
    double f_hat = 0.0;
    double g_hat = 0.0;
    double h_hat = 0.0;
};

SymbolTriple symbols(Scheme scheme, const StabilityParams& p, double xi);

/// Roots (f +- sqrt(f^2 - 4 g h)) / (2 g) of the amplification matrix.
/// Throws ValidationError when g = 0.
std::array<std::complex<double>, 2> eigenvalues(const SymbolTriple& s);

/// max(|lambda_+|, |lambda_-|).
double spectral_radius(const SymbolTriple& s);

/// Infinity norm of [[f/g, -h/g], [1, 0]].
double amplification_inf_norm(const SymbolTriple& s);

struct StabilityReport {
    Scheme scheme = Scheme::s2;
    StabilityParams params;
    std::vector<double> xi;
    std::vector<double> rho;
    std::vector<double> inf_norm;
    double max_rho = 0.0;
    double max_inf_norm = 0.0;

    /// dt <= 1/c (necessary condition for s2).
    bool necessary_ok = false;
    /// 2/gamma < dt < sqrt(2)/c (infinity-norm condition for s2); false when gamma = 0.
    bool sufficient_ok = false;
    bool sufficient_applicable = false;
    /// 2/gamma <= dt <= 1/c (condition for s1); false when gamma = 0.
    bool corollary_ok = false;
    /// gamma dt / 2 >= 1: the infinity-norm inequality holds at every xi.
    bool norm_condition_all_xi = false;
};

/// Closed-form predicates, independent of any scan.
void evaluate_predicates(StabilityReport& report);

/// Uniform grid of `grid_points` values on [0, pi] including both ends.
/// Throws ValidationError when grid_points < 2 or dt <= 0.
StabilityReport scan(Scheme scheme, const StabilityParams& p, int grid_points = 1025);

}  // namespace sgl
