#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sgl {

/// Square tridiagonal matrix stored by diagonals.
///
/// Row i holds lower[i] at column i-1, diag[i] at column i and upper[i] at
/// column i+1; lower[0] and upper[n-1] are unused and kept at zero.
struct TridiagonalMatrix {
    std::vector<double> lower;
    std::vector<double> diag;
    std::vector<double> upper;

    TridiagonalMatrix() = default;
    explicit TridiagonalMatrix(std::size_t n) : lower(n, 0.0), diag(n, 0.0), upper(n, 0.0) {}

    std::size_t size() const { return diag.size(); }

    /// y = A x.
    void multiply(std::span<const double> x, std::span<double> y) const;

    /// min_i (|diag_i| - |lower_i| - |upper_i|); positive means strictly
    /// diagonally dominant by rows.
    double min_dominance() const;
};

/// Crout factorization A = L U (U unit upper bidiagonal) followed by
/// forward and back substitution. No pivoting; throws SolverError when a
/// pivot falls below 1e-14 in magnitude.
void crout_solve(const TridiagonalMatrix& a, std::span<const double> rhs, std::span<double> x,
                 std::span<double> scratch);

std::vector<double> crout_solve(const TridiagonalMatrix& a, std::span<const double> rhs);

}  // namespace sgl
