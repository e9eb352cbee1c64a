#include "sgl/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sgl/errors.hpp"

namespace sgl {

void TridiagonalMatrix::multiply(std::span<const double> x, std::span<double> y) const {
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
        double acc = diag[i] * x[i];
        if (i > 0) acc += lower[i] * x[i - 1];
        if (i + 1 < n) acc += upper[i] * x[i + 1];
        y[i] = acc;
    }
}

double TridiagonalMatrix::min_dominance() const {
    const std::size_t n = size();
    double margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        double off = 0.0;
        if (i > 0) off += std::abs(lower[i]);
        if (i + 1 < n) off += std::abs(upper[i]);
        margin = std::min(margin, std::abs(diag[i]) - off);
    }
    return margin;
}

void crout_solve(const TridiagonalMatrix& a, std::span<const double> rhs, std::span<double> x,
                 std::span<double> scratch) {
    const std::size_t n = a.size();
    if (rhs.size() != n || x.size() != n || scratch.size() < n)
        throw SolverError("crout_solve: size mismatch");
    if (n == 0) return;

    // scratch holds the superdiagonal of the unit upper factor; x holds the
    // intermediate forward-substitution vector z.
    constexpr double min_pivot = 1e-14;
    double pivot = a.diag[0];
    if (std::abs(pivot) < min_pivot) throw SolverError("crout_solve: zero pivot in row 0");
    scratch[0] = n > 1 ? a.upper[0] / pivot : 0.0;
    x[0] = rhs[0] / pivot;
    for (std::size_t i = 1; i < n; ++i) {
        pivot = a.diag[i] - a.lower[i] * scratch[i - 1];
        if (std::abs(pivot) < min_pivot)
            throw SolverError("crout_solve: zero pivot in row " + std::to_string(i));
        scratch[i] = i + 1 < n ? a.upper[i] / pivot : 0.0;
        x[i] = (rhs[i] - a.lower[i] * x[i - 1]) / pivot;
    }
    for (std::size_t i = n - 1; i-- > 0;) x[i] -= scratch[i] * x[i + 1];
}

std::vector<double> crout_solve(const TridiagonalMatrix& a, std::span<const double> rhs) {
    std::vector<double> x(a.size());
    std::vector<double> scratch(a.size());
    crout_solve(a, rhs, x, scratch);
    return x;
}

}  // namespace sgl
