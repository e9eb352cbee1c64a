#pragma once

#include <stdexcept>
#include <string>

namespace sgl {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter or configuration value violates its documented invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Numerical failure while advancing the lattice (degenerate boundary,
/// zero pivot, loss of diagonal dominance, Newton divergence).
class SolverError : public Error {
public:
    using Error::Error;
};

/// Bracketing failed while searching for a uniform equilibrium.
class NoRootError : public Error {
public:
    using Error::Error;
};

/// The trajectory handed to the energy audit does not satisfy the
/// assumptions of the discrete energy identities.
class AuditPreconditionError : public Error {
public:
    using Error::Error;
};

}  // namespace sgl
