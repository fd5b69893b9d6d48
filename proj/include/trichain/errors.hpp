#pragma once

#include <stdexcept>
#include <string>

namespace trichain {

// Error hierarchy. Everything derives from Error so callers can catch one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of an operation (bad angle range, n < 3, ...).
struct DomainError : Error {
    using Error::Error;
};

// An isometry was required to be elliptic but is not.
struct NotEllipticError : Error {
    using Error::Error;
};

// Two points coincide (within the degeneracy threshold) where distinct points are required.
struct DegeneratePointError : Error {
    using Error::Error;
};

// |cz + d| underflowed in a Moebius evaluation.
struct NumericOverflowError : Error {
    using Error::Error;
};

// Angle vector violates the positivity condition on the scaling factor.
struct InfeasibleAnglesError : Error {
    using Error::Error;
};

// Requested triangle data (two angles + area) admits no hyperbolic triangle.
struct InfeasibleTriangleError : Error {
    using Error::Error;
};

// A chain of triangles failed structural validation.
struct InvalidChainError : Error {
    using Error::Error;
};

// The rounded Euler class residual is too large to be an integer artifact.
struct NonIntegerEulerError : Error {
    using Error::Error;
};

// A triple of elliptic elements does not match any admissible configuration.
struct InconsistentConfigurationError : Error {
    using Error::Error;
};

// The requested angle sum lies in the band where the representation space is empty.
struct EmptyVarietyError : Error {
    using Error::Error;
};

// A homogeneous coordinate vector is (numerically) zero.
struct ZeroVectorError : Error {
    using Error::Error;
};

// A finite-difference probe was requested too close to the moment polytope boundary.
struct BoundaryProximityError : Error {
    using Error::Error;
};

}  // namespace trichain
