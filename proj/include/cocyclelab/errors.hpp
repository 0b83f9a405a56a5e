#pragma once

#include <stdexcept>
#include <string>

namespace cocyclelab {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or out-of-contract input (non-finite entries, wrong shape, ...).
struct InvalidInput : Error {
    using Error::Error;
};

/// A dense solver failed to converge or produced unusable output.
struct NumericalFailure : Error {
    using Error::Error;
};

/// Window indices outside the cocycle's horizon.
struct OutOfHorizon : Error {
    using Error::Error;
};

/// Materializing a matrix whose entries exceed the double range; log
/// quantities remain valid.
struct OverflowGuard : Error {
    using Error::Error;
};

/// Operation needs a splitting the cocycle does not carry.
struct MissingSplitting : Error {
    using Error::Error;
};

/// The requested flag cannot be aligned by a symplectic orthogonal matrix
/// (non-isotropic or rank-deficient input).
struct FlagAlignmentError : Error {
    using Error::Error;
};

/// Two exponent clusters are closer than the clustering contract allows.
struct ClusterAmbiguity : Error {
    ClusterAmbiguity(const std::string& msg, double gap) : Error(msg), gap(gap) {}
    double gap;
};

/// An exponent cluster sits within gap tolerance of the band edge.
struct BandEdgeAmbiguity : Error {
    using Error::Error;
};

/// In-band eigenvalue count came out odd; tolerance failure near the edge.
struct ParityViolation : Error {
    using Error::Error;
};

/// Not enough windows available to decide the quantifier.
struct HorizonTooShort : Error {
    using Error::Error;
};

/// Universal quantifier over an infinite index set was requested.
struct NotPeriodic : Error {
    using Error::Error;
};

/// Listed exponents do not respect the u/c/s splitting gaps.
struct SplittingGapViolation : Error {
    using Error::Error;
};

/// Post-hoc certification found a violated invariant.
struct CertificationFailure : Error {
    using Error::Error;
};

}  // namespace cocyclelab
