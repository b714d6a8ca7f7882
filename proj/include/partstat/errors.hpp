#pragma once

#include <stdexcept>
#include <string>

namespace partstat {

// Base class for all library errors so callers can catch the whole family.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Arguments h,k must be coprime (Dedekind sums, multipliers, Kloosterman sums).
struct NotCoprimeError : Error {
    using Error::Error;
};

// No h' exists under the requested congruence/parity convention.
struct NoSolutionError : Error {
    using Error::Error;
};

// The odd-moment Kloosterman sum is only defined for odd k.
struct KEvenError : Error {
    using Error::Error;
};

// Exact Laurent-polynomial division left a nonzero remainder. This signals an
// implementation bug or a misread identity; the computation must abort.
struct NonzeroRemainderError : Error {
    NonzeroRemainderError(const std::string& what, long order_index)
        : Error(what), order_index(order_index) {}
    long order_index;
};

// |q| too close to 1 for the requested accuracy.
struct SlowConvergenceError : Error {
    using Error::Error;
};

// A denominator 1 - e^{2 pi i w} q^n (or a sinh in an integrand) came too close
// to zero for the working precision.
struct PoleProximityError : Error {
    using Error::Error;
};

// Ascending series failed its tail bound within the iteration cap.
struct NonconvergentSeriesError : Error {
    using Error::Error;
};

// Two independent evaluation paths (or two quadrature densities) disagree.
struct QuadratureDisagreementError : Error {
    using Error::Error;
};

// Defensive: an integrand singularity landed on the integration path.
struct SingularityOnPathError : Error {
    using Error::Error;
};

// A branch cut or cancellation would invalidate the claimed accuracy.
struct PrecisionLossError : Error {
    using Error::Error;
};

// Neither candidate constant for the odd-series I_{-3/2} term calibrates
// against the exact odd moments.
struct NormalizationUnresolvedError : Error {
    using Error::Error;
};

// Requested range exceeds what the exact oracles can compute.
struct OracleRangeExceededError : Error {
    using Error::Error;
};

// Parity constraints on (h,k,h') cannot be satisfied for the requested frame.
struct NoValidFrameError : Error {
    using Error::Error;
};

}  // namespace partstat
