#pragma once

#include <stdexcept>
#include <string>

namespace ncbir {

// Base class for every failure the library reports. The CLI maps these to
// exit codes, so keep the hierarchy flat and the messages self-contained.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two operands built over different ring descriptors.
struct DescriptorMismatch : Error {
    using Error::Error;
};

// Matrix dimensions incompatible with the requested operation.
struct DimensionMismatch : Error {
    using Error::Error;
};

// Partial inversion failed; the message names the element or factor.
struct NotInvertible : Error {
    using Error::Error;
};

// A stated precondition of a closed formula does not hold.
struct PreconditionViolated : Error {
    using Error::Error;
};

// Input outside the domain of a map; names the failing checklist element.
struct DomainViolation : Error {
    using Error::Error;
};

// An identity the library re-verifies before returning came out false.
// Seeing this means a bug in the build, not bad input.
struct VerificationFailed : Error {
    using Error::Error;
};

// Rejection sampling gave up; the ring is too small for the predicate.
struct SamplingExhausted : Error {
    using Error::Error;
};

// Malformed JSON input.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace ncbir
