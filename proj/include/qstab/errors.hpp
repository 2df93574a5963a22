#pragma once

#include <stdexcept>
#include <string>

namespace qstab {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data (bad JSON, shape mismatches, ...).
struct InputError : Error {
    using Error::Error;
};

// Matrix/subspace dimension incompatibilities.
struct DimensionError : InputError {
    using InputError::InputError;
};

// The quiver has an oriented cycle.
struct AcyclicityError : InputError {
    using InputError::InputError;
};

// A weight fails a positivity or balance requirement.
struct WeightError : InputError {
    using InputError::InputError;
};

// Slope of the zero representation was requested.
struct ZeroRepresentationError : InputError {
    using InputError::InputError;
};

// Subrepresentation operation on mismatched parents.
struct ParentMismatchError : InputError {
    using InputError::InputError;
};

// An instance falls outside an oracle's supported class.
struct UnsupportedInstance : InputError {
    using InputError::InputError;
};

// Randomized search exhausted its retry budget without a validated result.
struct ValidationError : Error {
    using Error::Error;
};

// An internal invariant was violated; indicates a bug.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace qstab
