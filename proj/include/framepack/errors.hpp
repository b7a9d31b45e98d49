#pragma once

#include <stdexcept>

namespace framepack {

// Input text could not be parsed (malformed header, short row, bad float).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input violated a documented precondition (non-unit vector, zero vector,
// dimension mismatch, non-spanning frame handed to the certifier).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A memory or size guard would be exceeded.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace framepack
