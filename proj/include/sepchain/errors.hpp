#pragma once

#include <stdexcept>
#include <string>

namespace sepchain {

// Base for everything this library throws on bad input.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (edge lists, config files). Messages carry line numbers.
struct parse_error : error {
    using error::error;
};

// Caller-supplied arguments violate a documented precondition.
struct validation_error : error {
    using error::error;
};

// Parameter vectors admit no separate chain (some p_v exceeds the degree).
struct feasibility_error : validation_error {
    using validation_error::validation_error;
};

// Brute-force enumeration would exceed its configured limits.
struct size_error : validation_error {
    using validation_error::validation_error;
};

// A contract the library itself guarantees was broken; indicates a bug.
struct internal_error : error {
    using error::error;
};

} // namespace sepchain
