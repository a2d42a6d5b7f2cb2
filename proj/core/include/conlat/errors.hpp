#pragma once

#include <stdexcept>
#include <string>

namespace conlat {

// Malformed or out-of-contract input (CLI exit code 2).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Labeled congruences do not form the requested figure pattern; the message
// names the violated relation and the offending labels.
struct PatternError : InputError {
    using InputError::InputError;
};

// A configured search/closure budget was exceeded.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A theorem-mandated cross-check failed (CLI exit code 1).
struct CrossCheckError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace conlat
