#pragma once

#include <stdexcept>
#include <string>

namespace hadwiger7 {

// Malformed or out-of-contract input (bad edge list, bad graph6, violated
// operation precondition).
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Host graph exceeds the configured size budget for generic minor search.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An outcome the underlying theorems rule out. Reaching this is an
// implementation bug, never a valid result.
struct theorem_violation : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace hadwiger7
