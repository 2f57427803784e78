#pragma once

#include <stdexcept>

namespace frobstab {

// Invalid arguments or parameter combinations. The CLI maps this to exit 2.
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A configured resource cap would be exceeded. The CLI maps this to exit 3.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands live in prime fields of different characteristic.
struct mismatch_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace frobstab
