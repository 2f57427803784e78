#pragma once

#include <cstdint>

#include "frobstab/errors.hpp"

namespace frobstab {

// Resource ceilings for the exhaustive constructions. Exceeding a cap is a
// refusal (resource_error), not a wrong answer; callers may raise the caps
// explicitly when they know the cost.
struct Caps {
    long long fiber_dim = 4096;   // r * p^n for filtration work
    long long tensor_dim = 65536; // n^l for tensor-space work
    int naive_factorial = 7;      // max l for the l!-term symmetrization sum

    void check_fiber(long long dim) const {
        if (dim > fiber_dim)
            throw resource_error("fiber dimension " + std::to_string(dim) +
                                 " exceeds cap " + std::to_string(fiber_dim));
    }
    void check_tensor(long long dim) const {
        if (dim > tensor_dim)
            throw resource_error("tensor dimension " + std::to_string(dim) +
                                 " exceeds cap " + std::to_string(tensor_dim));
    }
    void check_naive(int l) const {
        if (l > naive_factorial)
            throw resource_error("naive symmetrization degree " + std::to_string(l) +
                                 " exceeds cap " + std::to_string(naive_factorial));
    }
};

} // namespace frobstab
