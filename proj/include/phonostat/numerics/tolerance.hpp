#pragma once

#include <stdexcept>

namespace phonostat::numerics {

// Shared convergence knobs for the iterative routines in this module.
struct Tolerance {
    double rel = 1e-10;
    double abs = 1e-14;
    int max_iter = 2000;
};

inline void validate(const Tolerance& tol) {
    if (!(tol.rel > 0.0))
        throw std::invalid_argument("Tolerance: rel must be > 0");
    if (!(tol.abs >= 0.0))
        throw std::invalid_argument("Tolerance: abs must be >= 0");
    if (tol.max_iter < 1)
        throw std::invalid_argument("Tolerance: max_iter must be >= 1");
}

}  // namespace phonostat::numerics
