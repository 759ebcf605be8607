#pragma once

#include <functional>

#include "phonostat/numerics/tolerance.hpp"

namespace phonostat::numerics {

struct MinimizeResult {
    double argmin = 0.0;
    double value = 0.0;
    bool converged = false;
    long evaluations = 0;
};

// Golden-section search over [lo, hi]. Assumes f is unimodal there; for a
// unimodal f the returned argmin is within max(tol.abs, tol.rel*|argmin|) of
// the true minimizer. If the bracket does not shrink enough within
// tol.max_iter iterations the best bracket midpoint is returned with
// converged = false.
MinimizeResult minimize_scalar(const std::function<double(double)>& f,
                               double lo, double hi,
                               const Tolerance& tol = {});

}  // namespace phonostat::numerics
