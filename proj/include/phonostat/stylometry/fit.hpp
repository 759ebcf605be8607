#pragma once

#include <string>

#include "phonostat/model/dirichlet.hpp"
#include "phonostat/numerics/tolerance.hpp"

namespace phonostat::stylometry {

struct FitResult {
    double beta_hat;
    double ss_err;
    double r_squared;
    model::RankedSpectrum predicted;
    model::RankedSpectrum observed;
    std::string mode;  // extraction-mode label carried through for reporting
    bool grid_warning;
};

struct BetaRange {
    double lo = 0.1;
    double hi = 2.0;
};

// Sum of squared rank-wise differences.
double ss_err(const model::RankedSpectrum& observed, const model::RankedSpectrum& predicted);

// Squared Pearson correlation between the rank curves; throws on length < 2
// or a constant vector (undefined denominator).
double r_squared(const model::RankedSpectrum& observed, const model::RankedSpectrum& predicted);

// Least-squares fit of the concentration parameter: minimizes
// ss_err(observed, expected_spectrum(n, beta)) over beta_range via
// golden-section search, cross-checked against a 0.01-step grid scan;
// grid_warning is set when the two disagree by more than one grid step
// (possible multimodality). n is taken from the observed length. tol.abs
// bounds the argmin accuracy of the search.
FitResult fit_beta(const model::RankedSpectrum& observed, const BetaRange& beta_range = {},
                   const numerics::Tolerance& tol = {1e-12, 1e-5, 200},
                   const std::string& mode_label = "");

}  // namespace phonostat::stylometry
