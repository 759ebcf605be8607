#include "phonostat/stylometry/fit.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "phonostat/numerics/minimize.hpp"

namespace phonostat::stylometry {

double ss_err(const model::RankedSpectrum& observed, const model::RankedSpectrum& predicted) {
    if (observed.size() != predicted.size())
        throw std::invalid_argument("ss_err: spectra have different lengths");
    double sum = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        double d = observed.freqs()[i] - predicted.freqs()[i];
        sum += d * d;
    }
    return sum;
}

double r_squared(const model::RankedSpectrum& observed, const model::RankedSpectrum& predicted) {
    const std::size_t n = observed.size();
    if (n != predicted.size())
        throw std::invalid_argument("r_squared: spectra have different lengths");
    if (n < 2)
        throw std::invalid_argument("r_squared: needs at least 2 ranks");

    double mean_o = 0.0, mean_p = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_o += observed.freqs()[i];
        mean_p += predicted.freqs()[i];
    }
    mean_o /= n;
    mean_p /= n;

    double cov = 0.0, var_o = 0.0, var_p = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double d_o = observed.freqs()[i] - mean_o;
        double d_p = predicted.freqs()[i] - mean_p;
        cov += d_o * d_p;
        var_o += d_o * d_o;
        var_p += d_p * d_p;
    }
    if (var_o == 0.0 || var_p == 0.0)
        throw std::invalid_argument("r_squared: constant vector has no defined correlation");
    return (cov * cov) / (var_o * var_p);
}

FitResult fit_beta(const model::RankedSpectrum& observed, const BetaRange& beta_range,
                   const numerics::Tolerance& tol, const std::string& mode_label) {
    if (!(beta_range.lo > 0.0) || !(beta_range.lo < beta_range.hi))
        throw std::invalid_argument("fit_beta: invalid beta range");
    const int n = static_cast<int>(observed.size());

    auto objective = [&](double beta) {
        return ss_err(observed, model::expected_spectrum(model::DirichletModel(n, beta)));
    };

    // coarse scan guards against a multimodal objective fooling the
    // golden-section search
    double grid_best_beta = beta_range.lo;
    double grid_best_value = objective(beta_range.lo);
    for (double beta = beta_range.lo + 0.01; beta <= beta_range.hi + 1e-12; beta += 0.01) {
        double v = objective(beta);
        if (v < grid_best_value) {
            grid_best_value = v;
            grid_best_beta = beta;
        }
    }

    numerics::MinimizeResult opt =
        numerics::minimize_scalar(objective, beta_range.lo, beta_range.hi, tol);
    double beta_hat = opt.argmin;
    bool grid_warning = std::fabs(beta_hat - grid_best_beta) > 0.01 + 1e-9;

    model::RankedSpectrum predicted = model::expected_spectrum(model::DirichletModel(n, beta_hat));
    double ss = ss_err(observed, predicted);
    double r2 = r_squared(observed, predicted);
    return FitResult{beta_hat, ss, r2, std::move(predicted), observed, mode_label, grid_warning};
}

}  // namespace phonostat::stylometry
