#pragma once

#include <cstddef>
#include <vector>

namespace phonostat::model {

// Symmetric Dirichlet over n categories with common concentration beta.
struct DirichletModel {
    int n;
    double beta;

    DirichletModel(int n_, double beta_);
};

// Frequencies sorted in nonincreasing order, summing to 1. Construction
// validates both properties so downstream code can rely on them.
class RankedSpectrum {
public:
    static RankedSpectrum from_sorted(std::vector<double> freqs);
    static RankedSpectrum from_unsorted(std::vector<double> freqs);

    const std::vector<double>& freqs() const { return freqs_; }
    std::size_t size() const { return freqs_.size(); }
    // rank is 1-based: rank 1 is the largest frequency.
    double at_rank(int rank) const;

private:
    explicit RankedSpectrum(std::vector<double> freqs) : freqs_(std::move(freqs)) {}
    std::vector<double> freqs_;
};

struct OrderStatMoments {
    int rank = 0;
    double mean = 0.0;
    double second_moment = 0.0;
    double relative_fluctuation = 0.0;
};

// Density of the y-variable attached to the rank-r order statistic (rank 1 is
// the largest of n), weighted for the m-th moment; moments of the ranked
// frequency follow by integrating y^m against it. log form avoids overflow in
// the phi^(n-r) (1-phi)^(r-1) factors.
double log_chi_r_density(const DirichletModel& model, int r, int m, double y);
double chi_r_density(const DirichletModel& model, int r, int m, double y);

// m-th moment of the rank-r frequency, m >= 1. Results are cached per
// (n, beta, r, m); the cache admits concurrent readers and serializes writes.
double moment(const DirichletModel& model, int r, int m);

OrderStatMoments order_stat_moments(const DirichletModel& model, int r);

// Exact expected rank-frequency curve: rank means renormalized to sum to 1.
// Throws if the raw means miss unit sum by more than 1e-6.
RankedSpectrum expected_spectrum(const DirichletModel& model);

// Closed-form approximation via the inverse regularized incomplete gamma;
// the last rank carries the residual 1 - sum of the others (clamped at 0).
// Returned as a plain vector: the residual convention can break monotonicity,
// so this is diagnostic output, never fitting input.
std::vector<double> approx_spectrum(const DirichletModel& model);

// Normalized variance (second moment minus squared mean, over squared mean)
// of the rank-r frequency.
double relative_fluctuation_exact(const DirichletModel& model, int r);

// Saddle-point approximation of the same quantity; valid for interior ranks,
// throws std::domain_error at r = 0 or r = n where the formula degenerates.
double relative_fluctuation_asymptotic(const DirichletModel& model, int r);

}  // namespace phonostat::model
