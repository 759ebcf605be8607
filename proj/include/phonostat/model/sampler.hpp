#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "phonostat/model/dirichlet.hpp"

namespace phonostat::model {

// Deterministic stream of spectra drawn from a symmetric Dirichlet: n gamma
// variates normalized by their sum, then sorted. Only the raw engine output
// of std::mt19937_64 is consumed; uniforms, normals and gamma variates are
// derived with explicit formulas so a fixed seed yields a bit-identical
// stream on any conforming implementation.
class DirichletSampler {
public:
    DirichletSampler(const DirichletModel& model, std::uint64_t seed);

    // Fills out (size n) with one unsorted draw on the simplex.
    void sample_unsorted(std::span<double> out);

    // One draw, sorted nonincreasing.
    RankedSpectrum next();

    double next_uniform();             // open interval (0, 1)
    double next_normal();              // standard normal via the polar method
    double next_gamma(double shape);   // unit-scale gamma, any shape > 0

    const DirichletModel& model() const { return model_; }

private:
    DirichletModel model_;
    std::mt19937_64 engine_;
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

// Materializes count draws; intended for modest counts, large experiments
// should consume DirichletSampler directly.
std::vector<RankedSpectrum> sample_spectra(const DirichletModel& model, int count,
                                           std::uint64_t seed);

}  // namespace phonostat::model
