#include "phonostat/model/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace phonostat::model {

DirichletSampler::DirichletSampler(const DirichletModel& model, std::uint64_t seed)
    : model_(model), engine_(seed) {}

double DirichletSampler::next_uniform() {
    // 53-bit mantissa mapping; reject 0 so logs and powers stay finite.
    while (true) {
        double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        if (u > 0.0)
            return u;
    }
}

double DirichletSampler::next_normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_normal_;
    }
    double u, v, s;
    do {
        u = 2.0 * next_uniform() - 1.0;
        v = 2.0 * next_uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    double factor = std::sqrt(-2.0 * std::log(s) / s);
    spare_normal_ = v * factor;
    has_spare_ = true;
    return u * factor;
}

double DirichletSampler::next_gamma(double shape) {
    if (!(shape > 0.0))
        throw std::domain_error("next_gamma: shape must be positive");
    if (shape < 1.0) {
        // Boost a draw at shape+1 down by U^(1/shape).
        double g = next_gamma(shape + 1.0);
        return g * std::pow(next_uniform(), 1.0 / shape);
    }
    // Marsaglia-Tsang squeeze for shape >= 1.
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    while (true) {
        double x, v;
        do {
            x = next_normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        double u = next_uniform();
        if (u < 1.0 - 0.0331 * x * x * x * x)
            return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
            return d * v;
    }
}

void DirichletSampler::sample_unsorted(std::span<double> out) {
    if (out.size() != static_cast<std::size_t>(model_.n))
        throw std::invalid_argument("sample_unsorted: output span must have size n");
    double sum = 0.0;
    for (double& x : out) {
        x = next_gamma(model_.beta);
        sum += x;
    }
    for (double& x : out)
        x /= sum;
}

RankedSpectrum DirichletSampler::next() {
    std::vector<double> draw(model_.n);
    sample_unsorted(draw);
    std::sort(draw.begin(), draw.end(), std::greater<double>());
    return RankedSpectrum::from_sorted(std::move(draw));
}

std::vector<RankedSpectrum> sample_spectra(const DirichletModel& model, int count,
                                           std::uint64_t seed) {
    if (count < 0)
        throw std::invalid_argument("sample_spectra: count must be nonnegative");
    DirichletSampler sampler(model, seed);
    std::vector<RankedSpectrum> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i)
        out.push_back(sampler.next());
    return out;
}

}  // namespace phonostat::model
