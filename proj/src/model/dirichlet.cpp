#include "phonostat/model/dirichlet.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "phonostat/numerics/quadrature.hpp"
#include "phonostat/numerics/special.hpp"

namespace phonostat::model {

namespace num = phonostat::numerics;

DirichletModel::DirichletModel(int n_, double beta_) : n(n_), beta(beta_) {
    if (n < 2)
        throw std::invalid_argument("DirichletModel: n must be >= 2");
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw std::invalid_argument("DirichletModel: beta must be positive and finite");
}

namespace {

void validate_spectrum(const std::vector<double>& freqs) {
    if (freqs.empty())
        throw std::invalid_argument("RankedSpectrum: empty frequency vector");
    double sum = 0.0;
    for (std::size_t i = 0; i < freqs.size(); ++i) {
        double f = freqs[i];
        if (!(f >= 0.0) || !std::isfinite(f))
            throw std::invalid_argument("RankedSpectrum: frequencies must be finite and nonnegative");
        if (i > 0 && f > freqs[i - 1] + 1e-12)
            throw std::invalid_argument("RankedSpectrum: frequencies must be nonincreasing");
        sum += f;
    }
    if (std::fabs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("RankedSpectrum: frequencies must sum to 1 (got " +
                                    std::to_string(sum) + ")");
}

}  // namespace

RankedSpectrum RankedSpectrum::from_sorted(std::vector<double> freqs) {
    validate_spectrum(freqs);
    return RankedSpectrum(std::move(freqs));
}

RankedSpectrum RankedSpectrum::from_unsorted(std::vector<double> freqs) {
    std::sort(freqs.begin(), freqs.end(), std::greater<double>());
    validate_spectrum(freqs);
    return RankedSpectrum(std::move(freqs));
}

double RankedSpectrum::at_rank(int rank) const {
    if (rank < 1 || static_cast<std::size_t>(rank) > freqs_.size())
        throw std::out_of_range("RankedSpectrum: rank out of range");
    return freqs_[rank - 1];
}

namespace {

void check_rank(const DirichletModel& model, int r, const char* who) {
    if (r < 1 || r > model.n)
        throw std::domain_error(std::string(who) + ": rank must lie in [1, n]");
}

}  // namespace

double log_chi_r_density(const DirichletModel& model, int r, int m, double y) {
    check_rank(model, r, "chi_r_density");
    if (m < 0)
        throw std::domain_error("chi_r_density: moment order must be >= 0");
    if (!(y >= 0.0) || !std::isfinite(y))
        throw std::domain_error("chi_r_density: y must be nonnegative and finite");

    const double n = model.n;
    const double beta = model.beta;

    if (y == 0.0) {
        // Only the minimum (r = n) has density at the origin, and only the
        // y^(beta-1) factor decides whether it is 0, finite, or divergent.
        if (r < model.n || beta > 1.0)
            return -std::numeric_limits<double>::infinity();
        double head = std::lgamma(n * beta) - std::lgamma(n * beta + m) +
                      std::lgamma(n + 1.0) - std::lgamma(n - r + 1.0) - std::lgamma(r) -
                      std::lgamma(beta);
        return beta < 1.0 ? std::numeric_limits<double>::infinity() : head;
    }

    double v = std::lgamma(n * beta) - std::lgamma(n * beta + m) +
               std::lgamma(n + 1.0) - std::lgamma(n - r + 1.0) - std::lgamma(r) +
               (beta - 1.0) * std::log(y) - y - std::lgamma(beta);
    if (r < model.n)
        v += (n - r) * num::log_regularized_incomplete_gamma(y, beta);
    if (r > 1)
        v += (r - 1.0) * num::log_regularized_incomplete_gamma_upper(y, beta);
    return v;
}

double chi_r_density(const DirichletModel& model, int r, int m, double y) {
    return std::exp(log_chi_r_density(model, r, m, y));
}

namespace {

struct MomentKey {
    int n;
    int r;
    int m;
    std::uint64_t beta_bits;

    bool operator==(const MomentKey&) const = default;
};

struct MomentKeyHash {
    std::size_t operator()(const MomentKey& k) const {
        std::uint64_t h = 1469598103934665603ull;
        auto mix = [&h](std::uint64_t v) {
            h ^= v;
            h *= 1099511628211ull;
        };
        mix(static_cast<std::uint64_t>(k.n));
        mix(static_cast<std::uint64_t>(k.r));
        mix(static_cast<std::uint64_t>(k.m));
        mix(k.beta_bits);
        return static_cast<std::size_t>(h);
    }
};

std::shared_mutex g_moment_mutex;
std::unordered_map<MomentKey, double, MomentKeyHash> g_moment_cache;

double moment_uncached(const DirichletModel& model, int r, int m) {
    auto integrand = [&model, r, m](double y) {
        if (y <= 0.0)
            return 0.0;
        double lv = m * std::log(y) + log_chi_r_density(model, r, m, y);
        return std::isfinite(lv) ? std::exp(lv) : 0.0;
    };
    // y^m regularizes the origin, so the integrable singularity exponent is
    // m + beta - 1.
    num::Tolerance tol{1e-11, 1e-30, 20000};
    return num::integrate_semi_infinite(integrand, m + model.beta - 1.0, tol).value;
}

}  // namespace

double moment(const DirichletModel& model, int r, int m) {
    check_rank(model, r, "moment");
    if (m < 1)
        throw std::domain_error("moment: order must be >= 1");

    MomentKey key{model.n, r, m, std::bit_cast<std::uint64_t>(model.beta)};
    {
        std::shared_lock lock(g_moment_mutex);
        auto it = g_moment_cache.find(key);
        if (it != g_moment_cache.end())
            return it->second;
    }
    double value = moment_uncached(model, r, m);
    {
        std::unique_lock lock(g_moment_mutex);
        g_moment_cache.emplace(key, value);
    }
    return value;
}

OrderStatMoments order_stat_moments(const DirichletModel& model, int r) {
    OrderStatMoments out;
    out.rank = r;
    out.mean = moment(model, r, 1);
    out.second_moment = moment(model, r, 2);
    out.relative_fluctuation = (out.second_moment - out.mean * out.mean) / (out.mean * out.mean);
    return out;
}

RankedSpectrum expected_spectrum(const DirichletModel& model) {
    std::vector<double> freqs(model.n);
    for (int r = 1; r <= model.n; ++r)
        freqs[r - 1] = moment(model, r, 1);
    double sum = std::accumulate(freqs.begin(), freqs.end(), 0.0);
    if (std::fabs(sum - 1.0) > 1e-6)
        throw std::runtime_error("expected_spectrum: rank means sum to " + std::to_string(sum) +
                                 ", expected 1 within 1e-6");
    for (double& f : freqs)
        f /= sum;
    return RankedSpectrum::from_sorted(std::move(freqs));
}

std::vector<double> approx_spectrum(const DirichletModel& model) {
    std::vector<double> freqs(model.n);
    double head = 0.0;
    for (int r = 1; r < model.n; ++r) {
        double q = 1.0 - static_cast<double>(r) / model.n;
        freqs[r - 1] = num::inverse_regularized_incomplete_gamma(q, model.beta) /
                       (model.n * model.beta);
        head += freqs[r - 1];
    }
    freqs[model.n - 1] = std::max(0.0, 1.0 - head);
    return freqs;
}

double relative_fluctuation_exact(const DirichletModel& model, int r) {
    return order_stat_moments(model, r).relative_fluctuation;
}

double relative_fluctuation_asymptotic(const DirichletModel& model, int r) {
    if (r < 1 || r >= model.n)
        throw std::domain_error("relative_fluctuation_asymptotic: rank must lie in [1, n-1]");
    const double n = model.n;
    const double beta = model.beta;
    double y0 = num::inverse_regularized_incomplete_gamma((n - r) / n, beta);
    double log_term = std::log(beta * (n - r) * r / (n * n)) + 2.0 * std::lgamma(beta) -
                      2.0 * beta * std::log(y0) + 2.0 * y0;
    return (std::exp(log_term) - 1.0) / (n * beta + 1.0);
}

}  // namespace phonostat::model
