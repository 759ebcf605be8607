#include "phonostat/numerics/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace phonostat::numerics {

namespace {

constexpr int kMaxIter = 500;
const double kEps = std::numeric_limits<double>::epsilon();
const double kFpMin = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();

void check_args(double y, double beta, const char* who) {
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw std::domain_error(std::string(who) + ": beta must be positive and finite");
    if (!(y >= 0.0) || !std::isfinite(y))
        throw std::domain_error(std::string(who) + ": y must be nonnegative and finite");
}

// log of the exponential prefactor y^beta e^(-y) / Gamma(beta) shared by both
// expansions.
double log_prefactor(double y, double beta) {
    return beta * std::log(y) - y - std::lgamma(beta);
}

// Power series for P(beta, y) * Gamma(beta) e^y y^(-beta); valid y < beta + 1.
// Returns the series sum, which is multiplied by the prefactor by callers.
double lower_series_sum(double y, double beta) {
    double ap = beta;
    double sum = 1.0 / beta;
    double del = sum;
    for (int i = 0; i < kMaxIter; ++i) {
        ap += 1.0;
        del *= y / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * kEps)
            return sum;
    }
    throw std::runtime_error("regularized_incomplete_gamma: series failed to converge");
}

// Modified Lentz continued fraction for Q(beta, y) e^y y^(-beta) Gamma(beta);
// valid y >= beta + 1.
double upper_cf_factor(double y, double beta) {
    double b = y + 1.0 - beta;
    double c = 1.0 / kFpMin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        double an = -i * (i - beta);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = b + an / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) <= kEps)
            return h;
    }
    throw std::runtime_error("regularized_incomplete_gamma: continued fraction failed to converge");
}

}  // namespace

double regularized_incomplete_gamma(double y, double beta) {
    check_args(y, beta, "regularized_incomplete_gamma");
    if (y == 0.0)
        return 0.0;
    if (y < beta + 1.0)
        return lower_series_sum(y, beta) * std::exp(log_prefactor(y, beta));
    return 1.0 - upper_cf_factor(y, beta) * std::exp(log_prefactor(y, beta));
}

double regularized_incomplete_gamma_upper(double y, double beta) {
    check_args(y, beta, "regularized_incomplete_gamma_upper");
    if (y == 0.0)
        return 1.0;
    if (y < beta + 1.0)
        return 1.0 - lower_series_sum(y, beta) * std::exp(log_prefactor(y, beta));
    return upper_cf_factor(y, beta) * std::exp(log_prefactor(y, beta));
}

double log_regularized_incomplete_gamma(double y, double beta) {
    check_args(y, beta, "log_regularized_incomplete_gamma");
    if (y == 0.0)
        return -std::numeric_limits<double>::infinity();
    if (y < beta + 1.0)
        return std::log(lower_series_sum(y, beta)) + log_prefactor(y, beta);
    // In this regime P is bounded away from 0, so log1p on the upper tail is exact enough.
    double q = upper_cf_factor(y, beta) * std::exp(log_prefactor(y, beta));
    return std::log1p(-q);
}

double log_regularized_incomplete_gamma_upper(double y, double beta) {
    check_args(y, beta, "log_regularized_incomplete_gamma_upper");
    if (y == 0.0)
        return 0.0;
    if (y < beta + 1.0) {
        double p = lower_series_sum(y, beta) * std::exp(log_prefactor(y, beta));
        return std::log1p(-p);
    }
    return std::log(upper_cf_factor(y, beta)) + log_prefactor(y, beta);
}

double inverse_regularized_incomplete_gamma(double p, double beta) {
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw std::domain_error("inverse_regularized_incomplete_gamma: beta must be positive and finite");
    if (!(p >= 0.0 && p < 1.0))
        throw std::domain_error("inverse_regularized_incomplete_gamma: p must lie in [0, 1)");
    if (p == 0.0)
        return 0.0;

    // Bracket the root; P is strictly increasing with P(0)=0, P(inf)=1.
    double lo = 0.0;
    double hi = beta + 1.0;
    while (regularized_incomplete_gamma(hi, beta) < p) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e12)
            throw std::runtime_error("inverse_regularized_incomplete_gamma: failed to bracket");
    }

    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 200; ++i) {
        double fx = regularized_incomplete_gamma(x, beta) - p;
        if (fx > 0.0)
            hi = x;
        else
            lo = x;
        // Analytic derivative of P is the gamma density itself.
        double dfx = std::exp((beta - 1.0) * std::log(x) - x - std::lgamma(beta));
        double next;
        if (dfx > 0.0 && std::isfinite(dfx)) {
            next = x - fx / dfx;
            if (!(next > lo && next < hi))
                next = 0.5 * (lo + hi);
        } else {
            next = 0.5 * (lo + hi);
        }
        if (std::fabs(next - x) <= 1e-14 * std::fabs(x) || hi - lo <= 1e-14 * std::fabs(x))
            return next;
        x = next;
    }
    return x;
}

}  // namespace phonostat::numerics
