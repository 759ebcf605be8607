#include "phonostat/numerics/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace phonostat::numerics {

namespace {

// Gauss-Kronrod 15-point rule on [-1, 1]: Kronrod nodes/weights plus the
// embedded 7-point Gauss weights (QUADPACK dqk15 constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEstimate {
    double integral;
    double error;
};

PanelEstimate gk15(const std::function<double(double)>& f, double a, double b, long& evaluations) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double fc = f(center);
    evaluations += 1;
    double result_gauss = kWg[3] * fc;
    double result_kronrod = kWgk[7] * fc;
    for (int j = 0; j < 7; ++j) {
        double dx = half * kXgk[j];
        double f1 = f(center - dx);
        double f2 = f(center + dx);
        evaluations += 2;
        double fsum = f1 + f2;
        result_kronrod += kWgk[j] * fsum;
        if (j % 2 == 1)
            result_gauss += kWg[j / 2] * fsum;
    }
    double integral = result_kronrod * half;
    double error = std::fabs((result_kronrod - result_gauss) * half);
    return {integral, error};
}

struct Panel {
    double a, b;
    double integral;
    double error;
    bool transformed;  // integrand index: false -> f, true -> substituted g
    bool splittable;

    bool operator<(const Panel& other) const { return error < other.error; }
};

// Scans a log-spaced grid for the integrand peak and the point where the log
// integrand has fallen kTailNats below it, growing the window until the
// decayed tail is inside.
double find_tail_cutoff(const std::function<double(double)>& f, long& evaluations, bool& all_zero) {
    constexpr double kTailNats = 40.0;
    constexpr int kGrid = 512;
    const double lo = 1e-8;
    double hi = 64.0;
    all_zero = false;
    while (true) {
        std::vector<double> y(kGrid), logf(kGrid);
        const double llo = std::log(lo), lhi = std::log(hi);
        double peak = -std::numeric_limits<double>::infinity();
        int peak_idx = -1;
        for (int i = 0; i < kGrid; ++i) {
            y[i] = std::exp(llo + (lhi - llo) * i / (kGrid - 1));
            double v = f(y[i]);
            evaluations += 1;
            logf[i] = v > 0.0 ? std::log(v) : -std::numeric_limits<double>::infinity();
            if (logf[i] > peak) {
                peak = logf[i];
                peak_idx = i;
            }
        }
        if (!std::isfinite(peak)) {
            all_zero = true;
            return hi;
        }
        if (logf[kGrid - 1] <= peak - kTailNats) {
            for (int i = peak_idx + 1; i < kGrid; ++i) {
                if (logf[i] <= peak - kTailNats)
                    return y[i];
            }
        }
        hi *= 8.0;
        if (hi > 1e9)
            throw QuadratureError(
                "integrate_semi_infinite: integrand does not decay within [0, 1e9]",
                {0.0, std::numeric_limits<double>::infinity(), evaluations});
    }
}

}  // namespace

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double singular_exponent,
                                         const Tolerance& tol) {
    validate(tol);
    if (!(singular_exponent > -1.0))
        throw std::domain_error("integrate_semi_infinite: singular_exponent must be > -1");

    long evaluations = 0;
    bool all_zero = false;
    const double cutoff = find_tail_cutoff(f, evaluations, all_zero);
    if (all_zero)
        return {0.0, 0.0, evaluations};

    // Substituted integrand for the leading panel when the origin is singular:
    // with p = s + 1, y = u^(1/p) maps [0, a^p] onto [0, a] and absorbs y^s.
    const double s = singular_exponent;
    const double p = s + 1.0;
    std::function<double(double)> g;
    if (s < 0.0) {
        g = [&f, p](double u) {
            if (u <= 0.0)
                return 0.0;
            double y = std::pow(u, 1.0 / p);
            return f(y) * std::pow(u, 1.0 / p - 1.0) / p;
        };
    }

    std::priority_queue<Panel> queue;
    double total = 0.0;
    double total_error = 0.0;
    auto push_panel = [&](double a, double b, bool transformed) {
        PanelEstimate est = gk15(transformed ? g : f, a, b, evaluations);
        bool splittable = (b - a) > 8.0 * std::numeric_limits<double>::epsilon() *
                                        (std::fabs(a) + std::fabs(b) + 1e-300);
        queue.push({a, b, est.integral, est.error, transformed, splittable});
        total += est.integral;
        total_error += est.error;
    };

    if (s < 0.0) {
        double split = std::min(1.0, cutoff);
        push_panel(0.0, std::pow(split, p), true);
        if (cutoff > split)
            push_panel(split, cutoff, false);
    } else {
        push_panel(0.0, cutoff, false);
    }

    auto target = [&] { return std::max(tol.abs, tol.rel * std::fabs(total)); };

    int iterations = 0;
    while (total_error > target() && !queue.empty()) {
        Panel worst = queue.top();
        if (!worst.splittable)
            break;  // remaining error sits on panels at floating point resolution
        queue.pop();
        if (++iterations > tol.max_iter) {
            throw QuadratureError("integrate_semi_infinite: did not converge within max_iter subdivisions",
                                  {total, total_error, evaluations});
        }
        total -= worst.integral;
        total_error -= worst.error;
        double mid = 0.5 * (worst.a + worst.b);
        push_panel(worst.a, mid, worst.transformed);
        push_panel(mid, worst.b, worst.transformed);
    }

    if (total_error > target())
        throw QuadratureError("integrate_semi_infinite: stalled above requested tolerance",
                              {total, total_error, evaluations});

    return {total, total_error, evaluations};
}

}  // namespace phonostat::numerics
