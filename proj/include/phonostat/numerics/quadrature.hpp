#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "phonostat/numerics/tolerance.hpp"

namespace phonostat::numerics {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
};

// Raised when the adaptive scheme cannot reach the requested tolerance; the
// best estimate so far stays attached so callers can inspect it.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, QuadratureResult best)
        : std::runtime_error(what), best_(best) {}
    const QuadratureResult& best_estimate() const { return best_; }

private:
    QuadratureResult best_;
};

// Integrates f over [0, inf) with adaptive Gauss-Kronrod 15-point panels.
// Assumes f behaves like y^singular_exponent times a smooth factor near 0
// (singular_exponent > -1) and decays at least exponentially in the tail.
// The tail is truncated where the log integrand has fallen 40 nats below its
// peak; for singular_exponent in (-1, 0) the first panel is integrated under
// the substitution y = u^(1/(singular_exponent+1)), which removes the
// endpoint singularity.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double singular_exponent,
                                         const Tolerance& tol = {});

}  // namespace phonostat::numerics
