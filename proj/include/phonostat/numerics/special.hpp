#pragma once

namespace phonostat::numerics {

// Regularized lower incomplete gamma P(beta, y) = gamma(beta, y) / Gamma(beta).
// Series expansion for y < beta + 1, continued fraction otherwise.
// Throws std::domain_error for beta <= 0 or y < 0.
double regularized_incomplete_gamma(double y, double beta);

// Upper tail Q(beta, y) = 1 - P(beta, y), computed directly so it stays
// accurate when P is close to 1.
double regularized_incomplete_gamma_upper(double y, double beta);

// log P and log Q without intermediate underflow; these feed the order
// statistic density where P^(n-r) and Q^(r-1) appear with large exponents.
double log_regularized_incomplete_gamma(double y, double beta);
double log_regularized_incomplete_gamma_upper(double y, double beta);

// Inverse of P(beta, .) in its first argument: returns y with P(beta, y) = p.
// Bracketed bisection refined by Newton steps using the analytic derivative
// y^(beta-1) e^(-y) / Gamma(beta). Relative accuracy ~1e-12, p in [0, 1).
double inverse_regularized_incomplete_gamma(double p, double beta);

}  // namespace phonostat::numerics
