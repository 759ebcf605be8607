#include "phonostat/numerics/minimize.hpp"

#include <cmath>
#include <stdexcept>

namespace phonostat::numerics {

MinimizeResult minimize_scalar(const std::function<double(double)>& f,
                               double lo, double hi,
                               const Tolerance& tol) {
    validate(tol);
    if (!(lo < hi))
        throw std::invalid_argument("minimize_scalar: requires lo < hi");

    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    const double invphi2 = 1.0 - invphi;

    double a = lo, b = hi;
    double h = b - a;
    double c = a + invphi2 * h;
    double d = a + invphi * h;
    double fc = f(c);
    double fd = f(d);
    long evaluations = 2;
    bool converged = false;

    for (int i = 0; i < tol.max_iter; ++i) {
        double mid = 0.5 * (a + b);
        if (h <= std::max(tol.abs, tol.rel * std::fabs(mid))) {
            converged = true;
            break;
        }
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            h = b - a;
            c = a + invphi2 * h;
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            h = b - a;
            d = a + invphi * h;
            fd = f(d);
        }
        ++evaluations;
    }

    MinimizeResult result;
    result.argmin = 0.5 * (a + b);
    result.value = (fc < fd) ? fc : fd;
    result.converged = converged;
    result.evaluations = evaluations;
    return result;
}

}  // namespace phonostat::numerics
