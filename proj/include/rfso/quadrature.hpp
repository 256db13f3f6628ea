#ifndef RFSO_QUADRATURE_HPP
#define RFSO_QUADRATURE_HPP

#include <functional>

namespace rfso {

struct QuadResult {
    double value = 0.0;
    double abs_error = 0.0;   // conservative estimate
    int evaluations = 0;
    bool converged = false;
};

struct QuadOptions {
    double rel_tol = 1e-9;
    double abs_tol = 0.0;
    int max_intervals = 4000;
};

// Adaptive Gauss-Kronrod (7/15) on a finite interval.
QuadResult integrate(const std::function<double(double)>& f, double lo,
                     double hi, const QuadOptions& opt = {});

// Integral over (0, inf) through the substitution x = e^u; the integrand
// must decay faster than any power of x at both ends (in u-space the tails
// are located automatically). `scale` centers the search window near the
// mass of the integrand.
QuadResult integrate_positive_axis(const std::function<double(double)>& f,
                                   double scale = 1.0,
                                   const QuadOptions& opt = {});

} // namespace rfso

#endif
