#ifndef RFSO_SPECFUN_HPP
#define RFSO_SPECFUN_HPP

#include <complex>

namespace rfso {

// Principal-branch log-Gamma for complex z (Lanczos in the right half plane,
// reflection elsewhere). exp(log_gamma(z)) reproduces Gamma(z) to ~1e-13
// relative for |z| <= 100. Throws PoleError at nonpositive integers.
std::complex<double> log_gamma(std::complex<double> z);

// ln|Gamma(x)| together with the sign of Gamma(x) for real x.
struct SignedLogGamma {
    double log_abs;
    int sign; // -1, +1
};
SignedLogGamma log_gamma_signed(double x);

// log(sin(pi z)) computed without overflow for large |Im z|. The branch is
// only defined up to 2*pi*i; callers exponentiate.
std::complex<double> log_sin_pi(std::complex<double> z);

// Modified Bessel functions of the first kind, orders 0 and 1.
double bessel_i0(double x);
double bessel_i1(double x);

// Laguerre polynomial of order 1/2 evaluated at x <= 0:
//   L_{1/2}(x) = e^{x/2} [ (1-x) I0(-x/2) - x I1(-x/2) ]
double laguerre_half(double x);

// Regularized lower incomplete gamma P(s, x) = gamma(s,x)/Gamma(s).
// Series for x < s+1, continued fraction otherwise.
double gamma_p(double s, double x);

// Alternating-series form of P(s, x); validation path only, usable for
// moderate x (cancellation grows like e^{2x}).
double gamma_p_series(double s, double x, int max_terms = 200,
                      bool* truncated = nullptr);

// Analytic continuation of B(z, 1-z) = pi / sin(pi z). Throws PoleError when
// z is within `tol` of an integer.
double beta_reflection(double z, double tol = 1e-8);

} // namespace rfso

#endif
