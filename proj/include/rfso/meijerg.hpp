#ifndef RFSO_MEIJERG_HPP
#define RFSO_MEIJERG_HPP

#include <vector>

namespace rfso {

// Order and parameter lists of G^{m,n}_{p,q}[z | a ; b] with p = a.size(),
// q = b.size(). The first n entries of `a` and the first m entries of `b`
// are the "front" parameters that generate the right/left pole ladders of
// the Mellin-Barnes integrand.
struct MeijerGSpec {
    int m = 0;
    int n = 0;
    std::vector<double> a;
    std::vector<double> b;

    int p() const { return static_cast<int>(a.size()); }
    int q() const { return static_cast<int>(b.size()); }
    void validate() const; // throws DomainError on malformed orders
};

struct MeijerGOptions {
    double rel_tol = 1e-8;
    double pole_epsilon = 1e-6; // perturbation applied to colliding params
    int max_intervals = 6000;
};

struct MeijerGValue {
    double value = 0.0;   // +-inf if the magnitude exceeds double range
    double ln_abs = 0.0;  // ln |G|, always finite unless sign == 0
    int sign = 0;         // -1, 0, +1
    double abs_error = 0.0;
    double rel_error = 0.0;
    bool pole_perturbed = false;
};

// Numerical Mellin-Barnes evaluation along a vertical contour separating the
// pole ladders, with explicit residue corrections when no straight strip
// exists. Requires z > 0 and m + n > (p+q)/2 (exponential decay of the
// integrand). Deterministic for fixed inputs.
MeijerGValue meijer_g_full(const MeijerGSpec& spec, double z,
                           const MeijerGOptions& opt = {});

double meijer_g(const MeijerGSpec& spec, double z,
                const MeijerGOptions& opt = {});

} // namespace rfso

#endif
