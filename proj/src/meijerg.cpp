#include "rfso/meijerg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "rfso/errors.hpp"
#include "rfso/quadrature.hpp"
#include "rfso/specfun.hpp"

namespace rfso {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLineClearance = 0.03; // min distance contour <-> pole

void MeijerValidate(const MeijerGSpec& g) {
    if (g.m < 0 || g.n < 0 || g.m > g.q() || g.n > g.p())
        throw DomainError("meijer_g: invalid order (m,n,p,q)");
}

// log of the Mellin-Barnes kernel
//   Theta(s) = prod_{j<m} Gamma(b_j+s) prod_{i<n} Gamma(1-a_i-s)
//            / [ prod_{j>=m} Gamma(1-b_j-s) prod_{i>=n} Gamma(a_i+s) ]
std::complex<double> log_theta(const MeijerGSpec& g, std::complex<double> s) {
    std::complex<double> acc = 0.0;
    for (int j = 0; j < g.q(); ++j) {
        if (j < g.m)
            acc += log_gamma(g.b[j] + s);
        else
            acc -= log_gamma(1.0 - g.b[j] - s);
    }
    for (int i = 0; i < g.p(); ++i) {
        if (i < g.n)
            acc += log_gamma(1.0 - g.a[i] - s);
        else
            acc -= log_gamma(g.a[i] + s);
    }
    return acc;
}

// Accumulates (sign, ln|x|) terms and produces their sum without leaving
// log scale until the very end.
class LogSum {
  public:
    void add(int sign, double ln_abs) {
        if (sign == 0 || ln_abs == -std::numeric_limits<double>::infinity())
            return;
        terms_.push_back({ln_abs, sign});
    }
    void value(double& ln_abs, int& sign) const {
        if (terms_.empty()) {
            ln_abs = -std::numeric_limits<double>::infinity();
            sign = 0;
            return;
        }
        double peak = terms_[0].first;
        for (auto& t : terms_) peak = std::max(peak, t.first);
        double s = 0.0;
        for (auto& t : terms_) s += t.second * std::exp(t.first - peak);
        if (s == 0.0) {
            ln_abs = -std::numeric_limits<double>::infinity();
            sign = 0;
            return;
        }
        ln_abs = peak + std::log(std::abs(s));
        sign = s > 0.0 ? 1 : -1;
    }

  private:
    std::vector<std::pair<double, int>> terms_;
};

bool is_near_integer(double x, double tol) {
    return std::abs(x - std::round(x)) <= tol;
}

// A left pole ladder starts at -b_j and descends; a right ladder starts at
// 1-a_i and ascends. They collide iff a_i - b_j is a positive integer or,
// at the boundary, a_i - b_j = 1 - (nonnegative int)... i.e. the difference
// (1 - a_i) - (-b_j) = 1 - a_i + b_j is a nonpositive integer.
bool ladders_collide(double a_i, double b_j, double tol) {
    const double d = 1.0 - a_i + b_j;
    return d <= tol && is_near_integer(d, tol);
}

bool has_pole_collision(const MeijerGSpec& g, double tol) {
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.m; ++j)
            if (ladders_collide(g.a[i], g.b[j], tol)) return true;
    return false;
}

// Perturb every front b parameter with a staggered shift; resolves both
// collisions against the right ladders and coincidences between left
// ladders (which break the simple-residue assumption).
MeijerGSpec perturb(const MeijerGSpec& g, double eps) {
    MeijerGSpec out = g;
    for (int j = 0; j < g.m; ++j) out.b[j] += eps * double(j + 1);
    return out;
}

struct Contour {
    double c = 0.0;
    std::vector<double> crossed; // left poles lying right of the line
};

double line_magnitude(const MeijerGSpec& g, double c, double ln_z) {
    try {
        return log_theta(g, std::complex<double>(c, 0.0)).real() - c * ln_z;
    } catch (const PoleError&) {
        return std::numeric_limits<double>::infinity();
    }
}

// All poles with real part in (c_lo, c_hi); used to keep the line clear.
std::vector<double> poles_in_window(const MeijerGSpec& g, double lo,
                                    double hi) {
    std::vector<double> ps;
    for (int j = 0; j < g.m; ++j)
        for (double s = -g.b[j]; s > lo; s -= 1.0)
            if (s < hi) ps.push_back(s);
    for (int i = 0; i < g.n; ++i)
        for (double s = 1.0 - g.a[i]; s < hi; s += 1.0)
            if (s > lo) ps.push_back(s);
    return ps;
}

double nearest_pole_distance(const std::vector<double>& poles, double c) {
    double d = std::numeric_limits<double>::infinity();
    for (double p : poles) d = std::min(d, std::abs(c - p));
    return d;
}

Contour choose_contour(const MeijerGSpec& g, double ln_z) {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (int j = 0; j < g.m; ++j) lo = std::max(lo, -g.b[j]);
    for (int i = 0; i < g.n; ++i) hi = std::min(hi, 1.0 - g.a[i]);

    Contour ct;
    double scan_lo, scan_hi;
    bool strip = lo < hi - 2.0 * kLineClearance;
    if (strip) {
        scan_lo = std::isfinite(lo) ? lo + kLineClearance : std::min(hi - 40.0, -20.0);
        scan_hi = std::isfinite(hi) ? hi - kLineClearance : std::max(lo + 40.0, 20.0);
    } else {
        // no straight strip: stay left of every right pole and cross
        // finitely many left poles, corrected by residues below
        if (g.n == 0)
            throw DomainError("meijer_g: empty contour strip with no right poles");
        scan_lo = hi - 1.0 + kLineClearance;
        scan_hi = hi - kLineClearance;
    }

    // pick the line offset that minimizes the t = 0 integrand magnitude
    // (approximates the saddle point and avoids needless cancellation)
    // while keeping clear of any pole in the scan window
    const auto poles = poles_in_window(g, scan_lo - 1.0, scan_hi + 1.0);
    const int steps = 96;
    double best_c = 0.5 * (scan_lo + scan_hi), best_mag =
        std::numeric_limits<double>::infinity();
    for (int k = 0; k <= steps; ++k) {
        const double c = scan_lo + (scan_hi - scan_lo) * double(k) / steps;
        if (nearest_pole_distance(poles, c) < kLineClearance) continue;
        const double mag = line_magnitude(g, c, ln_z);
        if (mag < best_mag) {
            best_mag = mag;
            best_c = c;
        }
    }
    if (!std::isfinite(best_mag)) {
        // every candidate sat near a pole; fall back to midpoint nudged away
        best_c = 0.5 * (scan_lo + scan_hi);
        for (int k = 0; k < 64 && nearest_pole_distance(poles, best_c) <
                                      kLineClearance; ++k)
            best_c += 0.51 * kLineClearance;
    }
    ct.c = best_c;
    if (!strip) {
        for (int j = 0; j < g.m; ++j)
            for (int k = 0; -g.b[j] - double(k) > ct.c; ++k)
                ct.crossed.push_back(-g.b[j] - double(k));
        std::sort(ct.crossed.begin(), ct.crossed.end());
        for (size_t i = 1; i < ct.crossed.size(); ++i)
            if (ct.crossed[i] - ct.crossed[i - 1] < 1e-7)
                throw PoleError("meijer_g: coincident crossed poles");
    }
    return ct;
}

// Residue of Theta(s) z^{-s} at the simple left pole s0 = -b_j - k.
void add_residue(LogSum& sum, const MeijerGSpec& g, int j_pole, int k,
                 double ln_z) {
    const double s0 = -g.b[j_pole] - double(k);
    double ln_abs = -s0 * ln_z;
    int sign = (k % 2 == 0) ? 1 : -1; // (-1)^k / k!
    ln_abs -= std::lgamma(double(k) + 1.0);
    try {
        for (int j = 0; j < g.q(); ++j) {
            if (j == j_pole) continue;
            if (j < g.m) {
                const auto lg = log_gamma_signed(g.b[j] + s0);
                ln_abs += lg.log_abs;
                sign *= lg.sign;
            } else {
                const auto lg = log_gamma_signed(1.0 - g.b[j] - s0);
                ln_abs -= lg.log_abs;
                sign *= lg.sign;
            }
        }
        for (int i = 0; i < g.p(); ++i) {
            if (i < g.n) {
                const auto lg = log_gamma_signed(1.0 - g.a[i] - s0);
                ln_abs += lg.log_abs;
                sign *= lg.sign;
            } else {
                const auto lg = log_gamma_signed(g.a[i] + s0);
                ln_abs -= lg.log_abs;
                sign *= lg.sign;
            }
        }
    } catch (const PoleError&) {
        // a denominator Gamma at its pole kills the residue; a numerator
        // Gamma at its pole would be a double pole, excluded by perturbation
        return;
    }
    sum.add(sign, ln_abs);
}

struct LineIntegral {
    double ln_abs;
    int sign;
    double abs_err_scaled; // on the same log scale as ln_abs
    bool converged;
};

LineIntegral integrate_line(const MeijerGSpec& g, double c, double ln_z,
                            const MeijerGOptions& opt) {
    auto q_of = [&](double t) {
        return log_theta(g, std::complex<double>(c, t)) -
               std::complex<double>(c, t) * ln_z;
    };
    // locate the magnitude peak and the truncation point where the
    // integrand falls 1e-16 below it
    double peak = q_of(0.0).real();
    double drop_at = -1.0, t = 0.0;
    while (t < 800.0) {
        t += std::max(0.5, t * 0.125);
        const double m = q_of(t).real();
        peak = std::max(peak, m);
        if (m < peak - 40.0) {
            drop_at = t;
            break;
        }
    }
    if (drop_at < 0.0)
        throw ConvergenceError("meijer_g: contour integrand does not decay", 1.0);

    const double scale = peak;
    auto f = [&](double t_) {
        const std::complex<double> v = q_of(t_);
        return std::exp(v.real() - scale) * std::cos(v.imag());
    };
    QuadOptions qo;
    qo.rel_tol = 0.1 * opt.rel_tol;
    qo.abs_tol = 1e-18 * drop_at; // guards the all-cancelling case
    qo.max_intervals = opt.max_intervals;
    const QuadResult r = integrate(f, 0.0, drop_at, qo);

    LineIntegral li;
    const double raw = r.value / kPi;
    li.sign = raw == 0.0 ? 0 : (raw > 0.0 ? 1 : -1);
    li.ln_abs = raw == 0.0 ? -std::numeric_limits<double>::infinity()
                           : scale + std::log(std::abs(raw));
    li.abs_err_scaled = scale + std::log(std::max(r.abs_error / kPi, 1e-300));
    li.converged = r.converged;
    return li;
}

MeijerGValue evaluate(const MeijerGSpec& g, double z,
                      const MeijerGOptions& opt) {
    const double ln_z = std::log(z);
    const Contour ct = choose_contour(g, ln_z);
    const LineIntegral li = integrate_line(g, ct.c, ln_z, opt);

    LogSum sum;
    sum.add(li.sign, li.ln_abs);
    for (int j = 0; j < g.m; ++j)
        for (int k = 0; -g.b[j] - double(k) > ct.c; ++k)
            add_residue(sum, g, j, k, ln_z);

    MeijerGValue out;
    sum.value(out.ln_abs, out.sign);
    out.value = out.sign == 0 ? 0.0 : out.sign * std::exp(out.ln_abs);
    const double ln_err = li.abs_err_scaled;
    out.abs_error = std::exp(std::min(700.0, ln_err));
    out.rel_error = out.sign == 0 ? 0.0 : std::exp(ln_err - out.ln_abs);
    if (!li.converged) {
        const double achieved = out.rel_error;
        if (achieved > 100.0 * opt.rel_tol)
            throw ConvergenceError("meijer_g: quadrature stalled", achieved);
    }
    return out;
}

} // namespace

void MeijerGSpec::validate() const { MeijerValidate(*this); }

MeijerGValue meijer_g_full(const MeijerGSpec& spec, double z,
                           const MeijerGOptions& opt) {
    spec.validate();
    if (!(z > 0.0)) throw DomainError("meijer_g: requires z > 0");
    const double cstar =
        spec.m + spec.n - 0.5 * double(spec.p() + spec.q());
    if (cstar <= 0.0)
        throw DomainError("meijer_g: contour integral diverges (m+n <= (p+q)/2)");

    if (!has_pole_collision(spec, 1e-9)) {
        try {
            return evaluate(spec, z, opt);
        } catch (const PoleError&) {
            // coincident poles within the crossed set; fall through to the
            // perturbed evaluation
        }
    }

    // coincident ladders: evaluate at eps and eps/2 and require agreement
    const MeijerGSpec g1 = perturb(spec, opt.pole_epsilon);
    const MeijerGSpec g2 = perturb(spec, 0.5 * opt.pole_epsilon);
    if (has_pole_collision(g1, 1e-9) || has_pole_collision(g2, 1e-9))
        throw PoleError("meijer_g: pole sets not separable after perturbation");
    MeijerGValue v1 = evaluate(g1, z, opt);
    const MeijerGValue v2 = evaluate(g2, z, opt);
    const double denom =
        std::max(std::abs(v1.value), std::abs(v2.value));
    if (denom > 0.0 && std::abs(v1.value - v2.value) > 1e-5 * denom)
        throw ConvergenceError("meijer_g: perturbed evaluations disagree",
                               std::abs(v1.value - v2.value) / denom);
    v1.pole_perturbed = true;
    return v1;
}

double meijer_g(const MeijerGSpec& spec, double z, const MeijerGOptions& opt) {
    return meijer_g_full(spec, z, opt).value;
}

} // namespace rfso
