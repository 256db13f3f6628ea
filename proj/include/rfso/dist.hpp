#ifndef RFSO_DIST_HPP
#define RFSO_DIST_HPP

#include <string>
#include <vector>

#include "rfso/channel.hpp"
#include "rfso/meijerg.hpp"

namespace rfso {

// Anomaly markers accumulated while evaluating closed forms.
struct EvalFlags {
    bool clamped = false;
    bool truncated = false;
    bool pole_perturbed = false;
    bool any() const { return clamped || truncated || pole_perturbed; }
    void merge(const EvalFlags& o) {
        clamped |= o.clamped;
        truncated |= o.truncated;
        pole_perturbed |= o.pole_perturbed;
    }
    std::string to_string() const;
};

// Values outside [0,1] by more than 1e-6 raise the clamped flag; smaller
// excursions (quadrature noise near saturation) are clamped silently.
double clamp_probability(double p, EvalFlags* flags);

// ---- parameter-block helpers for the Meijer kernels ----

// (x/r, (x+1)/r, ..., (x+r-1)/r): multiplication-theorem expansion block
std::vector<double> expanded_block(double x, int r);
// expansion of {xi^2, alpha, m}: the "bottom" pole block of one link term
std::vector<double> link_bottom_block(const MalagaPointing& link, int m, int r);
// expansion of {xi^2 + 1}
std::vector<double> link_top_block(const MalagaPointing& link, int r);
// (B_A B_B)^r / r^{4r}
double pair_argument_scale(const MalagaPointing& a, const MalagaPointing& b);
// coefficient of one (m_a, m_b) term of the product-channel CDF expansion
double pair_cdf_term_coef(const MalagaPointing& a, int ma,
                          const MalagaPointing& b, int mb);

// ---- RF cascade (Gamma moment fit) ----

double pdf_snr_rf(const RfCascadeFit& fit, double gbar, double g);
double cdf_snr_rf(const RfCascadeFit& fit, double gbar, double g);
// alternating-series form of the same CDF; validation path
double cdf_snr_rf_series(const RfCascadeFit& fit, double gbar, double g,
                         EvalFlags* flags = nullptr);

// ---- single optical link ----

double pdf_snr_fso_single(const MalagaPointing& link, double gbar, double g,
                          EvalFlags* flags = nullptr);
double cdf_snr_fso_single(const MalagaPointing& link, double gbar, double g,
                          EvalFlags* flags = nullptr);

// ---- cascaded optical product channel ----

double pdf_snr_fso_pair(const MalagaPointing& link_a,
                        const MalagaPointing& link_b, double gbar_prod,
                        double g, EvalFlags* flags = nullptr);
double cdf_snr_fso_pair(const MalagaPointing& link_a,
                        const MalagaPointing& link_b, double gbar_prod,
                        double g, EvalFlags* flags = nullptr);

// ---- end-to-end decode-and-forward SNR ----

double cdf_dualhop(const RfCascadeFit& fit, double gbar1,
                   const MalagaPointing& link_h, const MalagaPointing& link_g,
                   double gamma2, double g, EvalFlags* flags = nullptr);
// series form of the RF part (validation path)
double cdf_dualhop_series(const RfCascadeFit& fit, double gbar1,
                          const MalagaPointing& link_h,
                          const MalagaPointing& link_g, double gamma2,
                          double g, EvalFlags* flags = nullptr);

} // namespace rfso

#endif
