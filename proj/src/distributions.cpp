#include "rfso/dist.hpp"

#include <cmath>

#include "rfso/errors.hpp"
#include "rfso/specfun.hpp"

namespace rfso {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

void require_same_detection(const MalagaPointing& a, const MalagaPointing& b) {
    if (a.detection != b.detection)
        throw ConfigError("product channel requires a common detection order");
}

double mixture_coef(const MalagaPointing& la, int ma, const MalagaPointing& lb,
                    int mb) {
    const int r = la.detection;
    return la.xi2() * la.big_a * lb.xi2() * lb.big_a / std::pow(2.0, 2 * r) *
           la.b_m[ma - 1] * lb.b_m[mb - 1];
}
} // namespace

std::string EvalFlags::to_string() const {
    std::string s;
    auto append = [&s](const char* tag) {
        if (!s.empty()) s += ';';
        s += tag;
    };
    if (clamped) append("clamped");
    if (truncated) append("truncated");
    if (pole_perturbed) append("pole-perturbed");
    return s;
}

double clamp_probability(double p, EvalFlags* flags) {
    if (p < 0.0 || p > 1.0) {
        if ((p < -1e-6 || p > 1.0 + 1e-6) && flags) flags->clamped = true;
        return p < 0.0 ? 0.0 : 1.0;
    }
    return p;
}

std::vector<double> expanded_block(double x, int r) {
    std::vector<double> out(r);
    for (int j = 0; j < r; ++j) out[j] = (x + j) / double(r);
    return out;
}

std::vector<double> link_bottom_block(const MalagaPointing& link, int m,
                                      int r) {
    std::vector<double> out = expanded_block(link.xi2(), r);
    for (double v : expanded_block(link.alpha, r)) out.push_back(v);
    for (double v : expanded_block(double(m), r)) out.push_back(v);
    return out;
}

std::vector<double> link_top_block(const MalagaPointing& link, int r) {
    return expanded_block(link.xi2() + 1.0, r);
}

double pair_argument_scale(const MalagaPointing& a, const MalagaPointing& b) {
    const int r = a.detection;
    return std::pow(a.big_b * b.big_b, r) / std::pow(double(r), 4.0 * r);
}

double pair_cdf_term_coef(const MalagaPointing& a, int ma,
                          const MalagaPointing& b, int mb) {
    const int r = a.detection;
    return mixture_coef(a, ma, b, mb) *
           std::pow(double(r), a.alpha + b.alpha + ma + mb - 2.0) /
           std::pow(kTwoPi, 2.0 * (r - 1));
}

double pdf_snr_rf(const RfCascadeFit& fit, double gbar, double g) {
    if (g <= 0.0) throw DomainError("pdf_snr_rf: requires snr > 0");
    if (gbar <= 0.0) throw DomainError("pdf_snr_rf: requires mean snr > 0");
    const double ln = 0.5 * (fit.a - 1.0) * std::log(g) -
                      std::sqrt(g) / (fit.b * std::sqrt(gbar)) -
                      std::log(2.0) - (fit.a + 1.0) * std::log(fit.b) -
                      std::lgamma(fit.a + 1.0) -
                      0.5 * (fit.a + 1.0) * std::log(gbar);
    return std::exp(ln);
}

double cdf_snr_rf(const RfCascadeFit& fit, double gbar, double g) {
    if (g <= 0.0) return 0.0;
    return gamma_p(fit.a + 1.0, std::sqrt(g) / (fit.b * std::sqrt(gbar)));
}

double cdf_snr_rf_series(const RfCascadeFit& fit, double gbar, double g,
                         EvalFlags* flags) {
    if (g <= 0.0) return 0.0;
    bool truncated = false;
    const double x = std::sqrt(g) / (fit.b * std::sqrt(gbar));
    const double v = gamma_p_series(fit.a + 1.0, x, 200, &truncated);
    if (flags) flags->truncated |= truncated;
    return clamp_probability(v, flags);
}

double pdf_snr_fso_single(const MalagaPointing& link, double gbar, double g,
                          EvalFlags* flags) {
    if (g <= 0.0) throw DomainError("pdf_snr_fso_single: requires snr > 0");
    const int r = link.detection;
    const double arg = link.big_b * std::pow(g / gbar, 1.0 / r);
    MeijerGSpec spec;
    spec.m = 3;
    spec.n = 0;
    spec.a = {link.xi2() + 1.0};
    double total = 0.0;
    for (int m = 1; m <= link.beta; ++m) {
        spec.b = {link.xi2(), link.alpha, double(m)};
        const MeijerGValue v = meijer_g_full(spec, arg);
        if (flags) flags->pole_perturbed |= v.pole_perturbed;
        total += link.b_m[m - 1] * v.value;
    }
    return link.xi2() * link.big_a / (std::pow(2.0, r) * g) * total;
}

double cdf_snr_fso_single(const MalagaPointing& link, double gbar, double g,
                          EvalFlags* flags) {
    if (g <= 0.0) return 0.0;
    const int r = link.detection;
    const double arg =
        std::pow(link.big_b / double(r * r), double(r)) * g / gbar;
    MeijerGSpec spec;
    spec.m = 3 * r;
    spec.n = 1;
    spec.a = {1.0};
    for (double v : link_top_block(link, r)) spec.a.push_back(v);
    double total = 0.0;
    for (int m = 1; m <= link.beta; ++m) {
        spec.b = link_bottom_block(link, m, r);
        spec.b.push_back(0.0);
        const MeijerGValue v = meijer_g_full(spec, arg);
        if (flags) flags->pole_perturbed |= v.pole_perturbed;
        const double coef = link.b_m[m - 1] *
                            std::pow(double(r), link.alpha + m - 1.0) *
                            std::pow(kTwoPi, double(1 - r));
        total += coef * v.value;
    }
    total *= link.xi2() * link.big_a / std::pow(2.0, r);
    return clamp_probability(total, flags);
}

double pdf_snr_fso_pair(const MalagaPointing& link_a,
                        const MalagaPointing& link_b, double gbar_prod,
                        double g, EvalFlags* flags) {
    if (g <= 0.0) throw DomainError("pdf_snr_fso_pair: requires snr > 0");
    require_same_detection(link_a, link_b);
    const int r = link_a.detection;
    const double arg =
        link_a.big_b * link_b.big_b * std::pow(g / gbar_prod, 1.0 / r);
    MeijerGSpec spec;
    spec.m = 6;
    spec.n = 0;
    spec.a = {link_b.xi2() + 1.0, link_a.xi2() + 1.0};
    double total = 0.0;
    for (int ma = 1; ma <= link_a.beta; ++ma)
        for (int mb = 1; mb <= link_b.beta; ++mb) {
            spec.b = {link_a.xi2(), link_a.alpha, double(ma),
                      link_b.xi2(), link_b.alpha, double(mb)};
            const MeijerGValue v = meijer_g_full(spec, arg);
            if (flags) flags->pole_perturbed |= v.pole_perturbed;
            total += link_a.b_m[ma - 1] * link_b.b_m[mb - 1] * v.value;
        }
    return link_a.xi2() * link_a.big_a * link_b.xi2() * link_b.big_a *
           double(r) / (std::pow(2.0, 2 * r) * g) * total;
}

double cdf_snr_fso_pair(const MalagaPointing& link_a,
                        const MalagaPointing& link_b, double gbar_prod,
                        double g, EvalFlags* flags) {
    if (g <= 0.0) return 0.0;
    require_same_detection(link_a, link_b);
    const int r = link_a.detection;
    const double arg = pair_argument_scale(link_a, link_b) * g / gbar_prod;
    MeijerGSpec spec;
    spec.m = 6 * r;
    spec.n = 1;
    spec.a = {1.0};
    for (double v : link_top_block(link_b, r)) spec.a.push_back(v);
    for (double v : link_top_block(link_a, r)) spec.a.push_back(v);
    double total = 0.0;
    for (int ma = 1; ma <= link_a.beta; ++ma)
        for (int mb = 1; mb <= link_b.beta; ++mb) {
            spec.b = link_bottom_block(link_a, ma, r);
            for (double v : link_bottom_block(link_b, mb, r))
                spec.b.push_back(v);
            spec.b.push_back(0.0);
            const MeijerGValue v = meijer_g_full(spec, arg);
            if (flags) flags->pole_perturbed |= v.pole_perturbed;
            total += pair_cdf_term_coef(link_a, ma, link_b, mb) * v.value;
        }
    return clamp_probability(total, flags);
}

double cdf_dualhop(const RfCascadeFit& fit, double gbar1,
                   const MalagaPointing& link_h, const MalagaPointing& link_g,
                   double gamma2, double g, EvalFlags* flags) {
    if (g <= 0.0) return 0.0;
    const double fr = cdf_snr_rf(fit, gbar1, g);
    const double fd = cdf_snr_fso_pair(link_h, link_g, gamma2, g, flags);
    return clamp_probability(fr + fd - fr * fd, flags);
}

double cdf_dualhop_series(const RfCascadeFit& fit, double gbar1,
                          const MalagaPointing& link_h,
                          const MalagaPointing& link_g, double gamma2,
                          double g, EvalFlags* flags) {
    if (g <= 0.0) return 0.0;
    const double fr = cdf_snr_rf_series(fit, gbar1, g, flags);
    const double fd = cdf_snr_fso_pair(link_h, link_g, gamma2, g, flags);
    return clamp_probability(fr + fd * (1.0 - fr), flags);
}

} // namespace rfso
