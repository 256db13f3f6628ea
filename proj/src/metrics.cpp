#include "rfso/metrics.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "rfso/errors.hpp"
#include "rfso/quadrature.hpp"
#include "rfso/specfun.hpp"

namespace rfso {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kLn2Pi = 1.8378770664093454835606594728112;

struct LnVal {
    double ln = kNegInf;
    int sign = 0;
};

// signed log-sum-exp accumulator for series whose terms are assembled in
// log magnitude
class SignedLnSum {
  public:
    void add(double ln, int sign) {
        if (sign == 0 || ln == kNegInf) return;
        items_.push_back({ln, sign});
    }
    LnVal total() const {
        LnVal out;
        if (items_.empty()) return out;
        double peak = items_[0].first;
        for (auto& it : items_) peak = std::max(peak, it.first);
        double s = 0.0;
        for (auto& it : items_) s += it.second * std::exp(it.first - peak);
        if (s == 0.0) return out;
        out.ln = peak + std::log(std::abs(s));
        out.sign = s > 0.0 ? 1 : -1;
        return out;
    }

  private:
    std::vector<std::pair<double, int>> items_;
};

// J(s0, sigma, W) = int_0^inf g^{s0-1} F~(W g) e^{-sigma sqrt(g)} dg where
// F~ is the product-channel CDF mixture; evaluated per mixture term through
// the G^{3,6r}_{6r+1,2r+3} kernel. Always positive.
LnVal exp_weighted_pair_kernel(const MalagaPointing& lh,
                               const MalagaPointing& lg, double s0,
                               double sigma, double w, EvalFlags& fl) {
    const int r = lh.detection;
    const double z = sigma * sigma / (4.0 * w);
    SignedLnSum sum;
    MeijerGSpec spec;
    spec.m = 3;
    spec.n = 6 * r;
    for (int mh = 1; mh <= lh.beta; ++mh)
        for (int mg = 1; mg <= lg.beta; ++mg) {
            spec.a.clear();
            for (double v : link_bottom_block(lh, mh, r))
                spec.a.push_back(1.0 - s0 - v);
            for (double v : link_bottom_block(lg, mg, r))
                spec.a.push_back(1.0 - s0 - v);
            spec.a.push_back(1.0 - s0);
            spec.b = {0.0, 0.5, -s0};
            for (double v : link_top_block(lg, r))
                spec.b.push_back(1.0 - s0 - v);
            for (double v : link_top_block(lh, r))
                spec.b.push_back(1.0 - s0 - v);
            const MeijerGValue g = meijer_g_full(spec, z);
            fl.pole_perturbed |= g.pole_perturbed;
            const double ln_coef = std::log(pair_cdf_term_coef(lh, mh, lg, mg)) -
                                   0.5 * std::log(M_PI) - s0 * std::log(w);
            sum.add(ln_coef + g.ln_abs, g.sign);
        }
    return sum.total();
}

struct RfSeriesEnv {
    double a, b, ae, be;
    double zeta;    // sqrt(phi) / (b sqrt(gamma1))
    double sigma_e; // 1 / (be sqrt(gammae1))
    double ln_d;    // log of the eavesdropper density normalization
};

RfSeriesEnv make_rf_env(const RfCascadeFit& main_fit,
                        const RfCascadeFit& eve_fit, double phi, double g1,
                        double ge1) {
    RfSeriesEnv env;
    env.a = main_fit.a;
    env.b = main_fit.b;
    env.ae = eve_fit.a;
    env.be = eve_fit.b;
    env.zeta = std::sqrt(phi) / (env.b * std::sqrt(g1));
    env.sigma_e = 1.0 / (env.be * std::sqrt(ge1));
    env.ln_d = std::log(2.0) + (env.ae + 1.0) * std::log(env.be) +
               std::lgamma(env.ae + 1.0) +
               0.5 * (env.ae + 1.0) * std::log(ge1);
    return env;
}

constexpr int kSeriesCap = 200;       // printed-series truncation policy
constexpr int kStableSeriesCap = 600; // positive resummation cap

// int_0^inf F_main(phi g) f_eve(g) dg for two Gamma-fitted RF cascades.
// The printed alternating series converges only for zeta < sigma_e; beyond
// that the factored e^{-zeta sqrt(g)} resummation (identical value, positive
// terms) is used.
double rf_outage_integral(const RfSeriesEnv& env, EvalFlags& fl) {
    double sum = 0.0;
    if (env.zeta <= 0.85 * env.sigma_e) {
        const double lg_a1 = std::lgamma(env.a + 1.0);
        for (int n = 0; n < kSeriesCap; ++n) {
            const double t1 = env.a + env.ae + n + 2.0;
            const double ln = (env.a + 1.0 + n) * std::log(env.zeta) -
                              std::lgamma(n + 1.0) -
                              std::log(env.a + 1.0 + n) - lg_a1 +
                              std::log(2.0) + std::lgamma(t1) -
                              t1 * std::log(env.sigma_e) - env.ln_d;
            const double term = (n % 2 == 0 ? 1.0 : -1.0) * std::exp(ln);
            sum += term;
            if (std::abs(term) < 1e-12 * std::abs(sum) && n > 2) return sum;
        }
        fl.truncated = true;
        return sum;
    }
    const double ln_rate = std::log(env.zeta + env.sigma_e);
    for (int k = 0; k < kStableSeriesCap; ++k) {
        const double t1 = env.a + env.ae + k + 2.0;
        const double ln = (env.a + 1.0 + k) * std::log(env.zeta) -
                          std::lgamma(env.a + 2.0 + k) + std::log(2.0) +
                          std::lgamma(t1) - t1 * ln_rate - env.ln_d;
        const double term = std::exp(ln);
        sum += term;
        if (term < 1e-12 * sum && k > 2) return sum;
    }
    fl.truncated = true;
    return sum;
}

// int_0^inf F_main(phi g) F~_D(phi g) f_eve(g) dg with the same series
// switch; the optical factor enters through the exponential-weighted kernel.
double rf_fso_cross_integral(const RfSeriesEnv& env, const MalagaPointing& lh,
                             const MalagaPointing& lg, double w_phi,
                             EvalFlags& fl) {
    double sum = 0.0;
    if (env.zeta <= 0.85 * env.sigma_e) {
        const double lg_a1 = std::lgamma(env.a + 1.0);
        for (int n = 0; n < kSeriesCap; ++n) {
            const double s0 = 0.5 * (env.a + env.ae + n + 2.0);
            const LnVal j =
                exp_weighted_pair_kernel(lh, lg, s0, env.sigma_e, w_phi, fl);
            const double ln = (env.a + 1.0 + n) * std::log(env.zeta) -
                              std::lgamma(n + 1.0) -
                              std::log(env.a + 1.0 + n) - lg_a1 + j.ln -
                              env.ln_d;
            const double term =
                (n % 2 == 0 ? 1.0 : -1.0) * j.sign * std::exp(ln);
            sum += term;
            if (std::abs(term) < 1e-12 * std::abs(sum) && n > 2) return sum;
        }
        fl.truncated = true;
        return sum;
    }
    for (int k = 0; k < kStableSeriesCap; ++k) {
        const double s0 = 0.5 * (env.a + env.ae + k + 2.0);
        const LnVal j = exp_weighted_pair_kernel(
            lh, lg, s0, env.zeta + env.sigma_e, w_phi, fl);
        const double ln = (env.a + 1.0 + k) * std::log(env.zeta) -
                          std::lgamma(env.a + 2.0 + k) + j.ln - env.ln_d;
        const double term = j.sign * std::exp(ln);
        sum += term;
        if (std::abs(term) < 1e-12 * std::abs(sum) && k > 2) return sum;
    }
    fl.truncated = true;
    return sum;
}

// int_0^inf F~_D(phi g) f_EQ(g) dg: the distribution-vs-density cross
// kernel G^{6r+1,6r}_{8r+1,8r+1}. Four independent mixture indices (two
// from the distribution side, two from the density side).
double fso_cross_kernel(const ChannelSet& ch, double gamma2, double gammae2,
                        double phi, EvalFlags& fl) {
    const MalagaPointing& lh = ch.h;
    const MalagaPointing& lg = ch.g;
    const MalagaPointing& le = ch.ge;
    const int r = lh.detection;
    const double b1 = std::pow(le.big_b / lg.big_b, double(r));
    const double z = b1 * gamma2 / (gammae2 * phi);
    const double ln_prefix =
        2.0 * std::log(lh.xi2() * lh.big_a) + std::log(lg.xi2() * lg.big_a) +
        std::log(le.xi2() * le.big_a) - 4.0 * r * std::log(2.0) -
        4.0 * (r - 1) * kLn2Pi;

    SignedLnSum sum;
    MeijerGSpec spec;
    spec.m = 6 * r + 1;
    spec.n = 6 * r;
    for (int mh = 1; mh <= lh.beta; ++mh)           // distribution side
        for (int mg = 1; mg <= lg.beta; ++mg)
            for (int mhp = 1; mhp <= lh.beta; ++mhp) // density side
                for (int mge = 1; mge <= le.beta; ++mge) {
                    spec.a.clear();
                    for (double v : link_bottom_block(lh, mh, r))
                        spec.a.push_back(1.0 - v);
                    for (double v : link_bottom_block(lg, mg, r))
                        spec.a.push_back(1.0 - v);
                    spec.a.push_back(1.0);
                    for (double v : link_top_block(le, r)) spec.a.push_back(v);
                    for (double v : link_top_block(lh, r)) spec.a.push_back(v);
                    spec.b = link_bottom_block(lh, mhp, r);
                    for (double v : link_bottom_block(le, mge, r))
                        spec.b.push_back(v);
                    spec.b.push_back(0.0);
                    for (double v : link_top_block(lh, r))
                        spec.b.push_back(1.0 - v);
                    for (double v : link_top_block(lg, r))
                        spec.b.push_back(1.0 - v);
                    const MeijerGValue g = meijer_g_full(spec, z);
                    fl.pole_perturbed |= g.pole_perturbed;
                    const double ln_coef =
                        ln_prefix + std::log(lh.b_m[mh - 1]) +
                        std::log(lg.b_m[mg - 1]) + std::log(lh.b_m[mhp - 1]) +
                        std::log(le.b_m[mge - 1]) +
                        (2.0 * lh.alpha + lg.alpha + le.alpha + mh + mg + mhp +
                         mge - 4.0) *
                            std::log(double(r)) +
                        g.ln_abs;
                    sum.add(ln_coef, g.sign);
                }
    const LnVal v = sum.total();
    return v.sign * std::exp(v.ln);
}

MetricValue make_closed(double value, EvalFlags fl) {
    MetricValue mv;
    mv.value = clamp_probability(value, &fl);
    mv.method = Method::closed_form;
    mv.flags = fl;
    return mv;
}

} // namespace

std::string to_string(Method m) {
    switch (m) {
        case Method::closed_form: return "closed-form";
        case Method::quadrature: return "quadrature";
        case Method::monte_carlo: return "monte-carlo";
    }
    return "?";
}

MetricValue asc_scenario1(const ScenarioConfig& cfg, const ChannelSet& ch) {
    if (cfg.scenario != Scenario::I)
        throw ConfigError("asc is defined for scenario I");
    cfg.validate();
    EvalFlags fl;
    auto integrand = [&](double g) {
        const double fe = cdf_snr_rf(ch.fit_eve, cfg.gammae1, g);
        const double feq = cdf_dualhop(ch.fit_main, cfg.gamma1, ch.h, ch.g,
                                       cfg.gamma2, g, &fl);
        return fe * (1.0 - feq) / (1.0 + g);
    };
    const double eve_mean =
        cfg.gammae1 * ch.fit_eve.b * ch.fit_eve.b * (ch.fit_eve.a + 1.0) *
        (ch.fit_eve.a + 2.0);
    QuadOptions qo;
    qo.rel_tol = 1e-6;
    qo.max_intervals = 3000;
    const QuadResult r =
        integrate_positive_axis(integrand, std::max(eve_mean, 1e-6), qo);
    if (!r.converged)
        throw ConvergenceError("asc quadrature did not converge",
                               r.abs_error / std::max(1e-300, std::abs(r.value)));
    MetricValue mv;
    mv.value = std::max(0.0, r.value);
    mv.method = Method::quadrature;
    mv.flags = fl;
    return mv;
}

MetricValue asc_scenario1_closed(const ScenarioConfig& cfg,
                                 const ChannelSet& ch, int max_terms) {
    if (cfg.scenario != Scenario::I)
        throw ConfigError("asc is defined for scenario I");
    cfg.validate();
    EvalFlags fl;
    const double a = ch.fit_main.a, b = ch.fit_main.b;
    const double ae = ch.fit_eve.a, be = ch.fit_eve.b;
    const double ze = 1.0 / (be * std::sqrt(cfg.gammae1));
    const double zm = 1.0 / (b * std::sqrt(cfg.gamma1));
    const int r = ch.h.detection;
    const double w = pair_argument_scale(ch.h, ch.g) / cfg.gamma2;
    const double ln_zw = -std::log(w); // argument gamma2 / B_eq

    // per-term G of the Beta-weighted optical kernel, lists as printed
    auto u_term = [&](double a_pref, double a_list, int mh, int mg) {
        MeijerGSpec spec;
        spec.m = 2;
        spec.n = 6 * r + 1;
        spec.a = {0.0};
        for (double v : link_bottom_block(ch.h, mh, r))
            spec.a.push_back(-a_list - v);
        for (double v : link_bottom_block(ch.g, mg, r))
            spec.a.push_back(-a_list - v);
        spec.a.push_back(-a_list);
        spec.b = {0.0, -a_list - 1.0};
        for (double v : link_top_block(ch.g, r)) spec.b.push_back(-a_list - v);
        for (double v : link_top_block(ch.h, r)) spec.b.push_back(-a_list - v);
        const MeijerGValue g = meijer_g_full(spec, std::exp(ln_zw));
        fl.pole_perturbed |= g.pole_perturbed;
        LnVal out;
        out.ln = a_pref * ln_zw + g.ln_abs;
        out.sign = g.sign;
        return out;
    };

    double sum = 0.0, prev_mag = 0.0;
    int grow_streak = 0;
    for (int n = 0; n < max_terms; ++n) {
        const double alpha1 = 0.5 * (ae + n + 3.0);
        const double alpha2 = 0.5 * (a + ae + 2.0 * n + 2.0);
        const double ln_x1 = (ae + n + 1.0) * std::log(ze) -
                             std::lgamma(n + 1.0) - std::log(ae + n + 1.0) -
                             std::lgamma(ae + 1.0);
        const double ln_x2 = (a + n + 1.0) * std::log(zm) -
                             std::lgamma(n + 1.0) - std::log(a + n + 1.0) -
                             std::lgamma(a + 1.0);
        const int sgn_n = n % 2 == 0 ? 1 : -1;
        SignedLnSum parts;
        try {
            const double u1 = beta_reflection(alpha1);
            parts.add(ln_x1 + std::log(std::abs(u1)),
                      sgn_n * (u1 > 0 ? 1 : -1));
        } catch (const PoleError&) {
            fl.pole_perturbed = true;
        }
        try {
            const double u2 = beta_reflection(alpha2 + 1.0);
            parts.add(ln_x1 + ln_x2 + std::log(std::abs(u2)),
                      -(u2 > 0 ? 1 : -1)); // (-1)^n twice
        } catch (const PoleError&) {
            fl.pole_perturbed = true;
        }
        for (int mh = 1; mh <= ch.h.beta; ++mh)
            for (int mg = 1; mg <= ch.g.beta; ++mg) {
                const double ln_x3 =
                    std::log(pair_cdf_term_coef(ch.h, mh, ch.g, mg));
                const LnVal u3 = u_term(alpha1, alpha1, mh, mg);
                parts.add(ln_x1 + ln_x3 + u3.ln, -sgn_n * u3.sign);
                const LnVal u4 = u_term(alpha2 + 1.0, alpha2, mh, mg);
                parts.add(ln_x1 + ln_x2 + ln_x3 + u4.ln, u4.sign);
            }
        const LnVal term = parts.total();
        if (term.sign == 0) continue;
        if (term.ln > 690.0) { // magnitudes left the double range
            fl.truncated = true;
            break;
        }
        const double tv = term.sign * std::exp(term.ln);
        sum += tv;
        if (std::abs(tv) < 1e-12 * std::abs(sum) && n > 2) break;
        grow_streak = std::abs(tv) > prev_mag ? grow_streak + 1 : 0;
        prev_mag = std::abs(tv);
        if (grow_streak >= 5) { // divergent regime of the term series
            fl.truncated = true;
            break;
        }
        if (n == max_terms - 1) fl.truncated = true;
    }
    MetricValue mv;
    mv.value = sum;
    mv.method = Method::closed_form;
    mv.flags = fl;
    return mv;
}

MetricValue sop_scenario1(const ScenarioConfig& cfg, const ChannelSet& ch) {
    cfg.validate();
    EvalFlags fl;
    const double phi = cfg.phi();
    const RfSeriesEnv env =
        make_rf_env(ch.fit_main, ch.fit_eve, phi, cfg.gamma1, cfg.gammae1);
    const double w_phi = pair_argument_scale(ch.h, ch.g) * phi / cfg.gamma2;
    const double term1 = rf_outage_integral(env, fl);
    const LnVal j2 = exp_weighted_pair_kernel(ch.h, ch.g, 0.5 * (env.ae + 1.0),
                                              env.sigma_e, w_phi, fl);
    const double term2 = j2.sign * std::exp(j2.ln - env.ln_d);
    const double term3 = rf_fso_cross_integral(env, ch.h, ch.g, w_phi, fl);
    return make_closed(term1 + term2 - term3, fl);
}

MetricValue sop_scenario2(const ScenarioConfig& cfg, const ChannelSet& ch) {
    cfg.validate();
    EvalFlags fl;
    const double phi = cfg.phi();
    const double fr = cfg.rs == 0.0
                          ? 0.0
                          : cdf_snr_rf(ch.fit_main, cfg.gamma1, phi - 1.0);
    const double kernel =
        fso_cross_kernel(ch, cfg.gamma2, cfg.gammae2, phi, fl);
    return make_closed(kernel * (1.0 - fr) + fr, fl);
}

MetricValue sop_scenario3(const ScenarioConfig& cfg, const ChannelSet& ch) {
    cfg.validate();
    EvalFlags fl;
    const double phi = cfg.phi();
    const RfSeriesEnv env =
        make_rf_env(ch.fit_main, ch.fit_eve, phi, cfg.gamma1, cfg.gammae1);
    const double sop1 = 1.0 - rf_outage_integral(env, fl);
    const double sop2 =
        1.0 - fso_cross_kernel(ch, cfg.gamma2, cfg.gammae2, phi, fl);
    return make_closed(1.0 - sop1 * sop2, fl);
}

MetricValue sop(const ScenarioConfig& cfg, const ChannelSet& ch) {
    switch (cfg.scenario) {
        case Scenario::I: return sop_scenario1(cfg, ch);
        case Scenario::II: return sop_scenario2(cfg, ch);
        case Scenario::III: return sop_scenario3(cfg, ch);
    }
    throw ConfigError("unknown scenario");
}

MetricValue sop_scenario1_quad(const ScenarioConfig& cfg,
                               const ChannelSet& ch) {
    cfg.validate();
    EvalFlags fl;
    const double phi = cfg.phi();
    auto integrand = [&](double g) {
        const double feq = cdf_dualhop(ch.fit_main, cfg.gamma1, ch.h, ch.g,
                                       cfg.gamma2, phi * g, &fl);
        return feq * pdf_snr_rf(ch.fit_eve, cfg.gammae1, g);
    };
    const double eve_mean =
        cfg.gammae1 * ch.fit_eve.b * ch.fit_eve.b * (ch.fit_eve.a + 1.0) *
        (ch.fit_eve.a + 2.0);
    QuadOptions qo;
    qo.rel_tol = 1e-7;
    const QuadResult r = integrate_positive_axis(integrand, eve_mean, qo);
    MetricValue mv;
    mv.value = clamp_probability(r.value, &fl);
    mv.method = Method::quadrature;
    mv.flags = fl;
    return mv;
}

MetricValue sop_scenario2_quad(const ScenarioConfig& cfg,
                               const ChannelSet& ch) {
    cfg.validate();
    EvalFlags fl;
    const double phi = cfg.phi();
    const double fr = cfg.rs == 0.0
                          ? 0.0
                          : cdf_snr_rf(ch.fit_main, cfg.gamma1, phi - 1.0);
    auto integrand = [&](double g) {
        const double fd =
            cdf_snr_fso_pair(ch.h, ch.g, cfg.gamma2, phi * g, &fl);
        return fd * pdf_snr_fso_pair(ch.h, ch.ge, cfg.gammae2, g, &fl);
    };
    QuadOptions qo;
    qo.rel_tol = 1e-7;
    const QuadResult r = integrate_positive_axis(integrand, cfg.gammae2, qo);
    MetricValue mv;
    mv.value = clamp_probability(r.value * (1.0 - fr) + fr, &fl);
    mv.method = Method::quadrature;
    mv.flags = fl;
    return mv;
}

MetricValue spsc(const ScenarioConfig& cfg, const ChannelSet& ch) {
    ScenarioConfig zero_rate = cfg;
    zero_rate.rs = 0.0;
    MetricValue mv = sop(zero_rate, ch);
    mv.value = 1.0 - mv.value;
    return mv;
}

MetricValue est(const ScenarioConfig& cfg, const ChannelSet& ch) {
    MetricValue mv = sop(cfg, ch);
    mv.value = cfg.rs * (1.0 - mv.value);
    return mv;
}

MetricValue ip_scenario1(const ScenarioConfig& cfg, const ChannelSet& ch) {
    cfg.validate();
    EvalFlags fl;
    const RfSeriesEnv env =
        make_rf_env(ch.fit_main, ch.fit_eve, 1.0, cfg.gamma1, cfg.gammae1);
    return make_closed(rf_outage_integral(env, fl), fl);
}

MetricValue ip_scenario2(const ScenarioConfig& cfg, const ChannelSet& ch) {
    cfg.validate();
    EvalFlags fl;
    return make_closed(
        fso_cross_kernel(ch, cfg.gamma2, cfg.gammae2, 1.0, fl), fl);
}

MetricValue ip_scenario3(const ScenarioConfig& cfg, const ChannelSet& ch) {
    ScenarioConfig zero_rate = cfg;
    zero_rate.rs = 0.0;
    MetricValue mv = sop_scenario3(zero_rate, ch);
    return mv; // 1 - SPSC_III == SOP_III at rs = 0
}

MetricValue ip(const ScenarioConfig& cfg, const ChannelSet& ch) {
    switch (cfg.scenario) {
        case Scenario::I: return ip_scenario1(cfg, ch);
        case Scenario::II: return ip_scenario2(cfg, ch);
        case Scenario::III: return ip_scenario3(cfg, ch);
    }
    throw ConfigError("unknown scenario");
}

MetricValue ip_scenario1_quad(const ScenarioConfig& cfg,
                              const ChannelSet& ch) {
    cfg.validate();
    EvalFlags fl;
    auto integrand = [&](double g) {
        return cdf_snr_rf(ch.fit_main, cfg.gamma1, g) *
               pdf_snr_rf(ch.fit_eve, cfg.gammae1, g);
    };
    const double eve_mean =
        cfg.gammae1 * ch.fit_eve.b * ch.fit_eve.b * (ch.fit_eve.a + 1.0) *
        (ch.fit_eve.a + 2.0);
    QuadOptions qo;
    qo.rel_tol = 1e-9;
    const QuadResult r = integrate_positive_axis(integrand, eve_mean, qo);
    MetricValue mv;
    mv.value = clamp_probability(r.value, &fl);
    mv.method = Method::quadrature;
    mv.flags = fl;
    return mv;
}

MetricValue ip_scenario2_quad(const ScenarioConfig& cfg,
                              const ChannelSet& ch) {
    cfg.validate();
    EvalFlags fl;
    auto integrand = [&](double g) {
        return cdf_snr_fso_pair(ch.h, ch.g, cfg.gamma2, g, &fl) *
               pdf_snr_fso_pair(ch.h, ch.ge, cfg.gammae2, g, &fl);
    };
    QuadOptions qo;
    qo.rel_tol = 1e-7;
    const QuadResult r = integrate_positive_axis(integrand, cfg.gammae2, qo);
    MetricValue mv;
    mv.value = clamp_probability(r.value, &fl);
    mv.method = Method::quadrature;
    mv.flags = fl;
    return mv;
}

MetricValue eval_metric(Metric metric, const ScenarioConfig& cfg,
                        const ChannelSet& ch) {
    switch (metric) {
        case Metric::asc: return asc_scenario1(cfg, ch);
        case Metric::sop: return sop(cfg, ch);
        case Metric::spsc: return spsc(cfg, ch);
        case Metric::est: return est(cfg, ch);
        case Metric::ip: return ip(cfg, ch);
    }
    throw ConfigError("unknown metric");
}

} // namespace rfso
