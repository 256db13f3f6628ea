#include "rfso/channel.hpp"

#include <cmath>

#include "rfso/errors.hpp"
#include "rfso/specfun.hpp"

namespace rfso {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

double binomial(int n, int k) {
    return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                    std::lgamma(n - k + 1.0));
}
} // namespace

void RicianHop::validate() const {
    if (k < 0.0) throw ConfigError("Rician K factor must be >= 0");
    if (omega <= 0.0) throw ConfigError("Rician scale must be > 0");
}

double rician_amp_mean(const RicianHop& hop) {
    hop.validate();
    return 0.5 * std::sqrt(kPi * hop.omega / (hop.k + 1.0)) *
           laguerre_half(-hop.k);
}

RfCascadeFit fit_rf_cascade(const RicianHop& hop1, const RicianHop& hop2,
                            int n_elements) {
    hop1.validate();
    hop2.validate();
    if (n_elements < 1) throw ConfigError("element count must be >= 1");
    RfCascadeFit fit;
    fit.elements = n_elements;
    fit.mean_amp = rician_amp_mean(hop1) * rician_amp_mean(hop2);
    // E[(xy)^2] = Omega1 * Omega2 for independent factors
    const double second = hop1.omega * hop2.omega;
    const double var_elem = second - fit.mean_amp * fit.mean_amp;
    fit.var_sum = n_elements * var_elem;
    if (fit.var_sum <= 0.0)
        throw ConfigError("degenerate cascade: nonpositive variance");
    const double mean_sum = fit.sum_mean();
    fit.a = mean_sum * mean_sum / fit.var_sum - 1.0;
    fit.b = fit.var_sum / mean_sum;
    return fit;
}

double omega_prime(const Atmosphere& atm) {
    return atm.omega + 2.0 * atm.b0 * atm.rho +
           2.0 * std::sqrt(2.0 * atm.b0 * atm.rho * atm.omega) *
               std::cos(atm.phi_a - atm.phi_b);
}

double MalagaPointing::mean_irradiance() const {
    return (omega_p + c) * xi2() / (xi2() + 1.0);
}

MalagaPointing make_malaga_link(double alpha, int beta, double xi,
                                const Atmosphere& atm, int detection) {
    if (alpha <= 0.0) throw ConfigError("turbulence alpha must be > 0");
    if (beta < 1) throw ConfigError("turbulence beta must be a positive integer");
    if (xi <= 0.0) throw ConfigError("pointing-error xi must be > 0");
    if (atm.rho < 0.0 || atm.rho >= 1.0)
        throw ConfigError("scatter coupling rho must lie in [0, 1)");
    if (atm.b0 <= 0.0) throw ConfigError("scatter power b0 must be > 0");
    if (detection != 1 && detection != 2)
        throw ConfigError("detection order must be 1 or 2");

    MalagaPointing link;
    link.alpha = alpha;
    link.beta = beta;
    link.xi = xi;
    link.atm = atm;
    link.detection = detection;
    link.c = 2.0 * atm.b0 * (1.0 - atm.rho);
    link.omega_p = omega_prime(atm);
    if (link.c <= 0.0) throw ConfigError("degenerate link: c = 0");

    const double cb = link.c * beta + link.omega_p;
    link.big_a = 2.0 * std::pow(alpha, 0.5 * alpha) /
                 (std::pow(link.c, 1.0 + 0.5 * alpha) * std::tgamma(alpha)) *
                 std::pow(link.c * beta / cb, beta + 0.5 * alpha);
    link.big_b = link.xi2() * alpha * beta * (link.c + link.omega_p) /
                 ((link.xi2() + 1.0) * cb);
    link.a_m.resize(beta);
    link.b_m.resize(beta);
    for (int m = 1; m <= beta; ++m) {
        const double am = binomial(beta - 1, m - 1) *
                          std::pow(cb, 1.0 - 0.5 * m) /
                          std::tgamma(double(m)) *
                          std::pow(link.omega_p / link.c, m - 1.0) *
                          std::pow(alpha / double(beta), 0.5 * m);
        link.a_m[m - 1] = am;
        link.b_m[m - 1] = am * std::pow(alpha * beta / cb, -0.5 * (alpha + m));
    }
    return link;
}

std::string to_string(Scenario s) {
    switch (s) {
        case Scenario::I: return "I";
        case Scenario::II: return "II";
        case Scenario::III: return "III";
    }
    return "?";
}

double ScenarioConfig::phi() const { return std::exp2(rs); }

void ScenarioConfig::validate() const {
    if (gamma1 <= 0.0 || gamma2 <= 0.0 || gammae1 <= 0.0 || gammae2 <= 0.0)
        throw ConfigError("average SNRs must be positive (linear scale)");
    if (rs < 0.0) throw ConfigError("target secrecy rate must be >= 0");
    if (n1 < 1) throw ConfigError("element count n1 must be >= 1");
    if (hop_split <= 0.0 || hop_split >= 1.0)
        throw ConfigError("hop_split must lie in (0, 1)");
}

ChannelSet build_channels(const SystemModel& model, int n1) {
    ChannelSet ch;
    ch.fit_main = fit_rf_cascade(model.hop1, model.hop2, n1);
    ch.fit_eve = fit_rf_cascade(model.hop1, model.eve_hop, n1);
    ch.h = make_malaga_link(model.alpha_h, model.beta_h, model.xi_h,
                            model.atm_h, model.detection);
    ch.g = make_malaga_link(model.alpha_g, model.beta_g, model.xi_g,
                            model.atm_g, model.detection);
    ch.ge = make_malaga_link(model.alpha_ge, model.beta_ge, model.xi_ge,
                             model.atm_ge, model.detection);
    return ch;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

} // namespace rfso
