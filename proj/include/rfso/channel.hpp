#ifndef RFSO_CHANNEL_HPP
#define RFSO_CHANNEL_HPP

#include <string>
#include <vector>

namespace rfso {

// One Rician hop: K factor and mean-square amplitude.
struct RicianHop {
    double k = 1.0;
    double omega = 1.0;
    void validate() const;
};

// Mean amplitude E[x] = 0.5 sqrt(pi*Omega/(K+1)) L_{1/2}(-K).
double rician_amp_mean(const RicianHop& hop);

// Gamma moment fit of the summed product amplitude sum_i x_i y_i of N
// element pairs: the amplitude is approximated by Gamma(a+1, b).
struct RfCascadeFit {
    double a = 0.0;        // shape offset; shape = a + 1
    double b = 1.0;        // scale
    double mean_amp = 0.0; // E[x y] of one element pair
    double var_sum = 0.0;  // variance of the N-element sum
    int elements = 1;
    double sum_mean() const { return elements * mean_amp; }
};

RfCascadeFit fit_rf_cascade(const RicianHop& hop1, const RicianHop& hop2,
                            int n_elements);

// Common atmospheric state shared by the optical sub-links.
struct Atmosphere {
    double omega = 0.5;  // LOS average power
    double b0 = 0.5;     // total scatter average power
    double rho = 0.5;    // fraction of scatter coupled to the LOS
    double phi_a = 1.5707963267948966; // LOS phase
    double phi_b = 0.0;                // coupled-scatter phase
};

double omega_prime(const Atmosphere& atm);

// One turbulence/pointing-impaired optical sub-link with its derived
// mixture constants.
struct MalagaPointing {
    // inputs
    double alpha = 2.296; // large-scale turbulence parameter
    int beta = 2;         // fading amount (finite mixture order)
    double xi = 1.1;      // pointing-error severity
    Atmosphere atm;
    int detection = 1;    // r: 1 heterodyne, 2 IM/DD

    // derived
    double c = 0.0;           // 2 b0 (1 - rho)
    double omega_p = 0.0;     // coherent power Omega'
    double big_a = 0.0;       // mixture normalization
    double big_b = 0.0;       // argument scale
    std::vector<double> a_m;  // mixture weights (before rescale)
    std::vector<double> b_m;  // rescaled mixture weights

    double xi2() const { return xi * xi; }
    // mean irradiance with the pointing factor, unit-normalized aperture
    double mean_irradiance() const;
};

MalagaPointing make_malaga_link(double alpha, int beta, double xi,
                                const Atmosphere& atm, int detection);

enum class Scenario { I, II, III };

std::string to_string(Scenario s);

// Average SNRs are linear here; the CLI converts from dB.
struct ScenarioConfig {
    Scenario scenario = Scenario::I;
    double gamma1 = 10.0;
    double gamma2 = 10.0;
    double gammae1 = 1.0;
    double gammae2 = 1.0;
    double rs = 0.1;       // target secrecy rate, bits/s/Hz
    int n1 = 2;            // reflecting elements on the RF hop
    double hop_split = 0.5; // gamma_h = gamma2^split (product model)
    double phi() const;    // 2^rs
    void validate() const;
};

// Physical description of every channel in the system.
struct SystemModel {
    RicianHop hop1;     // source -> RF surface
    RicianHop hop2;     // RF surface -> relay
    RicianHop eve_hop;  // RF surface -> RF eavesdropper
    double alpha_h = 2.296, alpha_g = 2.296, alpha_ge = 2.296;
    int beta_h = 2, beta_g = 2, beta_ge = 2;
    double xi_h = 1.1, xi_g = 1.1, xi_ge = 1.1;
    Atmosphere atm_h, atm_g, atm_ge; // default-shared weather state
    int detection = 1;
};

// Derived constants for one scenario evaluation.
struct ChannelSet {
    RfCascadeFit fit_main;
    RfCascadeFit fit_eve;
    MalagaPointing h, g, ge;
};

ChannelSet build_channels(const SystemModel& model, int n1);

double db_to_linear(double db);
double linear_to_db(double lin);

} // namespace rfso

#endif
