#ifndef RFSO_MC_HPP
#define RFSO_MC_HPP

#include <array>
#include <cstdint>
#include <functional>

#include "rfso/channel.hpp"

namespace rfso {

// Philox 4x64-10 counter-based generator. A block of four 64-bit words is
// produced at the current counter value; the counter then advances. Streams
// for different keys/counters are independent, which gives each Monte-Carlo
// trial its own reproducible substream regardless of scheduling.
class Philox4x64 {
  public:
    Philox4x64(std::array<std::uint64_t, 2> key,
               std::array<std::uint64_t, 4> counter)
        : key_(key), counter_(counter) {}

    std::uint64_t next_u64();

  private:
    void fill_block();
    std::array<std::uint64_t, 2> key_;
    std::array<std::uint64_t, 4> counter_;
    std::array<std::uint64_t, 4> buffer_{};
    int buffer_pos_ = 4;
};

// Distribution layer on top of one per-trial Philox stream.
class TrialRng {
  public:
    TrialRng(std::uint64_t master_seed, std::uint64_t trial_index,
             std::uint64_t stream = 0)
        : gen_({master_seed, stream}, {trial_index, 0, 0, 0x7266736f}) {}

    double uniform(); // open interval (0, 1)
    double normal();  // standard Gaussian (Box-Muller, cached pair)
    double gamma(double shape, double scale);

  private:
    Philox4x64 gen_;
    double cached_normal_ = 0.0;
    bool has_cached_ = false;
};

// ---- physical channel samplers ----

// |LOS + scatter| with |LOS|^2 = Omega K/(K+1) and circularly symmetric
// scatter of total power Omega/(K+1); E[amp^2] = Omega.
double sample_rician_amp(const RicianHop& hop, TrialRng& rng);

// (sum_i x_i y_i)^2 * gbar over n independent element pairs.
double sample_rf_cascade_snr(const RicianHop& hop1, const RicianHop& hop2,
                             int n, double gbar, TrialRng& rng);

// Large-scale Gamma times shadowed-Rician small scale times the pointing
// factor U^{1/xi^2} (unit-normalized aperture).
double sample_malaga_irradiance(const MalagaPointing& link, TrialRng& rng,
                                bool with_pointing = true);

// gbar * (I / E[I])^r
double sample_fso_link_snr(const MalagaPointing& link, double gbar,
                           TrialRng& rng);

// product of the two cascaded optical link SNRs; split-invariant
double sample_fso_pair_snr(const MalagaPointing& link_a,
                           const MalagaPointing& link_b, double gbar_prod,
                           double split, TrialRng& rng);

// secondary consistency tool: inverse-CDF draw by bisection on the
// analytic single-link CDF
double sample_fso_link_snr_invcdf(const MalagaPointing& link, double gbar,
                                  double u);

// ---- metric estimation ----

struct TrialConfig {
    std::uint64_t trials = 100000;
    std::uint64_t master_seed = 20240917;
    int workers = 0; // 0: use available parallelism
};

struct EmpiricalEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
};

enum class Metric { asc, sop, spsc, est, ip };

std::string to_string(Metric m);

// Empirical estimate of one secrecy metric. Deterministic for fixed
// (master_seed, trials) independent of the worker count: trials are split
// into fixed blocks reduced in index order with compensated summation.
// For scenario II the SOP event is the lower-bound one (matching the
// closed form); the exact event is available separately below.
EmpiricalEstimate simulate_metric(Metric metric, const ScenarioConfig& cfg,
                                  const SystemModel& model,
                                  const TrialConfig& trial);

EmpiricalEstimate simulate_sop_exact_scenario2(const ScenarioConfig& cfg,
                                               const SystemModel& model,
                                               const TrialConfig& trial);

// Mean/stderr of an arbitrary per-trial statistic (exposed for the
// moment-matching tests).
EmpiricalEstimate run_trials(const TrialConfig& trial,
                             const std::function<double(TrialRng&)>& stat);

} // namespace rfso

#endif
