#include "rfso/mc.hpp"

#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "rfso/dist.hpp"
#include "rfso/errors.hpp"

namespace rfso {

namespace {

constexpr std::uint64_t kPhiloxM0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kPhiloxM1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi,
                    std::uint64_t& lo) {
    const unsigned __int128 p =
        static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b);
    hi = static_cast<std::uint64_t>(p >> 64);
    lo = static_cast<std::uint64_t>(p);
}

// Neumaier compensated accumulator; the block reduction below is performed
// in a fixed order so results do not depend on the worker count.
struct Accum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    double total() const { return sum + comp; }
};

} // namespace

void Philox4x64::fill_block() {
    std::array<std::uint64_t, 4> c = counter_;
    std::array<std::uint64_t, 2> k = key_;
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            k[0] += kWeyl0;
            k[1] += kWeyl1;
        }
        std::uint64_t hi0, lo0, hi1, lo1;
        mulhilo(kPhiloxM0, c[0], hi0, lo0);
        mulhilo(kPhiloxM1, c[2], hi1, lo1);
        c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
    }
    buffer_ = c;
    buffer_pos_ = 0;
    for (int i = 0; i < 4; ++i)
        if (++counter_[i] != 0) break; // 256-bit increment with carry
}

std::uint64_t Philox4x64::next_u64() {
    if (buffer_pos_ == 4) fill_block();
    return buffer_[buffer_pos_++];
}

double TrialRng::uniform() {
    // 53-bit mantissa, strictly inside (0, 1)
    return (double(gen_.next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double TrialRng::normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_normal_;
    }
    const double u1 = uniform(), u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 6.283185307179586476925286766559 * u2;
    cached_normal_ = r * std::sin(t);
    has_cached_ = true;
    return r * std::cos(t);
}

double TrialRng::gamma(double shape, double scale) {
    if (shape < 1.0) {
        const double boost = std::pow(uniform(), 1.0 / shape);
        return gamma(shape + 1.0, scale) * boost;
    }
    // Marsaglia-Tsang squeeze
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v * scale;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
            return d * v * scale;
    }
}

double sample_rician_amp(const RicianHop& hop, TrialRng& rng) {
    const double los = std::sqrt(hop.k * hop.omega / (hop.k + 1.0));
    const double s = std::sqrt(hop.omega / (2.0 * (hop.k + 1.0)));
    const double re = los + s * rng.normal();
    const double im = s * rng.normal();
    return std::hypot(re, im);
}

double sample_rf_cascade_snr(const RicianHop& hop1, const RicianHop& hop2,
                             int n, double gbar, TrialRng& rng) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
        acc += sample_rician_amp(hop1, rng) * sample_rician_amp(hop2, rng);
    return acc * acc * gbar;
}

double sample_malaga_irradiance(const MalagaPointing& link, TrialRng& rng,
                                bool with_pointing) {
    const double x = rng.gamma(link.alpha, 1.0 / link.alpha);
    const double g = rng.gamma(double(link.beta), link.omega_p / link.beta);
    const double s = std::sqrt(0.5 * link.c);
    const double re = std::sqrt(g) + s * rng.normal();
    const double im = s * rng.normal();
    double irr = x * (re * re + im * im);
    if (with_pointing) irr *= std::pow(rng.uniform(), 1.0 / link.xi2());
    return irr;
}

double sample_fso_link_snr(const MalagaPointing& link, double gbar,
                           TrialRng& rng) {
    const double irr = sample_malaga_irradiance(link, rng);
    return gbar * std::pow(irr / link.mean_irradiance(), double(link.detection));
}

double sample_fso_pair_snr(const MalagaPointing& link_a,
                           const MalagaPointing& link_b, double gbar_prod,
                           double split, TrialRng& rng) {
    const double ga =
        sample_fso_link_snr(link_a, std::pow(gbar_prod, split), rng);
    const double gb =
        sample_fso_link_snr(link_b, std::pow(gbar_prod, 1.0 - split), rng);
    return ga * gb;
}

double sample_fso_link_snr_invcdf(const MalagaPointing& link, double gbar,
                                  double u) {
    if (!(u > 0.0 && u < 1.0))
        throw DomainError("inverse-CDF sampler requires u in (0,1)");
    double lo = gbar * 1e-12, hi = gbar;
    while (cdf_snr_fso_single(link, gbar, hi) < u) {
        hi *= 4.0;
        if (hi > gbar * 1e12)
            throw ConvergenceError("inverse-CDF bracket failed", 0.0);
    }
    for (int i = 0; i < 64; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (cdf_snr_fso_single(link, gbar, mid) < u)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::string to_string(Metric m) {
    switch (m) {
        case Metric::asc: return "asc";
        case Metric::sop: return "sop";
        case Metric::spsc: return "spsc";
        case Metric::est: return "est";
        case Metric::ip: return "ip";
    }
    return "?";
}

EmpiricalEstimate run_trials(const TrialConfig& trial,
                             const std::function<double(TrialRng&)>& stat) {
    const std::uint64_t n = trial.trials;
    if (n == 0) throw ConfigError("trial count must be >= 1");
    constexpr std::uint64_t kBlock = 8192;
    const std::uint64_t nblocks = (n + kBlock - 1) / kBlock;

    struct BlockSums {
        double sum = 0.0, sumsq = 0.0;
    };
    std::vector<BlockSums> blocks(nblocks);

    auto work_block = [&](std::uint64_t bi) {
        const std::uint64_t first = bi * kBlock;
        const std::uint64_t last = std::min(n, first + kBlock);
        Accum s, s2;
        for (std::uint64_t t = first; t < last; ++t) {
            TrialRng rng(trial.master_seed, t);
            const double v = stat(rng);
            s.add(v);
            s2.add(v * v);
        }
        blocks[bi] = {s.total(), s2.total()};
    };

    int workers = trial.workers > 0
                      ? trial.workers
                      : int(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    workers = int(std::min<std::uint64_t>(workers, nblocks));
    if (workers == 1) {
        for (std::uint64_t bi = 0; bi < nblocks; ++bi) work_block(bi);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    const std::uint64_t bi = next.fetch_add(1);
                    if (bi >= nblocks) return;
                    work_block(bi);
                }
            });
        for (auto& th : pool) th.join();
    }

    Accum s, s2;
    for (const auto& blk : blocks) {
        s.add(blk.sum);
        s2.add(blk.sumsq);
    }
    EmpiricalEstimate est;
    est.trials = n;
    est.mean = s.total() / double(n);
    if (n > 1) {
        const double var =
            std::max(0.0, (s2.total() - double(n) * est.mean * est.mean) /
                              double(n - 1));
        est.std_error = std::sqrt(var / double(n));
    }
    return est;
}

namespace {

struct ScenarioSampler {
    const ScenarioConfig& cfg;
    const SystemModel& model;
    ChannelSet ch;

    ScenarioSampler(const ScenarioConfig& c, const SystemModel& m)
        : cfg(c), model(m), ch(build_channels(m, c.n1)) {}

    struct Draw {
        double gamma_r = 0.0, gamma_d = 0.0;
        double gamma_ep = 0.0, gamma_eq = 0.0;
    };

    Draw draw(TrialRng& rng, bool need_ep, bool need_eq) const {
        Draw d;
        d.gamma_r = sample_rf_cascade_snr(model.hop1, model.hop2, cfg.n1,
                                          cfg.gamma1, rng);
        d.gamma_d = sample_fso_pair_snr(ch.h, ch.g, cfg.gamma2,
                                        cfg.hop_split, rng);
        if (need_ep)
            d.gamma_ep = sample_rf_cascade_snr(model.hop1, model.eve_hop,
                                               cfg.n1, cfg.gammae1, rng);
        if (need_eq)
            d.gamma_eq = sample_fso_pair_snr(ch.h, ch.ge, cfg.gammae2,
                                             cfg.hop_split, rng);
        return d;
    }
};

std::function<double(TrialRng&)> sop_statistic(const ScenarioConfig& cfg,
                                               const SystemModel& model,
                                               double phi, bool exact2) {
    auto sampler = std::make_shared<ScenarioSampler>(cfg, model);
    switch (cfg.scenario) {
        case Scenario::I:
            return [sampler, phi](TrialRng& rng) {
                const auto d = sampler->draw(rng, true, false);
                return std::min(d.gamma_r, d.gamma_d) <= phi * d.gamma_ep
                           ? 1.0
                           : 0.0;
            };
        case Scenario::II:
            return [sampler, phi, exact2](TrialRng& rng) {
                const auto d = sampler->draw(rng, false, true);
                const double thr =
                    exact2 ? phi * d.gamma_eq + phi - 1.0 : phi * d.gamma_eq;
                return std::min(d.gamma_r, d.gamma_d) <= thr ? 1.0 : 0.0;
            };
        case Scenario::III:
            return [sampler, phi](TrialRng& rng) {
                const auto d = sampler->draw(rng, true, true);
                const bool safe = d.gamma_r > phi * d.gamma_ep &&
                                  d.gamma_d > phi * d.gamma_eq;
                return safe ? 0.0 : 1.0;
            };
    }
    throw ConfigError("unknown scenario");
}

} // namespace

EmpiricalEstimate simulate_metric(Metric metric, const ScenarioConfig& cfg,
                                  const SystemModel& model,
                                  const TrialConfig& trial) {
    cfg.validate();
    switch (metric) {
        case Metric::asc: {
            if (cfg.scenario != Scenario::I)
                throw ConfigError(
                    "asc is only defined for scenario I in this model");
            auto sampler = std::make_shared<ScenarioSampler>(cfg, model);
            return run_trials(trial, [sampler](TrialRng& rng) {
                const auto d = sampler->draw(rng, true, false);
                const double gap = std::log1p(std::min(d.gamma_r, d.gamma_d)) -
                                   std::log1p(d.gamma_ep);
                return gap > 0.0 ? gap : 0.0;
            });
        }
        case Metric::sop:
            return run_trials(trial,
                              sop_statistic(cfg, model, cfg.phi(), false));
        case Metric::spsc: {
            EmpiricalEstimate e =
                run_trials(trial, sop_statistic(cfg, model, 1.0, false));
            e.mean = 1.0 - e.mean;
            return e;
        }
        case Metric::est: {
            EmpiricalEstimate e = run_trials(
                trial, sop_statistic(cfg, model, cfg.phi(), false));
            e.mean = cfg.rs * (1.0 - e.mean);
            e.std_error *= cfg.rs;
            return e;
        }
        case Metric::ip: {
            auto sampler = std::make_shared<ScenarioSampler>(cfg, model);
            switch (cfg.scenario) {
                case Scenario::I:
                    return run_trials(trial, [sampler](TrialRng& rng) {
                        const auto d = sampler->draw(rng, true, false);
                        return d.gamma_r <= d.gamma_ep ? 1.0 : 0.0;
                    });
                case Scenario::II:
                    return run_trials(trial, [sampler](TrialRng& rng) {
                        const auto d = sampler->draw(rng, false, true);
                        return d.gamma_d <= d.gamma_eq ? 1.0 : 0.0;
                    });
                case Scenario::III:
                    // interception = complement of strictly positive secrecy
                    return run_trials(trial,
                                      sop_statistic(cfg, model, 1.0, false));
            }
            throw ConfigError("unknown scenario");
        }
    }
    throw ConfigError("unknown metric");
}

EmpiricalEstimate simulate_sop_exact_scenario2(const ScenarioConfig& cfg,
                                               const SystemModel& model,
                                               const TrialConfig& trial) {
    if (cfg.scenario != Scenario::II)
        throw ConfigError("exact SOP event applies to scenario II only");
    return run_trials(trial, sop_statistic(cfg, model, cfg.phi(), true));
}

} // namespace rfso
