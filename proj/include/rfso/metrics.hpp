#ifndef RFSO_METRICS_HPP
#define RFSO_METRICS_HPP

#include <optional>

#include "rfso/channel.hpp"
#include "rfso/dist.hpp"
#include "rfso/mc.hpp"

namespace rfso {

enum class Method { closed_form, quadrature, monte_carlo };

std::string to_string(Method m);

struct MetricValue {
    double value = 0.0;
    Method method = Method::closed_form;
    std::optional<double> std_error; // stochastic estimates only
    EvalFlags flags;
};

// ---- average secrecy capacity (scenario I), in nats ----

// Normative path: adaptive quadrature of
//   int_0^inf F_E(g) (1 - F_eq(g)) / (1+g) dg.
MetricValue asc_scenario1(const ScenarioConfig& cfg, const ChannelSet& ch);

// Experimental path: the analytically-continued Beta/Meijer term series.
// Individual terms diverge outside a narrow parameter strip; terms near a
// Beta pole are skipped and flagged, and the series stops early once term
// magnitudes grow. Kept for comparison, never used as the reference value.
MetricValue asc_scenario1_closed(const ScenarioConfig& cfg,
                                 const ChannelSet& ch, int max_terms = 200);

// ---- secrecy outage probability (lower bound) ----

MetricValue sop_scenario1(const ScenarioConfig& cfg, const ChannelSet& ch);
MetricValue sop_scenario2(const ScenarioConfig& cfg, const ChannelSet& ch);
MetricValue sop_scenario3(const ScenarioConfig& cfg, const ChannelSet& ch);
MetricValue sop(const ScenarioConfig& cfg, const ChannelSet& ch);

// quadrature fallbacks used for validation
MetricValue sop_scenario1_quad(const ScenarioConfig& cfg,
                               const ChannelSet& ch);
MetricValue sop_scenario2_quad(const ScenarioConfig& cfg,
                               const ChannelSet& ch);

// ---- derived metrics ----

// 1 - SOP at rs = 0, by construction (bit-exact identity)
MetricValue spsc(const ScenarioConfig& cfg, const ChannelSet& ch);
// rs * (1 - SOP)
MetricValue est(const ScenarioConfig& cfg, const ChannelSet& ch);

// ---- intercept probability ----

MetricValue ip_scenario1(const ScenarioConfig& cfg, const ChannelSet& ch);
MetricValue ip_scenario2(const ScenarioConfig& cfg, const ChannelSet& ch);
MetricValue ip_scenario3(const ScenarioConfig& cfg, const ChannelSet& ch);
MetricValue ip(const ScenarioConfig& cfg, const ChannelSet& ch);

MetricValue ip_scenario1_quad(const ScenarioConfig& cfg,
                              const ChannelSet& ch);
MetricValue ip_scenario2_quad(const ScenarioConfig& cfg,
                              const ChannelSet& ch);

// Normative analytic value of any metric for the configured scenario
// (quadrature for ASC, closed forms otherwise).
MetricValue eval_metric(Metric metric, const ScenarioConfig& cfg,
                        const ChannelSet& ch);

} // namespace rfso

#endif
