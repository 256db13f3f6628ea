#ifndef RFSO_CONFIG_HPP
#define RFSO_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rfso/channel.hpp"
#include "rfso/mc.hpp"

namespace rfso {

struct McSettings {
    std::uint64_t trials = 100000;
    std::uint64_t seed = 20240917;
    int workers = 0; // 0 = available parallelism
};

struct SweepSettings {
    // one of: gamma1_db, gamma2_db, gammae1_db, gammae2_db, rs
    std::string variable;
    std::vector<double> values;
};

struct RunConfig {
    ScenarioConfig scenario; // SNRs linear
    SystemModel model;
    McSettings mc;
    SweepSettings sweep;
    std::vector<Metric> metrics{Metric::sop};
};

// Declarative key-value config (TOML syntax subset: sections, scalar and
// array values, # comments). Errors carry the offending line and key.
RunConfig parse_config_text(const std::string& text,
                            const std::string& origin);
RunConfig parse_config_file(const std::string& path);

Metric metric_from_string(const std::string& name);
Scenario scenario_from_string(const std::string& name);

} // namespace rfso

#endif
