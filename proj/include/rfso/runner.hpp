#ifndef RFSO_RUNNER_HPP
#define RFSO_RUNNER_HPP

#include <optional>
#include <string>
#include <vector>

#include "rfso/config.hpp"
#include "rfso/metrics.hpp"

namespace rfso {

struct RunOptions {
    std::string output_path = "rfso_out.csv";
    bool analytic_only = false;
    bool mc_only = false;
    bool with_experimental_asc = false;
    int row_workers = 0; // 0 = available parallelism (env override applied)
    bool curve_column = false;
};

struct RunRow {
    std::string curve;
    Scenario scenario = Scenario::I;
    std::string metric;
    double gamma1_db = 0, gamma2_db = 0, gammae1_db = 0, gammae2_db = 0;
    double rs = 0;
    std::optional<double> analytic;
    std::optional<double> mc;
    std::optional<double> mc_stderr;
    std::uint64_t trials = 0;
    std::string flags;
};

// One labelled curve: the base config with a few overrides applied.
struct CurveJob {
    std::string label;
    RunConfig config;
};

// Evaluates every (curve x grid-point x metric) combination; rows come back
// in deterministic order regardless of the worker pool.
std::vector<RunRow> evaluate_rows(const std::vector<CurveJob>& jobs,
                                  const RunOptions& opt);

void write_csv(const std::string& path, const std::vector<RunRow>& rows,
               bool curve_column);
std::string csv_text(const std::vector<RunRow>& rows, bool curve_column);

void write_manifest(const std::string& csv_path,
                    const std::vector<CurveJob>& jobs, const RunOptions& opt,
                    const std::vector<RunRow>& rows);

// Rebuilds the jobs recorded in a manifest so a run can be repeated
// bit-identically.
std::vector<CurveJob> jobs_from_manifest(const std::string& manifest_path,
                                         RunOptions& opt);

// Applies "key=value" overrides using the config-file key names
// (section.key, e.g. fso.gamma2_db=15).
void apply_override(RunConfig& cfg, const std::string& assignment);

int run_compare(const RunConfig& cfg, const RunOptions& opt);
int run_figure(const std::string& figure_id,
               const std::vector<std::string>& overrides,
               const RunOptions& opt);

} // namespace rfso

#endif
