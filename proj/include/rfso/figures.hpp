#ifndef RFSO_FIGURES_HPP
#define RFSO_FIGURES_HPP

#include <string>
#include <vector>

#include "rfso/runner.hpp"

namespace rfso {

// Built-in parameter presets reproducing the reference curve families
// (fig2..fig11). Each preset expands into one CurveJob per legend entry.
std::vector<std::string> figure_ids();
bool is_figure_id(const std::string& id);
std::vector<CurveJob> figure_jobs(const std::string& id);

} // namespace rfso

#endif
