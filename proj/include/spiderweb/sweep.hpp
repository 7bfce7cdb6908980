#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spiderweb/config.hpp"
#include "spiderweb/report.hpp"

namespace spiderweb {

struct SweepSpec {
    std::string parameter;            // any key accepted by apply_setting
    std::vector<std::string> values;  // raw values, unit suffixes allowed
};

/// "start:stop:step" with an optional shared unit suffix, e.g. "10um:20um:2um".
/// Inclusive of stop when it lands on the grid; a descending range is rejected.
std::vector<std::string> expand_range(std::string_view range);

struct SweepPoint {
    std::string value;
    bool feasible = false;
    std::vector<std::string> issues;
    ReportDocument report;  // empty when the point could not be evaluated
};

/// Evaluates every point concurrently and returns them in input order.
/// Throws std::invalid_argument for an unknown parameter.
std::vector<SweepPoint> run_sweep(const Settings& base, const SweepSpec& spec, unsigned threads = 0);

std::string sweep_to_csv(const SweepSpec& spec, const std::vector<SweepPoint>& points);
std::string sweep_to_json(const SweepSpec& spec, const std::vector<SweepPoint>& points);

}  // namespace spiderweb
