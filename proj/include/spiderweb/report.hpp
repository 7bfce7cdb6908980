#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spiderweb/config.hpp"

namespace spiderweb {

struct ReportEntry {
    std::string section;
    std::string key;
    double value = 0;
    std::string unit;
    int precision = 3;  // decimals in text output; JSON carries full precision
    bool integral = false;
};

struct ReportDocument {
    std::vector<ReportEntry> entries;
    std::vector<std::string> notes;
    std::vector<std::string> warnings;  // quantities that could not be evaluated

    const ReportEntry* find(std::string_view key) const;
    /// Throws std::out_of_range for a missing key.
    double value(std::string_view key) const;
};

/// Geometry, line counts at all levels, Rent's exponent, capacities,
/// electronics, timing and power for one settings set. Throws ConfigError for
/// invalid settings; wiring that needs power-of-two sizes is skipped with a note.
ReportDocument build_report(const Settings& settings);

std::string render_text(const ReportDocument& doc);
std::string render_json(const ReportDocument& doc);
/// section,key,value,unit
std::string render_csv(const ReportDocument& doc);

}  // namespace spiderweb
