#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spiderweb/electronics.hpp"
#include "spiderweb/model.hpp"
#include "spiderweb/power.hpp"
#include "spiderweb/schedule/timing.hpp"

namespace spiderweb {

/// Everything a report or sweep point needs. Defaults are the million-qubit example.
struct Settings {
    ArrayConfig array;
    ElectronicsParams electronics;
    schedule::TimingParams timing;
    schedule::ReadoutMode readout_mode = schedule::ReadoutMode::mixed;
    SignalParams signals;
    std::optional<double> pinned_capacitance;
    InterconnectGrid grid;
    GateInventory inventory = gate_inventory();
};

/// Every problem found across all sections.
ValidationReport validate_settings(const Settings& s);

class ConfigParseError : public std::runtime_error {
public:
    ConfigParseError(std::string source, std::size_t line, const std::string& message);
    const std::string& source() const { return source_; }
    std::size_t line() const { return line_; }

private:
    std::string source_;
    std::size_t line_;
};

struct SettingKey {
    std::string_view section;
    std::string_view name;
    std::string_view description;
};

/// All recognised keys, in section order.
const std::vector<SettingKey>& setting_keys();

/// Accepts "x" or "array.x".
bool is_setting_key(std::string_view key);

/// Accepts "x" or "array.x". Throws std::invalid_argument on an unknown key
/// or a value that does not parse.
void apply_setting(Settings& s, std::string_view key, std::string_view value);

/// Parses "key=value"; used by --set.
void apply_override(Settings& s, std::string_view assignment);

Settings parse_settings(std::string_view text, const std::string& source = "<string>");
Settings load_settings(const std::filesystem::path& path);

}  // namespace spiderweb
