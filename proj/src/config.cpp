#include "spiderweb/config.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include <fmt/format.h>

#include "spiderweb/units.hpp"

namespace spiderweb {
namespace {

using Setter = std::function<void(Settings&, std::string_view)>;

struct Entry {
    SettingKey key;
    Setter set;
};

Setter length_nm(Nanometers ArrayConfig::*field) {
    return [field](Settings& s, std::string_view v) { s.array.*field = units::parse_length_nm(v); };
}

Setter count(std::int64_t ArrayConfig::*field) {
    return [field](Settings& s, std::string_view v) { s.array.*field = units::parse_integer(v); };
}

template <class Section>
Setter quantity(Section Settings::*section, double Section::*field, units::Dimension dim) {
    return [=](Settings& s, std::string_view v) { s.*section.*field = units::parse_quantity(v, dim); };
}

Setter duration(schedule::Picoseconds schedule::TimingParams::*field) {
    return [field](Settings& s, std::string_view v) { s.timing.*field = units::parse_duration_ps(v); };
}

const std::vector<Entry>& registry() {
    using units::Dimension;
    static const std::vector<Entry> entries = [] {
        std::vector<Entry> e;
        e.push_back({{"array", "d", "qubit pitch"}, length_nm(&ArrayConfig::qubit_pitch)});
        e.push_back({{"array", "gate_pitch", "shuttling-gate pitch"}, length_nm(&ArrayConfig::gate_pitch)});
        e.push_back({{"array", "N_b", "DC-bias module edge (unit cells)"}, count(&ArrayConfig::bias_module_edge)});
        e.push_back({{"array", "M_b", "DC-bias modules per plane edge"}, count(&ArrayConfig::bias_module_grid)});
        e.push_back({{"array", "N_r", "readout module edge (unit cells)"}, count(&ArrayConfig::readout_module_edge)});
        e.push_back({{"array", "M_r", "readout modules per plane edge"}, count(&ArrayConfig::readout_module_grid)});
        e.push_back({{"array", "q", "sequential readouts per line"}, count(&ArrayConfig::sequential_readouts)});
        e.push_back({{"array", "r", "parallel readouts per pulse"}, count(&ArrayConfig::parallel_readouts)});
        e.push_back({{"array", "x", "logical-operation crossbars"}, count(&ArrayConfig::crossbars)});
        e.push_back({{"array", "d_c", "surface-code distance"}, count(&ArrayConfig::code_distance)});
        e.push_back({{"array", "N_layers", "routable metal layers"}, count(&ArrayConfig::routing_layers)});
        e.push_back({{"array", "delta_i", "interconnect line pitch"}, length_nm(&ArrayConfig::interconnect_pitch)});

        const auto el = &Settings::electronics;
        e.push_back({{"electronics", "dV_coarse", "coarse bias resolution"},
                     quantity(el, &ElectronicsParams::coarse_resolution, units::voltage)});
        e.push_back({{"electronics", "dV_fine", "fine bias resolution"},
                     quantity(el, &ElectronicsParams::fine_resolution, units::voltage)});
        e.push_back({{"electronics", "T_op", "operating temperature"},
                     quantity(el, &ElectronicsParams::temperature, units::temperature)});
        e.push_back({{"electronics", "drift", "hold-voltage drift rate"},
                     quantity(el, &ElectronicsParams::drift_rate, units::voltage_rate)});
        e.push_back({{"electronics", "cap_density", "hold-capacitor density"},
                     quantity(el, &ElectronicsParams::capacitance_density, units::capacitance_per_area)});
        e.push_back({{"electronics", "demux_area", "area per demultiplexer"},
                     quantity(el, &ElectronicsParams::demux_area, units::area)});
        e.push_back({{"electronics", "demux_count", "demultiplexers per unit cell"},
                     [](Settings& s, std::string_view v) { s.electronics.demux_count = units::parse_integer(v); }});
        e.push_back({{"electronics", "demux_energy", "energy per demultiplexer sweep"},
                     quantity(el, &ElectronicsParams::demux_energy_per_cycle, units::energy)});

        using schedule::TimingParams;
        e.push_back({{"timing", "t_sh", "shuttle round trip"}, duration(&TimingParams::shuttle)});
        e.push_back({{"timing", "t_1q", "single-qubit gate"}, duration(&TimingParams::single_qubit)});
        e.push_back({{"timing", "t_sw", "sqrt-SWAP gate"}, duration(&TimingParams::sqrt_swap)});
        e.push_back({{"timing", "t_r", "readout"}, duration(&TimingParams::readout)});
        e.push_back({{"timing", "T2_star", "dephasing time"}, duration(&TimingParams::coherence)});
        e.push_back({{"timing", "readout_mode", "parallel, sequential or mixed"},
                     [](Settings& s, std::string_view v) {
                         s.readout_mode = schedule::parse_readout_mode(std::string(v));
                     }});

        const auto sig = &Settings::signals;
        e.push_back({{"signals", "v_p", "pulse amplitude"}, quantity(sig, &SignalParams::pulse_amplitude, units::voltage)});
        e.push_back({{"signals", "f_p", "pulse frequency"}, quantity(sig, &SignalParams::pulse_frequency, units::frequency)});
        e.push_back({{"signals", "v_t", "transmission-line amplitude"},
                     quantity(sig, &SignalParams::line_amplitude, units::voltage)});
        e.push_back({{"signals", "f_t", "transmission-line frequency"},
                     quantity(sig, &SignalParams::line_frequency, units::frequency)});
        e.push_back({{"signals", "c_per_length", "line capacitance per length"},
                     quantity(sig, &SignalParams::capacitance_per_length, units::capacitance_per_length)});
        e.push_back({{"signals", "sheet_res", "sheet resistance"},
                     quantity(sig, &SignalParams::sheet_resistance, units::resistance)});
        e.push_back({{"signals", "line_width", "transmission-line width"},
                     quantity(sig, &SignalParams::line_width, units::length)});
        e.push_back({{"signals", "line_length", "transmission-line length (default 2d)"},
                     [](Settings& s, std::string_view v) {
                         s.signals.line_length = units::parse_quantity(v, units::length);
                     }});
        e.push_back({{"signals", "pin_cp", "fixed parasitic capacitance"},
                     [](Settings& s, std::string_view v) {
                         s.pinned_capacitance = units::parse_quantity(v, units::capacitance);
                     }});

        const auto gr = &Settings::grid;
        e.push_back({{"interconnect", "N_l", "lines per layer"},
                     [](Settings& s, std::string_view v) { s.grid.lines_per_layer = units::parse_integer(v); }});
        e.push_back({{"interconnect", "L", "line length"}, quantity(gr, &InterconnectGrid::line_length, units::length)});
        e.push_back({{"interconnect", "W", "line width"}, quantity(gr, &InterconnectGrid::line_width, units::length)});
        e.push_back({{"interconnect", "H", "line thickness"}, quantity(gr, &InterconnectGrid::line_thickness, units::length)});
        e.push_back({{"interconnect", "d1", "gap between lines"}, quantity(gr, &InterconnectGrid::lateral_gap, units::length)});
        e.push_back({{"interconnect", "d2", "dielectric between layers"},
                     quantity(gr, &InterconnectGrid::layer_gap, units::length)});
        e.push_back({{"interconnect", "eps_r", "relative permittivity"},
                     quantity(gr, &InterconnectGrid::relative_permittivity, units::dimensionless)});
        e.push_back({{"interconnect", "fringe_model", "as_printed_magnitude or disabled"},
                     [](Settings& s, std::string_view v) {
                         if (v == "as_printed_magnitude") s.grid.fringe = FringeModel::as_printed_magnitude;
                         else if (v == "disabled") s.grid.fringe = FringeModel::disabled;
                         else throw std::invalid_argument(fmt::format("unknown fringe model '{}'", v));
                     }});
        return e;
    }();
    return entries;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

const Entry* find_entry(std::string_view section, std::string_view name) {
    for (const auto& e : registry())
        if (e.key.name == name && (section.empty() || e.key.section == section)) return &e;
    return nullptr;
}

// "regions, fine, coarse, pulsed"
RegionGates parse_inventory_row(std::string_view name, std::string_view value) {
    RegionGates row;
    row.region = std::string(name);
    std::int64_t* fields[] = {&row.regions_per_cell, &row.fine, &row.coarse, &row.pulsed};
    std::size_t i = 0;
    std::size_t start = 0;
    while (true) {
        const auto comma = value.find(',', start);
        if (i == std::size(fields)) throw std::invalid_argument("expected 4 comma-separated counts");
        *fields[i++] = units::parse_integer(value.substr(start, comma == value.npos ? value.npos : comma - start));
        if (comma == value.npos) break;
        start = comma + 1;
    }
    if (i != std::size(fields)) throw std::invalid_argument("expected 4 comma-separated counts");
    for (auto* f : fields)
        if (*f < 0) throw std::invalid_argument("gate counts must be non-negative");
    return row;
}

}  // namespace

ConfigParseError::ConfigParseError(std::string source, std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? fmt::format("{}: {}", source, message)
                                   : fmt::format("{}:{}: {}", source, line, message)),
      source_(std::move(source)),
      line_(line) {}

ValidationReport validate_settings(const Settings& s) {
    ValidationReport r = validate_config(s.array);
    r.merge(validate_electronics(s.electronics));
    r.merge(schedule::validate_timing(s.timing));
    r.merge(validate_signals(s.signals));
    r.merge(validate_grid(s.grid));
    if (s.pinned_capacitance && !(*s.pinned_capacitance >= 0.0)) r.add("pin_cp", "must be non-negative");
    if (s.inventory.rows().empty()) r.add("inventory", "must list at least one region");
    return r;
}

const std::vector<SettingKey>& setting_keys() {
    static const std::vector<SettingKey> keys = [] {
        std::vector<SettingKey> k;
        for (const auto& e : registry()) k.push_back(e.key);
        return k;
    }();
    return keys;
}

bool is_setting_key(std::string_view key) {
    std::string_view section;
    if (auto dot = key.find('.'); dot != key.npos) {
        section = key.substr(0, dot);
        key = key.substr(dot + 1);
    }
    return find_entry(section, key) != nullptr;
}

void apply_setting(Settings& s, std::string_view key, std::string_view value) {
    std::string_view section;
    if (auto dot = key.find('.'); dot != key.npos) {
        section = key.substr(0, dot);
        key = key.substr(dot + 1);
    }
    const Entry* e = find_entry(section, key);
    if (!e) {
        throw std::invalid_argument(section.empty() ? fmt::format("unknown setting '{}'", key)
                                                    : fmt::format("unknown setting '{}.{}'", section, key));
    }
    try {
        e->set(s, trim(value));
    } catch (const std::exception& ex) {
        throw std::invalid_argument(fmt::format("{}: {}", e->key.name, ex.what()));
    }
}

void apply_override(Settings& s, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == assignment.npos) throw std::invalid_argument(fmt::format("expected key=value, got '{}'", assignment));
    apply_setting(s, trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

Settings parse_settings(std::string_view text, const std::string& source) {
    Settings s;
    std::vector<RegionGates> inventory_rows;
    bool saw_inventory = false;
    std::string section;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    for (std::string raw; std::getline(in, raw);) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != line.npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigParseError(source, line_no, "unterminated section header");
            section = std::string(trim(line.substr(1, line.size() - 2)));
            static constexpr std::string_view known[] = {"array", "electronics", "timing", "signals", "interconnect",
                                                         "inventory"};
            if (std::find(std::begin(known), std::end(known), section) == std::end(known))
                throw ConfigParseError(source, line_no, fmt::format("unknown section [{}]", section));
            if (section == "inventory") saw_inventory = true;
            continue;
        }

        const auto eq = line.find('=');
        if (eq == line.npos) throw ConfigParseError(source, line_no, fmt::format("expected 'key = value', got '{}'", line));
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (section.empty()) throw ConfigParseError(source, line_no, fmt::format("'{}' appears before any section", key));

        try {
            if (section == "inventory") {
                inventory_rows.push_back(parse_inventory_row(key, value));
                continue;
            }
            const Entry* e = find_entry(section, key);
            if (!e) throw std::invalid_argument(fmt::format("unknown key '{}' in [{}]", key, section));
            e->set(s, value);
        } catch (const ConfigParseError&) {
            throw;
        } catch (const std::exception& ex) {
            throw ConfigParseError(source, line_no, ex.what());
        }
    }
    if (saw_inventory) s.inventory = GateInventory(std::move(inventory_rows));
    return s;
}

Settings load_settings(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigParseError(path.string(), 0, "cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_settings(buffer.str(), path.string());
}

}  // namespace spiderweb
