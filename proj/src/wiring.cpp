#include "spiderweb/wiring.hpp"

#include <bit>
#include <cmath>

#include <fmt/format.h>

namespace spiderweb {
namespace {

// Lines shared by every unit cell regardless of array size.
constexpr std::int64_t kShuttlePhases = 4;    // four-phase travelling wave
constexpr std::int64_t kDemuxAddressLines = 4;// 4-bit address of a 1-to-16 demux
constexpr std::int64_t kDemuxEnableLines = 4; // one enabler per demux in a cell
constexpr std::int64_t kCrossbarLinesPerCell = 4;
constexpr std::int64_t kCellReadoutLines = 3; // two SET plungers + shared ohmic

std::int64_t exact_log2(std::int64_t v, std::string_view name) {
    if (v <= 0 || !std::has_single_bit(static_cast<std::uint64_t>(v))) {
        throw WiringError(fmt::format("{} = {} is not a power of two; readout address lines would be fractional",
                                      name, v));
    }
    return std::countr_zero(static_cast<std::uint64_t>(v));
}

void require_valid(const ArrayConfig& cfg) {
    if (auto report = validate_config(cfg); !report.ok()) throw ConfigError(std::move(report));
}

}  // namespace

std::string_view to_string(Level level) {
    switch (level) {
        case Level::unit_cell: return "unit_cell";
        case Level::module: return "module";
        case Level::quantum_plane: return "quantum_plane";
    }
    return "?";
}

std::string_view to_string(LogicalScheme scheme) {
    return scheme == LogicalScheme::defect ? "defect" : "lattice_surgery";
}

LineCount lines_at(Level level, const ArrayConfig& cfg, const GateInventory& inventory) {
    require_valid(cfg);
    const std::int64_t log_nr = exact_log2(cfg.readout_module_edge, "N_r");
    const std::int64_t log_r = exact_log2(cfg.parallel_readouts, "r");
    const std::int64_t nb = cfg.bias_module_edge;
    const std::int64_t mb = cfg.bias_module_grid;
    const std::int64_t x = cfg.crossbars;

    LineCount lc;
    lc.shuttling = kShuttlePhases;
    lc.pulsed_mw = inventory.totals().pulsed;
    switch (level) {
        case Level::unit_cell:
            lc.dc_biasing = kDemuxAddressLines + kDemuxEnableLines + 1;
            lc.logical_ops = kCrossbarLinesPerCell * x;
            lc.readout = kCellReadoutLines;
            break;
        case Level::module:
            // Enablers scale with the module edge; address bus and dcDAC are shared.
            lc.dc_biasing = kDemuxEnableLines * nb + kDemuxAddressLines + 1;
            lc.logical_ops = kCrossbarLinesPerCell * nb * x;
            lc.readout = 2 * log_nr - log_r + 1;
            break;
        case Level::quantum_plane:
            // One dcDAC per bias module; enablers and address bus shared across modules.
            lc.dc_biasing = mb * mb + kDemuxEnableLines * nb + kDemuxAddressLines;
            lc.logical_ops = kCrossbarLinesPerCell * nb * mb * x;
            lc.readout = cfg.readout_module_grid * cfg.readout_module_grid + 2 * log_nr - log_r;
            break;
    }
    return lc;
}

std::int64_t total_lines_closed_form(Level level, const ArrayConfig& cfg) {
    require_valid(cfg);
    const std::int64_t log_nr = exact_log2(cfg.readout_module_edge, "N_r");
    const std::int64_t log_r = exact_log2(cfg.parallel_readouts, "r");
    const std::int64_t nb = cfg.bias_module_edge, mb = cfg.bias_module_grid, mr = cfg.readout_module_grid;
    const std::int64_t x = cfg.crossbars;
    switch (level) {
        case Level::unit_cell: return 74 + 4 * x;
        case Level::module: return 4 * nb * (1 + x) + 2 * log_nr - log_r + 68;
        case Level::quantum_plane: return mb * mb + mr * mr + 4 * nb * (1 + mb * x) + 2 * log_nr - log_r + 66;
    }
    return 0;
}

double rent_exponent(double terminals, double per_cell, double units) {
    if (units <= 1.0) throw WiringError("Rent's exponent is undefined for U <= 1 (log base 1)");
    if (per_cell <= 0.0) throw WiringError("connections per unit cell must be positive");
    if (terminals < per_cell) throw WiringError("plane terminals T must be at least the per-cell count c");
    return std::log(terminals / per_cell) / std::log(units);
}

double rent_exponent(const ArrayConfig& cfg) {
    const auto terminals = lines_at(Level::quantum_plane, cfg).total();
    const auto per_cell = lines_at(Level::unit_cell, cfg).total();
    return rent_exponent(static_cast<double>(terminals), static_cast<double>(per_cell),
                         static_cast<double>(unit_cell_count(cfg)));
}

std::int64_t logical_qubit_capacity(const ArrayConfig& cfg, LogicalScheme scheme) {
    require_valid(cfg);
    const std::int64_t u = unit_cell_count(cfg);
    const std::int64_t dc2 = cfg.code_distance * cfg.code_distance;
    return scheme == LogicalScheme::defect ? (2 * u) / (3 * dc2) : u / dc2;
}

std::int64_t max_crossbars_fab(const ArrayConfig& cfg) {
    if (cfg.interconnect_pitch.value <= 0) throw WiringError("interconnect pitch must be positive");
    // N_lines = 8 d N_layers / Delta_i, and each crossbar crosses the perimeter with 8 lines.
    return cfg.qubit_pitch.value * cfg.routing_layers / cfg.interconnect_pitch.value;
}

}  // namespace spiderweb
