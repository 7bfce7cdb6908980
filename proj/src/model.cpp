#include "spiderweb/model.hpp"

#include <fmt/format.h>

namespace spiderweb {

std::string ValidationReport::to_string() const {
    std::string out;
    for (const auto& issue : issues) {
        if (!out.empty()) out += "; ";
        out += fmt::format("{}: {}", issue.field, issue.message);
    }
    return out;
}

ConfigError::ConfigError(ValidationReport report)
    : std::runtime_error("invalid configuration: " + report.to_string()), report_(std::move(report)) {}

ValidationReport validate_config(const ArrayConfig& cfg) {
    ValidationReport report;
    auto positive = [&](std::string_view field, std::int64_t v) {
        if (v <= 0) report.add(std::string(field), fmt::format("must be positive (got {})", v));
    };
    positive("d", cfg.qubit_pitch.value);
    positive("gate_pitch", cfg.gate_pitch.value);
    positive("N_b", cfg.bias_module_edge);
    positive("M_b", cfg.bias_module_grid);
    positive("N_r", cfg.readout_module_edge);
    positive("M_r", cfg.readout_module_grid);
    positive("q", cfg.sequential_readouts);
    positive("r", cfg.parallel_readouts);
    positive("d_c", cfg.code_distance);
    positive("N_layers", cfg.routing_layers);
    positive("delta_i", cfg.interconnect_pitch.value);
    if (cfg.crossbars < 0) report.add("x", fmt::format("must be non-negative (got {})", cfg.crossbars));

    const std::int64_t bias_edge = cfg.bias_module_edge * cfg.bias_module_grid;
    const std::int64_t readout_edge = cfg.readout_module_edge * cfg.readout_module_grid;
    if (bias_edge != readout_edge) {
        report.add("N_b*M_b", fmt::format("N_b·M_b ≠ N_r·M_r ({} vs {})", bias_edge, readout_edge));
    }
    const std::int64_t readout_cells = cfg.readout_module_edge * cfg.readout_module_edge;
    const std::int64_t split = cfg.sequential_readouts * cfg.parallel_readouts;
    if (readout_cells != split) {
        report.add("q*r", fmt::format("N_r² ≠ q·r ({} vs {})", readout_cells, split));
    }
    return report;
}

std::int64_t plane_edge_cells(const ArrayConfig& cfg) { return cfg.bias_module_edge * cfg.bias_module_grid; }

std::int64_t unit_cell_count(const ArrayConfig& cfg) {
    const auto edge = plane_edge_cells(cfg);
    return edge * edge;
}

GeometrySummary derive_geometry(const ArrayConfig& cfg) {
    if (auto report = validate_config(cfg); !report.ok()) throw ConfigError(std::move(report));

    GeometrySummary g;
    const std::int64_t edge_cells = plane_edge_cells(cfg);
    g.unit_cells = edge_cells * edge_cells;
    g.qubits = 4 * g.unit_cells;
    // Each unit cell spans 2d.
    const std::int64_t edge_nm = 2 * cfg.qubit_pitch.value * edge_cells;
    g.plane_edge_um = static_cast<double>(edge_nm) * 1e-3;
    g.plane_perimeter_um = 4.0 * g.plane_edge_um;
    const double edge_mm = static_cast<double>(edge_nm) * 1e-6;
    g.plane_area_mm2 = edge_mm * edge_mm;
    g.gates_per_arm = cfg.qubit_pitch.value / cfg.gate_pitch.value;
    return g;
}

GateInventory::GateInventory(std::vector<RegionGates> rows) : rows_(std::move(rows)) {}

GateTotals GateInventory::totals() const {
    GateTotals t;
    for (const auto& row : rows_) {
        t.fine += row.regions_per_cell * row.fine;
        t.coarse += row.regions_per_cell * row.coarse;
        t.pulsed += row.regions_per_cell * row.pulsed;
    }
    return t;
}

const RegionGates* GateInventory::find(std::string_view region) const {
    for (const auto& row : rows_)
        if (row.region == region) return &row;
    return nullptr;
}

GateInventory gate_inventory() {
    return GateInventory({
        {"qubit_idling", 4, 0, 4, 4},
        {"qubit_operation", 2, 7, 2, 6},
        {"two_qubit_only", 6, 3, 2, 5},
    });
}

}  // namespace spiderweb
