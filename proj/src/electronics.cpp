#include "spiderweb/electronics.hpp"

#include <cmath>

#include <fmt/format.h>

#include "spiderweb/constants.hpp"

namespace spiderweb {

ValidationReport validate_electronics(const ElectronicsParams& p) {
    ValidationReport report;
    auto positive = [&](std::string_view field, double v) {
        if (!(v > 0.0) || !std::isfinite(v)) report.add(std::string(field), fmt::format("must be positive (got {})", v));
    };
    positive("dV_coarse", p.coarse_resolution);
    positive("dV_fine", p.fine_resolution);
    positive("T_op", p.temperature);
    positive("drift", p.drift_rate);
    positive("cap_density", p.capacitance_density);
    positive("demux_area", p.demux_area);
    positive("demux_energy", p.demux_energy_per_cycle);
    if (p.demux_count <= 0) report.add("demux_count", fmt::format("must be positive (got {})", p.demux_count));
    if (p.fine_resolution >= p.coarse_resolution)
        report.add("dV_fine", "fine resolution must be smaller than coarse resolution");
    return report;
}

double min_hold_capacitance(Resolution kind, const ElectronicsParams& p) {
    if (kind == Resolution::coarse) return constants::elementary_charge / p.coarse_resolution;
    return constants::boltzmann * p.temperature / (p.fine_resolution * p.fine_resolution);
}

double refresh_rate(const ElectronicsParams& p, double resolution) { return p.drift_rate / resolution; }

double demux_clock(const ArrayConfig& cfg, double refresh, const GateInventory& inventory) {
    const auto gates = static_cast<double>(inventory.totals().dc_biased());
    const auto nb = static_cast<double>(cfg.bias_module_edge);
    return gates * nb * nb * refresh;
}

double hold_capacitance_per_cell(const ElectronicsParams& p, const GateInventory& inventory) {
    const auto t = inventory.totals();
    return static_cast<double>(t.fine) * min_hold_capacitance(Resolution::fine, p) +
           static_cast<double>(t.coarse) * min_hold_capacitance(Resolution::coarse, p);
}

FootprintReport footprint(const ArrayConfig& cfg, const ElectronicsParams& p, const GateInventory& inventory) {
    FootprintReport r;
    r.hold_capacitance = hold_capacitance_per_cell(p, inventory);
    r.capacitor_area = r.hold_capacitance / p.capacitance_density;
    r.demux_area = static_cast<double>(p.demux_count) * p.demux_area;
    r.cell_area = r.capacitor_area + r.demux_area;
    // A unit cell offers four d x d open squares between its qubits.
    r.min_pitch = std::sqrt(r.cell_area / 4.0);
    r.pitch_feasible = cfg.qubit_pitch.meters() >= r.min_pitch;
    return r;
}

}  // namespace spiderweb
