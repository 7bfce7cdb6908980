#pragma once

#include <cstdint>
#include <string_view>

#include "spiderweb/model.hpp"

namespace spiderweb {

/// Sample-and-hold parameters. All values in SI units.
struct ElectronicsParams {
    double coarse_resolution = 1e-3;        // V, barrier gates
    double fine_resolution = 1e-6;          // V, plungers and other barriers
    double temperature = 1.0;               // K
    double drift_rate = 0.1;                // V/s, hold-capacitor leakage drift
    double capacitance_density = 1.0;       // F/m^2 (1 pF/um^2)
    double demux_area = 45e-12;             // m^2 per 1-to-16 demultiplexer
    std::int64_t demux_count = 4;           // per unit cell
    double demux_energy_per_cycle = 0.35e-12;  // J per 16-output sweep, worst-case load

    bool operator==(const ElectronicsParams&) const = default;
};

ValidationReport validate_electronics(const ElectronicsParams& p);

enum class Resolution { coarse, fine };

/// Coarse holds are charge-limited (e / dV); fine holds are kT/C-noise limited (kT / dV^2).
double min_hold_capacitance(Resolution kind, const ElectronicsParams& p);

/// Minimum refresh rate for a hold whose stability requirement equals `resolution`.
double refresh_rate(const ElectronicsParams& p, double resolution);

/// Clock of the DC-bias demultiplexers: every biased gate of every cell in a
/// bias module is visited once per refresh period.
double demux_clock(const ArrayConfig& cfg, double refresh, const GateInventory& inventory = gate_inventory());

/// Total hold capacitance of one unit cell.
double hold_capacitance_per_cell(const ElectronicsParams& p, const GateInventory& inventory);

struct FootprintReport {
    double capacitor_area = 0;  // m^2
    double demux_area = 0;      // m^2
    double cell_area = 0;       // m^2, capacitor + demux
    double min_pitch = 0;       // m, sqrt(cell_area / 4)
    double hold_capacitance = 0;// F per unit cell
    bool pitch_feasible = false;// cfg pitch >= min_pitch
};

/// Shuttling gates carry no hold capacitor, so pulsed gates add no area.
FootprintReport footprint(const ArrayConfig& cfg, const ElectronicsParams& p,
                          const GateInventory& inventory = gate_inventory());

}  // namespace spiderweb
