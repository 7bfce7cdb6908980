#pragma once

#include <optional>

#include "spiderweb/electronics.hpp"
#include "spiderweb/model.hpp"

namespace spiderweb {

enum class FringeModel { as_printed_magnitude, disabled };

/// Two-layer crossing metal grid routed across one unit cell. SI units.
struct InterconnectGrid {
    std::int64_t lines_per_layer = 150;  // N_l
    double line_length = 24e-6;          // L
    double line_width = 80e-9;           // W
    double line_thickness = 50e-9;       // H
    double lateral_gap = 80e-9;          // d1
    double layer_gap = 500e-9;           // d2
    double relative_permittivity = 3.9;
    FringeModel fringe = FringeModel::as_printed_magnitude;

    bool operator==(const InterconnectGrid&) const = default;
};

ValidationReport validate_grid(const InterconnectGrid& g);

struct ParasiticCapacitance {
    double lateral = 0;   // C1, between neighboring lines of one layer
    double crossing = 0;  // C2, one overlap between the two layers
    double total = 0;     // 2 N_l C1 + N_l^2 C2
};

ParasiticCapacitance parasitic_capacitance(const InterconnectGrid& g);

/// Pulse and transmission-line drive parameters. SI units.
struct SignalParams {
    double pulse_amplitude = 1.0;     // v_p
    double pulse_frequency = 1e6;     // f_p
    double line_amplitude = 1.0;      // v_t
    double line_frequency = 1e9;      // f_t
    double capacitance_per_length = 0.2e-9;  // F/m (0.2 fF/um)
    double sheet_resistance = 0.1;    // Ohm per square
    double line_width = 1e-6;
    std::optional<double> line_length;  // defaults to 2d

    bool operator==(const SignalParams&) const = default;
};

ValidationReport validate_signals(const SignalParams& s);

/// ½ C v² f.
double dynamic_power(double capacitance, double amplitude, double frequency);

/// Energy per demultiplexer sweep times refresh rate times demultiplexers per cell.
double demux_power(const ElectronicsParams& p, double refresh);

struct TransmissionLinePower {
    double resistance = 0;   // R_t
    double capacitance = 0;  // C_t
    double power = 0;        // P_t
    double lumped_constant = 0;  // k in P_t = k (v_t f_t)^2, W·s²/V²
};

/// 2 R_t (π v_t f_t C_t)². `length` is the segment length in meters.
TransmissionLinePower transmission_line_power(const SignalParams& s, double length);
TransmissionLinePower transmission_line_power(const SignalParams& s, const ArrayConfig& cfg);

struct PowerReport {
    double parasitic_capacitance = 0;  // C_p actually used
    bool capacitance_pinned = false;
    double refresh_rate = 0;
    double pulse_per_cell = 0;        // P_p
    double demux_per_cell = 0;        // P_d
    double line_per_cell = 0;         // P_t
    double line_constant = 0;         // k
    std::int64_t unit_cells = 0;
    double pulse_total = 0;           // U P_p
    double demux_total = 0;           // U P_d
    double line_total = 0;            // U P_t
    double total = 0;                 // P_T
};

/// Array power. The demultiplexers refresh at the fine-resolution rate.
/// `pinned_capacitance` replaces the grid model's C_p when set.
PowerReport total_power(const ArrayConfig& cfg, const InterconnectGrid& grid, const SignalParams& signals,
                        const ElectronicsParams& elec, std::optional<double> pinned_capacitance = std::nullopt);

}  // namespace spiderweb
