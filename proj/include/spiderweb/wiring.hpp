#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>

#include "spiderweb/model.hpp"

namespace spiderweb {

enum class Level { unit_cell, module, quantum_plane };

std::string_view to_string(Level level);

/// Signal connections by category at one level of the hierarchy.
struct LineCount {
    std::int64_t dc_biasing = 0;
    std::int64_t shuttling = 0;
    std::int64_t pulsed_mw = 0;
    std::int64_t logical_ops = 0;
    std::int64_t readout = 0;

    std::int64_t total() const { return dc_biasing + shuttling + pulsed_mw + logical_ops + readout; }
    bool operator==(const LineCount&) const = default;
};

class WiringError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Line counts per category. Requires a valid config with power-of-two N_r
/// and r, since the readout address terms are log2 of those.
LineCount lines_at(Level level, const ArrayConfig& cfg, const GateInventory& inventory = gate_inventory());

/// Closed-form "Total" row of the line-scaling table, written independently
/// of the per-category breakdown so the two can be reconciled.
std::int64_t total_lines_closed_form(Level level, const ArrayConfig& cfg);

/// log(T/c)/log(U) with T at the plane boundary and c per unit cell.
double rent_exponent(const ArrayConfig& cfg);
double rent_exponent(double terminals, double per_cell, double units);

enum class LogicalScheme { defect, lattice_surgery };

std::string_view to_string(LogicalScheme scheme);

/// Floor of 2U/(3 d_c^2) (defect qubits) or U/d_c^2 (lattice surgery).
std::int64_t logical_qubit_capacity(const ArrayConfig& cfg, LogicalScheme scheme);

/// Crossbars that fit through the unit-cell perimeter: floor(d * N_layers / Delta_i).
std::int64_t max_crossbars_fab(const ArrayConfig& cfg);

}  // namespace spiderweb
