#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spiderweb {

/// A length held in whole nanometers. Pitch arithmetic stays exact at
/// process scale; conversions to floating point happen only at the edges.
struct Nanometers {
    std::int64_t value = 0;

    constexpr double meters() const { return static_cast<double>(value) * 1e-9; }
    constexpr double micrometers() const { return static_cast<double>(value) * 1e-3; }

    auto operator<=>(const Nanometers&) const = default;
};

namespace literals {
constexpr Nanometers operator""_nm(unsigned long long v) { return {static_cast<std::int64_t>(v)}; }
constexpr Nanometers operator""_um(unsigned long long v) { return {static_cast<std::int64_t>(v) * 1000}; }
}  // namespace literals

/// Architectural free parameters of a spiderweb array. Defaults describe the
/// million-qubit worked example (2^18 unit cells).
struct ArrayConfig {
    Nanometers qubit_pitch{13'000};        // d
    Nanometers gate_pitch{50};             // shuttling-gate pitch
    std::int64_t bias_module_edge = 32;    // N_b, unit cells per DC-bias module edge
    std::int64_t bias_module_grid = 16;    // M_b, bias modules per plane edge
    std::int64_t readout_module_edge = 4;  // N_r
    std::int64_t readout_module_grid = 128;// M_r
    std::int64_t sequential_readouts = 4;  // q
    std::int64_t parallel_readouts = 4;    // r
    std::int64_t crossbars = 0;            // x
    std::int64_t code_distance = 16;       // d_c
    std::int64_t routing_layers = 12;      // N_layers
    Nanometers interconnect_pitch{80};     // Delta_i

    bool operator==(const ArrayConfig&) const = default;
};

struct ValidationIssue {
    std::string field;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool ok() const { return issues.empty(); }
    void add(std::string field, std::string message) { issues.push_back({std::move(field), std::move(message)}); }
    void merge(const ValidationReport& other) { issues.insert(issues.end(), other.issues.begin(), other.issues.end()); }
    std::string to_string() const;
};

/// Raised when an operation needs a consistent configuration and did not get one.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

/// Lists every violated invariant; never throws.
ValidationReport validate_config(const ArrayConfig& cfg);

struct GeometrySummary {
    std::int64_t unit_cells = 0;
    std::int64_t qubits = 0;
    double plane_edge_um = 0;
    double plane_area_mm2 = 0;
    double plane_perimeter_um = 0;
    std::int64_t gates_per_arm = 0;
};

/// Throws ConfigError if `cfg` is inconsistent.
GeometrySummary derive_geometry(const ArrayConfig& cfg);

/// Unit cells along one edge of the quantum plane (N_b * M_b).
std::int64_t plane_edge_cells(const ArrayConfig& cfg);
std::int64_t unit_cell_count(const ArrayConfig& cfg);

struct RegionGates {
    std::string region;
    std::int64_t regions_per_cell = 0;
    std::int64_t fine = 0;    // 1 uV resolution bias
    std::int64_t coarse = 0;  // 1 mV resolution bias
    std::int64_t pulsed = 0;
};

struct GateTotals {
    std::int64_t fine = 0;
    std::int64_t coarse = 0;
    std::int64_t pulsed = 0;

    std::int64_t dc_biased() const { return fine + coarse; }
    bool operator==(const GateTotals&) const = default;
};

/// Per-region gate counts of a unit cell. Totals are always recomputed from
/// the rows so an alternate unit-cell design stays self-consistent.
class GateInventory {
public:
    GateInventory() = default;
    explicit GateInventory(std::vector<RegionGates> rows);

    const std::vector<RegionGates>& rows() const { return rows_; }
    GateTotals totals() const;
    const RegionGates* find(std::string_view region) const;

private:
    std::vector<RegionGates> rows_;
};

/// The shipped unit cell: idling, qubit-operation and two-qubit-only regions.
GateInventory gate_inventory();

}  // namespace spiderweb
