#include "spiderweb/power.hpp"

#include <cmath>

#include <fmt/format.h>

#include "spiderweb/constants.hpp"

namespace spiderweb {
namespace {

void require_positive(ValidationReport& report, std::string_view field, double v) {
    if (!(v > 0.0) || !std::isfinite(v)) report.add(std::string(field), fmt::format("must be positive (got {})", v));
}

void require_non_negative(ValidationReport& report, std::string_view field, double v) {
    if (!(v >= 0.0) || !std::isfinite(v)) report.add(std::string(field), fmt::format("must be non-negative (got {})", v));
}

}  // namespace

ValidationReport validate_grid(const InterconnectGrid& g) {
    ValidationReport report;
    if (g.lines_per_layer <= 0) report.add("N_l", fmt::format("must be positive (got {})", g.lines_per_layer));
    require_positive(report, "L", g.line_length);
    require_positive(report, "W", g.line_width);
    require_positive(report, "H", g.line_thickness);
    require_positive(report, "d1", g.lateral_gap);
    require_positive(report, "d2", g.layer_gap);
    require_positive(report, "eps_r", g.relative_permittivity);
    return report;
}

ParasiticCapacitance parasitic_capacitance(const InterconnectGrid& g) {
    const double eps = g.relative_permittivity * constants::vacuum_permittivity;
    const double w = g.line_width;
    const double h = g.line_thickness;

    // Free-space impedance times c times eps0 is 1, so the bracketed
    // edge term reduces to 1 / (pi ln(...)).
    double fringe = 0.0;
    if (g.fringe == FringeModel::as_printed_magnitude) {
        const double a1 = g.lateral_gap / (g.lateral_gap + 2.0 * w);
        fringe = 1.0 / (constants::pi * std::log(2.0 * std::sqrt(1.0 + a1) / std::sqrt(1.0 - a1)));
    }
    const double a2 = h / (h + 0.2 * g.layer_gap);

    ParasiticCapacitance c;
    c.lateral = eps * g.line_length * (h / g.lateral_gap + fringe);
    c.crossing = eps * w * (3.285 * w / g.layer_gap + 9.01 * a2 - 8.696 * a2 * a2);
    const auto n = static_cast<double>(g.lines_per_layer);
    c.total = 2.0 * n * c.lateral + n * n * c.crossing;
    return c;
}

ValidationReport validate_signals(const SignalParams& s) {
    ValidationReport report;
    require_non_negative(report, "v_p", s.pulse_amplitude);
    require_non_negative(report, "f_p", s.pulse_frequency);
    require_non_negative(report, "v_t", s.line_amplitude);
    require_non_negative(report, "f_t", s.line_frequency);
    require_non_negative(report, "c_per_length", s.capacitance_per_length);
    require_non_negative(report, "sheet_res", s.sheet_resistance);
    require_positive(report, "line_width", s.line_width);
    if (s.line_length) require_non_negative(report, "line_length", *s.line_length);
    return report;
}

double dynamic_power(double capacitance, double amplitude, double frequency) {
    return 0.5 * capacitance * amplitude * amplitude * frequency;
}

double demux_power(const ElectronicsParams& p, double refresh) {
    return p.demux_energy_per_cycle * refresh * static_cast<double>(p.demux_count);
}

TransmissionLinePower transmission_line_power(const SignalParams& s, double length) {
    TransmissionLinePower t;
    t.resistance = s.sheet_resistance * length / s.line_width;
    t.capacitance = s.capacitance_per_length * length;
    const double swing = constants::pi * t.capacitance;
    t.lumped_constant = 2.0 * t.resistance * swing * swing;
    const double vf = s.line_amplitude * s.line_frequency;
    t.power = t.lumped_constant * vf * vf;
    return t;
}

TransmissionLinePower transmission_line_power(const SignalParams& s, const ArrayConfig& cfg) {
    return transmission_line_power(s, s.line_length.value_or(2.0 * cfg.qubit_pitch.meters()));
}

PowerReport total_power(const ArrayConfig& cfg, const InterconnectGrid& grid, const SignalParams& signals,
                        const ElectronicsParams& elec, std::optional<double> pinned_capacitance) {
    ValidationReport issues = validate_config(cfg);
    issues.merge(validate_grid(grid));
    issues.merge(validate_signals(signals));
    issues.merge(validate_electronics(elec));
    if (pinned_capacitance) require_non_negative(issues, "pin_cp", *pinned_capacitance);
    if (!issues.ok()) throw ConfigError(std::move(issues));

    PowerReport r;
    r.capacitance_pinned = pinned_capacitance.has_value();
    r.parasitic_capacitance = pinned_capacitance.value_or(parasitic_capacitance(grid).total);
    r.refresh_rate = refresh_rate(elec, elec.fine_resolution);
    r.pulse_per_cell = dynamic_power(r.parasitic_capacitance, signals.pulse_amplitude, signals.pulse_frequency);
    r.demux_per_cell = demux_power(elec, r.refresh_rate);
    const auto line = transmission_line_power(signals, cfg);
    r.line_per_cell = line.power;
    r.line_constant = line.lumped_constant;

    r.unit_cells = unit_cell_count(cfg);
    const auto u = static_cast<double>(r.unit_cells);
    r.pulse_total = u * r.pulse_per_cell;
    r.demux_total = u * r.demux_per_cell;
    r.line_total = u * r.line_per_cell;
    r.total = u * (r.pulse_per_cell + r.demux_per_cell + r.line_per_cell);
    return r;
}

}  // namespace spiderweb
