#include "spiderweb/report.hpp"

#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

#include "spiderweb/electronics.hpp"
#include "spiderweb/power.hpp"
#include "spiderweb/wiring.hpp"

namespace spiderweb {
namespace {

class Builder {
public:
    explicit Builder(ReportDocument& doc) : doc_(doc) {}

    void section(std::string name) { section_ = std::move(name); }
    void real(std::string key, double value, std::string unit, int precision = 3) {
        doc_.entries.push_back({section_, std::move(key), value, std::move(unit), precision, false});
    }
    void count(std::string key, std::int64_t value, std::string unit = "") {
        doc_.entries.push_back({section_, std::move(key), static_cast<double>(value), std::move(unit), 0, true});
    }

private:
    ReportDocument& doc_;
    std::string section_;
};

}  // namespace

const ReportEntry* ReportDocument::find(std::string_view key) const {
    for (const auto& e : entries)
        if (e.key == key) return &e;
    return nullptr;
}

double ReportDocument::value(std::string_view key) const {
    if (const auto* e = find(key)) return e->value;
    throw std::out_of_range(fmt::format("report has no entry '{}'", key));
}

ReportDocument build_report(const Settings& s) {
    if (auto report = validate_settings(s); !report.ok()) throw ConfigError(std::move(report));
    ReportDocument doc;
    Builder b(doc);
    const ArrayConfig& cfg = s.array;

    b.section("geometry");
    const auto g = derive_geometry(cfg);
    b.count("unit_cells", g.unit_cells);
    b.count("qubits", g.qubits);
    b.real("plane_edge", g.plane_edge_um, "um", 1);
    b.real("plane_area", g.plane_area_mm2, "mm^2", 2);
    b.real("plane_perimeter", g.plane_perimeter_um, "um", 1);
    b.count("gates_per_arm", g.gates_per_arm);

    b.section("wiring");
    try {
        for (auto level : {Level::unit_cell, Level::module, Level::quantum_plane}) {
            const auto lines = lines_at(level, cfg, s.inventory);
            const std::string prefix = fmt::format("lines.{}.", to_string(level));
            b.count(prefix + "dc_biasing", lines.dc_biasing);
            b.count(prefix + "shuttling", lines.shuttling);
            b.count(prefix + "pulsed_mw", lines.pulsed_mw);
            b.count(prefix + "logical_ops", lines.logical_ops);
            b.count(prefix + "readout", lines.readout);
            b.count(prefix + "total", lines.total());
        }
        const double c = static_cast<double>(lines_at(Level::unit_cell, cfg, s.inventory).total());
        const double t = static_cast<double>(lines_at(Level::quantum_plane, cfg, s.inventory).total());
        if (g.unit_cells > 1 && t >= c) {
            b.real("rent_exponent", rent_exponent(t, c, static_cast<double>(g.unit_cells)), "", 2);
        } else {
            doc.warnings.push_back("Rent's exponent is undefined for a single unit cell.");
        }
    } catch (const WiringError& e) {
        doc.warnings.push_back(fmt::format("Line counts skipped: {}", e.what()));
    }
    b.count("logical_qubits.defect", logical_qubit_capacity(cfg, LogicalScheme::defect));
    b.count("logical_qubits.lattice_surgery", logical_qubit_capacity(cfg, LogicalScheme::lattice_surgery));
    b.count("crossbars.configured", cfg.crossbars);
    b.count("crossbars.fabrication_limit", max_crossbars_fab(cfg));

    b.section("electronics");
    const auto& el = s.electronics;
    b.real("hold_capacitance.coarse", min_hold_capacitance(Resolution::coarse, el) * 1e15, "fF", 4);
    b.real("hold_capacitance.fine", min_hold_capacitance(Resolution::fine, el) * 1e12, "pF", 3);
    const double refresh = refresh_rate(el, el.fine_resolution);
    b.real("refresh_rate", refresh, "Hz", 1);
    b.real("demux_clock", demux_clock(cfg, refresh, s.inventory) * 1e-9, "GHz", 4);
    const auto fp = footprint(cfg, el, s.inventory);
    b.real("hold_capacitance.per_cell", fp.hold_capacitance * 1e12, "pF", 1);
    b.real("footprint.capacitors", fp.capacitor_area * 1e12, "um^2", 1);
    b.real("footprint.demultiplexers", fp.demux_area * 1e12, "um^2", 1);
    b.real("footprint.unit_cell", fp.cell_area * 1e12, "um^2", 1);
    b.real("min_pitch", fp.min_pitch * 1e6, "um", 2);
    b.count("pitch_feasible", fp.pitch_feasible ? 1 : 0);

    b.section("timing");
    using schedule::ReadoutMode;
    const auto selected = schedule::cycle_time(s.timing, cfg, s.readout_mode);
    b.real("cycle_time", schedule::to_seconds(selected.duration) * 1e6, "us", 2);
    for (auto mode : {ReadoutMode::parallel, ReadoutMode::mixed, ReadoutMode::sequential}) {
        const auto ct = schedule::cycle_time(s.timing, cfg, mode);
        b.real(fmt::format("cycle_time.{}", schedule::to_string(mode)), schedule::to_seconds(ct.duration) * 1e6, "us", 2);
    }
    b.real("coherence_ratio", selected.coherence_ratio, "", 2);
    doc.notes.push_back(fmt::format("Cycle time uses {} readout.", schedule::to_string(s.readout_mode)));

    b.section("power");
    const auto p = total_power(cfg, s.grid, s.signals, el, s.pinned_capacitance);
    const auto cp = parasitic_capacitance(s.grid);
    b.real("parasitic_capacitance.model", cp.total * 1e15, "fF", 1);
    b.real("parasitic_capacitance.used", p.parasitic_capacitance * 1e15, "fF", 1);
    b.real("pulse_per_cell", p.pulse_per_cell * 1e9, "nW", 2);
    b.real("demux_per_cell", p.demux_per_cell * 1e9, "nW", 2);
    b.real("line_per_cell", p.line_per_cell * 1e9, "nW", 3);
    b.real("line_constant", p.line_constant * 1e9 * 1e18, "nW ns^2/V^2", 3);
    b.real("pulse_total", p.pulse_total * 1e3, "mW", 2);
    b.real("demux_total", p.demux_total * 1e3, "mW", 2);
    b.real("line_total", p.line_total * 1e3, "mW", 3);
    b.real("total", p.total * 1e3, "mW", 1);
    if (p.capacitance_pinned) doc.notes.push_back("Parasitic capacitance pinned by configuration.");
    doc.notes.push_back("Chip self-heating from this dissipation is not modeled.");
    return doc;
}

std::string render_text(const ReportDocument& doc) {
    std::string out;
    std::string section;
    std::size_t width = 0;
    for (const auto& e : doc.entries) width = std::max(width, e.key.size());
    for (const auto& e : doc.entries) {
        if (e.section != section) {
            section = e.section;
            out += fmt::format("{}[{}]\n", out.empty() ? "" : "\n", section);
        }
        const std::string number = e.integral ? fmt::format("{}", static_cast<std::int64_t>(e.value))
                                              : fmt::format("{:.{}f}", e.value, e.precision);
        out += fmt::format("  {:<{}}  {}{}{}\n", e.key, width, number, e.unit.empty() ? "" : " ", e.unit);
    }
    if (!doc.notes.empty() || !doc.warnings.empty()) out += "\n";
    for (const auto& w : doc.warnings) out += fmt::format("warning: {}\n", w);
    for (const auto& n : doc.notes) out += fmt::format("note: {}\n", n);
    return out;
}

std::string render_json(const ReportDocument& doc) {
    nlohmann::ordered_json root;
    for (const auto& e : doc.entries) {
        nlohmann::ordered_json item;
        if (e.integral) item["value"] = static_cast<std::int64_t>(e.value);
        else item["value"] = e.value;
        item["unit"] = e.unit;
        root["values"][e.section][e.key] = std::move(item);
    }
    root["notes"] = doc.notes;
    root["warnings"] = doc.warnings;
    return root.dump(2) + "\n";
}

std::string render_csv(const ReportDocument& doc) {
    std::string out = "section,key,value,unit\n";
    for (const auto& e : doc.entries) {
        const std::string number =
            e.integral ? fmt::format("{}", static_cast<std::int64_t>(e.value)) : fmt::format("{:.17g}", e.value);
        out += fmt::format("{},{},{},{}\n", e.section, e.key, number, e.unit);
    }
    return out;
}

}  // namespace spiderweb
