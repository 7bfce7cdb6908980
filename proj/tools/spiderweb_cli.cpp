// spiderweb: design-space report, sweeps, gate/schedule verification and
// cycle simulation for the spiderweb spin-qubit array.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "spiderweb/config.hpp"
#include "spiderweb/qgates/gates.hpp"
#include "spiderweb/qgates/verify.hpp"
#include "spiderweb/report.hpp"
#include "spiderweb/schedule/simulator.hpp"
#include "spiderweb/schedule/step_table.hpp"
#include "spiderweb/sweep.hpp"
#include "spiderweb/units.hpp"
#include "spiderweb/verification.hpp"

namespace {

namespace sw = spiderweb;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitVerification = 2;

struct ConfigFailure {
    std::string message;
};

struct GlobalOptions {
    std::string config_path;
    std::vector<std::string> overrides;
    std::string format = "text";
    std::string pin_cp;
};

sw::Settings load(const GlobalOptions& g) {
    try {
        sw::Settings s = g.config_path.empty() ? sw::Settings{} : sw::load_settings(g.config_path);
        for (const auto& o : g.overrides) sw::apply_override(s, o);
        if (!g.pin_cp.empty()) s.pinned_capacitance = sw::units::parse_quantity(g.pin_cp, sw::units::capacitance);
        if (auto report = sw::validate_settings(s); !report.ok()) throw sw::ConfigError(report);
        return s;
    } catch (const std::exception& e) {
        throw ConfigFailure{e.what()};
    }
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ConfigFailure{fmt::format("cannot write '{}'", path)};
    out << text;
}

int cmd_report(const GlobalOptions& g) {
    const auto doc = sw::build_report(load(g));
    if (g.format == "json") std::cout << sw::render_json(doc);
    else if (g.format == "csv") std::cout << sw::render_csv(doc);
    else std::cout << sw::render_text(doc);
    return kExitOk;
}

struct SweepOptions {
    std::string parameter;
    std::string values;
    std::string range;
    std::string output;
    unsigned threads = 0;
};

int cmd_sweep(const GlobalOptions& g, const SweepOptions& o) {
    const auto base = load(g);
    sw::SweepSpec spec{o.parameter, {}};
    for (std::size_t begin = 0; begin <= o.values.size();) {
        const auto end = std::min(o.values.find(',', begin), o.values.size());
        if (end > begin) spec.values.push_back(o.values.substr(begin, end - begin));
        begin = end + 1;
    }
    if (!o.range.empty()) {
        try {
            const auto more = sw::expand_range(o.range);
            spec.values.insert(spec.values.end(), more.begin(), more.end());
        } catch (const std::exception& e) {
            throw ConfigFailure{e.what()};
        }
    }
    if (!sw::is_setting_key(spec.parameter)) throw ConfigFailure{fmt::format("unknown sweep parameter '{}'", spec.parameter)};
    const auto points = sw::run_sweep(base, spec, o.threads);
    write_output(g.format == "json" ? sw::sweep_to_json(spec, points) : sw::sweep_to_csv(spec, points), o.output);
    return kExitOk;
}

struct VerifyOptions {
    bool json = false;
    std::string corrupt;
    std::string dump;
    std::optional<double> angle;
};

int dump_unitary(const VerifyOptions& o) {
    sw::qgates::Unitary u = sw::qgates::Unitary::identity(1);
    try {
        if (o.dump == "x_plaquette" || o.dump == "z_plaquette") {
            const auto kind = o.dump[0] == 'x' ? sw::qgates::PlaquetteKind::x : sw::qgates::PlaquetteKind::z;
            u = sw::qgates::compose(sw::qgates::build_plaquette(kind));
        } else {
            u = sw::qgates::gate(o.dump, o.angle);
        }
    } catch (const std::exception& e) {
        throw ConfigFailure{e.what()};
    }
    nlohmann::ordered_json root;
    root["gate"] = o.dump;
    if (o.angle) root["angle"] = *o.angle;
    root["qubits"] = u.qubits();
    root["dim"] = u.dim();
    root["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : u.entries()) root["entries"].push_back({e.real(), e.imag()});
    std::cout << root.dump(2) << "\n";
    return kExitOk;
}

int cmd_verify(const GlobalOptions& g, const VerifyOptions& o) {
    if (!o.dump.empty()) return dump_unitary(o);
    if (!o.corrupt.empty() && o.corrupt != "sp-sign") throw ConfigFailure{fmt::format("unknown corruption '{}'", o.corrupt)};

    const auto s = load(g);
    sw::VerificationOptions opts;
    opts.corrupt_sp_sign = o.corrupt == "sp-sign";
    opts.array = s.array;
    opts.timing = s.timing;
    const auto summary = sw::run_verification(opts);

    if (o.json || g.format == "json") {
        nlohmann::ordered_json root;
        root["passed"] = summary.all_passed();
        root["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : summary.checks) {
            nlohmann::ordered_json item{{"group", c.group}, {"name", c.name}, {"passed", c.passed}};
            if (c.residual) item["residual"] = *c.residual;
            else item["residual"] = nullptr;
            item["detail"] = c.detail;
            root["checks"].push_back(std::move(item));
        }
        std::cout << root.dump(2) << "\n";
    } else {
        std::size_t width = 0;
        for (const auto& c : summary.checks) width = std::max(width, c.group.size() + c.name.size() + 1);
        for (const auto& c : summary.checks) {
            const std::string residual = c.residual ? fmt::format("{:.3e}", *c.residual) : "-";
            std::cout << fmt::format("{:<4}  {:<{}}  {:>10}  {}\n", c.passed ? "PASS" : "FAIL", c.group + "/" + c.name,
                                     width, residual, c.detail);
        }
        std::cout << (summary.all_passed() ? "all checks passed\n" : "verification FAILED\n");
    }
    return summary.all_passed() ? kExitOk : kExitVerification;
}

struct SimulateOptions {
    std::string table;
    std::string trace;
    bool init = false;
    std::string suspend;
    std::string export_table;
};

int cmd_simulate(const GlobalOptions& g, const SimulateOptions& o) {
    const auto s = load(g);
    sw::schedule::StepTable table;
    try {
        if (o.table.empty()) {
            table = sw::schedule::default_step_table();
        } else {
            std::ifstream in(o.table);
            if (!in) throw ConfigFailure{fmt::format("cannot open step table '{}'", o.table)};
            std::ostringstream text;
            text << in.rdbuf();
            table = sw::schedule::parse_step_table(text.str());
        }
    } catch (const sw::schedule::StepTableParseError& e) {
        throw ConfigFailure{fmt::format("{}: {}", o.table, e.what())};
    }
    if (!o.export_table.empty()) {
        write_output(sw::schedule::format_step_table(table), o.export_table);
        return kExitOk;
    }

    sw::schedule::EventTrace trace;
    if (o.init) {
        trace = sw::schedule::initialization_schedule(s.array, s.timing);
    } else {
        sw::schedule::SimulationOptions opts;
        if (!o.suspend.empty()) opts.suspend_reason = o.suspend;
        try {
            trace = sw::schedule::simulate_cycle(table, s.timing, opts);
        } catch (const sw::schedule::ScheduleConflict& e) {
            std::cerr << "spiderweb: " << e.what() << "\n";
            return kExitVerification;
        }
    }

    if (!o.trace.empty()) {
        std::ostringstream csv;
        sw::schedule::write_trace_csv(trace, csv);
        write_output(csv.str(), o.trace);
    }
    if (g.format == "csv") {
        sw::schedule::write_trace_csv(trace, std::cout);
        return kExitOk;
    }
    const auto& c = trace.counters;
    if (g.format == "json") {
        nlohmann::ordered_json root;
        root["makespan_ps"] = trace.makespan.count();
        root["events"] = trace.events.size();
        root["counters"] = {{"steps", c.steps},         {"out_legs", c.out_legs}, {"back_legs", c.back_legs},
                            {"single_qubit", c.single_qubit}, {"sqrt_swaps", c.sqrt_swaps}, {"readouts", c.readouts},
                            {"loads", c.loads}};
        root["annotations"] = trace.annotations;
        std::cout << root.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << fmt::format("makespan     {:.3f} us\n", sw::schedule::to_seconds(trace.makespan) * 1e6);
    std::cout << fmt::format("events       {}\n", trace.events.size());
    if (o.init) {
        std::cout << fmt::format("loads        {}\n", c.loads);
    } else {
        std::cout << fmt::format("steps        {}\n", c.steps);
        std::cout << fmt::format("round trips  {} ({} out, {} back)\n", std::min(c.out_legs, c.back_legs), c.out_legs,
                                 c.back_legs);
        std::cout << fmt::format("1q gates     {}\n", c.single_qubit);
        std::cout << fmt::format("sqrt-SWAPs   {}\n", c.sqrt_swaps);
        std::cout << fmt::format("readouts     {}\n", c.readouts);
    }
    for (const auto& a : trace.annotations) std::cout << "note: " << a << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spiderweb array design-space exploration and verification"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--config", g.config_path, "Configuration file (sections array, electronics, timing, signals, interconnect, inventory)");
    app.add_option("--set", g.overrides, "Override a setting, key=value (repeatable)")->allow_extra_args(false);
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--pin-cp", g.pin_cp, "Fix the parasitic capacitance, e.g. 700fF");

    auto* report = app.add_subcommand("report", "Full design report for one configuration");

    SweepOptions so;
    auto* sweep = app.add_subcommand("sweep", "Evaluate the report over a list or range of values");
    sweep->add_option("--param", so.parameter, "Setting to sweep, e.g. x or array.d")->required();
    sweep->add_option("--values", so.values, "Comma-separated values; empty gives an empty table")->expected(0, 1);
    sweep->add_option("--range", so.range, "start:stop:step, e.g. 10um:20um:1um");
    sweep->add_option("--output", so.output, "Output file (default stdout)");
    sweep->add_option("--threads", so.threads, "Worker threads (default: all cores)");

    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "Gate identities, plaquettes and the step-table checks");
    verify->add_flag("--json", vo.json, "Structured residual report");
    verify->add_option("--corrupt", vo.corrupt, "Test hook: corrupt a construction (sp-sign)");
    verify->add_option("--dump-unitary", vo.dump, "Print a gate or x_plaquette/z_plaquette as JSON");
    verify->add_option("--angle", vo.angle, "Rotation angle in radians for --dump-unitary");

    SimulateOptions mo;
    auto* simulate = app.add_subcommand("simulate", "Simulate one surface-code cycle of a unit cell");
    simulate->add_option("--table", mo.table, "Step table file (default: built-in table)");
    simulate->add_option("--trace", mo.trace, "Write the event trace as CSV");
    simulate->add_flag("--init", mo.init, "Simulate the initialization sequence instead");
    simulate->add_option("--suspend", mo.suspend, "Annotate the cycle as suspended, with a reason");
    simulate->add_option("--export-table", mo.export_table, "Write the step table in text form and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*report) return cmd_report(g);
        if (*sweep) return cmd_sweep(g, so);
        if (*verify) return cmd_verify(g, vo);
        if (*simulate) return cmd_simulate(g, mo);
    } catch (const ConfigFailure& e) {
        std::cerr << "spiderweb: " << e.message << "\n";
        return kExitConfig;
    } catch (const sw::ConfigError& e) {
        std::cerr << "spiderweb: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitOk;
}
