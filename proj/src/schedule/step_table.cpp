#include "spiderweb/schedule/step_table.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include <fmt/format.h>

namespace spiderweb::schedule {
namespace {

constexpr std::array<RegionInfo, kRegionCount> kRegions{{
    {"D1.E", RegionKind::qubit_operation, Qubit::D1, Qubit::AX, {0, 0}},
    {"D1.S", RegionKind::two_qubit_only, Qubit::D1, Qubit::AZ, {0, 0}},
    {"AX.E", RegionKind::two_qubit_only, Qubit::AX, Qubit::D1, {0, 1}},
    {"AX.S", RegionKind::two_qubit_only, Qubit::AX, Qubit::D2, {0, 0}},
    {"AZ.E", RegionKind::qubit_operation, Qubit::AZ, Qubit::D2, {0, 0}},
    {"AZ.S", RegionKind::two_qubit_only, Qubit::AZ, Qubit::D1, {1, 0}},
    {"D2.E", RegionKind::two_qubit_only, Qubit::D2, Qubit::AZ, {0, 1}},
    {"D2.S", RegionKind::two_qubit_only, Qubit::D2, Qubit::AX, {1, 0}},
}};

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == s.npos ? s.npos : pos - start));
        if (pos == s.npos) break;
        start = pos + 1;
    }
    return out;
}

std::vector<std::string_view> tokens(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

Qubit qubit_or_throw(std::string_view text, std::size_t line) {
    if (auto q = parse_qubit(text)) return *q;
    throw StepTableParseError(line, fmt::format("unknown qubit '{}'", text));
}

Phase parse_phase(std::string_view text, std::size_t line) {
    const auto words = tokens(text);
    if (words.empty()) throw StepTableParseError(line, "empty phase");
    Phase phase;
    const auto kind = words.front();
    const std::vector<std::string_view> args(words.begin() + 1, words.end());
    if (args.empty()) throw StepTableParseError(line, fmt::format("phase '{}' lists no qubits", kind));

    if (kind == "out") {
        phase.kind = PhaseKind::shuttle_out;
        for (auto arg : args) {
            const auto gt = arg.find('>');
            if (gt == arg.npos) throw StepTableParseError(line, fmt::format("expected Q>REGION, got '{}'", arg));
            const auto region = region_index(arg.substr(gt + 1));
            if (!region) throw StepTableParseError(line, fmt::format("unknown region '{}'", arg.substr(gt + 1)));
            phase.actions.push_back({qubit_or_throw(arg.substr(0, gt), line), std::nullopt, region, {}});
        }
    } else if (kind == "back" || kind == "readout") {
        phase.kind = kind == "back" ? PhaseKind::shuttle_back : PhaseKind::readout;
        for (auto arg : args) phase.actions.push_back({qubit_or_throw(arg, line), std::nullopt, std::nullopt, {}});
    } else if (kind == "sw") {
        phase.kind = PhaseKind::sqrt_swap;
        for (auto arg : args) {
            const auto plus = arg.find('+');
            if (plus == arg.npos) throw StepTableParseError(line, fmt::format("expected A+B, got '{}'", arg));
            phase.actions.push_back(
                {qubit_or_throw(arg.substr(0, plus), line), qubit_or_throw(arg.substr(plus + 1), line), std::nullopt, {}});
        }
    } else if (kind == "1q") {
        phase.kind = PhaseKind::single_qubit;
        std::string label;
        for (auto arg : args) {
            if (auto q = parse_qubit(arg)) {
                if (label.empty()) throw StepTableParseError(line, fmt::format("qubit '{}' has no gate label", arg));
                phase.actions.push_back({*q, std::nullopt, std::nullopt, label});
            } else {
                label = std::string(arg);
            }
        }
        if (phase.actions.empty()) throw StepTableParseError(line, "single-qubit phase lists no qubits");
    } else {
        throw StepTableParseError(line, fmt::format("unknown phase kind '{}'", kind));
    }
    return phase;
}

}  // namespace

std::string_view to_string(Qubit q) {
    switch (q) {
        case Qubit::D1: return "D1";
        case Qubit::AX: return "AX";
        case Qubit::AZ: return "AZ";
        case Qubit::D2: return "D2";
    }
    return "?";
}

std::optional<Qubit> parse_qubit(std::string_view text) {
    for (auto q : kQubits)
        if (to_string(q) == text) return q;
    return std::nullopt;
}

bool is_data(Qubit q) { return q == Qubit::D1 || q == Qubit::D2; }

const std::array<RegionInfo, kRegionCount>& cell_regions() { return kRegions; }

std::optional<std::size_t> region_index(std::string_view name) {
    for (std::size_t i = 0; i < kRegions.size(); ++i)
        if (kRegions[i].name == name) return i;
    return std::nullopt;
}

bool adjacent(Qubit q, std::size_t region) {
    return region < kRegions.size() && (kRegions[region].site == q || kRegions[region].other == q);
}

std::string_view to_string(PhaseKind kind) {
    switch (kind) {
        case PhaseKind::shuttle_out: return "out";
        case PhaseKind::single_qubit: return "1q";
        case PhaseKind::sqrt_swap: return "sw";
        case PhaseKind::readout: return "readout";
        case PhaseKind::shuttle_back: return "back";
    }
    return "?";
}

StepTableParseError::StepTableParseError(std::size_t line, const std::string& message)
    : std::runtime_error(fmt::format("step table line {}: {}", line, message)), line_(line) {}

StepTable parse_step_table(std::string_view text) {
    StepTable table;
    std::istringstream in{std::string(text)};
    std::size_t line_no = 0;
    for (std::string raw; std::getline(in, raw);) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != line.npos) line = line.substr(0, hash);
        if (tokens(line).empty()) continue;

        const auto colon = line.find(':');
        if (colon == line.npos) throw StepTableParseError(line_no, "expected 'step <n> <label> : <phases>'");
        const auto head = tokens(line.substr(0, colon));
        if (head.size() != 3 || head[0] != "step")
            throw StepTableParseError(line_no, "expected 'step <n> <label>' before ':'");

        Step step;
        auto [ptr, ec] = std::from_chars(head[1].data(), head[1].data() + head[1].size(), step.number);
        if (ec != std::errc{} || ptr != head[1].data() + head[1].size())
            throw StepTableParseError(line_no, fmt::format("step number '{}' is not an integer", head[1]));
        const int expected = static_cast<int>(table.steps.size()) + 1;
        if (step.number != expected)
            throw StepTableParseError(line_no, fmt::format("step {} out of sequence (expected {})", step.number, expected));
        step.label = std::string(head[2]);
        for (auto part : split(line.substr(colon + 1), ';')) step.phases.push_back(parse_phase(part, line_no));
        table.steps.push_back(std::move(step));
    }
    return table;
}

std::string format_step_table(const StepTable& table) {
    std::string out;
    for (const auto& step : table.steps) {
        out += fmt::format("step {} {} :", step.number, step.label);
        for (std::size_t p = 0; p < step.phases.size(); ++p) {
            const auto& phase = step.phases[p];
            out += p == 0 ? " " : " ; ";
            out += to_string(phase.kind);
            std::string_view current_label;
            for (const auto& a : phase.actions) {
                switch (phase.kind) {
                    case PhaseKind::shuttle_out:
                        out += fmt::format(" {}>{}", to_string(a.qubit), kRegions[*a.region].name);
                        break;
                    case PhaseKind::sqrt_swap:
                        out += fmt::format(" {}+{}", to_string(a.qubit), to_string(*a.partner));
                        break;
                    case PhaseKind::single_qubit:
                        if (a.label != current_label) {
                            out += fmt::format(" {}", a.label);
                            current_label = a.label;
                        }
                        out += fmt::format(" {}", to_string(a.qubit));
                        break;
                    default:
                        out += fmt::format(" {}", to_string(a.qubit));
                }
            }
        }
        out += '\n';
    }
    return out;
}

StepTable default_step_table() { return parse_step_table(default_step_table_text()); }

OperationCensus TableCensus::operations() const {
    return {std::min(out_legs, back_legs), single_qubit, sqrt_swaps, readouts, steps};
}

TableCensus census(const StepTable& table) {
    TableCensus c;
    c.steps = static_cast<std::int64_t>(table.steps.size());
    for (const auto& step : table.steps) {
        for (const auto& phase : step.phases) {
            switch (phase.kind) {
                case PhaseKind::shuttle_out: ++c.out_legs; break;
                case PhaseKind::shuttle_back: ++c.back_legs; break;
                case PhaseKind::single_qubit: ++c.single_qubit; break;
                case PhaseKind::sqrt_swap: ++c.sqrt_swaps; break;
                case PhaseKind::readout: ++c.readouts; break;
            }
        }
    }
    return c;
}

std::vector<Qubit> shuttling_qubits(const StepTable& table, int step_number) {
    std::set<Qubit> moved;
    for (const auto& step : table.steps) {
        if (step.number != step_number) continue;
        for (const auto& phase : step.phases) {
            if (phase.kind != PhaseKind::shuttle_out && phase.kind != PhaseKind::shuttle_back) continue;
            for (const auto& a : phase.actions) moved.insert(a.qubit);
        }
    }
    return {moved.begin(), moved.end()};
}

ValidationReport check_table(const StepTable& table, const OperationCensus& expected) {
    ValidationReport report;
    const TableCensus c = census(table);
    if (c.out_legs != c.back_legs)
        report.add("shuttles", fmt::format("{} out legs but {} back legs", c.out_legs, c.back_legs));
    auto expect = [&](std::string_view field, std::int64_t got, std::int64_t want) {
        if (got != want) report.add(std::string(field), fmt::format("expected {}, got {}", want, got));
    };
    const OperationCensus ops = c.operations();
    expect("shuttle round trips", ops.shuttle_round_trips, expected.shuttle_round_trips);
    expect("single-qubit gates", ops.single_qubit_gates, expected.single_qubit_gates);
    expect("sqrt-SWAPs", ops.sqrt_swaps, expected.sqrt_swaps);
    expect("readout phases", ops.readout_phases, expected.readout_phases);
    expect("steps", ops.steps, expected.steps);
    for (int s : {3, 13}) {
        const auto moved = shuttling_qubits(table, s);
        if (moved.size() != 1 || moved.front() != Qubit::D1)
            report.add(fmt::format("step {}", s), "must shuttle data qubit D1 only");
    }
    return report;
}

}  // namespace spiderweb::schedule
