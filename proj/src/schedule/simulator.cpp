#include "spiderweb/schedule/simulator.hpp"

#include <fmt/format.h>

namespace spiderweb::schedule {
namespace {

struct RegionInstance {
    Cell owner;
    std::size_t region = 0;
    auto operator<=>(const RegionInstance&) const = default;
};

struct QubitKey {
    Cell cell;
    Qubit qubit;
    auto operator<=>(const QubitKey&) const = default;
};

// Where a qubit is: at its vertex, in a region, or sitting out an excursion
// whose region does not exist.
struct Location {
    enum class Kind { home, region, skipped } kind = Kind::home;
    RegionInstance at;
};

std::string region_name(const RegionInstance& r) { return std::string(cell_regions()[r.region].name); }

class Array {
public:
    explicit Array(const SimulationOptions& o) : o_(o) {
        if (o.rows < 1 || o.cols < 1) throw std::invalid_argument("simulation needs at least one cell");
    }

    std::optional<Cell> wrap(std::int64_t row, std::int64_t col) const {
        if (o_.periodic) return Cell{((row % o_.rows) + o_.rows) % o_.rows, ((col % o_.cols) + o_.cols) % o_.cols};
        if (row < 0 || row >= o_.rows || col < 0 || col >= o_.cols) return std::nullopt;
        return Cell{row, col};
    }

    bool enabled(const QubitKey& k) const {
        return !o_.disabled_cells.contains(k.cell) && !o_.disabled_roles.contains(k.qubit);
    }

    // Region instance `region` as reached from qubit k, if it lies on the array.
    std::optional<RegionInstance> reach(const QubitKey& k, std::size_t region) const {
        const auto& info = cell_regions()[region];
        if (info.site == k.qubit) return RegionInstance{k.cell, region};
        auto owner = wrap(k.cell.row - info.offset.row, k.cell.col - info.offset.col);
        if (!owner) return std::nullopt;
        return RegionInstance{*owner, region};
    }

    std::vector<QubitKey> qubits(Qubit role) const {
        std::vector<QubitKey> out;
        for (std::int64_t r = 0; r < o_.rows; ++r)
            for (std::int64_t c = 0; c < o_.cols; ++c) out.push_back({{r, c}, role});
        return out;
    }

private:
    const SimulationOptions& o_;
};

Picoseconds phase_duration(PhaseKind kind, const TimingParams& t) {
    const Picoseconds out_leg{t.shuttle.count() / 2};
    switch (kind) {
        case PhaseKind::shuttle_out: return out_leg;
        case PhaseKind::shuttle_back: return t.shuttle - out_leg;
        case PhaseKind::single_qubit: return t.single_qubit;
        case PhaseKind::sqrt_swap: return t.sqrt_swap;
        case PhaseKind::readout: return t.readout;
    }
    return Picoseconds{0};
}

EventKind event_kind(PhaseKind kind) {
    switch (kind) {
        case PhaseKind::shuttle_out: return EventKind::shuttle_out;
        case PhaseKind::shuttle_back: return EventKind::shuttle_back;
        case PhaseKind::single_qubit: return EventKind::single_qubit;
        case PhaseKind::sqrt_swap: return EventKind::sqrt_swap;
        case PhaseKind::readout: return EventKind::readout;
    }
    return EventKind::shuttle_out;
}

}  // namespace

std::string_view to_string(EventKind kind) {
    switch (kind) {
        case EventKind::shuttle_out: return "shuttle_out";
        case EventKind::single_qubit: return "single_qubit";
        case EventKind::sqrt_swap: return "sqrt_swap";
        case EventKind::readout: return "readout";
        case EventKind::shuttle_back: return "shuttle_back";
        case EventKind::load: return "load";
    }
    return "?";
}

ScheduleConflict::ScheduleConflict(int step, int phase, std::string resource, const std::string& reason)
    : std::runtime_error(fmt::format("conflict at step {}, phase {}, {}: {}", step, phase, resource, reason)),
      step_(step), phase_(phase), resource_(std::move(resource)) {}

EventTrace simulate_cycle(const StepTable& table, const TimingParams& t, const SimulationOptions& options) {
    if (auto report = validate_timing(t); !report.ok()) throw ConfigError(std::move(report));
    const Array array(options);

    std::map<QubitKey, Location> where;
    for (auto role : kQubits)
        for (const auto& k : array.qubits(role)) where[k] = {};

    EventTrace trace;
    if (options.suspend_reason) trace.annotations.push_back("cycle suspended: " + *options.suspend_reason);
    Picoseconds now{0};

    for (const auto& step : table.steps) {
        ++trace.counters.steps;
        for (std::size_t p = 0; p < step.phases.size(); ++p) {
            const Phase& phase = step.phases[p];
            const int phase_no = static_cast<int>(p) + 1;
            const Picoseconds end = now + phase_duration(phase.kind, t);
            auto conflict = [&](const std::string& resource, const std::string& reason) {
                return ScheduleConflict(step.number, phase_no, resource, reason);
            };

            std::set<Qubit> listed;
            for (const auto& a : phase.actions) {
                if (!listed.insert(a.qubit).second)
                    throw conflict(std::string(to_string(a.qubit)), "qubit appears twice in one phase");
                if (a.partner && !listed.insert(*a.partner).second)
                    throw conflict(std::string(to_string(*a.partner)), "qubit appears twice in one phase");
            }

            std::map<std::string, int> channel_use;
            auto emit = [&](const QubitKey& k, std::string resource, std::string label = {}) {
                trace.events.push_back({now, end, step.number, k.cell, k.qubit, event_kind(phase.kind),
                                        std::move(resource), std::move(label)});
            };

            for (const auto& a : phase.actions) {
                for (const auto& k : array.qubits(a.qubit)) {
                    Location& loc = where[k];
                    const bool on = array.enabled(k);
                    switch (phase.kind) {
                        case PhaseKind::shuttle_out: {
                            const std::size_t region = *a.region;
                            const auto region_text = std::string(cell_regions()[region].name);
                            if (!adjacent(a.qubit, region))
                                throw conflict(region_text, fmt::format("{} has no channel to this region", to_string(a.qubit)));
                            if (loc.kind != Location::Kind::home)
                                throw conflict(region_text, fmt::format("{} is not at its vertex", to_string(a.qubit)));
                            const auto target = array.reach(k, region);
                            if (!on || !target) {
                                loc.kind = Location::Kind::skipped;
                                break;
                            }
                            loc = {Location::Kind::region, *target};
                            const auto channel = fmt::format("{}~{}", to_string(a.qubit), region_name(*target));
                            if (++channel_use[fmt::format("{},{}:{}", k.cell.row, k.cell.col, channel)] > kChannelCapacity)
                                throw conflict(channel, "channel already carries an electron");
                            emit(k, channel);
                            ++trace.legs_per_qubit[a.qubit].first;
                            break;
                        }
                        case PhaseKind::shuttle_back: {
                            if (loc.kind == Location::Kind::home)
                                throw conflict(std::string(to_string(a.qubit)), "qubit is already at its vertex");
                            if (loc.kind == Location::Kind::region) {
                                emit(k, fmt::format("{}~{}", to_string(a.qubit), region_name(loc.at)));
                                ++trace.legs_per_qubit[a.qubit].second;
                            }
                            loc = {};
                            break;
                        }
                        case PhaseKind::single_qubit:
                        case PhaseKind::readout: {
                            if (loc.kind == Location::Kind::home)
                                throw conflict(std::string(to_string(a.qubit)),
                                               fmt::format("{} must be in an operation region", to_string(phase.kind)));
                            if (loc.kind == Location::Kind::skipped) break;
                            if (cell_regions()[loc.at.region].kind != RegionKind::qubit_operation)
                                throw conflict(region_name(loc.at), "not a qubit-operation region");
                            emit(k, region_name(loc.at), a.label);
                            break;
                        }
                        case PhaseKind::sqrt_swap: {
                            if (loc.kind == Location::Kind::home)
                                throw conflict(std::string(to_string(a.qubit)), "sqrt-SWAP needs the qubit in a region");
                            if (loc.kind == Location::Kind::skipped) break;
                            // The partner is whichever instance of that role shares the region.
                            std::optional<QubitKey> partner;
                            bool partner_absent = false;
                            for (const auto& pk : array.qubits(*a.partner)) {
                                const Location& pl = where[pk];
                                if (pl.kind == Location::Kind::region && pl.at == loc.at) partner = pk;
                            }
                            if (!partner) {
                                // A disabled or off-array partner never arrived; anything else is a broken table.
                                const auto& info = cell_regions()[loc.at.region];
                                const Qubit other_role = info.site == a.qubit ? info.other : info.site;
                                const CellOffset off = info.offset;
                                const auto other_cell = info.site == a.qubit
                                                            ? array.wrap(loc.at.owner.row + off.row, loc.at.owner.col + off.col)
                                                            : std::optional<Cell>(loc.at.owner);
                                partner_absent = other_role == *a.partner &&
                                                 (!other_cell || !array.enabled({*other_cell, other_role}));
                                if (!partner_absent)
                                    throw conflict(region_name(loc.at), fmt::format("{} and {} are not in the same region",
                                                                                    to_string(a.qubit), to_string(*a.partner)));
                                break;
                            }
                            emit(k, region_name(loc.at), fmt::format("{}+{}", to_string(a.qubit), to_string(*a.partner)));
                            trace.events.push_back({now, end, step.number, partner->cell, partner->qubit,
                                                    EventKind::sqrt_swap, region_name(loc.at),
                                                    fmt::format("{}+{}", to_string(a.qubit), to_string(*a.partner))});
                            break;
                        }
                    }
                }
            }

            // Occupancy after the phase's moves; drive and sensor phases address a single dot.
            std::map<RegionInstance, int> occupancy;
            for (const auto& [k, loc] : where)
                if (loc.kind == Location::Kind::region) ++occupancy[loc.at];
            const bool driven = phase.kind == PhaseKind::single_qubit || phase.kind == PhaseKind::readout;
            const int capacity = driven ? kDrivenRegionCapacity : kRegionCapacity;
            for (const auto& [region, count] : occupancy) {
                if (count > capacity)
                    throw conflict(region_name(region), fmt::format("{} electrons exceed capacity {} during {}", count,
                                                                    capacity, to_string(phase.kind)));
            }

            switch (phase.kind) {
                case PhaseKind::shuttle_out: ++trace.counters.out_legs; break;
                case PhaseKind::shuttle_back: ++trace.counters.back_legs; break;
                case PhaseKind::single_qubit: ++trace.counters.single_qubit; break;
                case PhaseKind::sqrt_swap: ++trace.counters.sqrt_swaps; break;
                case PhaseKind::readout: ++trace.counters.readouts; break;
            }
            now = end;
        }
    }

    for (const auto& [k, loc] : where) {
        if (loc.kind != Location::Kind::home) {
            const int last = table.steps.empty() ? 0 : table.steps.back().number;
            throw ScheduleConflict(last, 0, std::string(to_string(k.qubit)), "electron does not return to its vertex");
        }
    }
    trace.makespan = now;
    return trace;
}

EventTrace initialization_schedule(const ArrayConfig& cfg, const TimingParams& t) {
    if (auto report = validate_config(cfg); !report.ok()) throw ConfigError(std::move(report));
    if (auto report = validate_timing(t); !report.ok()) throw ConfigError(std::move(report));

    // Each operation region hosts one data qubit and one SC-ancilla.
    struct Site {
        std::string_view region;
        Qubit data;
        Qubit ancilla;
    };
    constexpr Site kSites[] = {{"D1.E", Qubit::D1, Qubit::AX}, {"AZ.E", Qubit::D2, Qubit::AZ}};

    EventTrace trace;
    const Picoseconds back_leg = t.shuttle - Picoseconds{t.shuttle.count() / 2};
    Picoseconds now{0};
    auto phase = [&](Picoseconds duration, auto&& fill) {
        const Picoseconds end = now + duration;
        for (const auto& s : kSites) fill(s, now, end);
        now = end;
    };
    auto load = [&](Qubit q, std::string resource, Picoseconds start, Picoseconds end, std::string label = "load") {
        trace.events.push_back({start, end, 0, {}, q, EventKind::load, std::move(resource), std::move(label)});
        ++trace.counters.loads;
    };
    auto back = [&](Qubit q, std::string_view region, Picoseconds start, Picoseconds end) {
        trace.events.push_back({start, end, 0, {}, q, EventKind::shuttle_back, fmt::format("{}~{}", to_string(q), region), {}});
        ++trace.legs_per_qubit[q].second;
    };

    phase(t.readout, [&](const Site& s, auto a, auto b) { load(s.data, std::string(s.region), a, b); });
    phase(back_leg, [&](const Site& s, auto a, auto b) { back(s.data, s.region, a, b); });
    phase(t.readout, [&](const Site& s, auto a, auto b) { load(s.ancilla, std::string(s.region), a, b); });
    phase(back_leg, [&](const Site& s, auto a, auto b) { back(s.ancilla, s.region, a, b); });
    phase(t.readout, [&](const Site& s, auto a, auto b) { load(s.ancilla, fmt::format("{}/ro", s.region), a, b, "ro_ancilla"); });
    trace.counters.back_legs = 2;
    trace.makespan = now;
    trace.annotations.push_back(fmt::format("{} unit cells initialize in parallel", unit_cell_count(cfg)));
    return trace;
}

void write_trace_csv(const EventTrace& trace, std::ostream& out) {
    out << "time_ps,end_ps,step,row,col,qubit,op,resource,label\n";
    for (const auto& e : trace.events) {
        out << fmt::format("{},{},{},{},{},{},{},{},{}\n", e.start.count(), e.end.count(), e.step, e.cell.row, e.cell.col,
                           to_string(e.qubit), to_string(e.op), e.resource, e.label);
    }
}

}  // namespace spiderweb::schedule
