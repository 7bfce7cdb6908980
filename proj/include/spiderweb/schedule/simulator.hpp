#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "spiderweb/model.hpp"
#include "spiderweb/schedule/step_table.hpp"
#include "spiderweb/schedule/timing.hpp"

namespace spiderweb::schedule {

struct Cell {
    std::int64_t row = 0;
    std::int64_t col = 0;
    auto operator<=>(const Cell&) const = default;
};

enum class EventKind { shuttle_out, single_qubit, sqrt_swap, readout, shuttle_back, load };

std::string_view to_string(EventKind kind);

struct Event {
    Picoseconds start{0};
    Picoseconds end{0};
    int step = 0;  // 0 for initialization events
    Cell cell;
    Qubit qubit = Qubit::D1;
    EventKind op = EventKind::shuttle_out;
    std::string resource;  // region, "<qubit>~<region>" channel, or "<region>/ro"
    std::string label;
};

struct TraceCounters {
    std::int64_t out_legs = 0;
    std::int64_t back_legs = 0;
    std::int64_t single_qubit = 0;
    std::int64_t sqrt_swaps = 0;
    std::int64_t readouts = 0;
    std::int64_t steps = 0;
    std::int64_t loads = 0;
};

struct EventTrace {
    std::vector<Event> events;
    Picoseconds makespan{0};
    TraceCounters counters;  // phases executed, as in the step-table census
    std::map<Qubit, std::pair<std::int64_t, std::int64_t>> legs_per_qubit;  // (out, back) events, all cells
    std::vector<std::string> annotations;
};

/// A step table that cannot execute, located by step, phase and resource.
class ScheduleConflict : public std::runtime_error {
public:
    ScheduleConflict(int step, int phase, std::string resource, const std::string& reason);
    int step() const { return step_; }
    int phase() const { return phase_; }
    const std::string& resource() const { return resource_; }

private:
    int step_;
    int phase_;
    std::string resource_;
};

struct SimulationOptions {
    /// Array of rows x cols unit cells. Periodic wraps the edges; otherwise
    /// boundary qubits sit out gates whose region or partner lies off-array.
    std::int64_t rows = 1;
    std::int64_t cols = 1;
    bool periodic = true;
    std::set<Cell> disabled_cells;
    std::set<Qubit> disabled_roles;
    /// Lattice-surgery interruption, recorded as an annotation only.
    std::optional<std::string> suspend_reason;
};

/// Executes one cycle. Throws ScheduleConflict when a phase breaks adjacency,
/// co-location, capacity, or leaves an electron away from its vertex.
EventTrace simulate_cycle(const StepTable& table, const TimingParams& t, const SimulationOptions& options = {});

/// Per operation region: data-qubit load and return, then the SC-ancilla,
/// then the RO-ancilla. Each load lasts t_r. Throws ConfigError for an invalid cfg.
EventTrace initialization_schedule(const ArrayConfig& cfg, const TimingParams& t);

/// time_ps,end_ps,step,row,col,qubit,op,resource,label
void write_trace_csv(const EventTrace& trace, std::ostream& out);

}  // namespace spiderweb::schedule
