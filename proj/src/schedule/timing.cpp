#include "spiderweb/schedule/timing.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

namespace spiderweb::schedule {

ValidationReport validate_timing(const TimingParams& t) {
    ValidationReport report;
    auto non_negative = [&](std::string_view field, Picoseconds v) {
        if (v.count() < 0) report.add(std::string(field), fmt::format("must be non-negative (got {} ps)", v.count()));
    };
    non_negative("t_sh", t.shuttle);
    non_negative("t_1q", t.single_qubit);
    non_negative("t_sw", t.sqrt_swap);
    non_negative("t_r", t.readout);
    non_negative("T2_star", t.coherence);
    return report;
}

std::string_view to_string(ReadoutMode mode) {
    switch (mode) {
        case ReadoutMode::parallel: return "parallel";
        case ReadoutMode::sequential: return "sequential";
        case ReadoutMode::mixed: return "mixed";
    }
    return "?";
}

ReadoutMode parse_readout_mode(std::string_view text) {
    if (text == "parallel") return ReadoutMode::parallel;
    if (text == "sequential") return ReadoutMode::sequential;
    if (text == "mixed") return ReadoutMode::mixed;
    throw std::invalid_argument(fmt::format("unknown readout mode '{}' (expected parallel, sequential or mixed)", text));
}

OperationCensus reference_census() { return {22, 14, 8, 1, 16}; }

CycleTime cycle_time(const TimingParams& t, const ArrayConfig& cfg, ReadoutMode mode, const OperationCensus& census) {
    std::int64_t readouts = census.readout_phases;
    if (mode == ReadoutMode::sequential) readouts = cfg.readout_module_edge;
    if (mode == ReadoutMode::mixed) readouts = cfg.sequential_readouts;

    CycleTime c;
    c.duration = census.shuttle_round_trips * t.shuttle + census.single_qubit_gates * t.single_qubit +
                 census.sqrt_swaps * t.sqrt_swap + readouts * t.readout;
    c.coherence_ratio = c.duration.count() > 0
                            ? static_cast<double>(t.coherence.count()) / static_cast<double>(c.duration.count())
                            : std::numeric_limits<double>::infinity();
    return c;
}

double to_seconds(Picoseconds p) { return static_cast<double>(p.count()) * 1e-12; }

}  // namespace spiderweb::schedule
