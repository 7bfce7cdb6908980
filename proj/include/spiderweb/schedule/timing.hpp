#pragma once

#include <chrono>
#include <cstdint>
#include <string_view>

#include "spiderweb/model.hpp"

namespace spiderweb::schedule {

using Picoseconds = std::chrono::duration<std::int64_t, std::pico>;

struct TimingParams {
    Picoseconds shuttle{50'000};      // t_sh, vertex to operation region and back
    Picoseconds single_qubit{25'000}; // t_1q
    Picoseconds sqrt_swap{25'000};    // t_sw
    Picoseconds readout{1'000'000};   // t_r
    Picoseconds coherence{20'000'000};// T2*

    bool operator==(const TimingParams&) const = default;
};

ValidationReport validate_timing(const TimingParams& t);

enum class ReadoutMode { parallel, sequential, mixed };

std::string_view to_string(ReadoutMode mode);
ReadoutMode parse_readout_mode(std::string_view text);

/// Operation counts of one surface-code cycle.
struct OperationCensus {
    std::int64_t shuttle_round_trips = 0;
    std::int64_t single_qubit_gates = 0;
    std::int64_t sqrt_swaps = 0;
    std::int64_t readout_phases = 0;
    std::int64_t steps = 0;

    bool operator==(const OperationCensus&) const = default;
};

/// 22 round trips, 14 single-qubit gates, 8 sqrt-SWAPs, 1 readout, 16 steps.
OperationCensus reference_census();

struct CycleTime {
    Picoseconds duration{0};
    double coherence_ratio = 0;  // T2* / t_sc, infinite when t_sc is zero
};

/// Readout term: one t_r (parallel), N_r t_r (sequential) or q t_r (mixed).
CycleTime cycle_time(const TimingParams& t, const ArrayConfig& cfg, ReadoutMode mode,
                     const OperationCensus& census = reference_census());

double to_seconds(Picoseconds p);

}  // namespace spiderweb::schedule
