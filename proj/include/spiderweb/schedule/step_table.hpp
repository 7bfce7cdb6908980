#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spiderweb/model.hpp"
#include "spiderweb/schedule/timing.hpp"

namespace spiderweb::schedule {

/// The four qubits of a unit cell: two data qubits and the X and Z ancillas.
enum class Qubit : std::uint8_t { D1, AX, AZ, D2 };

inline constexpr std::array<Qubit, 4> kQubits{Qubit::D1, Qubit::AX, Qubit::AZ, Qubit::D2};

std::string_view to_string(Qubit q);
std::optional<Qubit> parse_qubit(std::string_view text);
bool is_data(Qubit q);

struct CellOffset {
    int row = 0;
    int col = 0;
    bool operator==(const CellOffset&) const = default;
};

enum class RegionKind { qubit_operation, two_qubit_only };

/// An edge region between two vertices. `site` owns the region; `other` sits
/// `offset` cells away (zero offset: same cell).
struct RegionInfo {
    std::string_view name;
    RegionKind kind;
    Qubit site;
    Qubit other;
    CellOffset offset;
};

inline constexpr std::size_t kRegionCount = 8;

const std::array<RegionInfo, kRegionCount>& cell_regions();
std::optional<std::size_t> region_index(std::string_view name);
bool adjacent(Qubit q, std::size_t region);

inline constexpr int kRegionCapacity = 2;
inline constexpr int kDrivenRegionCapacity = 1;  // during single-qubit gates and readout
inline constexpr int kChannelCapacity = 1;

enum class PhaseKind { shuttle_out, single_qubit, sqrt_swap, readout, shuttle_back };

std::string_view to_string(PhaseKind kind);

struct Action {
    Qubit qubit = Qubit::D1;
    std::optional<Qubit> partner;        // sqrt_swap
    std::optional<std::size_t> region;   // shuttle_out
    std::string label;                   // single_qubit
};

struct Phase {
    PhaseKind kind = PhaseKind::shuttle_out;
    std::vector<Action> actions;
};

struct Step {
    int number = 0;
    std::string label;
    std::vector<Phase> phases;
};

struct StepTable {
    std::vector<Step> steps;
};

class StepTableParseError : public std::runtime_error {
public:
    StepTableParseError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

StepTable parse_step_table(std::string_view text);
std::string format_step_table(const StepTable& table);

std::string_view default_step_table_text();
StepTable default_step_table();

/// Phase counts. Round trips pair one out leg with one back leg.
struct TableCensus {
    std::int64_t out_legs = 0;
    std::int64_t back_legs = 0;
    std::int64_t single_qubit = 0;
    std::int64_t sqrt_swaps = 0;
    std::int64_t readouts = 0;
    std::int64_t steps = 0;

    OperationCensus operations() const;
    bool operator==(const TableCensus&) const = default;
};

TableCensus census(const StepTable& table);

/// Qubits that shuttle (either leg) during `step_number`.
std::vector<Qubit> shuttling_qubits(const StepTable& table, int step_number);

/// Checks the 22/14/8/1 phase totals, 16 steps, and that steps 3 and 13 move D1 only.
ValidationReport check_table(const StepTable& table, const OperationCensus& expected = reference_census());

}  // namespace spiderweb::schedule
