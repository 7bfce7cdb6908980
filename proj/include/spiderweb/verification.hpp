#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spiderweb/model.hpp"
#include "spiderweb/schedule/timing.hpp"

namespace spiderweb {

struct CheckResult {
    std::string group;  // gates, plaquette, schedule
    std::string name;
    bool passed = false;
    std::optional<double> residual;
    std::string detail;
};

struct VerificationOptions {
    bool corrupt_sp_sign = false;
    ArrayConfig array;
    schedule::TimingParams timing;
};

struct VerificationSummary {
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

/// Gate identities, gate unitarity, phase-gate entanglement, both plaquettes,
/// the default step-table census and a conflict-free simulated cycle whose
/// makespan equals the parallel-readout cycle time.
VerificationSummary run_verification(const VerificationOptions& options = {});

}  // namespace spiderweb
