#include "spiderweb/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "spiderweb/qgates/gates.hpp"
#include "spiderweb/qgates/verify.hpp"
#include "spiderweb/schedule/simulator.hpp"
#include "spiderweb/schedule/step_table.hpp"

namespace spiderweb {

bool VerificationSummary::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

VerificationSummary run_verification(const VerificationOptions& options) {
    using namespace qgates;
    VerificationSummary out;

    for (const auto& id : verify_identities({1e-12, options.corrupt_sp_sign}))
        out.checks.push_back({"gates", id.name, id.passed, id.residual, id.statement});

    double worst = 0.0;
    for (const auto& info : gate_catalog()) {
        const auto u = info.takes_angle ? gate(info.name, 0.7) : gate(info.name);
        worst = std::max(worst, u.unitarity_residual());
    }
    out.checks.push_back({"gates", "unitarity", worst < 1e-12, worst, "every catalogue gate satisfies U†U = I"});

    const double s = 0.5;
    const Unitary sp = gate(options.corrupt_sp_sign ? "sp_dag" : "sp");
    const double conc = concurrence(sp.apply({s, s, s, s}));
    out.checks.push_back({"gates", "sp_entangles", std::abs(conc - 1.0) < 1e-10, std::abs(conc - 1.0),
                          fmt::format("concurrence of Sp|++> = {:.12f}", conc)});

    for (auto kind : {PlaquetteKind::x, PlaquetteKind::z}) {
        const auto v = verify_plaquette(kind);
        out.checks.push_back({"plaquette", fmt::format("{}_plaquette", to_string(kind)), v.equivalent && v.depth <= 9,
                              v.residual,
                              fmt::format("depth {}, dressing {}{}", v.depth, to_string(v.order),
                                          v.fallback_used ? " (fallback)" : "")});
    }

    const auto table = schedule::default_step_table();
    const auto census_report = schedule::check_table(table);
    const auto c = schedule::census(table);
    out.checks.push_back({"schedule", "census", census_report.ok(), std::nullopt,
                          census_report.ok() ? fmt::format("{} round trips, {} 1q, {} sqrt-SWAP, {} readout, {} steps",
                                                           c.operations().shuttle_round_trips, c.single_qubit,
                                                           c.sqrt_swaps, c.readouts, c.steps)
                                             : census_report.to_string()});
    try {
        const auto trace = schedule::simulate_cycle(table, options.timing);
        const auto formula = schedule::cycle_time(options.timing, options.array, schedule::ReadoutMode::parallel).duration;
        out.checks.push_back({"schedule", "conflict_free", true, std::nullopt,
                              fmt::format("{} events", trace.events.size())});
        out.checks.push_back({"schedule", "makespan", trace.makespan == formula,
                              std::abs(static_cast<double>((trace.makespan - formula).count())),
                              fmt::format("simulated {} ps, formula {} ps", trace.makespan.count(), formula.count())});
    } catch (const schedule::ScheduleConflict& e) {
        out.checks.push_back({"schedule", "conflict_free", false, std::nullopt, e.what()});
    }
    return out;
}

}  // namespace spiderweb
