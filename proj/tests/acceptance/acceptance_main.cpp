// One line per acceptance criterion; exit status is the number of failures.
#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "spiderweb/electronics.hpp"
#include "spiderweb/model.hpp"
#include "spiderweb/power.hpp"
#include "spiderweb/qgates/circuit.hpp"
#include "spiderweb/qgates/gates.hpp"
#include "spiderweb/qgates/verify.hpp"
#include "spiderweb/schedule/simulator.hpp"
#include "spiderweb/schedule/step_table.hpp"
#include "spiderweb/schedule/timing.hpp"
#include "spiderweb/wiring.hpp"

namespace {

using namespace spiderweb;
namespace sc = spiderweb::schedule;
namespace qg = spiderweb::qgates;

struct Outcome {
    bool passed = true;
    std::vector<std::string> notes;

    void expect(bool ok, std::string what) {
        if (!ok) passed = false;
        notes.push_back(fmt::format("{}{}", ok ? "" : "FAILED ", what));
    }
};

bool within(double v, double lo, double hi) { return v >= lo && v <= hi; }
bool rel(double v, double target, double tol) { return std::abs(v - target) <= tol * std::abs(target); }

Outcome line_counts() {
    Outcome o;
    const ArrayConfig cfg;
    const auto c = lines_at(Level::unit_cell, cfg).total();
    const auto t = lines_at(Level::quantum_plane, cfg).total();
    const double p = rent_exponent(cfg);
    o.expect(c == 74, fmt::format("c={}", c));
    o.expect(t == 16836, fmt::format("T={}", t));
    o.expect(within(p, 0.43, 0.44), fmt::format("p={:.4f}", p));
    return o;
}

Outcome rent_curve() {
    Outcome o;
    double previous = -1.0;
    bool monotone = true;
    double peak = 0.0, at200 = 0.0;
    for (std::int64_t x : {0, 1, 10, 100, 200, 1000}) {
        ArrayConfig cfg;
        cfg.crossbars = x;
        const double p = rent_exponent(cfg);
        monotone = monotone && p >= previous;
        previous = p;
        peak = std::max(peak, p);
        if (x == 200) at200 = p;
    }
    o.expect(monotone, "p(x) non-decreasing");
    o.expect(within(at200, 0.49, 0.50), fmt::format("p(200)={:.4f}", at200));
    o.expect(peak <= 0.50 + 1e-3, fmt::format("max p={:.4f}", peak));
    return o;
}

Outcome capacities() {
    Outcome o;
    const ArrayConfig cfg;
    const auto dq = logical_qubit_capacity(cfg, LogicalScheme::defect);
    const auto ls = logical_qubit_capacity(cfg, LogicalScheme::lattice_surgery);
    const auto fab = max_crossbars_fab(cfg);
    o.expect(dq == 682, fmt::format("x_dq={}", dq));
    o.expect(ls == 1024, fmt::format("x_ls={}", ls));
    o.expect(fab == 1950, fmt::format("x_fab={}", fab));
    return o;
}

Outcome electronics() {
    Outcome o;
    ElectronicsParams p;
    const double cc = min_hold_capacitance(Resolution::coarse, p);
    const double cf = min_hold_capacitance(Resolution::fine, p);
    o.expect(rel(cc, 0.160e-15, 0.01), fmt::format("C_c={:.4f} fF", cc * 1e15));
    o.expect(rel(cf, 13.8e-12, 0.01), fmt::format("C_f={:.3f} pF", cf * 1e12));
    const double fast = refresh_rate(p, p.fine_resolution);
    p.drift_rate = 2e-6;
    const double slow = refresh_rate(p, p.fine_resolution);
    o.expect(rel(fast, 1e5, 1e-12) && rel(slow, 2.0, 1e-12), fmt::format("f_c {:.0f} Hz..{:.0f} kHz", slow, fast / 1e3));
    const double fb = demux_clock(ArrayConfig{}, fast);
    o.expect(rel(fb, 32.0 * 2 * 32 * 32 * 1e5, 1e-12) && std::round(fb / 1e7) == 655,
             fmt::format("f_b={:.4f} GHz", fb / 1e9));
    return o;
}

Outcome footprint_check() {
    Outcome o;
    const ArrayConfig cfg;
    const auto fp = footprint(cfg, ElectronicsParams{});
    const double ac = fp.capacitor_area * 1e12, ad = fp.demux_area * 1e12, au = fp.cell_area * 1e12;
    const double dmin = fp.min_pitch * 1e6;
    o.expect(within(ac, 440, 460), fmt::format("A_c={:.1f} um^2", ac));
    o.expect(std::abs(ad - 180.0) < 1e-9, fmt::format("A_d={:.1f} um^2", ad));
    o.expect(within(au, 620, 640), fmt::format("A_u={:.1f} um^2", au));
    o.expect(within(dmin, 12.4, 13.0), fmt::format("d_min={:.2f} um", dmin));
    const double area = derive_geometry(cfg).plane_area_mm2;
    o.expect(rel(area, 177.2, 0.005), fmt::format("area={:.2f} mm^2", area));
    return o;
}

Outcome timing() {
    Outcome o;
    const ArrayConfig cfg;
    const sc::TimingParams t;
    const auto mixed = sc::cycle_time(t, cfg, sc::ReadoutMode::mixed).duration;
    o.expect(mixed == sc::Picoseconds{5'650'000}, fmt::format("t_sc(mixed)={} us", sc::to_seconds(mixed) * 1e6));
    const auto trace = sc::simulate_cycle(sc::default_step_table(), t);
    const auto parallel = sc::cycle_time(t, cfg, sc::ReadoutMode::parallel).duration;
    o.expect(trace.makespan == parallel, fmt::format("makespan={} ps vs formula {} ps", trace.makespan.count(),
                                                     parallel.count()));
    const auto c = sc::census(sc::default_step_table());
    o.expect(c.out_legs == 22 && c.back_legs == 22 && c.single_qubit == 14 && c.sqrt_swaps == 8 && c.steps == 16,
             fmt::format("census {}/{}/{}/{} steps", c.out_legs, c.single_qubit, c.sqrt_swaps, c.steps));
    return o;
}

Outcome power() {
    Outcome o;
    const auto r = total_power(ArrayConfig{}, InterconnectGrid{}, SignalParams{}, ElectronicsParams{}, 700e-15);
    o.expect(rel(r.pulse_total, 91.8e-3, 0.005), fmt::format("U*P_p={:.2f} mW", r.pulse_total * 1e3));
    o.expect(rel(r.demux_total, 36.7e-3, 0.005), fmt::format("U*P_d={:.2f} mW", r.demux_total * 1e3));
    o.expect(within(r.line_total, 0.28e-3, 0.37e-3), fmt::format("U*P_t={:.3f} mW", r.line_total * 1e3));
    const double u = static_cast<double>(unit_cell_count(ArrayConfig{}));
    o.expect(r.total == u * (r.pulse_per_cell + r.demux_per_cell + r.line_per_cell),
             fmt::format("P_T={:.1f} mW additive", r.total * 1e3));
    return o;
}

Outcome line_constant() {
    Outcome o;
    double lo = 1e9, hi = 0;
    for (int i = 0; i <= 8; ++i) {
        const double length = 24e-6 + i * 0.25e-6;
        const double k = transmission_line_power(SignalParams{}, length).lumped_constant * 1e27;
        lo = std::min(lo, k);
        hi = std::max(hi, k);
    }
    o.expect(lo >= 0.7 && hi <= 1.7, fmt::format("k in [{:.3f}, {:.3f}] nW ns^2/V^2", lo, hi));
    return o;
}

Outcome parasitic() {
    Outcome o;
    const double cp = parasitic_capacitance(InterconnectGrid{}).total;
    o.expect(within(cp, 230e-15, 1.4e-12), fmt::format("C_p={:.1f} fF", cp * 1e15));
    // Grid kept on the rising branch of the crossing polynomial (H <= 0.2 d2 with a 10% margin).
    int checks = 0, failures = 0;
    const double factors[] = {0.5, 0.75, 1.0, 1.5, 2.0};
    for (auto fringe : {FringeModel::as_printed_magnitude, FringeModel::disabled})
        for (double fw : factors)
            for (double fh : factors)
                for (double fd1 : factors)
                    for (double fd2 : factors) {
                        InterconnectGrid g;
                        g.fringe = fringe;
                        g.line_width *= fw;
                        g.line_thickness *= fh;
                        g.lateral_gap *= fd1;
                        g.layer_gap *= fd2;
                        if (1.1 * g.line_thickness > 0.2 * g.layer_gap) continue;
                        const double base = parasitic_capacitance(g).total;
                        auto bumped = [&](auto mutate) {
                            InterconnectGrid h = g;
                            mutate(h);
                            return parasitic_capacitance(h).total;
                        };
                        const bool ok = bumped([](auto& h) { h.lines_per_layer += 10; }) >= base &&
                                        bumped([](auto& h) { h.line_width *= 1.1; }) >= base &&
                                        bumped([](auto& h) { h.line_thickness *= 1.1; }) >= base &&
                                        bumped([](auto& h) { h.lateral_gap *= 1.1; }) <= base &&
                                        bumped([](auto& h) { h.layer_gap *= 1.1; }) <= base;
                        ++checks;
                        failures += !ok;
                    }
    o.expect(failures == 0, fmt::format("monotonicity {}/{} grid points", checks - failures, checks));
    return o;
}

Outcome gate_algebra() {
    Outcome o;
    double worst = 0;
    bool all = true;
    for (const auto& c : qg::verify_identities()) {
        all = all && c.passed;
        worst = std::max(worst, c.residual);
    }
    o.expect(all && worst <= 1e-12, fmt::format("identities max residual {:.1e}", worst));
    const std::vector<qg::Complex> plus_plus(4, 0.5);
    const double conc = qg::concurrence(qg::gate("sp").apply(plus_plus));
    o.expect(std::abs(conc - 1.0) <= 1e-10, fmt::format("concurrence={:.12f}", conc));
    for (auto kind : {qg::PlaquetteKind::x, qg::PlaquetteKind::z}) {
        const auto v = qg::verify_plaquette(kind, 1e-10);
        o.expect(v.equivalent, fmt::format("{} plaquette residual {:.1e}", qg::to_string(kind), v.residual));
    }
    qg::IdentityOptions corrupt;
    corrupt.corrupt_sp_sign = true;
    bool caught = false;
    for (const auto& c : qg::verify_identities(corrupt)) caught = caught || !c.passed;
    qg::Circuit dropped(5);
    bool skipped = false;
    const auto original = qg::build_plaquette(qg::PlaquetteKind::x);
    for (const auto& g : original.gates()) {
        if (g.name == "sp" && !skipped) {
            skipped = true;
            continue;
        }
        dropped.add(g);
    }
    const bool plaquette_caught = !qg::check_plaquette_circuit(dropped, qg::PlaquetteKind::x).equivalent;
    o.expect(caught && plaquette_caught, "negative controls rejected");
    return o;
}

Outcome schedule_sim() {
    Outcome o;
    const auto trace = sc::simulate_cycle(sc::default_step_table(), sc::TimingParams{});
    o.expect(true, fmt::format("default table conflict-free, {} events", trace.events.size()));
    bool conserved = trace.legs_per_qubit.size() == 4;
    for (const auto& [q, legs] : trace.legs_per_qubit) conserved = conserved && legs.first == legs.second;
    o.expect(conserved, "electron conservation");
    try {
        sc::simulate_cycle(sc::parse_step_table("step 1 bad : out D1>D1.E AX>D1.E ; 1q ry(pi/2) D1 ; back D1 AX\n"),
                           sc::TimingParams{});
        o.expect(false, "conflicting table accepted");
    } catch (const sc::ScheduleConflict& c) {
        o.expect(c.step() == 1 && c.phase() == 2 && c.resource() == "D1.E",
                 fmt::format("conflict located at step {} phase {} {}", c.step(), c.phase(), c.resource()));
    }
    std::mt19937_64 g{20240611};
    std::uniform_int_distribution<std::int64_t> ps(0, 5'000'000);
    int ordered = 0;
    for (int i = 0; i < 100; ++i) {
        const sc::TimingParams t{sc::Picoseconds{ps(g)}, sc::Picoseconds{ps(g)}, sc::Picoseconds{ps(g)},
                                 sc::Picoseconds{ps(g)}, sc::Picoseconds{ps(g)}};
        const ArrayConfig cfg;
        const auto par = sc::cycle_time(t, cfg, sc::ReadoutMode::parallel).duration;
        const auto mix = sc::cycle_time(t, cfg, sc::ReadoutMode::mixed).duration;
        const auto seq = sc::cycle_time(t, cfg, sc::ReadoutMode::sequential).duration;
        ordered += par <= mix && mix <= seq;
    }
    o.expect(ordered == 100, fmt::format("readout-mode ordering {}/100", ordered));
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"line counts", line_counts},
        {"Rent exponent vs crossbars", rent_curve},
        {"logical and fabrication capacities", capacities},
        {"hold capacitance and clocks", electronics},
        {"unit-cell footprint", footprint_check},
        {"cycle time", timing},
        {"power with pinned C_p", power},
        {"transmission-line constant", line_constant},
        {"parasitic capacitance", parasitic},
        {"gate algebra", gate_algebra},
        {"schedule simulation", schedule_sim},
    };
    int failures = 0, index = 0;
    for (const auto& c : criteria) {
        ++index;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.expect(false, fmt::format("exception: {}", e.what()));
        }
        failures += !o.passed;
        std::string detail;
        for (const auto& n : o.notes) detail += (detail.empty() ? "" : "; ") + n;
        fmt::print("{} {:>2} {}: {}\n", o.passed ? "PASS" : "FAIL", index, c.name, detail);
    }
    fmt::print("{}/{} criteria passed\n", index - failures, index);
    return failures;
}
