#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "spiderweb/power.hpp"

namespace spiderweb {
namespace {

constexpr double kEps0 = 8.8541878128e-12;

TEST(ParasiticCapacitance, CrossingTermByHand) {
    const InterconnectGrid g;
    const double eps = 3.9 * kEps0;
    const double w = 80e-9, d2 = 500e-9, a2 = 1.0 / 3.0;
    const double oracle = eps * w * (3.285 * w / d2 + 9.01 * a2 - 8.696 * a2 * a2);
    const auto c = parasitic_capacitance(g);
    EXPECT_NEAR(c.crossing, oracle, 1e-30);
    EXPECT_NEAR(c.crossing * 1e18, 7.08, 0.01);
}

TEST(ParasiticCapacitance, LateralTermByHand) {
    const double eps = 3.9 * kEps0;
    // alpha1 = 80/(80+160) = 1/3, so the log argument is 2 sqrt(4/3)/sqrt(2/3) = 2 sqrt 2.
    const double fringe = 1.0 / (std::numbers::pi * std::log(2.0 * std::sqrt(2.0)));
    const double oracle = eps * 24e-6 * (50.0 / 80.0 + fringe);
    EXPECT_NEAR(parasitic_capacitance(InterconnectGrid{}).lateral, oracle, 1e-28);
}

TEST(ParasiticCapacitance, TotalCombinesTerms) {
    const auto c = parasitic_capacitance(InterconnectGrid{});
    EXPECT_DOUBLE_EQ(c.total, 2 * 150 * c.lateral + 150.0 * 150.0 * c.crossing);
    EXPECT_GE(c.total, 230e-15);
    EXPECT_LE(c.total, 1.4e-12);
}

TEST(ParasiticCapacitance, DisabledFringeStaysInWindow) {
    InterconnectGrid g;
    g.fringe = FringeModel::disabled;
    const auto c = parasitic_capacitance(g);
    EXPECT_LT(c.total, parasitic_capacitance(InterconnectGrid{}).total);
    EXPECT_GE(c.total, 230e-15);
}

TEST(ParasiticCapacitance, WiderLinesRaiseCrossing) {
    InterconnectGrid g;
    const double before = parasitic_capacitance(g).crossing;
    g.line_width *= 2;
    EXPECT_GT(parasitic_capacitance(g).crossing, before);
}

TEST(ParasiticCapacitance, MonotoneOverParameterGrid) {
    const double factors[] = {0.5, 0.75, 1.0, 1.5, 2.0};
    for (auto fringe : {FringeModel::as_printed_magnitude, FringeModel::disabled}) {
        for (double fw : factors) {
            for (double fh : factors) {
                for (double fd1 : factors) {
                    for (double fd2 : factors) {
                        InterconnectGrid g;
                        g.fringe = fringe;
                        g.line_width *= fw;
                        g.line_thickness *= fh;
                        g.lateral_gap *= fd1;
                        g.layer_gap *= fd2;
                        // Rising branch of the crossing polynomial, with room for a 10% step in H.
                        if (1.1 * g.line_thickness > 0.2 * g.layer_gap) continue;
                        const double base = parasitic_capacitance(g).total;
                        auto up = [&](auto mutate) {
                            InterconnectGrid h = g;
                            mutate(h);
                            return parasitic_capacitance(h).total;
                        };
                        EXPECT_GE(up([](auto& h) { h.lines_per_layer += 10; }), base);
                        EXPECT_GE(up([](auto& h) { h.line_width *= 1.1; }), base);
                        EXPECT_GE(up([](auto& h) { h.line_thickness *= 1.1; }), base);
                        EXPECT_LE(up([](auto& h) { h.lateral_gap *= 1.1; }), base);
                        EXPECT_LE(up([](auto& h) { h.layer_gap *= 1.1; }), base);
                    }
                }
            }
        }
    }
}

TEST(ParasiticCapacitance, CrossingPolynomialTurnsOverAboveHalf) {
    // 9.01a - 8.696a^2 peaks at a = 0.518; past it a thicker stack lowers C2.
    InterconnectGrid g;
    g.line_width = 40e-9;
    g.line_thickness = 200e-9;
    g.layer_gap = 250e-9;
    const double before = parasitic_capacitance(g).crossing;
    g.layer_gap *= 1.1;
    EXPECT_GT(parasitic_capacitance(g).crossing, before);
}

TEST(DynamicPower, Examples) {
    EXPECT_NEAR(dynamic_power(700e-15, 1.0, 1e6), 350e-9, 1e-20);
    EXPECT_NEAR(dynamic_power(700e-15, 1.0, 2e6), 700e-9, 1e-20);
    EXPECT_EQ(dynamic_power(700e-15, 0.0, 1e6), 0.0);
    EXPECT_NEAR(dynamic_power(700e-15, 1.0, 1e6) * 262144, 91.7504e-3, 1e-12);
}

TEST(DynamicPower, Scaling) {
    for (double v : {0.1, 0.5, 1.0, 3.0}) {
        for (double f : {1e3, 1e6, 1e8}) {
            const double p = dynamic_power(1e-12, v, f);
            EXPECT_NEAR(dynamic_power(1e-12, 2 * v, f), 4 * p, 1e-12 * p);
            EXPECT_NEAR(dynamic_power(1e-12, v, 3 * f), 3 * p, 1e-12 * p);
        }
    }
}

TEST(DemuxPower, Examples) {
    ElectronicsParams p;
    EXPECT_NEAR(demux_power(p, 1e5), 140e-9, 1e-20);
    EXPECT_NEAR(demux_power(p, 2.0), 2.8e-12, 1e-24);
    EXPECT_NEAR(demux_power(p, 1e5) * 262144, 36.70e-3, 0.005 * 36.7e-3);
    p.demux_count = 0;
    EXPECT_EQ(demux_power(p, 1e5), 0.0);
}

TEST(TransmissionLine, ConstantAt24um) {
    const auto t = transmission_line_power(SignalParams{}, 24e-6);
    EXPECT_NEAR(t.resistance, 2.4, 1e-12);
    EXPECT_NEAR(t.capacitance, 4.8e-15, 1e-27);
    const double oracle = 2 * 2.4 * std::pow(std::numbers::pi * 4.8e-15, 2);
    EXPECT_NEAR(t.lumped_constant, oracle, 1e-40);
    EXPECT_NEAR(t.lumped_constant * 1e27, 1.1, 0.02 * 1.1);
}

TEST(TransmissionLine, DefaultLengthIsTwicePitch) {
    const auto a = transmission_line_power(SignalParams{}, ArrayConfig{});
    const auto b = transmission_line_power(SignalParams{}, 26e-6);
    EXPECT_DOUBLE_EQ(a.power, b.power);
}

TEST(TransmissionLine, ConstantWithinFactorOfLumpedValue) {
    for (double len = 24e-6; len <= 26e-6 + 1e-12; len += 0.25e-6) {
        const double k = transmission_line_power(SignalParams{}, len).lumped_constant * 1e27;
        EXPECT_GE(k, 1.1 / 1.5);
        EXPECT_LE(k, 1.1 * 1.5);
    }
}

TEST(TransmissionLine, Scaling) {
    SignalParams s;
    s.line_frequency = 0;
    EXPECT_EQ(transmission_line_power(s, 24e-6).power, 0.0);
    s = {};
    const double p = transmission_line_power(s, 24e-6).power;
    s.line_amplitude = 2;
    EXPECT_NEAR(transmission_line_power(s, 24e-6).power, 4 * p, 1e-12 * p);
    s.line_amplitude = 1;
    s.line_frequency = 3e9;
    EXPECT_NEAR(transmission_line_power(s, 24e-6).power, 9 * p, 1e-12 * p);
}

TEST(TotalPower, PinnedCapacitanceReproducesExample) {
    const auto r = total_power(ArrayConfig{}, InterconnectGrid{}, SignalParams{}, ElectronicsParams{}, 700e-15);
    EXPECT_TRUE(r.capacitance_pinned);
    EXPECT_NEAR(r.pulse_total, 91.8e-3, 0.005 * 91.8e-3);
    EXPECT_NEAR(r.demux_total, 36.7e-3, 0.005 * 36.7e-3);
    EXPECT_GE(r.line_total, 0.28e-3);
    EXPECT_LE(r.line_total, 0.37e-3);
    EXPECT_EQ(r.total, 262144.0 * (r.pulse_per_cell + r.demux_per_cell + r.line_per_cell));
    EXPECT_NEAR(r.total, 129e-3, 1e-3);
}

TEST(TotalPower, UsesGridModelUnlessPinned) {
    const auto r = total_power(ArrayConfig{}, InterconnectGrid{}, SignalParams{}, ElectronicsParams{});
    EXPECT_FALSE(r.capacitance_pinned);
    EXPECT_DOUBLE_EQ(r.parasitic_capacitance, parasitic_capacitance(InterconnectGrid{}).total);
}

TEST(TotalPower, ZeroDriveFrequenciesLeaveDemuxOnly) {
    SignalParams s;
    s.pulse_frequency = 0;
    s.line_frequency = 0;
    const auto r = total_power(ArrayConfig{}, InterconnectGrid{}, s, ElectronicsParams{});
    EXPECT_EQ(r.pulse_per_cell, 0.0);
    EXPECT_EQ(r.line_per_cell, 0.0);
    EXPECT_EQ(r.total, r.demux_total);
    EXPECT_EQ(dynamic_power(1e-12, 1, 0) + demux_power(ElectronicsParams{}, 0) +
                  transmission_line_power(s, 24e-6).power,
              0.0);
}

TEST(TotalPower, SingleCellIsSumOfComponents) {
    ArrayConfig cfg;
    cfg.bias_module_edge = cfg.bias_module_grid = 1;
    cfg.readout_module_edge = cfg.readout_module_grid = 1;
    cfg.sequential_readouts = cfg.parallel_readouts = 1;
    const auto r = total_power(cfg, InterconnectGrid{}, SignalParams{}, ElectronicsParams{});
    EXPECT_EQ(r.total, r.pulse_per_cell + r.demux_per_cell + r.line_per_cell);
}

TEST(TotalPower, RejectsInvalidInputs) {
    InterconnectGrid g;
    g.lateral_gap = 0;
    EXPECT_THROW(total_power(ArrayConfig{}, g, SignalParams{}, ElectronicsParams{}), ConfigError);
}

}  // namespace
}  // namespace spiderweb
