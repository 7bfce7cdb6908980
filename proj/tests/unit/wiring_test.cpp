#include <bit>
#include <cmath>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "spiderweb/wiring.hpp"

namespace spiderweb {
namespace {

TEST(LinesAt, UnitCellRow) {
    const auto lines = lines_at(Level::unit_cell, ArrayConfig{});
    EXPECT_EQ(lines, (LineCount{9, 4, 58, 0, 3}));
    EXPECT_EQ(lines.total(), 74);
}

TEST(LinesAt, UnitCellIsIndependentOfArraySize) {
    auto g = testing::rng(3);
    for (int i = 0; i < 100; ++i) {
        auto cfg = testing::random_valid_config(g);
        cfg.crossbars = 0;
        EXPECT_EQ(lines_at(Level::unit_cell, cfg).total(), 74);
    }
}

TEST(LinesAt, ModuleRow) {
    const auto lines = lines_at(Level::module, ArrayConfig{});
    EXPECT_EQ(lines.dc_biasing, 4 * 32 + 5);
    EXPECT_EQ(lines.readout, 2 * 2 - 2 + 1);
    EXPECT_EQ(lines.total(), 198);
}

TEST(LinesAt, QuantumPlaneRow) {
    const auto lines = lines_at(Level::quantum_plane, ArrayConfig{});
    EXPECT_EQ(lines.dc_biasing, 16 * 16 + 4 * 32 + 4);
    EXPECT_EQ(lines.readout, 128 * 128 + 2 * 2 - 2);
    EXPECT_EQ(lines.total(), 16836);
}

TEST(LinesAt, CrossbarLines) {
    ArrayConfig cfg;
    cfg.crossbars = 200;
    EXPECT_EQ(lines_at(Level::unit_cell, cfg).logical_ops, 800);
    EXPECT_EQ(lines_at(Level::module, cfg).logical_ops, 4 * 32 * 200);
    EXPECT_EQ(lines_at(Level::quantum_plane, cfg).total(), 426436);
}

TEST(LinesAt, RejectsNonPowerOfTwoReadout) {
    ArrayConfig cfg;
    cfg.bias_module_edge = 24;
    cfg.bias_module_grid = 16;
    cfg.readout_module_edge = 3;
    cfg.readout_module_grid = 128;
    cfg.sequential_readouts = 3;
    cfg.parallel_readouts = 3;
    ASSERT_TRUE(validate_config(cfg).ok());
    EXPECT_THROW(lines_at(Level::module, cfg), WiringError);
}

TEST(LinesAt, PulsedCountComesFromInventory) {
    const GateInventory inv({{"only", 1, 0, 0, 10}});
    EXPECT_EQ(lines_at(Level::unit_cell, ArrayConfig{}, inv).pulsed_mw, 10);
}

TEST(LinesAt, BreakdownMatchesClosedFormTotal) {
    auto g = testing::rng(4);
    for (int i = 0; i < 500; ++i) {
        const auto cfg = testing::random_valid_config(g);
        for (auto level : {Level::unit_cell, Level::module, Level::quantum_plane})
            EXPECT_EQ(lines_at(level, cfg).total(), total_lines_closed_form(level, cfg)) << to_string(level);
    }
}

TEST(LinesAt, PlaneTotalMonotoneInCrossbarsAndGrid) {
    auto g = testing::rng(5);
    for (int i = 0; i < 300; ++i) {
        auto cfg = testing::random_valid_config(g);
        const auto base = lines_at(Level::quantum_plane, cfg).total();
        auto more_x = cfg;
        more_x.crossbars += testing::uniform(g, 1, 100);
        EXPECT_GE(lines_at(Level::quantum_plane, more_x).total(), base);
        // Growing the module grid keeps the config consistent only if both grids grow together.
        auto bigger = cfg;
        bigger.bias_module_grid *= 2;
        bigger.readout_module_grid *= 2;
        EXPECT_GE(lines_at(Level::quantum_plane, bigger).total(), base);
    }
}

TEST(LinesAt, HierarchyWhereItHolds) {
    // module - unit = 4(N_b - 1) + log2 q - 2, so the ordering needs that to be >= 0.
    auto g = testing::rng(6);
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
        auto cfg = testing::random_valid_config(g);
        cfg.crossbars = 0;
        const auto log2q = std::countr_zero(static_cast<std::uint64_t>(cfg.sequential_readouts));
        if (4 * (cfg.bias_module_edge - 1) + log2q < 2) continue;
        ++checked;
        const auto u = lines_at(Level::unit_cell, cfg).total();
        const auto m = lines_at(Level::module, cfg).total();
        const auto p = lines_at(Level::quantum_plane, cfg).total();
        EXPECT_LE(u, m);
        EXPECT_LE(m, p);
    }
    EXPECT_GT(checked, 500);
}

TEST(LinesAt, HierarchyCounterexampleForMinimalArray) {
    ArrayConfig cfg;
    cfg.bias_module_edge = cfg.bias_module_grid = 1;
    cfg.readout_module_edge = cfg.readout_module_grid = 1;
    cfg.sequential_readouts = cfg.parallel_readouts = 1;
    EXPECT_EQ(lines_at(Level::module, cfg).total(), 72);
    EXPECT_LT(lines_at(Level::module, cfg).total(), lines_at(Level::unit_cell, cfg).total());
}

TEST(RentExponent, MillionQubitExample) {
    const double p = rent_exponent(ArrayConfig{});
    EXPECT_NEAR(p, std::log(16836.0 / 74.0) / std::log(262144.0), 1e-15);
    EXPECT_GE(p, 0.43);
    EXPECT_LE(p, 0.44);
}

TEST(RentExponent, TwoHundredCrossbars) {
    ArrayConfig cfg;
    cfg.crossbars = 200;
    EXPECT_NEAR(rent_exponent(cfg), std::log(426436.0 / 874.0) / std::log(262144.0), 1e-15);
    EXPECT_NEAR(rent_exponent(cfg), 0.496, 5e-4);
}

TEST(RentExponent, EqualTerminalsGiveZero) { EXPECT_DOUBLE_EQ(rent_exponent(74, 74, 1000), 0.0); }

TEST(RentExponent, UndefinedForSingleCell) {
    EXPECT_THROW(rent_exponent(74, 74, 1), std::domain_error);
    ArrayConfig cfg;
    cfg.bias_module_edge = cfg.bias_module_grid = 1;
    cfg.readout_module_edge = cfg.readout_module_grid = 1;
    cfg.sequential_readouts = cfg.parallel_readouts = 1;
    EXPECT_THROW(rent_exponent(cfg), std::domain_error);
}

TEST(RentExponent, SaturatesBelowOneHalf) {
    ArrayConfig cfg;
    double previous = -1.0;
    for (std::int64_t x = 0; x <= 10'000; x += (x < 100 ? 1 : 50)) {
        cfg.crossbars = x;
        const double p = rent_exponent(cfg);
        EXPECT_GE(p, previous) << "x=" << x;
        EXPECT_LT(p, 0.5) << "x=" << x;
        previous = p;
    }
}

TEST(Capacity, MillionQubitExample) {
    EXPECT_EQ(logical_qubit_capacity(ArrayConfig{}, LogicalScheme::defect), 682);
    EXPECT_EQ(logical_qubit_capacity(ArrayConfig{}, LogicalScheme::lattice_surgery), 1024);
}

TEST(Capacity, OneLogicalQubitFillsArray) {
    ArrayConfig cfg;
    cfg.code_distance = 512;
    EXPECT_EQ(logical_qubit_capacity(cfg, LogicalScheme::lattice_surgery), 1);
}

TEST(Capacity, FloorsAgainstIntegerOracle) {
    auto g = testing::rng(7);
    for (int i = 0; i < 300; ++i) {
        const auto cfg = testing::random_valid_config(g);
        const auto u = unit_cell_count(cfg);
        const auto d2 = cfg.code_distance * cfg.code_distance;
        EXPECT_EQ(logical_qubit_capacity(cfg, LogicalScheme::defect), (2 * u) / (3 * d2));
        EXPECT_EQ(logical_qubit_capacity(cfg, LogicalScheme::lattice_surgery), u / d2);
    }
}

TEST(MaxCrossbarsFab, Examples) {
    ArrayConfig cfg;
    EXPECT_EQ(max_crossbars_fab(cfg), 1950);
    cfg.interconnect_pitch = {160};
    EXPECT_EQ(max_crossbars_fab(cfg), 975);
    cfg.routing_layers = 1;
    cfg.interconnect_pitch = cfg.qubit_pitch;
    EXPECT_EQ(max_crossbars_fab(cfg), 1);
}

}  // namespace
}  // namespace spiderweb
