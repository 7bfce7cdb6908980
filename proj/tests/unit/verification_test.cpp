#include <gtest/gtest.h>

#include "spiderweb/verification.hpp"

namespace spiderweb {
namespace {

TEST(Verification, CleanRunPasses) {
    const auto summary = run_verification();
    EXPECT_TRUE(summary.all_passed());
    std::set<std::string> groups;
    for (const auto& c : summary.checks) {
        groups.insert(c.group);
        EXPECT_TRUE(c.passed) << c.group << "/" << c.name << ": " << c.detail;
    }
    EXPECT_EQ(groups, (std::set<std::string>{"gates", "plaquette", "schedule"}));
}

TEST(Verification, CorruptedPhaseGateFails) {
    VerificationOptions o;
    o.corrupt_sp_sign = true;
    const auto summary = run_verification(o);
    EXPECT_FALSE(summary.all_passed());
    bool sp_failed = false;
    for (const auto& c : summary.checks) {
        if (c.name == "sp_product") sp_failed = !c.passed;
        if (c.group == "schedule") EXPECT_TRUE(c.passed) << c.name;
    }
    EXPECT_TRUE(sp_failed);
}

TEST(Verification, MakespanCheckFollowsTiming) {
    VerificationOptions o;
    o.timing.shuttle = schedule::Picoseconds{77'777};
    for (const auto& c : run_verification(o).checks)
        if (c.group == "schedule") EXPECT_TRUE(c.passed) << c.name;
}

}  // namespace
}  // namespace spiderweb
