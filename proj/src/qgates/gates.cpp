#include "spiderweb/qgates/gates.hpp"

#include <cmath>

#include <fmt/format.h>

namespace spiderweb::qgates {
namespace {

const Complex I{0.0, 1.0};

Unitary one(Complex a, Complex b, Complex c, Complex d) { return Unitary::from_rows(1, {a, b, c, d}); }

Unitary diag2(Complex a, Complex b, Complex c, Complex d) {
    return Unitary::from_rows(2, {a, 0, 0, 0, 0, b, 0, 0, 0, 0, c, 0, 0, 0, 0, d});
}

}  // namespace

const std::vector<GateInfo>& gate_catalog() {
    static const std::vector<GateInfo> catalog = {
        {"i", 1, false},  {"x", 1, false},         {"y", 1, false},    {"z", 1, false},  {"h", 1, false},
        {"rx", 1, true},  {"ry", 1, true},         {"rz", 1, true},    {"sqrt_swap", 2, false},
        {"swap", 2, false}, {"sp", 2, false},      {"sp_dag", 2, false}, {"cz", 2, false}, {"cnot", 2, false},
    };
    return catalog;
}

const GateInfo& gate_info(std::string_view name) {
    for (const auto& g : gate_catalog())
        if (g.name == name) return g;
    throw UnknownGate(fmt::format("unknown gate '{}'", name));
}

Unitary gate(std::string_view name, std::optional<double> angle) {
    const GateInfo& info = gate_info(name);
    if (info.takes_angle && !angle) throw std::invalid_argument(fmt::format("gate '{}' needs an angle", name));
    if (!info.takes_angle && angle) throw std::invalid_argument(fmt::format("gate '{}' takes no angle", name));
    if (angle && !std::isfinite(*angle)) throw std::invalid_argument(fmt::format("gate '{}' angle is not finite", name));

    if (name == "i") return Unitary::identity(1);
    if (name == "x") return one(0, 1, 1, 0);
    if (name == "y") return one(0, -I, I, 0);
    if (name == "z") return one(1, 0, 0, -1);
    if (name == "h") {
        const double s = 1.0 / std::sqrt(2.0);
        return one(s, s, s, -s);
    }
    if (info.takes_angle) {
        const double c = std::cos(*angle / 2.0);
        const double s = std::sin(*angle / 2.0);
        if (name == "rx") return one(c, -I * s, -I * s, c);
        if (name == "ry") return one(c, -s, s, c);
        return one(std::exp(-I * (*angle / 2.0)), 0, 0, std::exp(I * (*angle / 2.0)));
    }
    if (name == "sqrt_swap") {
        const Complex p = (1.0 + I) / 2.0;
        const Complex m = (1.0 - I) / 2.0;
        return Unitary::from_rows(2, {1, 0, 0, 0, 0, p, m, 0, 0, m, p, 0, 0, 0, 0, 1});
    }
    if (name == "swap") return Unitary::from_rows(2, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1});
    if (name == "sp") return diag2(1, I, -I, -1);
    if (name == "sp_dag") return diag2(1, -I, I, -1);
    if (name == "cz") return diag2(1, 1, 1, -1);
    return Unitary::from_rows(2, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
}

}  // namespace spiderweb::qgates
