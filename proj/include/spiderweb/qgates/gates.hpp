#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spiderweb/qgates/unitary.hpp"

namespace spiderweb::qgates {

struct GateInfo {
    std::string_view name;
    int qubits;
    bool takes_angle;
};

/// i x y z h rx ry rz sqrt_swap swap sp sp_dag cz cnot
const std::vector<GateInfo>& gate_catalog();
const GateInfo& gate_info(std::string_view name);

class UnknownGate : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// R_z(t) = diag(e^{-it/2}, e^{it/2}); R_y(t) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]].
/// Two-qubit gates act on (first, second) with the first as the leftmost factor;
/// for cnot the first is the control.
Unitary gate(std::string_view name, std::optional<double> angle = std::nullopt);

}  // namespace spiderweb::qgates
