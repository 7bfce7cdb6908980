#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spiderweb/model.hpp"
#include "spiderweb/qgates/unitary.hpp"

namespace spiderweb::qgates {

struct PlacedGate {
    std::string name;
    std::vector<int> targets;
    std::optional<double> angle;
    int step = 0;
};

/// Ordered gate list with time-step annotations. Gates sharing a step must act
/// on disjoint qubits or all be diagonal.
class Circuit {
public:
    explicit Circuit(int qubits);

    int qubits() const { return qubits_; }
    const std::vector<PlacedGate>& gates() const { return gates_; }

    Circuit& add(std::string name, std::vector<int> targets, std::optional<double> angle, int step);
    Circuit& add(PlacedGate g);

    /// Number of distinct steps in use.
    int depth() const;
    std::size_t count(std::string_view name) const;

    ValidationReport validate() const;

private:
    int qubits_;
    std::vector<PlacedGate> gates_;
};

/// Lifts a k-qubit operator onto `targets` of an n-qubit register.
Unitary embed(const Unitary& op, const std::vector<int>& targets, int qubits);

/// Product of the step unitaries; later steps multiply on the left.
/// Throws std::invalid_argument with the validation report for an invalid circuit.
Unitary compose(const Circuit& circuit);

}  // namespace spiderweb::qgates
