#include "spiderweb/qgates/circuit.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

#include "spiderweb/qgates/gates.hpp"

namespace spiderweb::qgates {

Circuit::Circuit(int qubits) : qubits_(qubits) {
    if (qubits < 1 || qubits > kMaxQubits)
        throw std::invalid_argument(fmt::format("circuits span 1..{} qubits (got {})", kMaxQubits, qubits));
}

Circuit& Circuit::add(std::string name, std::vector<int> targets, std::optional<double> angle, int step) {
    return add(PlacedGate{std::move(name), std::move(targets), angle, step});
}

Circuit& Circuit::add(PlacedGate g) {
    gates_.push_back(std::move(g));
    return *this;
}

int Circuit::depth() const {
    std::set<int> steps;
    for (const auto& g : gates_) steps.insert(g.step);
    return static_cast<int>(steps.size());
}

std::size_t Circuit::count(std::string_view name) const {
    return static_cast<std::size_t>(std::count_if(gates_.begin(), gates_.end(), [&](const auto& g) { return g.name == name; }));
}

ValidationReport Circuit::validate() const {
    ValidationReport report;
    std::map<int, std::vector<std::size_t>> by_step;
    for (std::size_t i = 0; i < gates_.size(); ++i) {
        const auto& g = gates_[i];
        const std::string where = fmt::format("gate {} ({})", i, g.name);
        const GateInfo* info = nullptr;
        try {
            info = &gate_info(g.name);
        } catch (const UnknownGate& e) {
            report.add(where, e.what());
            continue;
        }
        if (static_cast<int>(g.targets.size()) != info->qubits)
            report.add(where, fmt::format("expects {} target(s), got {}", info->qubits, g.targets.size()));
        if (info->takes_angle != g.angle.has_value())
            report.add(where, info->takes_angle ? "missing angle" : "unexpected angle");
        std::set<int> seen;
        for (int t : g.targets) {
            if (t < 0 || t >= qubits_) report.add(where, fmt::format("target {} outside 0..{}", t, qubits_ - 1));
            if (!seen.insert(t).second) report.add(where, fmt::format("target {} repeated", t));
        }
        if (g.step < 0) report.add(where, "negative step");
        by_step[g.step].push_back(i);
    }
    if (!report.ok()) return report;

    for (const auto& [step, members] : by_step) {
        bool all_diagonal = true;
        for (auto i : members) {
            const auto& g = gates_[i];
            all_diagonal = all_diagonal && gate(g.name, g.angle).is_diagonal();
        }
        if (all_diagonal) continue;
        std::set<int> used;
        for (auto i : members) {
            for (int t : gates_[i].targets) {
                if (!used.insert(t).second)
                    report.add(fmt::format("step {}", step),
                               fmt::format("qubit {} is used twice by non-commuting gates", t));
            }
        }
    }
    return report;
}

Unitary embed(const Unitary& op, const std::vector<int>& targets, int qubits) {
    if (static_cast<int>(targets.size()) != op.qubits())
        throw std::invalid_argument(fmt::format("{}-qubit operator placed on {} targets", op.qubits(), targets.size()));
    Unitary out = Unitary::zero(qubits);
    std::size_t target_mask = 0;
    for (int t : targets) target_mask |= std::size_t{1} << (qubits - 1 - t);

    auto sub_index = [&](std::size_t full) {
        std::size_t s = 0;
        for (int t : targets) s = (s << 1) | ((full >> (qubits - 1 - t)) & 1U);
        return s;
    };
    for (std::size_t r = 0; r < out.dim(); ++r) {
        for (std::size_t c = 0; c < out.dim(); ++c) {
            if ((r & ~target_mask) != (c & ~target_mask)) continue;
            out(r, c) = op(sub_index(r), sub_index(c));
        }
    }
    return out;
}

Unitary compose(const Circuit& circuit) {
    if (auto report = circuit.validate(); !report.ok())
        throw std::invalid_argument("invalid circuit: " + report.to_string());
    std::vector<const PlacedGate*> ordered;
    for (const auto& g : circuit.gates()) ordered.push_back(&g);
    std::stable_sort(ordered.begin(), ordered.end(), [](auto* a, auto* b) { return a->step < b->step; });

    Unitary total = Unitary::identity(circuit.qubits());
    for (const auto* g : ordered) total = embed(gate(g->name, g->angle), g->targets, circuit.qubits()) * total;
    return total;
}

}  // namespace spiderweb::qgates
