#include "spiderweb/qgates/verify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spiderweb/qgates/gates.hpp"

namespace spiderweb::qgates {
namespace {

constexpr double kPi = std::numbers::pi;
const Complex I{0.0, 1.0};

Unitary on(std::string_view name, std::vector<int> targets, int qubits, std::optional<double> angle = std::nullopt) {
    return embed(gate(name, angle), targets, qubits);
}

IdentityCheck exact(std::string name, std::string statement, const Unitary& lhs, const Unitary& rhs, double tol) {
    const double r = lhs.max_abs_diff(rhs);
    return {std::move(name), std::move(statement), r, false, r < tol};
}

IdentityCheck up_to_phase(std::string name, std::string statement, const Unitary& lhs, const Unitary& rhs, double tol) {
    const auto cmp = compare_up_to_global_phase(lhs, rhs, tol);
    return {std::move(name), std::move(statement), cmp.residual, true, cmp.equal};
}

}  // namespace

PhaseComparison compare_up_to_global_phase(const Unitary& u, const Unitary& v, double tol) {
    if (u.qubits() != v.qubits()) throw std::invalid_argument("operator dimensions differ");
    const Unitary overlap = v.adjoint() * u;
    Complex pivot = 0.0;
    for (const auto& e : overlap.entries())
        if (std::abs(e) > std::abs(pivot)) pivot = e;

    PhaseComparison out;
    out.phase = std::abs(pivot) > 0.0 ? pivot / std::abs(pivot) : Complex{1.0, 0.0};
    out.residual = u.max_abs_diff(out.phase * v);
    out.equal = out.residual < tol;
    return out;
}

bool equal_up_to_global_phase(const Unitary& u, const Unitary& v, double tol) {
    return compare_up_to_global_phase(u, v, tol).equal;
}

std::vector<IdentityCheck> verify_identities(const IdentityOptions& options) {
    const double tol = options.tolerance;
    const Unitary sp = gate(options.corrupt_sp_sign ? "sp_dag" : "sp");
    const Unitary sp_dag = sp.adjoint();
    const Unitary sw = gate("sqrt_swap");
    const Unitary cz = gate("cz");

    std::vector<IdentityCheck> checks;
    checks.push_back(exact("sqrt_swap_squared", "sqrt(Sw) sqrt(Sw) = SWAP", sw * sw, gate("swap"), tol));
    checks.push_back(exact("sp_product", "sqrt(Sw) (Rz(pi) x I) sqrt(Sw) = -i Sp",
                           sw * on("rz", {0}, 2, kPi) * sw, -I * sp, tol));
    checks.push_back(exact("sp_dag_product", "sqrt(Sw) (I x Rz(pi)) sqrt(Sw) = -i Sp†",
                           sw * on("rz", {1}, 2, kPi) * sw, -I * sp_dag, tol));
    checks.push_back(exact("sp_inverse", "Sp Sp† = I", sp * sp_dag, Unitary::identity(2), tol));
    checks.push_back(exact("sp_squared", "Sp Sp = Z x Z", sp * sp, gate("z").kron(gate("z")), tol));

    const Unitary rz1 = on("rz", {0}, 2, kPi / 2);
    const Unitary rz2 = on("rz", {1}, 2, -kPi / 2);
    checks.push_back(exact("cz_from_sp", "(Rz(pi/2) x I)(I x Rz(-pi/2)) Sp = CZ", rz1 * rz2 * sp, cz, tol));
    checks.push_back(exact("cz_from_sp_dag", "(Rz(-pi/2) x I)(I x Rz(pi/2)) Sp† = CZ",
                           on("rz", {0}, 2, -kPi / 2) * on("rz", {1}, 2, kPi / 2) * sp_dag, cz, tol));

    std::array<const Unitary*, 3> factors{&rz1, &rz2, &sp};
    std::sort(factors.begin(), factors.end());
    double worst = 0.0;
    do {
        worst = std::max(worst, ((*factors[0]) * (*factors[1]) * (*factors[2])).max_abs_diff(cz));
    } while (std::next_permutation(factors.begin(), factors.end()));
    checks.push_back({"cz_order_invariance", "CZ construction holds in all 6 factor orders", worst, false, worst < tol});

    const Unitary cnot = I * on("rz", {0}, 2, kPi / 2) * on("rz", {1}, 2, kPi / 2) * on("rx", {1}, 2, kPi / 2) * sp *
                         on("h", {1}, 2);
    checks.push_back(up_to_phase("cnot_from_sp", "i (Rz(pi/2) x Rz(pi/2)) (I x Rx(pi/2)) Sp (I x H) = CNOT", cnot,
                                 gate("cnot"), tol));

    checks.push_back(exact("hadamard_ry_z", "H = Ry(pi/2) Z", gate("ry", kPi / 2) * gate("z"), gate("h"), tol));
    checks.push_back(exact("hadamard_z_ry", "H = Z Ry(-pi/2)", gate("z") * gate("ry", -kPi / 2), gate("h"), tol));
    return checks;
}

double concurrence(const std::vector<Complex>& state) {
    if (state.size() != 4) throw std::invalid_argument("concurrence needs a two-qubit state");
    return 2.0 * std::abs(state[0] * state[3] - state[1] * state[2]);
}

std::string_view to_string(PlaquetteKind kind) { return kind == PlaquetteKind::x ? "X" : "Z"; }

std::string_view to_string(DressingOrder order) {
    return order == DressingOrder::ry_then_rz ? "ry_then_rz" : "rz_then_ry";
}

Circuit build_plaquette(PlaquetteKind kind, DressingOrder order, PhasePlacement placement) {
    Circuit c(5);
    const bool x_type = kind == PlaquetteKind::x;
    constexpr int kFirstInteraction = 2;

    // R_y acts first unless the X plaquette is built in the reverse order.
    const bool rz_first = x_type && order == DressingOrder::rz_then_ry && placement == PhasePlacement::onset;
    c.add("ry", {0}, -kPi / 2, 0);
    if (x_type) {
        for (int q = 1; q <= 4; ++q) c.add("ry", {q}, -kPi / 2, rz_first ? 1 : 0);
    }
    for (int q = 1; q <= 4; ++q) {
        const int sp_step = kFirstInteraction + q - 1;
        if (placement == PhasePlacement::after_interaction) {
            c.add("rz", {q}, -kPi / 2, sp_step + 1);
        } else {
            c.add("rz", {q}, -kPi / 2, (x_type && !rz_first) ? 1 : 0);
        }
        c.add("sp", {0, q}, std::nullopt, sp_step);
    }
    const int final_step = kFirstInteraction + 4 + (placement == PhasePlacement::after_interaction ? 1 : 0);
    c.add("ry", {0}, kPi / 2, final_step);
    if (x_type) {
        for (int q = 1; q <= 4; ++q) c.add("ry", {q}, kPi / 2, final_step);
    }
    return c;
}

Unitary reference_plaquette(PlaquetteKind kind) {
    // Product of CZ(ancilla, data) over four data qubits: phase -1 whenever the
    // ancilla is 1 and an odd number of data qubits are 1.
    Unitary interactions = Unitary::zero(5);
    for (std::size_t b = 0; b < 32; ++b) {
        const bool ancilla = (b >> 4) & 1U;
        const int data_ones = std::popcount(b & 0xFU);
        interactions(b, b) = (ancilla && (data_ones % 2 == 1)) ? -1.0 : 1.0;
    }
    const Unitary h = gate("h");
    Unitary dressing = h;
    for (int q = 1; q < 5; ++q) dressing = dressing.kron(kind == PlaquetteKind::x ? h : Unitary::identity(1));
    return dressing * interactions * dressing;
}

PlaquetteVerdict check_plaquette_circuit(const Circuit& circuit, PlaquetteKind kind, double tol) {
    PlaquetteVerdict v;
    v.kind = kind;
    v.depth = circuit.depth();
    const auto cmp = compare_up_to_global_phase(compose(circuit), reference_plaquette(kind), tol);
    v.equivalent = cmp.equal;
    v.residual = cmp.residual;
    return v;
}

PlaquetteVerdict verify_plaquette(PlaquetteKind kind, double tol) {
    auto v = check_plaquette_circuit(build_plaquette(kind, DressingOrder::ry_then_rz), kind, tol);
    v.order = DressingOrder::ry_then_rz;
    if (v.equivalent || kind == PlaquetteKind::z) return v;
    auto alt = check_plaquette_circuit(build_plaquette(kind, DressingOrder::rz_then_ry), kind, tol);
    alt.order = DressingOrder::rz_then_ry;
    alt.fallback_used = true;
    return alt;
}

}  // namespace spiderweb::qgates
