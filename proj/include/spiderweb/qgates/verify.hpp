#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spiderweb/qgates/circuit.hpp"
#include "spiderweb/qgates/unitary.hpp"

namespace spiderweb::qgates {

struct PhaseComparison {
    bool equal = false;
    double residual = 0;  // max |U - e^{i phi} V|
    Complex phase{1.0, 0.0};
};

/// phi is taken from the largest-magnitude entry of V†U.
PhaseComparison compare_up_to_global_phase(const Unitary& u, const Unitary& v, double tol);
bool equal_up_to_global_phase(const Unitary& u, const Unitary& v, double tol);

struct IdentityCheck {
    std::string name;
    std::string statement;
    double residual = 0;
    bool phase_free = false;  // compared up to a global phase
    bool passed = false;
};

struct IdentityOptions {
    double tolerance = 1e-12;
    /// Replaces diag(1, i, -i, -1) by its conjugate wherever the phase gate is used.
    bool corrupt_sp_sign = false;
};

/// Exchange-gate identities: sqrt-SWAP squared, the phase-gate products, both
/// CZ constructions, CZ ordering invariance, the CNOT construction and both
/// Hadamard decompositions.
std::vector<IdentityCheck> verify_identities(const IdentityOptions& options = {});

/// 2|ad - bc| for the pure state a|00> + b|01> + c|10> + d|11>.
double concurrence(const std::vector<Complex>& state);

enum class PlaquetteKind { x, z };
std::string_view to_string(PlaquetteKind kind);

/// Order of the two initial data rotations of the X plaquette.
enum class DressingOrder { ry_then_rz, rz_then_ry };
std::string_view to_string(DressingOrder order);

/// Where the data R_z(-pi/2) rotations go. `after_interaction` places each one
/// right after that data qubit's phase gate; the dressing order is then moot.
enum class PhasePlacement { onset, after_interaction };

/// Qubit 0 is the ancilla, 1..4 the data qubits in interaction order.
Circuit build_plaquette(PlaquetteKind kind, DressingOrder order = DressingOrder::ry_then_rz,
                        PhasePlacement placement = PhasePlacement::onset);

/// X: H on all, CZ(ancilla, each data), H on all. Z: H on the ancilla only around the CZs.
Unitary reference_plaquette(PlaquetteKind kind);

struct PlaquetteVerdict {
    PlaquetteKind kind = PlaquetteKind::x;
    bool equivalent = false;
    double residual = 0;
    DressingOrder order = DressingOrder::ry_then_rz;
    bool fallback_used = false;
    int depth = 0;
};

PlaquetteVerdict check_plaquette_circuit(const Circuit& circuit, PlaquetteKind kind, double tol = 1e-10);

/// Tries the R_y-first dressing, then the reverse; reports which one matched.
PlaquetteVerdict verify_plaquette(PlaquetteKind kind, double tol = 1e-10);

}  // namespace spiderweb::qgates
