#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace dhs {

enum class GateKind { Rx, Ry, Rz, H, T, Tdg, X, Y, Z, CZ, CNOT, Ckz, CkNOT };

bool is_rotation(GateKind k);
// True for gates acting on exactly one wire (rotations, H, T, T-dagger,
// Paulis, and any Ckz with a single wire).
bool is_single_qubit_kind(GateKind k);
const char* mnemonic(GateKind k);

struct Gate {
    GateKind kind;
    // Wire indices. For CNOT/CkNOT: controls first, target last.
    // Ckz is symmetric in its wires and is stored sorted ascending.
    std::vector<int> qubits;
    double angle = 0.0;  // radians; meaningful only for Rx/Ry/Rz

    bool operator==(const Gate& o) const;
};

// Convenience constructors (validate arity; Ckz wires get sorted).
Gate make_gate(GateKind kind, std::vector<int> qubits);
Gate make_rotation(GateKind kind, double angle, int qubit);

struct Circuit {
    int width = 1;
    std::vector<Gate> gates;  // time flows left to right

    Circuit() = default;
    explicit Circuit(int w) : width(w) {}
    // Validates wire bounds/distinctness, then appends.
    void push(Gate g);
    bool operator==(const Circuit& o) const = default;
};

struct CostReport {
    int cz = 0;
    int rotations = 0;      // box rule: 3 per non-identity single-qubit box
    int min_rotations = 0;  // secondary metric: per-box minimal x/y count
};

// Counts CZ gates and single-qubit rotations under the box cost model:
// a box is a maximal run of single-qubit gates on one wire between
// two-qubit gates (or circuit boundary); a non-identity box costs exactly
// 3 rotations, an identity box costs 0. The minimal per-box rotation count
// (0..3 x/y rotations) is reported as a secondary metric.
// Requires a lowered circuit (only CZ and single-qubit gates);
// throws std::invalid_argument("not lowered") otherwise.
CostReport count_gates(const Circuit& c);

// Line-oriented text serialization: one gate per line, lower-case mnemonic,
// optional angle in decimal radians with 12 digits after the point, then
// space-separated wires. A header line "qubits N" fixes the width.
std::string emit_text(const Circuit& c);

// Inverse of emit_text. Lines starting with '#' and blank lines are
// ignored. Throws std::runtime_error with the line number on unknown
// mnemonics, malformed numbers, or out-of-range wires.
Circuit parse_text(const std::string& t);

// OPENQASM-2.0-flavored emitter for lowered circuits (single-qubit gates,
// cz, cx). Throws std::invalid_argument("not lowered") on Ckz/CkNOT.
std::string emit_qasm(const Circuit& c);

// 2x2 matrix of a single-qubit gate. Throws on multi-qubit kinds.
Eigen::Matrix2cd single_qubit_matrix(const Gate& g);

bool mat_is_identity_up_to_phase(const Eigen::Matrix2cd& u, double tol = 1e-10);
bool mat_is_diagonal(const Eigen::Matrix2cd& u, double tol = 1e-10);

// Minimal number of x/y-axis rotations realizing u up to global phase
// (0 for identity, 1 for an x- or y-axis rotation, else 2 or 3).
int minimal_rotations(const Eigen::Matrix2cd& u, double tol = 1e-9);

}  // namespace dhs
