#pragma once

#include <Eigen/Dense>
#include <memory>
#include <vector>

#include "dhsynth/circuit.hpp"
#include "dhsynth/diag.hpp"

namespace dhs {

// General diagonal gate diag(e^{i*theta_m}); for Hermitian inputs each
// theta_m is 0 or pi. Defined modulo 2*pi with theta_0 normalized to 0.
struct PhaseVector {
    int n = 1;
    std::vector<double> phases;  // 2^n entries
};

PhaseVector phase_vector_of(const DiagonalHermitian& d);

// Skeleton of the multiplexed-Rz network: for target wire t = n-1 down
// to 1, a run of 2^t Rz slots on wire t interleaved with CZs whose
// control follows the binary ruler sequence on wires 0..t-1; wire 0
// carries the final lone slot. CZ count before optimization = 2^n - 2.
class MuxStructure {
public:
    struct Element {
        bool is_slot;    // slot (angle position) vs CZ
        int wire;        // slot wire, or CZ target wire
        int slot_index;  // 0-based angle index (slots only)
        int control;     // CZ control wire (CZs only)
    };

    int n = 1;
    std::vector<Element> elements;

    int slot_count() const;  // = 2^n - 1
    int cz_count() const;    // = 2^n - 2

    // 0/1 indicator: entry (m, s) is 1 iff angle s contributes its full
    // value to the phase of basis state m relative to state 0 (the slot
    // wire's bit XOR the parity of the preceding CZ controls in its block).
    Eigen::MatrixXd indicator;  // 2^n rows, 2^n - 1 columns

    // Solver for the relative-phase system (rows 1..2^n-1 of indicator).
    std::shared_ptr<Eigen::PartialPivLU<Eigen::MatrixXd>> lu;
};

MuxStructure build_structure(int n);  // 1 <= n <= 10; throws otherwise

// Angles such that the structure reproduces d up to global phase.
std::vector<double> compute_angles(const MuxStructure& s, const PhaseVector& d);

// Materializes the structure as a lowered circuit: Rz slots with H
// dressing around the CZs, per the multiplexed network layout.
Circuit structure_circuit(const MuxStructure& s, const std::vector<double>& angles);

// Deterministic peephole fixpoint: merge/delete identity boxes, cancel
// equal CZ pairs separated only by diagonal or wire-disjoint gates, cancel
// adjacent H pairs. Preserves the unitary up to global phase.
Circuit optimize(const Circuit& c);

// build -> solve angles -> materialize -> optimize -> count.
CostReport baseline_cost(const DiagonalHermitian& d);
CostReport baseline_cost(const MuxStructure& s, const DiagonalHermitian& d);
Circuit baseline_circuit(const MuxStructure& s, const DiagonalHermitian& d);

}  // namespace dhs
