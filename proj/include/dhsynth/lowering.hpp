#pragma once

#include <map>
#include <utility>

#include "dhsynth/circuit.hpp"
#include "dhsynth/diag.hpp"
#include "dhsynth/synth.hpp"

namespace dhs {

// Per-popcount (CZ, rotation) cost of a lowered C^kZ gate. Popcounts 1..3
// are fixed table entries; larger popcounts are computed by lowering a
// canonical mask and counting, then cached.
class CostModel {
public:
    static const CostModel& standard();
    std::pair<int, int> ckz_cost(int popcount) const;

private:
    mutable std::map<int, std::pair<int, int>> cache_;
};

// Lowers one C^kZ gate to the {CZ, single-qubit} library:
//   popcount 1 -> a single Z box;
//   popcount 2 -> one CZ;
//   popcount 3 -> the fixed 6-CZ / 9-box network;
//   popcount >= 4 -> recursive controlled-phase decomposition (no ancilla).
// The result simulates to the C^kZ unitary up to global phase.
Circuit lower_ckz(GateMask g);

// Concatenation of lower_ckz over the selection in ascending-mask order.
// The CostReport cz/rotations fields sum the per-gate model costs;
// min_rotations is counted on the concatenated circuit.
std::pair<Circuit, CostReport> lower_selection(const CzSelection& s,
                                               const CostModel& model =
                                                   CostModel::standard());

enum class RewriteDirection { CkzToCknot, CknotToCkz };

// Replaces each C^kZ (including CZ and Z) with H . C^kNOT . H on the
// last wire, or the reverse rewrite. Unitary preserved exactly (HXH = Z).
Circuit ckz_cknot_rewrite(const Circuit& c, RewriteDirection dir);

// x-y-x Euler angles: u equals Rx(alpha) * Ry(beta) * Rx(gamma) up to
// global phase (as a matrix product, so Rx(gamma) is applied first).
struct EulerXYX {
    double alpha, beta, gamma;
};
EulerXYX euler_xyx(const Eigen::Matrix2cd& u);

// Rewrites every single-qubit box of a lowered circuit into at most three
// Rx/Ry rotations (identity boxes are dropped). Preserves the unitary up
// to global phase. Throws std::invalid_argument("not lowered") on
// non-lowered input.
Circuit materialize_rotations(const Circuit& c);

}  // namespace dhs
