#pragma once

#include <vector>

#include "dhsynth/circuit.hpp"
#include "dhsynth/diag.hpp"

namespace dhs {

// The set of CZ_i gates whose product realizes a diagonal Hermitian gate.
// Coefficient a_i = 1 iff mask i is selected; each mask occurs at most once.
struct CzSelection {
    int n = 1;
    std::vector<unsigned> selected;  // ascending masks, each in 1..2^n-1

    bool operator==(const CzSelection&) const = default;
};

enum class Backend { Gaussian, Subset };

// Solves basis_matrix(n) * a = binary_of(d) over GF(2). The solution
// always exists and is unique (the basis has full rank).
CzSelection decompose(const DiagonalHermitian& d, Backend backend = Backend::Subset);

// One gate per selected mask in ascending-mask order (the gates commute):
// popcount 1 -> Z, popcount 2 -> CZ, popcount >= 3 -> C^kZ.
Circuit selection_to_circuit(const CzSelection& s);

// Product of the selected CZ_i gates via XOR of their binary forms;
// reconstruct(decompose(d)) == d.
DiagonalHermitian reconstruct(const CzSelection& s);

}  // namespace dhs
