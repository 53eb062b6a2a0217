#pragma once

#include <cstdint>
#include <vector>

#include "dhsynth/gf2.hpp"

namespace dhs {

// An n-qubit diagonal Hermitian gate: every diagonal entry is +1 or -1.
// Wire 0 (the top wire) is the most significant bit of the basis-state
// index, so signs[m] is the eigenvalue on basis state |m> with that
// ordering.
struct DiagonalHermitian {
    int n = 1;
    std::vector<int> signs;  // 2^n entries, each +1 or -1
    bool global_phase_flipped = false;

    // Equality of the represented gate; the phase flag is bookkeeping
    // from normalization and does not participate.
    bool operator==(const DiagonalHermitian& o) const {
        return n == o.n && signs == o.signs;
    }
};

// Identifies which qubits a CZ_i / C^kZ gate touches: bit j of mask is set
// iff the gate touches qubit j (top wire = qubit 0 = bit 0 of the mask).
struct GateMask {
    int n = 1;
    unsigned mask = 0;  // 1 <= mask <= 2^n - 1

    bool operator==(const GateMask&) const = default;
};

std::vector<int> mask_wires(GateMask g);  // ascending wire list

// If signs[0] == -1, negates every sign and toggles global_phase_flipped.
DiagonalHermitian normalize(DiagonalHermitian d);

// Binary representation: BitVec of length 2^n - 1 with bit m-1 = 1 iff
// lambda_m == -1 (lambda_0 excluded; d must be normalized).
BitVec binary_of(const DiagonalHermitian& d);

// Inverse of binary_of.
DiagonalHermitian diagmat_of(const BitVec& b, int n);

// Decimal id: sum over m >= 1 of [lambda_m == -1] * 2^(m-1).
std::uint64_t matrix_id(const DiagonalHermitian& d);
DiagonalHermitian from_id(std::uint64_t id, int n);  // throws on id out of range

// Binary representation of the CZ_i gate named by the mask: bit m-1 = 1 iff
// (m AND rev_n(mask)) == rev_n(mask). The mask reversal encodes that the
// top wire is the most significant bit of the basis-state index.
BitVec czi_binary(int n, GateMask g);

// (2^n - 1) x (2^n - 1) matrix whose column i-1 is czi_binary(n, i).
BitMatrix basis_matrix(int n);

}  // namespace dhs
