#include <doctest.h>

#include <random>

#include "dhsynth/diag.hpp"
#include "dhsynth/gf2.hpp"

using namespace dhs;

TEST_SUITE_BEGIN("diag");

static DiagonalHermitian make(int n, std::vector<int> signs) {
    return DiagonalHermitian{n, std::move(signs), false};
}

TEST_CASE("normalize") {
    DiagonalHermitian a = normalize(make(2, {-1, 1, 1, 1}));
    CHECK(a.signs == std::vector<int>{1, -1, -1, -1});
    CHECK(a.global_phase_flipped);

    DiagonalHermitian b = normalize(make(2, {1, 1, -1, 1}));
    CHECK(b.signs == std::vector<int>{1, 1, -1, 1});
    CHECK_FALSE(b.global_phase_flipped);

    DiagonalHermitian c = normalize(make(2, {-1, -1, -1, -1}));
    CHECK(c.signs == std::vector<int>{1, 1, 1, 1});
    CHECK(c.global_phase_flipped);
}

TEST_CASE("binary_of / diagmat_of") {
    // Stored order: index m-1 holds position m (weight 2^{m-1}); written
    // tuples elsewhere are most-significant-first, e.g. Binary(CZ) =
    // (1,0,0) denotes position 3 set, stored here as bits {0,0,1}.
    CHECK(binary_of(make(2, {1, 1, 1, -1})) == BitVec::from_bits({0, 0, 1}));
    CHECK(binary_of(make(2, {1, 1, -1, 1})) == BitVec::from_bits({0, 1, 0}));
    CHECK(binary_of(make(2, {1, 1, 1, 1})) == BitVec(3));

    CHECK(diagmat_of(BitVec::from_bits({0, 0, 1}), 2) == make(2, {1, 1, 1, -1}));
    CHECK(diagmat_of(BitVec(3), 2) == make(2, {1, 1, 1, 1}));
    CHECK(diagmat_of(BitVec::from_bits({1, 1, 1}), 2) ==
          make(2, {1, -1, -1, -1}));
    CHECK_THROWS(diagmat_of(BitVec(4), 2));
}

TEST_CASE("matrix_id / from_id") {
    CHECK(matrix_id(make(2, {1, 1, 1, -1})) == 4);  // CZ
    CHECK(matrix_id(make(2, {1, 1, 1, 1})) == 0);
    DiagonalHermitian d18 = from_id(18, 3);
    // 18 = 0b0010010 -> lambda_2 = lambda_5 = -1
    std::vector<int> want{1, 1, -1, 1, 1, -1, 1, 1};
    CHECK(d18.signs == want);
    CHECK_THROWS(from_id(8, 2));  // ids for n=2 stop at 7
}

TEST_CASE("czi_binary named values") {
    // CZ_1 = Z (x) I flips states |10>,|11>: positions 2 and 3.
    CHECK(czi_binary(2, GateMask{2, 1}) == BitVec::from_bits({0, 1, 1}));
    // CZ_2 = I (x) Z flips states |01>,|11>: positions 1 and 3.
    CHECK(czi_binary(2, GateMask{2, 2}) == BitVec::from_bits({1, 0, 1}));
    BitVec b5 = czi_binary(3, GateMask{3, 5});
    BitVec want(7);
    want.set(5 - 1, true);
    want.set(7 - 1, true);
    CHECK(b5 == want);
    CHECK_THROWS(czi_binary(2, GateMask{2, 0}));
    CHECK_THROWS(czi_binary(2, GateMask{2, 4}));
}

TEST_CASE("czi_binary equals the tensor-product oracle") {
    // Oracle: the gate flips exactly the basis states whose touched qubits
    // (wire 0 = most significant bit) all read 1.
    for (int n = 2; n <= 4; ++n) {
        for (unsigned i = 1; i < (1u << n); ++i) {
            std::vector<int> wires = mask_wires(GateMask{n, i});
            BitVec want((1u << n) - 1);
            for (unsigned m = 1; m < (1u << n); ++m) {
                bool all1 = true;
                for (int w : wires)
                    if (!((m >> (n - 1 - w)) & 1u)) {
                        all1 = false;
                        break;
                    }
                want.set(m - 1, all1);
            }
            CHECK(czi_binary(n, GateMask{n, i}) == want);
        }
    }
}

TEST_CASE("basis_matrix") {
    BitMatrix B2 = basis_matrix(2);
    REQUIRE(B2.rows() == 3);
    // columns {0,1,1}, {1,0,1}, {0,0,1} in stored order
    CHECK(czi_binary(2, GateMask{2, 1}) == BitVec::from_bits({0, 1, 1}));
    for (unsigned i = 1; i <= 3; ++i)
        for (std::size_t r = 0; r < 3; ++r)
            CHECK(B2.get(r, i - 1) == czi_binary(2, GateMask{2, i}).get(r));

    BitMatrix B1 = basis_matrix(1);
    REQUIRE(B1.rows() == 1);
    CHECK(B1.get(0, 0));

    CHECK(rank(basis_matrix(3)) == 7);
}

TEST_CASE("encoding round-trips, exhaustive n<=4") {
    for (int n = 1; n <= 4; ++n) {
        std::uint64_t count = std::uint64_t{1} << ((1 << n) - 1);
        for (std::uint64_t id = 0; id < count; ++id) {
            DiagonalHermitian d = from_id(id, n);
            CHECK(matrix_id(d) == id);
            CHECK(diagmat_of(binary_of(d), n) == d);
        }
    }
}

TEST_CASE("sign product equals XOR of binary forms") {
    std::mt19937_64 rng(3);
    for (int n = 2; n <= 4; ++n) {
        std::uint64_t lim = std::uint64_t{1} << ((1 << n) - 1);
        int trials = n == 2 ? 64 : 200;
        for (int t = 0; t < trials; ++t) {
            std::uint64_t ia = rng() % lim, ib = rng() % lim;
            DiagonalHermitian a = from_id(ia, n), b = from_id(ib, n);
            DiagonalHermitian prod = a;
            for (std::size_t m = 0; m < prod.signs.size(); ++m)
                prod.signs[m] *= b.signs[m];
            CHECK(prod ==
                  diagmat_of(xor_combine({binary_of(a), binary_of(b)}), n));
        }
    }
}

TEST_SUITE_END();
