#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace dhs {

// Fixed-length bit vector over GF(2), packed into 64-bit words.
//
// Storage is 0-based. Callers following the 1-based diagonal-index
// convention (position m carries weight 2^{m-1}) map position m to bit m-1.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

    static BitVec from_bits(const std::vector<int>& bits);
    // Parses a string of '0'/'1' characters, leftmost character = bit 0.
    static BitVec from_string(const std::string& s);

    std::size_t size() const { return len_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool v);

    // Positionwise XOR; throws std::invalid_argument on length mismatch.
    BitVec& operator^=(const BitVec& o);
    friend BitVec operator^(BitVec a, const BitVec& b) {
        a ^= b;
        return a;
    }
    bool operator==(const BitVec&) const = default;

    bool any() const;
    std::size_t popcount() const;
    std::string to_string() const;  // leftmost character = bit 0

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

// Positionwise XOR of a non-empty list of equal-length vectors.
// An empty list is invalid; a singleton returns its element.
BitVec xor_combine(const std::vector<BitVec>& vs);

// Dense bit matrix, stored as a vector of BitVec rows.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { data_[r].set(c, v); }

    BitVec& row(std::size_t r) { return data_[r]; }
    const BitVec& row(std::size_t r) const { return data_[r]; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVec> data_;
};

// Solves B*x = b over GF(2) by Gaussian elimination.
// Throws std::runtime_error("no unique solution") if B is singular
// (or non-square / length-mismatched inputs throw std::invalid_argument).
BitVec solve_gaussian(const BitMatrix& B, const BitVec& b);

// GF(2) rank via elimination.
int rank(const BitMatrix& B);

// In-place subset-XOR (zeta/Moebius) sweep over a vector of length 2^n:
// out[j] = XOR over all t subset-of j of in[t]. Self-inverse over GF(2).
BitVec subset_xor_sweep(const BitVec& f, int n);

// Fast solver for the C^kZ basis system. b has length 2^n - 1 holding the
// binary representation at positions 1..2^n-1 (bit m-1 = b_m). Returns the
// coefficient vector a with bit i-1 = a_i. Equivalent to solve_gaussian on
// the basis matrix: extend b with b_0 = 0, sweep, then a_i = c[rev_n(i)],
// where rev_n reverses an n-bit mask.
BitVec subset_xor_solve(int n, const BitVec& b);

// Reverses the low n bits of mask.
unsigned reverse_mask(unsigned mask, int n);

}  // namespace dhs
