#include "dhsynth/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace dhs {

BitVec BitVec::from_bits(const std::vector<int>& bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) v.set(i, bits[i] != 0);
    return v;
}

BitVec BitVec::from_string(const std::string& s) {
    BitVec v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v.set(i, true);
        else if (s[i] != '0')
            throw std::invalid_argument("binary string must contain only 0/1");
    }
    return v;
}

bool BitVec::get(std::size_t i) const {
    if (i >= len_) throw std::out_of_range("BitVec index out of range");
    return (words_[i / 64] >> (i % 64)) & 1u;
}

void BitVec::set(std::size_t i, bool v) {
    if (i >= len_) throw std::out_of_range("BitVec index out of range");
    std::uint64_t bit = std::uint64_t{1} << (i % 64);
    if (v)
        words_[i / 64] |= bit;
    else
        words_[i / 64] &= ~bit;
}

BitVec& BitVec::operator^=(const BitVec& o) {
    if (len_ != o.len_) throw std::invalid_argument("BitVec length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
}

bool BitVec::any() const {
    for (auto w : words_)
        if (w) return true;
    return false;
}

std::size_t BitVec::popcount() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::string BitVec::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitVec xor_combine(const std::vector<BitVec>& vs) {
    if (vs.empty()) throw std::invalid_argument("xor_combine of empty list");
    BitVec acc = vs.front();
    for (std::size_t i = 1; i < vs.size(); ++i) acc ^= vs[i];
    return acc;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, BitVec(cols)) {}

BitVec solve_gaussian(const BitMatrix& B, const BitVec& b) {
    if (B.rows() != B.cols()) throw std::invalid_argument("matrix must be square");
    if (B.rows() != b.size()) throw std::invalid_argument("dimension mismatch");
    std::size_t n = B.rows();

    // Augmented system: rows of B with the corresponding bit of b appended.
    std::vector<BitVec> rows(n, BitVec(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) rows[r].set(c, B.get(r, c));
        rows[r].set(n, b.get(r));
    }

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = pivot_row;
        while (sel < n && !rows[sel].get(col)) ++sel;
        if (sel == n) throw std::runtime_error("no unique solution");
        std::swap(rows[pivot_row], rows[sel]);
        for (std::size_t r = 0; r < n; ++r)
            if (r != pivot_row && rows[r].get(col)) rows[r] ^= rows[pivot_row];
        ++pivot_row;
    }

    BitVec x(n);
    for (std::size_t r = 0; r < n; ++r) x.set(r, rows[r].get(n));
    return x;
}

int rank(const BitMatrix& B) {
    std::vector<BitVec> rows;
    rows.reserve(B.rows());
    for (std::size_t r = 0; r < B.rows(); ++r) rows.push_back(B.row(r));

    int rk = 0;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < B.cols() && pivot_row < rows.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && !rows[sel].get(col)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != pivot_row && rows[r].get(col)) rows[r] ^= rows[pivot_row];
        ++pivot_row;
        ++rk;
    }
    return rk;
}

unsigned reverse_mask(unsigned mask, int n) {
    unsigned r = 0;
    for (int j = 0; j < n; ++j)
        if ((mask >> j) & 1u) r |= 1u << (n - 1 - j);
    return r;
}

BitVec subset_xor_sweep(const BitVec& f, int n) {
    std::size_t size = std::size_t{1} << n;
    if (f.size() != size) throw std::invalid_argument("length must be 2^n");
    std::vector<std::uint8_t> c(size);
    for (std::size_t m = 0; m < size; ++m) c[m] = f.get(m);
    for (int j = 0; j < n; ++j)
        for (std::size_t m = 0; m < size; ++m)
            if ((m >> j) & 1u) c[m] ^= c[m ^ (std::size_t{1} << j)];
    BitVec out(size);
    for (std::size_t m = 0; m < size; ++m) out.set(m, c[m] != 0);
    return out;
}

BitVec subset_xor_solve(int n, const BitVec& b) {
    std::size_t size = std::size_t{1} << n;
    if (b.size() != size - 1) throw std::invalid_argument("length must be 2^n - 1");
    BitVec f(size);
    for (std::size_t m = 1; m < size; ++m) f.set(m, b.get(m - 1));
    BitVec c = subset_xor_sweep(f, n);
    BitVec a(size - 1);
    for (unsigned i = 1; i < size; ++i) a.set(i - 1, c.get(reverse_mask(i, n)));
    return a;
}

}  // namespace dhs
