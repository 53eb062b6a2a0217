#include "dhsynth/diag.hpp"

#include <stdexcept>

namespace dhs {

std::vector<int> mask_wires(GateMask g) {
    std::vector<int> ws;
    for (int j = 0; j < g.n; ++j)
        if ((g.mask >> j) & 1u) ws.push_back(j);
    return ws;
}

static void check_signs(const DiagonalHermitian& d) {
    if (d.n < 1) throw std::invalid_argument("n must be >= 1");
    if (d.signs.size() != (std::size_t{1} << d.n))
        throw std::invalid_argument("signs must have 2^n entries");
    for (int s : d.signs)
        if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1/-1");
}

DiagonalHermitian normalize(DiagonalHermitian d) {
    check_signs(d);
    if (d.signs[0] == -1) {
        for (int& s : d.signs) s = -s;
        d.global_phase_flipped = !d.global_phase_flipped;
    }
    return d;
}

BitVec binary_of(const DiagonalHermitian& d) {
    check_signs(d);
    if (d.signs[0] != 1) throw std::invalid_argument("gate must be normalized");
    std::size_t size = std::size_t{1} << d.n;
    BitVec b(size - 1);
    for (std::size_t m = 1; m < size; ++m) b.set(m - 1, d.signs[m] == -1);
    return b;
}

DiagonalHermitian diagmat_of(const BitVec& b, int n) {
    std::size_t size = std::size_t{1} << n;
    if (b.size() != size - 1) throw std::invalid_argument("length must be 2^n - 1");
    DiagonalHermitian d;
    d.n = n;
    d.signs.assign(size, 1);
    for (std::size_t m = 1; m < size; ++m)
        if (b.get(m - 1)) d.signs[m] = -1;
    return d;
}

std::uint64_t matrix_id(const DiagonalHermitian& d) {
    check_signs(d);
    if (d.signs[0] != 1) throw std::invalid_argument("gate must be normalized");
    std::uint64_t id = 0;
    std::size_t size = std::size_t{1} << d.n;
    for (std::size_t m = 1; m < size; ++m)
        if (d.signs[m] == -1) id |= std::uint64_t{1} << (m - 1);
    return id;
}

DiagonalHermitian from_id(std::uint64_t id, int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("n out of range");
    int bits = (1 << n) - 1;
    if (bits < 64 && id >> bits) throw std::out_of_range("id out of range");
    std::size_t size = std::size_t{1} << n;
    DiagonalHermitian d;
    d.n = n;
    d.signs.assign(size, 1);
    for (std::size_t m = 1; m < size; ++m)
        if ((id >> (m - 1)) & 1u) d.signs[m] = -1;
    return d;
}

BitVec czi_binary(int n, GateMask g) {
    if (g.n != n) throw std::invalid_argument("mask width mismatch");
    std::size_t size = std::size_t{1} << n;
    if (g.mask == 0 || g.mask >= size) throw std::out_of_range("mask out of range");
    unsigned rev = reverse_mask(g.mask, n);
    BitVec b(size - 1);
    for (std::size_t m = 1; m < size; ++m) b.set(m - 1, (m & rev) == rev);
    return b;
}

BitMatrix basis_matrix(int n) {
    std::size_t dim = (std::size_t{1} << n) - 1;
    BitMatrix B(dim, dim);
    for (unsigned i = 1; i <= dim; ++i) {
        BitVec col = czi_binary(n, GateMask{n, i});
        for (std::size_t r = 0; r < dim; ++r) B.set(r, i - 1, col.get(r));
    }
    return B;
}

}  // namespace dhs
