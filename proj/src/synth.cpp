#include "dhsynth/synth.hpp"

#include <stdexcept>

namespace dhs {

CzSelection decompose(const DiagonalHermitian& d, Backend backend) {
    if (d.signs.at(0) != 1) throw std::invalid_argument("gate must be normalized");
    BitVec b = binary_of(d);
    BitVec a = (backend == Backend::Subset) ? subset_xor_solve(d.n, b)
                                            : solve_gaussian(basis_matrix(d.n), b);
    CzSelection s;
    s.n = d.n;
    for (unsigned i = 1; i <= a.size(); ++i)
        if (a.get(i - 1)) s.selected.push_back(i);
    return s;
}

Circuit selection_to_circuit(const CzSelection& s) {
    Circuit c(s.n);
    for (unsigned mask : s.selected) {
        std::vector<int> ws = mask_wires(GateMask{s.n, mask});
        if (ws.empty()) throw std::invalid_argument("empty mask in selection");
        if (ws.size() == 1)
            c.push(make_gate(GateKind::Z, ws));
        else if (ws.size() == 2)
            c.push(make_gate(GateKind::CZ, ws));
        else
            c.push(make_gate(GateKind::Ckz, ws));
    }
    return c;
}

DiagonalHermitian reconstruct(const CzSelection& s) {
    std::size_t len = (std::size_t{1} << s.n) - 1;
    BitVec acc(len);
    for (unsigned mask : s.selected) acc ^= czi_binary(s.n, GateMask{s.n, mask});
    return diagmat_of(acc, s.n);
}

}  // namespace dhs
