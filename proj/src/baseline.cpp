#include "dhsynth/baseline.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dhs {

PhaseVector phase_vector_of(const DiagonalHermitian& d) {
    if (d.signs.at(0) != 1) throw std::invalid_argument("gate must be normalized");
    PhaseVector p;
    p.n = d.n;
    p.phases.reserve(d.signs.size());
    for (int s : d.signs) p.phases.push_back(s > 0 ? 0.0 : std::numbers::pi);
    return p;
}

int MuxStructure::slot_count() const {
    int k = 0;
    for (const auto& e : elements) k += e.is_slot ? 1 : 0;
    return k;
}

int MuxStructure::cz_count() const {
    return static_cast<int>(elements.size()) - slot_count();
}

// Control wire for the s-th CZ (1-based) of the block targeting wire t:
// the binary ruler sequence t-1 - min(ctz(s), t-1).
static int ruler_control(int t, int s) {
    int c = std::countr_zero(static_cast<unsigned>(s));
    if (c > t - 1) c = t - 1;
    return t - 1 - c;
}

MuxStructure build_structure(int n) {
    if (n < 1 || n > 10) throw std::invalid_argument("n out of range");
    MuxStructure st;
    st.n = n;
    const int dim = 1 << n;
    st.indicator = Eigen::MatrixXd::Zero(dim, dim - 1);

    int slot = 0;
    for (int t = n - 1; t >= 1; --t) {
        std::vector<int> prefix;  // controls of the CZs preceding each slot
        for (int s = 0; s < (1 << t); ++s) {
            st.elements.push_back({true, t, slot, -1});
            for (int m = 0; m < dim; ++m) {
                int v = (m >> (n - 1 - t)) & 1;
                for (int c : prefix) v ^= (m >> (n - 1 - c)) & 1;
                st.indicator(m, slot) = v;
            }
            ++slot;
            int ctrl = ruler_control(t, s + 1);
            st.elements.push_back({false, t, -1, ctrl});
            prefix.push_back(ctrl);
        }
    }
    st.elements.push_back({true, 0, slot, -1});
    for (int m = 0; m < dim; ++m) st.indicator(m, slot) = (m >> (n - 1)) & 1;
    ++slot;

    Eigen::MatrixXd A = st.indicator.bottomRows(dim - 1);
    st.lu = std::make_shared<Eigen::PartialPivLU<Eigen::MatrixXd>>(A);
    return st;
}

std::vector<double> compute_angles(const MuxStructure& s, const PhaseVector& d) {
    const int dim = 1 << s.n;
    if (static_cast<int>(d.phases.size()) != dim || d.n != s.n)
        throw std::invalid_argument("phase vector size mismatch");
    Eigen::VectorXd rel(dim - 1);
    for (int m = 1; m < dim; ++m) rel(m - 1) = d.phases[m] - d.phases[0];
    Eigen::VectorXd x = s.lu->solve(rel);
    std::vector<double> angles(x.data(), x.data() + x.size());
    for (double& a : angles)
        if (std::abs(a) < 1e-12) a = 0.0;
    return angles;
}

Circuit structure_circuit(const MuxStructure& s, const std::vector<double>& angles) {
    if (static_cast<int>(angles.size()) != s.slot_count())
        throw std::invalid_argument("angle count mismatch");
    Circuit c(s.n);
    int cur = -1;  // current block target wire, -1 before the first slot
    for (const auto& e : s.elements) {
        if (e.is_slot) {
            if (e.wire != cur) {
                if (cur > 0) c.push(make_gate(GateKind::H, {cur}));
                cur = e.wire;
                c.push(make_rotation(GateKind::Rz, angles[e.slot_index], e.wire));
                if (e.wire != 0) c.push(make_gate(GateKind::H, {e.wire}));
            } else {
                c.push(make_gate(GateKind::H, {e.wire}));
                c.push(make_rotation(GateKind::Rz, angles[e.slot_index], e.wire));
                c.push(make_gate(GateKind::H, {e.wire}));
            }
        } else {
            c.push(make_gate(GateKind::CZ, {e.control, e.wire}));
        }
    }
    if (cur > 0) c.push(make_gate(GateKind::H, {cur}));
    return c;
}

namespace {

struct Item {
    bool is_box;
    // box fields
    int wire = -1;
    Eigen::Matrix2cd mat;
    std::vector<Gate> gates;
    // non-box fields
    Gate gate{GateKind::CZ, {0, 1}, 0.0};
};

}  // namespace

// Diagonal-in-computational-basis test used by the CZ cancellation rule.
static bool is_diag_kind(GateKind k) {
    return k == GateKind::Z || k == GateKind::CZ || k == GateKind::Ckz ||
           k == GateKind::Rz || k == GateKind::T || k == GateKind::Tdg;
}

Circuit optimize(const Circuit& c) {
    std::vector<Item> items;
    for (const Gate& g : c.gates) {
        if (is_single_qubit_kind(g.kind)) {
            Item it;
            it.is_box = true;
            it.wire = g.qubits[0];
            it.mat = single_qubit_matrix(g);
            it.gates = {g};
            items.push_back(std::move(it));
        } else {
            Item it;
            it.is_box = false;
            it.gate = g;
            items.push_back(std::move(it));
        }
    }

    auto touches = [](const Item& it, int w) {
        if (it.is_box) return it.wire == w;
        for (int q : it.gate.qubits)
            if (q == w) return true;
        return false;
    };

    bool changed = true;
    while (changed) {
        changed = false;

        // Merge same-wire boxes separated only by gates not touching the wire.
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (!items[i].is_box) continue;
            int w = items[i].wire;
            for (std::size_t j = i + 1; j < items.size();) {
                if (items[j].is_box && items[j].wire == w) {
                    items[i].mat = items[j].mat * items[i].mat;
                    items[i].gates.insert(items[i].gates.end(),
                                          items[j].gates.begin(),
                                          items[j].gates.end());
                    items.erase(items.begin() + static_cast<long>(j));
                    changed = true;
                    continue;
                }
                if (touches(items[j], w)) break;
                ++j;
            }
        }

        // Delete identity boxes (identity up to phase).
        for (std::size_t i = 0; i < items.size();) {
            if (items[i].is_box && mat_is_identity_up_to_phase(items[i].mat)) {
                items.erase(items.begin() + static_cast<long>(i));
                changed = true;
            } else {
                ++i;
            }
        }

        // Cancel equal CZ/C^kZ pairs when every intervening gate on the
        // shared wires is diagonal.
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (items[i].is_box) continue;
            const Gate& gi = items[i].gate;
            if (gi.kind != GateKind::CZ && gi.kind != GateKind::Ckz) continue;
            for (std::size_t j = i + 1; j < items.size(); ++j) {
                if (!items[j].is_box && items[j].gate == gi) {
                    items.erase(items.begin() + static_cast<long>(j));
                    items.erase(items.begin() + static_cast<long>(i));
                    changed = true;
                    --i;
                    break;
                }
                bool shares = false;
                for (int q : gi.qubits)
                    if (touches(items[j], q)) {
                        shares = true;
                        break;
                    }
                if (!shares) continue;
                bool diag = items[j].is_box ? mat_is_diagonal(items[j].mat)
                                            : is_diag_kind(items[j].gate.kind);
                if (!diag) break;
            }
        }
    }

    Circuit out(c.width);
    for (const Item& it : items) {
        if (it.is_box)
            for (const Gate& g : it.gates) out.push(g);
        else
            out.push(it.gate);
    }
    return out;
}

Circuit baseline_circuit(const MuxStructure& s, const DiagonalHermitian& d) {
    std::vector<double> angles = compute_angles(s, phase_vector_of(d));
    return optimize(structure_circuit(s, angles));
}

CostReport baseline_cost(const MuxStructure& s, const DiagonalHermitian& d) {
    return count_gates(baseline_circuit(s, d));
}

CostReport baseline_cost(const DiagonalHermitian& d) {
    return baseline_cost(build_structure(d.n), d);
}

}  // namespace dhs
