#include "dhsynth/lowering.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dhs {

namespace {

constexpr double kPi = std::numbers::pi;

void push1(std::vector<Gate>& gs, GateKind k, int w) {
    gs.push_back(make_gate(k, {w}));
}

void push_cz(std::vector<Gate>& gs, int a, int b) {
    gs.push_back(make_gate(GateKind::CZ, {a, b}));
}

void push_rz(std::vector<Gate>& gs, double angle, int w) {
    gs.push_back(make_rotation(GateKind::Rz, angle, w));
}

// The fixed CZ + {H, T, Tdg} network realizing C^2Z on wires (a, b, t),
// a/b controls and t target; box letters appear in time order.
std::vector<Gate> c2z_gates(int a, int b, int t) {
    std::vector<Gate> g;
    push1(g, GateKind::H, t);
    push_cz(g, b, t);
    push1(g, GateKind::H, t);
    push1(g, GateKind::Tdg, t);
    push1(g, GateKind::H, t);
    push_cz(g, a, t);
    push1(g, GateKind::H, t);
    push1(g, GateKind::T, t);
    push1(g, GateKind::H, t);
    push_cz(g, b, t);
    push1(g, GateKind::H, t);
    push1(g, GateKind::Tdg, t);
    push1(g, GateKind::H, t);
    push_cz(g, a, t);
    push1(g, GateKind::T, b);
    push1(g, GateKind::H, b);
    push1(g, GateKind::H, t);
    push1(g, GateKind::T, t);
    push_cz(g, a, b);
    push1(g, GateKind::T, a);
    push1(g, GateKind::H, b);
    push1(g, GateKind::Tdg, b);
    push1(g, GateKind::H, b);
    push_cz(g, a, b);
    push1(g, GateKind::H, b);
    return g;
}

bool near_odd_pi(double theta) {
    double r = std::fmod(std::fmod(theta / kPi, 2.0) + 2.0, 2.0);  // in [0,2)
    return std::abs(r - 1.0) < 1e-12;
}

// Two-qubit controlled phase: applies e^{i*theta} exactly when both wires
// read 1 (up to global phase after the P -> Rz substitution).
std::vector<Gate> cp2(double theta, int c, int t) {
    std::vector<Gate> g;
    if (near_odd_pi(theta)) {
        push_cz(g, c, t);
        return g;
    }
    push_rz(g, theta / 2, c);
    push_rz(g, theta / 2, t);
    push1(g, GateKind::H, t);
    push_cz(g, c, t);
    push1(g, GateKind::H, t);
    push_rz(g, -theta / 2, t);
    push1(g, GateKind::H, t);
    push_cz(g, c, t);
    push1(g, GateKind::H, t);
    return g;
}

std::vector<Gate> ckp(double theta, const std::vector<int>& controls, int t);

// Multi-controlled X via an H sandwich around the multi-controlled Z/phase.
std::vector<Gate> cnx(const std::vector<int>& controls, int t) {
    std::vector<Gate> g;
    push1(g, GateKind::H, t);
    if (controls.size() == 1) {
        push_cz(g, controls[0], t);
    } else if (controls.size() == 2) {
        auto body = c2z_gates(controls[0], controls[1], t);
        g.insert(g.end(), body.begin(), body.end());
    } else {
        auto body = ckp(kPi, controls, t);
        g.insert(g.end(), body.begin(), body.end());
    }
    push1(g, GateKind::H, t);
    return g;
}

// Multi-controlled phase gate:
// C^kP(theta) = C^1P(theta/2; c_k, t) . C^{k-1}X(rest -> c_k)
//             . C^1P(-theta/2; c_k, t) . C^{k-1}X(rest -> c_k)
//             . C^{k-1}P(theta/2; rest, t)
std::vector<Gate> ckp(double theta, const std::vector<int>& controls, int t) {
    if (controls.empty()) {
        std::vector<Gate> g;
        push_rz(g, theta, t);
        return g;
    }
    if (controls.size() == 1) return cp2(theta, controls[0], t);

    int ck = controls.back();
    std::vector<int> rest(controls.begin(), controls.end() - 1);
    std::vector<Gate> g;
    auto append = [&](std::vector<Gate> part) {
        g.insert(g.end(), part.begin(), part.end());
    };
    append(cp2(theta / 2, ck, t));
    append(cnx(rest, ck));
    append(cp2(-theta / 2, ck, t));
    append(cnx(rest, ck));
    append(ckp(theta / 2, rest, t));
    return g;
}

}  // namespace

Circuit lower_ckz(GateMask g) {
    std::vector<int> ws = mask_wires(g);
    if (ws.empty()) throw std::invalid_argument("mask must be nonzero");
    Circuit c(g.n);
    if (ws.size() == 1) {
        c.push(make_gate(GateKind::Z, ws));
    } else if (ws.size() == 2) {
        c.push(make_gate(GateKind::CZ, ws));
    } else if (ws.size() == 3) {
        for (Gate& gate : c2z_gates(ws[0], ws[1], ws[2])) c.push(std::move(gate));
    } else {
        std::vector<int> controls(ws.begin(), ws.end() - 1);
        for (Gate& gate : ckp(kPi, controls, ws.back())) c.push(std::move(gate));
    }
    return c;
}

const CostModel& CostModel::standard() {
    static CostModel model;
    return model;
}

std::pair<int, int> CostModel::ckz_cost(int popcount) const {
    if (popcount < 1) throw std::invalid_argument("popcount must be >= 1");
    if (popcount == 1) return {0, 3};
    if (popcount == 2) return {1, 0};
    if (popcount == 3) return {6, 27};
    auto it = cache_.find(popcount);
    if (it != cache_.end()) return it->second;
    unsigned mask = (1u << popcount) - 1;
    CostReport rep = count_gates(lower_ckz(GateMask{popcount, mask}));
    auto cost = std::make_pair(rep.cz, rep.rotations);
    cache_.emplace(popcount, cost);
    return cost;
}

std::pair<Circuit, CostReport> lower_selection(const CzSelection& s,
                                               const CostModel& model) {
    Circuit c(s.n);
    CostReport rep;
    for (unsigned mask : s.selected) {
        GateMask gm{s.n, mask};
        Circuit part = lower_ckz(gm);
        for (Gate& g : part.gates) c.push(std::move(g));
        auto [cz, rot] = model.ckz_cost(static_cast<int>(mask_wires(gm).size()));
        rep.cz += cz;
        rep.rotations += rot;
    }
    rep.min_rotations = count_gates(c).min_rotations;
    return {std::move(c), rep};
}

Circuit ckz_cknot_rewrite(const Circuit& c, RewriteDirection dir) {
    Circuit out(c.width);
    for (const Gate& g : c.gates) {
        if (dir == RewriteDirection::CkzToCknot &&
            (g.kind == GateKind::Z || g.kind == GateKind::CZ ||
             g.kind == GateKind::Ckz)) {
            int t = g.qubits.back();
            out.push(make_gate(GateKind::H, {t}));
            if (g.kind == GateKind::Z)
                out.push(make_gate(GateKind::X, {t}));
            else if (g.kind == GateKind::CZ)
                out.push(make_gate(GateKind::CNOT, g.qubits));
            else
                out.push(make_gate(GateKind::CkNOT, g.qubits));
            out.push(make_gate(GateKind::H, {t}));
        } else if (dir == RewriteDirection::CknotToCkz &&
                   (g.kind == GateKind::X || g.kind == GateKind::CNOT ||
                    g.kind == GateKind::CkNOT)) {
            int t = g.qubits.back();
            out.push(make_gate(GateKind::H, {t}));
            if (g.kind == GateKind::X)
                out.push(make_gate(GateKind::Z, {t}));
            else if (g.kind == GateKind::CNOT)
                out.push(make_gate(GateKind::CZ, g.qubits));
            else
                out.push(make_gate(GateKind::Ckz, g.qubits));
            out.push(make_gate(GateKind::H, {t}));
        } else {
            out.push(g);
        }
    }
    return out;
}

EulerXYX euler_xyx(const Eigen::Matrix2cd& u) {
    // Conjugate by H: a z-y-z decomposition of H*u*H gives an x-y-x
    // decomposition of u (with the middle angle negated, since HYH = -Y).
    Eigen::Matrix2cd h;
    const double s2 = 1.0 / std::sqrt(2.0);
    h << s2, s2, s2, -s2;
    Eigen::Matrix2cd v = h * u * h;

    // z-y-z of v (up to phase): v ~ Rz(az) Ry(by) Rz(gz).
    std::complex<double> det = v(0, 0) * v(1, 1) - v(0, 1) * v(1, 0);
    std::complex<double> s = std::sqrt(det);
    Eigen::Matrix2cd w = v / s;
    double by = 2.0 * std::atan2(std::abs(w(1, 0)), std::abs(w(0, 0)));
    double sum, dif;  // az + gz, az - gz
    if (std::abs(w(0, 0)) > 1e-9)
        sum = -2.0 * std::arg(w(0, 0));
    else
        sum = 0.0;
    if (std::abs(w(1, 0)) > 1e-9)
        dif = 2.0 * std::arg(w(1, 0));
    else
        dif = 0.0;
    double az = (sum + dif) / 2.0, gz = (sum - dif) / 2.0;
    return EulerXYX{az, -by, gz};
}

Circuit materialize_rotations(const Circuit& c) {
    Circuit out(c.width);
    std::vector<Eigen::Matrix2cd> run(c.width, Eigen::Matrix2cd::Identity());
    std::vector<bool> dirty(c.width, false);

    auto flush = [&](int w) {
        if (dirty[w] && !mat_is_identity_up_to_phase(run[w])) {
            EulerXYX e = euler_xyx(run[w]);
            if (std::abs(e.gamma) > 1e-12)
                out.push(make_rotation(GateKind::Rx, e.gamma, w));
            if (std::abs(e.beta) > 1e-12)
                out.push(make_rotation(GateKind::Ry, e.beta, w));
            if (std::abs(e.alpha) > 1e-12)
                out.push(make_rotation(GateKind::Rx, e.alpha, w));
        }
        run[w] = Eigen::Matrix2cd::Identity();
        dirty[w] = false;
    };

    for (const Gate& g : c.gates) {
        if (is_single_qubit_kind(g.kind)) {
            int w = g.qubits[0];
            run[w] = single_qubit_matrix(g) * run[w];
            dirty[w] = true;
        } else if (g.kind == GateKind::CZ) {
            flush(g.qubits[0]);
            flush(g.qubits[1]);
            out.push(g);
        } else {
            throw std::invalid_argument("not lowered");
        }
    }
    for (int w = 0; w < c.width; ++w) flush(w);
    return out;
}

}  // namespace dhs
