#include "dhsynth/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace dhs {

using std::complex;
using cd = complex<double>;

bool is_rotation(GateKind k) {
    return k == GateKind::Rx || k == GateKind::Ry || k == GateKind::Rz;
}

bool is_single_qubit_kind(GateKind k) {
    switch (k) {
        case GateKind::Rx:
        case GateKind::Ry:
        case GateKind::Rz:
        case GateKind::H:
        case GateKind::T:
        case GateKind::Tdg:
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z:
            return true;
        default:
            return false;
    }
}

const char* mnemonic(GateKind k) {
    switch (k) {
        case GateKind::Rx: return "rx";
        case GateKind::Ry: return "ry";
        case GateKind::Rz: return "rz";
        case GateKind::H: return "h";
        case GateKind::T: return "t";
        case GateKind::Tdg: return "tdg";
        case GateKind::X: return "x";
        case GateKind::Y: return "y";
        case GateKind::Z: return "z";
        case GateKind::CZ: return "cz";
        case GateKind::CNOT: return "cnot";
        case GateKind::Ckz: return "ckz";
        case GateKind::CkNOT: return "cknot";
    }
    return "?";
}

bool Gate::operator==(const Gate& o) const {
    return kind == o.kind && qubits == o.qubits && angle == o.angle;
}

Gate make_gate(GateKind kind, std::vector<int> qubits) {
    if (is_rotation(kind)) throw std::invalid_argument("rotation gate needs an angle");
    std::size_t arity = qubits.size();
    if (is_single_qubit_kind(kind) && arity != 1)
        throw std::invalid_argument("single-qubit gate needs exactly one wire");
    if (kind == GateKind::CZ && arity != 2)
        throw std::invalid_argument("cz needs exactly two wires");
    if (kind == GateKind::CNOT && arity != 2)
        throw std::invalid_argument("cnot needs exactly two wires");
    if (kind == GateKind::Ckz && arity < 1)
        throw std::invalid_argument("ckz needs at least one wire");
    if (kind == GateKind::CkNOT && arity < 2)
        throw std::invalid_argument("cknot needs at least two wires");
    // CZ and C^kZ are symmetric under wire exchange; store canonically.
    if (kind == GateKind::CZ || kind == GateKind::Ckz)
        std::sort(qubits.begin(), qubits.end());
    return Gate{kind, std::move(qubits), 0.0};
}

Gate make_rotation(GateKind kind, double angle, int qubit) {
    if (!is_rotation(kind)) throw std::invalid_argument("not a rotation kind");
    return Gate{kind, {qubit}, angle};
}

void Circuit::push(Gate g) {
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
        int q = g.qubits[i];
        if (q < 0 || q >= width) throw std::out_of_range("wire out of range");
        for (std::size_t j = i + 1; j < g.qubits.size(); ++j)
            if (g.qubits[j] == q) throw std::invalid_argument("duplicate wire");
    }
    gates.push_back(std::move(g));
}

Eigen::Matrix2cd single_qubit_matrix(const Gate& g) {
    const double s2 = 1.0 / std::sqrt(2.0);
    const double pi = std::numbers::pi;
    Eigen::Matrix2cd m;
    switch (g.kind) {
        case GateKind::H:
            m << s2, s2, s2, -s2;
            return m;
        case GateKind::T:
            m << std::polar(1.0, pi / 8), 0, 0, std::polar(1.0, -pi / 8);
            return m;
        case GateKind::Tdg:
            m << std::polar(1.0, -pi / 8), 0, 0, std::polar(1.0, pi / 8);
            return m;
        case GateKind::X:
            m << 0, 1, 1, 0;
            return m;
        case GateKind::Y:
            m << 0, cd(0, -1), cd(0, 1), 0;
            return m;
        case GateKind::Z:
            m << 1, 0, 0, -1;
            return m;
        case GateKind::Rx: {
            double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
            m << c, cd(0, -s), cd(0, -s), c;
            return m;
        }
        case GateKind::Ry: {
            double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
            m << c, -s, s, c;
            return m;
        }
        case GateKind::Rz:
            m << std::polar(1.0, -g.angle / 2), 0, 0, std::polar(1.0, g.angle / 2);
            return m;
        default:
            throw std::invalid_argument("not a single-qubit gate");
    }
}

bool mat_is_identity_up_to_phase(const Eigen::Matrix2cd& u, double tol) {
    return std::abs(u(0, 1)) < tol && std::abs(u(1, 0)) < tol &&
           std::abs(u(0, 0) - u(1, 1)) < tol;
}

bool mat_is_diagonal(const Eigen::Matrix2cd& u, double tol) {
    return std::abs(u(0, 1)) < tol && std::abs(u(1, 0)) < tol;
}

int minimal_rotations(const Eigen::Matrix2cd& u, double tol) {
    // Normalize to SU(2) and read off the quaternion components of
    // u' = w*I - i*(x*sx + y*sy + z*sz).
    cd det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
    cd s = std::sqrt(det);
    cd a = u(0, 0) / s, b = u(0, 1) / s;
    double w = a.real(), z = -a.imag();
    double y = -b.real(), x = -b.imag();
    if (std::abs(x) < tol && std::abs(y) < tol && std::abs(z) < tol) return 0;
    if (std::abs(y) < tol && std::abs(z) < tol) return 1;  // x-axis rotation
    if (std::abs(x) < tol && std::abs(z) < tol) return 1;  // y-axis rotation
    // Rx(a)*Ry(b) products satisfy w*z = x*y; Ry(a)*Rx(b) give w*z = -x*y.
    if (std::abs(w * z - x * y) < tol || std::abs(w * z + x * y) < tol) return 2;
    return 3;
}

CostReport count_gates(const Circuit& c) {
    CostReport rep;
    std::vector<Eigen::Matrix2cd> run(c.width, Eigen::Matrix2cd::Identity());
    std::vector<bool> dirty(c.width, false);

    auto flush = [&](int w) {
        if (dirty[w] && !mat_is_identity_up_to_phase(run[w])) {
            rep.rotations += 3;
            rep.min_rotations += minimal_rotations(run[w]);
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
            ++rep.cz;
            flush(g.qubits[0]);
            flush(g.qubits[1]);
        } else {
            throw std::invalid_argument("not lowered");
        }
    }
    for (int w = 0; w < c.width; ++w) flush(w);
    return rep;
}

static std::string format_angle(double a) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12f", a);
    return buf;
}

std::string emit_text(const Circuit& c) {
    std::ostringstream out;
    out << "qubits " << c.width << "\n";
    for (const Gate& g : c.gates) {
        out << mnemonic(g.kind);
        if (is_rotation(g.kind)) out << ' ' << format_angle(g.angle);
        for (int q : g.qubits) out << ' ' << q;
        out << "\n";
    }
    return out.str();
}

static GateKind kind_from_mnemonic(const std::string& m) {
    static const std::pair<const char*, GateKind> table[] = {
        {"rx", GateKind::Rx},     {"ry", GateKind::Ry},   {"rz", GateKind::Rz},
        {"h", GateKind::H},       {"t", GateKind::T},     {"tdg", GateKind::Tdg},
        {"x", GateKind::X},       {"y", GateKind::Y},     {"z", GateKind::Z},
        {"cz", GateKind::CZ},     {"cnot", GateKind::CNOT},
        {"ckz", GateKind::Ckz},   {"cknot", GateKind::CkNOT},
    };
    for (auto& [name, k] : table)
        if (m == name) return k;
    throw std::runtime_error("unknown mnemonic '" + m + "'");
}

Circuit parse_text(const std::string& t) {
    std::istringstream in(t);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    Circuit c;

    auto fail = [&](const std::string& msg) -> void {
        throw std::runtime_error("line " + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        if (!have_header) {
            if (tok != "qubits") fail("expected 'qubits N' header");
            int n;
            if (!(ls >> n) || n < 1) fail("malformed qubit count");
            c.width = n;
            have_header = true;
            continue;
        }
        GateKind kind = GateKind::H;
        try {
            kind = kind_from_mnemonic(tok);
        } catch (const std::exception& e) {
            fail(e.what());
        }
        double angle = 0.0;
        if (is_rotation(kind)) {
            std::string num;
            if (!(ls >> num)) fail("missing angle");
            std::size_t pos = 0;
            try {
                angle = std::stod(num, &pos);
            } catch (const std::exception&) {
                fail("malformed number '" + num + "'");
            }
            if (pos != num.size()) fail("malformed number '" + num + "'");
        }
        std::vector<int> qubits;
        std::string wtok;
        while (ls >> wtok) {
            std::size_t pos = 0;
            int w = 0;
            try {
                w = std::stoi(wtok, &pos);
            } catch (const std::exception&) {
                fail("malformed wire '" + wtok + "'");
            }
            if (pos != wtok.size()) fail("malformed wire '" + wtok + "'");
            qubits.push_back(w);
        }
        if (is_rotation(kind) && qubits.size() != 1) fail("wrong wire count");
        try {
            Gate g = is_rotation(kind) ? make_rotation(kind, angle, qubits[0])
                                       : make_gate(kind, qubits);
            c.push(std::move(g));
        } catch (const std::exception& e) {
            fail(e.what());
        }
    }
    if (!have_header) {
        lineno = 0;
        fail("missing 'qubits N' header");
    }
    return c;
}

std::string emit_qasm(const Circuit& c) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" << c.width << "];\n";
    for (const Gate& g : c.gates) {
        switch (g.kind) {
            case GateKind::Rx:
            case GateKind::Ry:
            case GateKind::Rz:
                out << mnemonic(g.kind) << '(' << format_angle(g.angle) << ") q["
                    << g.qubits[0] << "];\n";
                break;
            case GateKind::H:
            case GateKind::T:
            case GateKind::Tdg:
            case GateKind::X:
            case GateKind::Y:
            case GateKind::Z:
                out << mnemonic(g.kind) << " q[" << g.qubits[0] << "];\n";
                break;
            case GateKind::CZ:
                out << "cz q[" << g.qubits[0] << "],q[" << g.qubits[1] << "];\n";
                break;
            case GateKind::CNOT:
                out << "cx q[" << g.qubits[0] << "],q[" << g.qubits[1] << "];\n";
                break;
            default:
                throw std::invalid_argument("not lowered");
        }
    }
    return out.str();
}

}  // namespace dhs
