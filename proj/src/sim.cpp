#include "dhsynth/sim.hpp"

#include <complex>
#include <numbers>
#include <stdexcept>

namespace dhs {

using cd = std::complex<double>;

UnitaryMatrix UnitaryMatrix::identity(int dim) {
    UnitaryMatrix u;
    u.dim_ = dim;
    u.diagonal_ = true;
    u.diag_ = Eigen::VectorXcd::Ones(dim);
    return u;
}

UnitaryMatrix UnitaryMatrix::from_diagonal(Eigen::VectorXcd d) {
    UnitaryMatrix u;
    u.dim_ = static_cast<int>(d.size());
    u.diagonal_ = true;
    u.diag_ = std::move(d);
    return u;
}

UnitaryMatrix UnitaryMatrix::from_dense(Eigen::MatrixXcd m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
    UnitaryMatrix u;
    u.dim_ = static_cast<int>(m.rows());
    u.diagonal_ = false;
    u.mat_ = std::move(m);
    return u;
}

const Eigen::VectorXcd& UnitaryMatrix::diagonal() const {
    if (!diagonal_) throw std::logic_error("not in diagonal representation");
    return diag_;
}

Eigen::MatrixXcd UnitaryMatrix::dense() const {
    if (!diagonal_) return mat_;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim_, dim_);
    for (int i = 0; i < dim_; ++i) m(i, i) = diag_(i);
    return m;
}

bool UnitaryMatrix::is_unitary(double tol) const {
    if (diagonal_) {
        for (int i = 0; i < dim_; ++i)
            if (std::abs(std::abs(diag_(i)) - 1.0) > tol) return false;
        return true;
    }
    Eigen::MatrixXcd p = mat_ * mat_.adjoint();
    return (p - Eigen::MatrixXcd::Identity(dim_, dim_)).cwiseAbs().maxCoeff() <= tol;
}

bool is_diagonal_kind(GateKind k) {
    switch (k) {
        case GateKind::Rz:
        case GateKind::T:
        case GateKind::Tdg:
        case GateKind::Z:
        case GateKind::CZ:
        case GateKind::Ckz:
            return true;
        default:
            return false;
    }
}

static int state_bit(int r, int width, int wire) {
    return (r >> (width - 1 - wire)) & 1;
}

// Per-basis-state phase factor of a diagonal gate, or 1 on untouched states.
static cd diag_factor(const Gate& g, int width, int r) {
    switch (g.kind) {
        case GateKind::Z:
        case GateKind::CZ:
        case GateKind::Ckz: {
            for (int w : g.qubits)
                if (!state_bit(r, width, w)) return 1.0;
            return -1.0;
        }
        case GateKind::Rz:
            return std::polar(1.0, (state_bit(r, width, g.qubits[0]) ? 1.0 : -1.0) *
                                       g.angle / 2);
        case GateKind::T:
            return std::polar(1.0, (state_bit(r, width, g.qubits[0]) ? -1.0 : 1.0) *
                                       std::numbers::pi / 8);
        case GateKind::Tdg:
            return std::polar(1.0, (state_bit(r, width, g.qubits[0]) ? 1.0 : -1.0) *
                                       std::numbers::pi / 8);
        default:
            throw std::logic_error("not a diagonal gate");
    }
}

static void apply_single(Eigen::MatrixXcd& U, int width, int wire,
                         const Eigen::Matrix2cd& m) {
    const int dim = 1 << width;
    const int bit = 1 << (width - 1 - wire);
    Eigen::RowVectorXcd top(dim);
    for (int r = 0; r < dim; ++r) {
        if (r & bit) continue;
        int p = r | bit;
        top = U.row(r);
        U.row(r) = m(0, 0) * top + m(0, 1) * U.row(p);
        U.row(p) = m(1, 0) * top + m(1, 1) * U.row(p);
    }
}

static void apply_gate_dense(Eigen::MatrixXcd& U, int width, const Gate& g) {
    const int dim = 1 << width;
    if (is_diagonal_kind(g.kind)) {
        for (int r = 0; r < dim; ++r) {
            cd f = diag_factor(g, width, r);
            if (f != cd(1.0)) U.row(r) *= f;
        }
        return;
    }
    if (is_single_qubit_kind(g.kind)) {
        apply_single(U, width, g.qubits[0], single_qubit_matrix(g));
        return;
    }
    if (g.kind == GateKind::CNOT || g.kind == GateKind::CkNOT) {
        int target = g.qubits.back();
        int tbit = 1 << (width - 1 - target);
        for (int r = 0; r < dim; ++r) {
            if (r & tbit) continue;
            bool ctrl = true;
            for (std::size_t i = 0; i + 1 < g.qubits.size(); ++i)
                if (!state_bit(r, width, g.qubits[i])) {
                    ctrl = false;
                    break;
                }
            if (ctrl) U.row(r).swap(U.row(r | tbit));
        }
        return;
    }
    throw std::invalid_argument("unsupported gate kind");
}

UnitaryMatrix gate_matrix(const Gate& g, int width) {
    if (width > 12) throw std::length_error("width > 12 unsupported");
    const int dim = 1 << width;
    if (is_diagonal_kind(g.kind)) {
        Eigen::VectorXcd d(dim);
        for (int r = 0; r < dim; ++r) d(r) = diag_factor(g, width, r);
        return UnitaryMatrix::from_diagonal(std::move(d));
    }
    Eigen::MatrixXcd U = Eigen::MatrixXcd::Identity(dim, dim);
    apply_gate_dense(U, width, g);
    return UnitaryMatrix::from_dense(std::move(U));
}

UnitaryMatrix unitary_of(const Circuit& c) {
    if (c.width > 12) throw std::length_error("width > 12 unsupported");
    const int dim = 1 << c.width;

    bool all_diag = true;
    for (const Gate& g : c.gates)
        if (!is_diagonal_kind(g.kind)) {
            all_diag = false;
            break;
        }

    if (all_diag) {
        Eigen::VectorXcd d = Eigen::VectorXcd::Ones(dim);
        for (const Gate& g : c.gates)
            for (int r = 0; r < dim; ++r) d(r) *= diag_factor(g, c.width, r);
        return UnitaryMatrix::from_diagonal(std::move(d));
    }

    Eigen::MatrixXcd U = Eigen::MatrixXcd::Identity(dim, dim);
    for (const Gate& g : c.gates) apply_gate_dense(U, c.width, g);
    return UnitaryMatrix::from_dense(std::move(U));
}

UnitaryMatrix unitary_of(const DiagonalHermitian& d) {
    const int dim = 1 << d.n;
    Eigen::VectorXcd v(dim);
    for (int i = 0; i < dim; ++i) v(i) = static_cast<double>(d.signs[i]);
    return UnitaryMatrix::from_diagonal(std::move(v));
}

bool equal_up_to_phase(const UnitaryMatrix& U, const UnitaryMatrix& V, double tol) {
    if (U.dim() != V.dim()) return false;
    const int dim = U.dim();
    const double floor = 0.5 / dim;

    if (U.diagonal_rep() && V.diagonal_rep()) {
        const auto& u = U.diagonal();
        const auto& v = V.diagonal();
        // Off-diagonal parts are exactly zero on both sides.
        cd c(0);
        for (int i = 0; i < dim; ++i)
            if (std::abs(v(i)) > floor) {
                c = u(i) / v(i);
                break;
            }
        if (c == cd(0)) return (u - v).cwiseAbs().maxCoeff() <= tol;
        if (std::abs(std::abs(c) - 1.0) > tol) return false;
        return (u - c * v).cwiseAbs().maxCoeff() <= tol;
    }

    Eigen::MatrixXcd A = U.dense(), B = V.dense();
    cd c(0);
    bool found = false;
    for (int r = 0; r < dim && !found; ++r)
        for (int col = 0; col < dim && !found; ++col)
            if (std::abs(B(r, col)) > floor) {
                c = A(r, col) / B(r, col);
                found = true;
            }
    if (!found) return (A - B).cwiseAbs().maxCoeff() <= tol;
    if (std::abs(std::abs(c) - 1.0) > tol) return false;
    return (A - c * B).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace dhs
