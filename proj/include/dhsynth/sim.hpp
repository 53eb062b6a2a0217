#pragma once

#include <Eigen/Dense>

#include "dhsynth/circuit.hpp"
#include "dhsynth/diag.hpp"

namespace dhs {

// Dense (or diagonal-only) unitary over 2^n basis states. Wire 0 is the
// most significant bit of the basis-state index.
class UnitaryMatrix {
public:
    static UnitaryMatrix identity(int dim);
    static UnitaryMatrix from_diagonal(Eigen::VectorXcd d);
    static UnitaryMatrix from_dense(Eigen::MatrixXcd m);

    int dim() const { return dim_; }
    bool diagonal_rep() const { return diagonal_; }
    const Eigen::VectorXcd& diagonal() const;  // throws if dense
    Eigen::MatrixXcd dense() const;            // materializes when diagonal
    bool is_unitary(double tol = 1e-10) const;

private:
    int dim_ = 1;
    bool diagonal_ = true;
    Eigen::VectorXcd diag_;
    Eigen::MatrixXcd mat_;
};

// True for kinds whose matrix is diagonal in the computational basis.
bool is_diagonal_kind(GateKind k);

// 2^width-dimensional embedding of a single gate (identity elsewhere).
UnitaryMatrix gate_matrix(const Gate& g, int width);

// Ordered product of gate matrices, leftmost gate applied first. Uses a
// diagonal-only fast path when every gate is diagonal. Throws on width > 12.
UnitaryMatrix unitary_of(const Circuit& c);

// True iff there exists a unit scalar c with max|U - c*V| <= tol. The
// anchor c is fixed from the first entry of V with modulus > 0.5/dim.
bool equal_up_to_phase(const UnitaryMatrix& U, const UnitaryMatrix& V, double tol);

// Diagonal unitary of a +-1 diagonal Hermitian gate.
UnitaryMatrix unitary_of(const DiagonalHermitian& d);

}  // namespace dhs
