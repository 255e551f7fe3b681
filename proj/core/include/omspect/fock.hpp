// fock.hpp — Truncated Fock-space carriers: bosonic operators, displacement
// matrices, and dense matrices over the cavity (x) mechanical product basis.

#pragma once

#include <functional>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "omspect/model.hpp"

namespace omspect::fock {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using SparseMatrix = Eigen::SparseMatrix<cplx>;

struct Truncation {
    int n_cav{2};
    int n_mech{4};
    int dim() const { return n_cav * n_mech; }
};

// throws std::invalid_argument unless n_cav >= 2 and n_mech >= 4
void check(const Truncation& t);

// Dense complex matrix over the product basis |j_cav> (x) |p_mech>,
// row/col index = j * n_mech + p.
struct FockMatrix {
    Truncation trunc;
    Matrix mat;

    int dim() const { return trunc.dim(); }
};

// Non-fatal numerical warnings (truncation mass, unitarity defects) are
// reported through this hook; default is silent.
using WarningHandler = std::function<void(const std::string&)>;
void set_warning_handler(WarningHandler handler);
void warn(const std::string& message);

// single-mode annihilation operator, dim x dim
Matrix annihilation(int dim);
SparseMatrix annihilation_sparse(int dim);

// D(alpha) = exp(alpha b^dag - alpha* b) on a truncated basis, computed from
// the Hermitian eigendecomposition of -i(alpha b^dag - alpha* b); unitary to
// rounding. Warns when |alpha|^2 is large against the cutoff or when the
// unitarity defect exceeds 1e-8.
Matrix displacement_matrix(cplx alpha, int n_mech);

// exp(eta b) or exp(eta b^dag); series terminates once the next term drops
// below 1e-14 in norm (b is nilpotent in truncation).
Matrix exp_eta_b(cplx eta, int n_mech, bool daggered);

// Fraction of |mat|^2 mass carried by the last `edge` rows/columns.
double tail_mass(const Matrix& mat, int edge = 1);

// column-stacking vectorization and its inverse
Vector vec(const Matrix& m);
Matrix unvec(const Vector& v, int rows, int cols);

// sparse Kronecker product (column-stacked superoperator building block)
SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);

} // namespace omspect::fock
