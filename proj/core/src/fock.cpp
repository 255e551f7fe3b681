#include "omspect/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

namespace omspect::fock {

namespace {
WarningHandler g_warning_handler;
}

void set_warning_handler(WarningHandler handler) { g_warning_handler = std::move(handler); }

void warn(const std::string& message) {
    if (g_warning_handler) g_warning_handler(message);
}

void check(const Truncation& t) {
    if (t.n_cav < 2) throw std::invalid_argument("Truncation: n_cav must be >= 2");
    if (t.n_mech < 4) throw std::invalid_argument("Truncation: n_mech must be >= 4");
}

Matrix annihilation(int dim) {
    Matrix a = Matrix::Zero(dim, dim);
    for (int p = 1; p < dim; ++p) a(p - 1, p) = std::sqrt(double(p));
    return a;
}

SparseMatrix annihilation_sparse(int dim) {
    SparseMatrix a(dim, dim);
    std::vector<Eigen::Triplet<cplx>> tr;
    tr.reserve(dim);
    for (int p = 1; p < dim; ++p) tr.emplace_back(p - 1, p, std::sqrt(double(p)));
    a.setFromTriplets(tr.begin(), tr.end());
    return a;
}

Matrix displacement_matrix(cplx alpha, int n_mech) {
    if (std::norm(alpha) > 0.25 * n_mech)
        warn("displacement_matrix: |alpha|^2 = " + std::to_string(std::norm(alpha)) +
             " is not small against n_mech = " + std::to_string(n_mech));
    const Matrix b = annihilation(n_mech);
    const Matrix gen = alpha * b.adjoint() - std::conj(alpha) * b;   // anti-Hermitian
    Eigen::SelfAdjointEigenSolver<Matrix> es(cplx(0, -1) * gen);
    Matrix d = es.eigenvectors() *
               (cplx(0, 1) * es.eigenvalues().array()).exp().matrix().asDiagonal() *
               es.eigenvectors().adjoint();
    const double defect = (d.adjoint() * d - Matrix::Identity(n_mech, n_mech)).norm();
    if (defect > 1e-8)
        warn("displacement_matrix: unitarity defect " + std::to_string(defect));
    return d;
}

Matrix exp_eta_b(cplx eta, int n_mech, bool daggered) {
    Matrix b = annihilation(n_mech);
    if (daggered) b = Matrix(b.adjoint());
    Matrix term = Matrix::Identity(n_mech, n_mech);
    Matrix sum = term;
    for (int j = 1; j <= n_mech; ++j) {
        term = (eta / double(j)) * (term * b);
        const double tn = term.norm();
        if (tn == 0.0 || tn < 1e-14) break;
        sum += term;
    }
    return sum;
}

double tail_mass(const Matrix& mat, int edge) {
    const auto n = mat.rows();
    if (edge <= 0 || edge >= n) return 0.0;
    const double total = mat.squaredNorm();
    if (total == 0.0) return 0.0;
    const double inner = mat.topLeftCorner(n - edge, n - edge).squaredNorm();
    return (total - inner) / total;
}

Vector vec(const Matrix& m) {
    return Eigen::Map<const Vector>(m.data(), m.size());
}

Matrix unvec(const Vector& v, int rows, int cols) {
    if (v.size() != Eigen::Index(rows) * cols) throw std::invalid_argument("unvec: size mismatch");
    return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    std::vector<Eigen::Triplet<cplx>> tr;
    tr.reserve(std::size_t(a.nonZeros()) * std::size_t(b.nonZeros()));
    for (int ka = 0; ka < a.outerSize(); ++ka)
        for (SparseMatrix::InnerIterator ia(a, ka); ia; ++ia)
            for (int kb = 0; kb < b.outerSize(); ++kb)
                for (SparseMatrix::InnerIterator ib(b, kb); ib; ++ib)
                    tr.emplace_back(ia.row() * b.rows() + ib.row(),
                                    ia.col() * b.cols() + ib.col(),
                                    ia.value() * ib.value());
    out.setFromTriplets(tr.begin(), tr.end());
    return out;
}

} // namespace omspect::fock
