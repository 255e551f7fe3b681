// oracle.hpp — Brute-force verification against truncated Liouvillian
// matrices: steady state, dense spectra, and the resolvent absorption curve.
//
// Everything here is built directly from the master-equation definition; it
// deliberately shares no code with the analytic eigensystem or spectrum
// modules that it checks.

#pragma once

#include <vector>

#include "omspect/fock.hpp"
#include "omspect/model.hpp"

namespace omspect::oracle {

using fock::FockMatrix;
using fock::Matrix;
using fock::SparseMatrix;
using fock::Truncation;

struct LiouvillianMatrix {
    SparseMatrix entries;   // (n_cav n_mech)^2 superoperator, column-stacking
    MEVariant variant;
    Truncation trunc;

    Eigen::Index dim() const { return entries.rows(); }
};

// Which parts of the generator to assemble.
enum class Part { Full, HamiltonianOnly, DissipatorOnly };

LiouvillianMatrix build_liouvillian(const ModelParams& params, const Truncation& trunc,
                                    Part part = Part::Full);

// mech-truncation default used by the verification pipeline:
// max(40, ceil(8 mbar + 15 |beta|^2 + 25))
int default_n_mech(const ModelParams& params);

// photon-number-difference index of a vectorized basis element
int sector_of(Eigen::Index vec_index, const Truncation& trunc);

// vectorized-basis indices of the fixed-l sector, ascending
std::vector<Eigen::Index> sector_indices(const Truncation& trunc, int l);

// norm of the matrix elements that leave the fixed-l sectors (0 when the
// generator conserves the photon-number difference)
double off_sector_norm(const LiouvillianMatrix& L);

// Null vector of L by shifted inverse iteration, reshaped, Hermitized and
// trace-normalized. Throws on degenerate null spaces.
FockMatrix steady_state(const LiouvillianMatrix& L);

// A(omega_p) = Re Tr{a^dag unvec[(i omega_p Id - L)^{-1} vec(rho_st a)]}
// via one sparse solve per frequency, restricted to the l = -1 sector (the
// generator conserves the sector; checked via off_sector_norm).
std::vector<double> absorption_numeric(const LiouvillianMatrix& L,
                                       const std::vector<double>& omega_p_grid);

// Dense eigenvalues of the fixed-l sector block (LAPACK zgeev, values only).
std::vector<cplx> sector_eigenvalues(const LiouvillianMatrix& L, int l);

struct MatchReport {
    std::vector<double> distances;        // per analytic input, nearest numeric
    std::vector<std::size_t> unmatched;   // indices with distance > tolerance
    double worst{0.0};
};

// Greedy nearest-value match of analytic eigenvalues against a numeric
// spectrum (multiplicity-aware: each numeric value is consumed once).
MatchReport match_eigenvalues(const std::vector<cplx>& analytic,
                              std::vector<cplx> numeric, double tolerance);

// Smallest eigenvalue of the conditional Choi form Q C(D) Q of the
// dissipator part (Q projects out the maximally entangled vector); a valid
// Lindblad dissipator gives >= -1e-10 * ||C||.
double choi_conditional_min_eigenvalue(const ModelParams& params, const Truncation& trunc);

} // namespace omspect::oracle
