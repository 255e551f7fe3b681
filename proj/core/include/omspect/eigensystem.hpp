// eigensystem.hpp — Exact Liouvillian eigenvalues and damping-basis
// eigenvectors of the lossy optomechanical system, realized as matrices on a
// truncated Fock space.
//
// Both master-equation variants share one eigensystem; they differ only
// through the derived constants (beta, Gamma). Labels carry four integers
// (l, n, k, m): l indexes optical diagonals, n the position on the diagonal,
// (k, m) the mechanical damping-basis labels.

#pragma once

#include <map>
#include <stdexcept>

#include "omspect/fock.hpp"
#include "omspect/model.hpp"

namespace omspect::eig {

using fock::FockMatrix;
using fock::Matrix;
using fock::Truncation;

struct EigenLabel {
    int l{0};
    int n{0};   // >= 0
    int k{0};
    int m{0};   // >= 0

    auto operator<=>(const EigenLabel&) const = default;
};

struct DisplacementConstants {
    cplx alpha_ln;
    cplx beta_ln;
    cplx eta_l;
};

// Raised when an energy denominator of the eigenvector recursion vanishes
// (the construction assumes a non-degenerate spectrum; e.g. kappa == gamma
// makes the l = 0, n >= 1 eigenvalues collide with l = 0, n = 0 ones).
struct DegenerateSpectrumError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// lambda_{k,m}^{(l,n)}; valid for either sign of l and k.
cplx eigenvalue(const EigenLabel& label, const ModelParams& params);

// alpha_{l,n} = -(n+l) beta + l mbar (beta* - beta)
// beta_{l,n}  = -n beta + l (mbar+1) (beta* - beta)
// eta_l       = l (2 mbar + 1) (beta - beta*)
DisplacementConstants displacement_constants(int l, int n, const DerivedConstants& consts,
                                             double mbar);

// Damped-harmonic-oscillator eigenvectors mu_hat (right, normally ordered
// Laguerre form) and mu_check (left, antinormally ordered, prefactor
// m!/(m+k)!). k < 0 yields the Hermitian conjugate of the |k| matrix. Warns
// when the truncation leaves > 1e-10 relative mass on the boundary.
Matrix dho_eigvec_right(int k, int m, double mbar, const Truncation& trunc);
Matrix dho_eigvec_left(int k, int m, double mbar, const Truncation& trunc);

enum class Side { Right, Left };

// Asymmetrically displaced eigenvectors
//   mu_hat^{(l,n)}   = D^dag(alpha_ln) e^{-eta_l b}     mu_hat   e^{eta_l b}     D(beta_ln)
//   mu_check^{(l,n)} = D^dag(alpha_ln) e^{-eta_l b^dag} mu_check e^{eta_l b^dag} D(beta_ln)
// (l >= 0). For the DressedState variant beta_{l,0} = eta_l = 0 and the
// displacements collapse to a single D.
Matrix mu_displaced(Side side, int l, int n, int k, int m, const ModelParams& params,
                    const Truncation& trunc);

// Overlap coefficient c^{l,k,m}_{k',m'} between displaced eigenvectors of
// adjacent optical levels. Out-of-domain factorial arguments give 0, which
// bounds the support of the eigenvector recursion.
cplx c_coefficient(int kprime, int mprime, int l, int k, int m, const ModelParams& params);

// Full Liouvillian eigenvectors on the truncated product space.
//   right:  rho_hat^{(l,n)}  = sum_{j=0..n}    |j+l><j| x (mech part)
//   left:   rho_check^{(l,n)} = sum_{j=n..jmax} |j+l><j| x (mech part)
// Requires n + |l| <= n_cav - 1 for the right vectors (all slices must be
// representable) and n <= n_max_supported. Negative l is served through the
// conjugation identities rho^{(-l,n)}_{-k,m} = rho^{(l,n) dag}_{k,m}.
FockMatrix right_eigenvector(const EigenLabel& label, const ModelParams& params,
                             const Truncation& trunc);
FockMatrix left_eigenvector(const EigenLabel& label, const ModelParams& params,
                            const Truncation& trunc);

inline constexpr int n_max_supported = 2;

// Caches displaced frames and DHO eigenvectors across labels at fixed
// parameters. Not thread-safe per instance; use one per thread.
class EigenBasis {
  public:
    EigenBasis(const ModelParams& params, const Truncation& trunc);

    cplx lambda(const EigenLabel& label) const;
    FockMatrix right(const EigenLabel& label) const;
    FockMatrix left(const EigenLabel& label) const;
    Matrix mu_displaced(Side side, int l, int n, int k, int m) const;

    const ModelParams& params() const { return params_; }
    const Truncation& truncation() const { return trunc_; }
    const DerivedConstants& constants() const { return consts_; }

  private:
    struct Frame {
        Matrix pre;    // D^dag(alpha_ln) e^{-eta g}
        Matrix post;   // e^{eta g} D(beta_ln)
    };
    const Frame& frame(Side side, int l, int n) const;
    const Matrix& mu(Side side, int k, int m) const;
    FockMatrix build(Side side, const EigenLabel& label) const;

    ModelParams params_;
    Truncation trunc_;
    DerivedConstants consts_;
    mutable std::map<std::tuple<int, int, int>, Frame> frames_;
    mutable std::map<std::tuple<int, int, int>, Matrix> mus_;
};

} // namespace omspect::eig
