#include "omspect/eigensystem.hpp"

#include <cmath>
#include <string>
#include <unordered_map>
#include <vector>

#include "omspect/specfun.hpp"

namespace omspect::eig {

using specfun::log_factorial;

cplx eigenvalue(const EigenLabel& lb, const ModelParams& p) {
    const auto d = derive_constants(p);
    const double labs = std::abs(lb.l), kabs = std::abs(lb.k);
    return cplx(0, -1) * double(lb.l) * p.omega
         - 0.5 * (2 * lb.n + labs) * p.kappa
         + cplx(0, -1) * double(lb.k) * p.nu
         - 0.5 * (2 * lb.m + kabs) * p.gamma
         + cplx(0, 1) * double(lb.l) * std::norm(d.beta) * (2 * lb.n + labs) * p.nu
         - double(lb.l) * double(lb.l) * d.gamma_phi;
}

DisplacementConstants displacement_constants(int l, int n, const DerivedConstants& c,
                                             double mbar) {
    const cplx b = c.beta, bc = std::conj(c.beta);
    DisplacementConstants out;
    out.alpha_ln = -double(n + l) * b + double(l) * mbar * (bc - b);
    out.beta_ln = -double(n) * b + double(l) * (mbar + 1.0) * (bc - b);
    out.eta_l = double(l) * (2.0 * mbar + 1.0) * (b - bc);
    return out;
}

namespace {

// value at Fock level q of the normally ordered diagonal part of mu_hat:
// sum_j (-1)^j C(m+k, m-j) C(q, j) c^j (1-c)^{q-j},  c = 1/(mbar+1)
double normal_diag(int k, int m, double mbar, int q) {
    const double c = 1.0 / (mbar + 1.0);
    const double omc = mbar / (mbar + 1.0);
    double s = 0.0;
    for (int j = 0; j <= std::min(m, q); ++j) {
        double lg = log_factorial(m + k) - log_factorial(m - j) - log_factorial(k + j)
                  + log_factorial(q) - log_factorial(j) - log_factorial(q - j)
                  + j * std::log(c);
        if (q - j > 0) {
            if (omc == 0.0) continue;   // mbar = 0: only the j = q term survives
            lg += (q - j) * std::log(omc);
        }
        s += ((j & 1) ? -1.0 : 1.0) * std::exp(lg);
    }
    return s;
}

// value at Fock level p of the antinormally ordered Laguerre factor of
// mu_check: sum_j (-1)^j C(m+k, m-j) C(p+j, j) c^j
double antinormal_diag(int k, int m, double mbar, int p) {
    const double c = 1.0 / (mbar + 1.0);
    double s = 0.0;
    for (int j = 0; j <= m; ++j) {
        const double lg = log_factorial(m + k) - log_factorial(m - j) - log_factorial(k + j)
                        + log_factorial(p + j) - log_factorial(j) - log_factorial(p)
                        + j * std::log(c);
        s += ((j & 1) ? -1.0 : 1.0) * std::exp(lg);
    }
    return s;
}

int sign_or_positive(int x) { return x >= 0 ? 1 : -1; }

} // namespace

Matrix dho_eigvec_right(int k, int m, double mbar, const Truncation& trunc) {
    if (k < 0) return dho_eigvec_right(-k, m, mbar, trunc).adjoint();
    const int nm = trunc.n_mech;
    Matrix out = Matrix::Zero(nm, nm);
    for (int q = 0; q + k < nm; ++q) {
        const double root = std::exp(0.5 * (log_factorial(q + k) - log_factorial(q)));
        out(q + k, q) = std::pow(mbar + 1.0, -(k + 1)) * normal_diag(k, m, mbar, q) * root;
    }
    const double tail = fock::tail_mass(out, 1);
    if (tail > 1e-10)
        fock::warn("dho_eigvec_right(k=" + std::to_string(k) + ", m=" + std::to_string(m) +
                   "): trailing-element mass " + std::to_string(tail));
    return out;
}

Matrix dho_eigvec_left(int k, int m, double mbar, const Truncation& trunc) {
    if (k < 0) return dho_eigvec_left(-k, m, mbar, trunc).adjoint();
    const int nm = trunc.n_mech;
    const double pref = std::exp(log_factorial(m) - log_factorial(m + k));
    Matrix out = Matrix::Zero(nm, nm);
    // entries grow polynomially with the Fock index; no tail criterion applies
    for (int q = 0; q + k < nm; ++q) {
        const double root = std::exp(0.5 * (log_factorial(q + k) - log_factorial(q)));
        out(q + k, q) = pref * antinormal_diag(k, m, mbar, q + k) * root;
    }
    return out;
}

cplx c_coefficient(int kprime, int mprime, int l, int k, int m, const ModelParams& p) {
    const auto d = derive_constants(p);
    const cplx beta = d.beta;
    if (beta == cplx(0.0))
        return (kprime == k && mprime == m) ? cplx(1.0) : cplx(0.0);
    const int jplus = std::abs(sign_or_positive(k) + sign_or_positive(kprime)) / 2;
    const int jminus = std::abs(sign_or_positive(k) - sign_or_positive(kprime)) / 2;
    const int a1 = mprime - m - std::abs(k) * jminus;
    const int a2 = mprime - m + std::abs(kprime) - std::abs(k) * jplus;
    if (a1 < 0 || a2 < 0) return cplx(0.0);
    const double logmag = log_factorial(mprime) - log_factorial(m)
                        - log_factorial(a1) - log_factorial(a2)
                        + (2 * (mprime - m) + std::abs(kprime) - std::abs(k)) * std::log(std::abs(beta))
                        + (m - mprime) * std::log(p.mbar + 1.0);
    const double phase = std::arg(beta) * (kprime - k) + M_PI * (mprime - m);
    return std::exp(double(l) * (beta * beta - std::conj(beta) * std::conj(beta)) / 2.0)
         * std::exp(logmag) * std::polar(1.0, phase);
}

Matrix mu_displaced(Side side, int l, int n, int k, int m, const ModelParams& params,
                    const Truncation& trunc) {
    EigenBasis basis(params, trunc);
    return basis.mu_displaced(side, l, n, k, m);
}

FockMatrix right_eigenvector(const EigenLabel& label, const ModelParams& params,
                             const Truncation& trunc) {
    return EigenBasis(params, trunc).right(label);
}

FockMatrix left_eigenvector(const EigenLabel& label, const ModelParams& params,
                            const Truncation& trunc) {
    return EigenBasis(params, trunc).left(label);
}

// ---------------------------------------------------------------------------
// EigenBasis

EigenBasis::EigenBasis(const ModelParams& params, const Truncation& trunc)
    : params_(params), trunc_(trunc), consts_(derive_constants(params)) {
    fock::check(trunc);
}

cplx EigenBasis::lambda(const EigenLabel& label) const { return eigenvalue(label, params_); }

const EigenBasis::Frame& EigenBasis::frame(Side side, int l, int n) const {
    const auto key = std::make_tuple(side == Side::Right ? 0 : 1, l, n);
    auto it = frames_.find(key);
    if (it != frames_.end()) return it->second;
    const auto dc = displacement_constants(l, n, consts_, params_.mbar);
    const bool dag = (side == Side::Left);
    Frame f;
    f.pre = fock::displacement_matrix(dc.alpha_ln, trunc_.n_mech).adjoint()
          * fock::exp_eta_b(-dc.eta_l, trunc_.n_mech, dag);
    f.post = fock::exp_eta_b(dc.eta_l, trunc_.n_mech, dag)
           * fock::displacement_matrix(dc.beta_ln, trunc_.n_mech);
    return frames_.emplace(key, std::move(f)).first->second;
}

const Matrix& EigenBasis::mu(Side side, int k, int m) const {
    const auto key = std::make_tuple(side == Side::Right ? 0 : 1, k, m);
    auto it = mus_.find(key);
    if (it != mus_.end()) return it->second;
    Matrix v = (side == Side::Right) ? dho_eigvec_right(k, m, params_.mbar, trunc_)
                                     : dho_eigvec_left(k, m, params_.mbar, trunc_);
    return mus_.emplace(key, std::move(v)).first->second;
}

Matrix EigenBasis::mu_displaced(Side side, int l, int n, int k, int m) const {
    if (l < 0) throw std::invalid_argument("mu_displaced: l must be >= 0");
    const Frame& f = frame(side, l, n);
    return f.pre * mu(side, k, m) * f.post;
}

namespace {
struct KM {
    int k, m;
    bool operator==(const KM&) const = default;
};
struct KMHash {
    std::size_t operator()(const KM& x) const {
        return std::hash<long long>()((long long(x.k) << 24) ^ x.m);
    }
};
using Level = std::unordered_map<KM, cplx, KMHash>;
} // namespace

FockMatrix EigenBasis::build(Side side, const EigenLabel& label) const {
    const int l = label.l, n = label.n;
    const cplx lam_top = lambda(label);
    const double kappa = params_.kappa;
    constexpr double drop = 1e-18;

    // per-level expansion weights of the eigenvector in the displaced basis
    std::vector<Level> levels;
    const int jmax = (side == Side::Right) ? n : (trunc_.n_cav - 1 - l);
    const int jmin = (side == Side::Right) ? 0 : n;
    levels.resize(jmax + 1);
    levels[n][{label.k, label.m}] = cplx(1.0);

    if (side == Side::Right) {
        // descend n-1 .. 0; the support grows in m with fast-decaying weights
        constexpr int kKWindow = 28, kMWindow = 28;
        for (int s = n - 1; s >= 0; --s) {
            for (const auto& [src, w] : levels[s + 1]) {
                if (std::abs(w) < drop) continue;
                for (int kp = src.k - kKWindow; kp <= src.k + kKWindow; ++kp) {
                    for (int mp = src.m; mp <= src.m + kMWindow; ++mp) {
                        const cplx cc = c_coefficient(kp, mp, l, src.k, src.m, params_);
                        if (cc == cplx(0.0)) continue;
                        const cplx den = lam_top - lambda({l, s, kp, mp});
                        if (std::abs(den) < 1e-12)
                            throw DegenerateSpectrumError(
                                "degenerate eigenvalue pair between levels n=" +
                                std::to_string(n) + " and s=" + std::to_string(s));
                        const cplx val = w * kappa * cc / den;
                        if (std::abs(val) >= drop) levels[s][{kp, mp}] += val;
                    }
                }
            }
        }
    } else {
        // ascend n+1 .. jmax; out-of-domain factorials make the support finite
        for (int s = n + 1; s <= jmax; ++s) {
            for (const auto& [src, w] : levels[s - 1]) {
                if (std::abs(w) < drop) continue;
                const int kw = std::abs(src.k) + src.m;
                for (int ks = -kw; ks <= kw; ++ks) {
                    for (int ms = 0; ms <= src.m; ++ms) {
                        const cplx cc = c_coefficient(src.k, src.m, l, ks, ms, params_);
                        if (cc == cplx(0.0)) continue;
                        const cplx den = std::conj(lam_top) - std::conj(lambda({l, s, ks, ms}));
                        if (std::abs(den) < 1e-12)
                            throw DegenerateSpectrumError(
                                "degenerate eigenvalue pair between levels n=" +
                                std::to_string(n) + " and s=" + std::to_string(s));
                        const cplx val = w * kappa * std::conj(cc) / den;
                        if (std::abs(val) >= drop) levels[s][{ks, ms}] += val;
                    }
                }
            }
        }
    }

    const int nm = trunc_.n_mech;
    FockMatrix out{trunc_, Matrix::Zero(trunc_.dim(), trunc_.dim())};
    for (int j = jmin; j <= jmax; ++j) {
        const double chain = (side == Side::Right)
            ? 0.5 * (log_factorial(n) + log_factorial(n + l) - log_factorial(j) - log_factorial(j + l))
            : 0.5 * (log_factorial(j) + log_factorial(j + l) - log_factorial(n) - log_factorial(n + l));
        const double pref = std::exp(chain);
        Matrix mech = Matrix::Zero(nm, nm);
        for (const auto& [km, w] : levels[j]) {
            if (std::abs(w) * pref < drop) continue;
            mech += w * mu_displaced(side, l, j, km.k, km.m);
        }
        out.mat.block((j + l) * nm, j * nm, nm, nm) = pref * mech;
    }
    return out;
}

FockMatrix EigenBasis::right(const EigenLabel& label) const {
    if (label.n < 0 || label.m < 0) throw std::invalid_argument("right: n, m must be >= 0");
    if (label.n > n_max_supported)
        throw std::invalid_argument("right: n exceeds n_max_supported");
    if (label.l < 0) {
        FockMatrix r = right({-label.l, label.n, -label.k, label.m});
        r.mat = r.mat.adjoint().eval();
        return r;
    }
    if (label.n + label.l > trunc_.n_cav - 1)
        throw std::invalid_argument("right: label needs n_cav >= n + l + 1");
    FockMatrix r = build(Side::Right, label);
    const double tail = fock::tail_mass(r.mat, 1);
    if (tail > 1e-10)
        fock::warn("right_eigenvector: trailing-element mass " + std::to_string(tail));
    return r;
}

FockMatrix EigenBasis::left(const EigenLabel& label) const {
    if (label.n < 0 || label.m < 0) throw std::invalid_argument("left: n, m must be >= 0");
    if (label.n > n_max_supported)
        throw std::invalid_argument("left: n exceeds n_max_supported");
    if (label.l < 0) {
        FockMatrix r = left({-label.l, label.n, -label.k, label.m});
        r.mat = r.mat.adjoint().eval();
        return r;
    }
    if (label.n + label.l > trunc_.n_cav - 1)
        throw std::invalid_argument("left: label needs n_cav >= n + l + 1");
    return build(Side::Left, label);
}

} // namespace omspect::eig
