#include "omspect/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "omspect/specfun.hpp"

namespace omspect::spectrum {

using specfun::log_factorial;

Cutoffs auto_cutoffs(const ModelParams& p) {
    const auto d = derive_constants(p);
    const double b2 = std::norm(d.beta);
    Cutoffs c;
    c.m_max = std::max(2, int(std::ceil(2.0 * std::sqrt(p.mbar * (p.mbar + 1.0)) * b2)));
    c.k_max = std::max(2, int(std::ceil(3.0 * p.mbar * b2)));
    c.k_min = -std::max(2, int(std::ceil(3.0 * (p.mbar + 1.0) * b2)));
    return c;
}

cplx weight_K(int k, int m, const ModelParams& p) {
    const auto d = derive_constants(p);
    const cplx beta = d.beta;
    const double b2 = std::norm(beta);
    const int kp = (std::abs(k) + k) / 2;   // power of (mbar beta)
    const int km = (std::abs(k) - k) / 2;   // power of (-(mbar+1) beta*)
    if ((p.mbar == 0.0 && (kp > 0 || m > 0)) || (b2 == 0.0 && (k != 0 || m != 0)))
        return cplx(0.0);
    double logmag = -b2 * (p.mbar + 0.5) - log_factorial(m + std::abs(k));
    double phase = (p.mbar + 1.0) * std::imag(beta * beta);
    if (kp > 0) {
        logmag += kp * std::log(p.mbar * std::abs(beta));
        phase += kp * std::arg(beta);
    }
    if (km > 0) {
        logmag += km * std::log((p.mbar + 1.0) * std::abs(beta));
        phase += km * std::arg(-std::conj(beta));
    }
    if (m > 0) logmag += m * std::log(p.mbar * b2);
    return std::exp(logmag) * std::polar(1.0, phase);
}

cplx weight_J(int k, int m, const ModelParams& p) {
    const auto d = derive_constants(p);
    const cplx beta = d.beta;
    const double b2 = std::norm(beta);
    const int kp = (std::abs(k) + k) / 2;   // power of beta
    const int km = (std::abs(k) - k) / 2;   // power of (-beta*)
    if (b2 == 0.0 && (k != 0 || m != 0)) return cplx(0.0);
    const cplx expo = -(2.0 * p.mbar + 1.0) * beta * beta;
    double logmag = (p.mbar + 0.5) * b2 + expo.real() - log_factorial(m);
    double phase = expo.imag() + (p.mbar + 1.0) * std::imag(beta * beta);
    if (kp > 0) {
        logmag += kp * std::log(std::abs(beta));
        phase += kp * std::arg(beta);
    }
    if (km > 0) {
        logmag += km * std::log(std::abs(beta));
        phase += km * std::arg(-std::conj(beta));
    }
    if (m > 0) logmag += m * std::log((p.mbar + 1.0) * b2);
    return std::exp(logmag) * std::polar(1.0, phase);
}

cplx p_distribution_left(int k, int m, double mbar, cplx alpha) {
    const int ka = std::abs(k);
    cplx v = std::exp(log_factorial(m) - log_factorial(m + ka)) / M_PI;
    for (int j = 0; j < (ka + k) / 2; ++j) v *= alpha;
    for (int j = 0; j < (ka - k) / 2; ++j) v *= std::conj(alpha);
    return v * specfun::laguerre({m, ka}, std::norm(alpha) / (mbar + 1.0));
}

cplx q_distribution_0(const ModelParams& p, cplx alpha) {
    const auto d = derive_constants(p);
    const cplx beta = d.beta;
    cplx v = std::exp(cplx(0.0, (p.mbar + 1.0) * std::imag(beta * beta)) - std::norm(beta) / 2.0);
    v /= M_PI * (p.mbar + 1.0);
    v *= std::exp(-std::norm(alpha) / (p.mbar + 1.0));
    v *= std::exp(p.mbar / (p.mbar + 1.0) * std::conj(alpha) * beta - alpha * std::conj(beta));
    return v;
}

SpectrumResult absorption(const SpectrumRequest& req) {
    if (req.omega_p_grid.empty()) throw std::invalid_argument("absorption: empty grid");
    for (std::size_t i = 1; i < req.omega_p_grid.size(); ++i)
        if (!(req.omega_p_grid[i] > req.omega_p_grid[i - 1]))
            throw std::invalid_argument("absorption: grid must be strictly increasing");
    const ModelParams& p = req.params;
    const Cutoffs cut = req.cutoffs.value_or(auto_cutoffs(p));
    if (cut.m_max < 0 || cut.k_min > 0 || cut.k_max < 0)
        throw std::invalid_argument("absorption: cutoffs must satisfy k_min <= 0 <= k_max, m_max >= 0");

    const auto d = derive_constants(p);
    const double b2nu = std::norm(d.beta) * p.nu;

    SpectrumResult out;
    out.grid = req.omega_p_grid;
    out.zero_phonon_line = p.omega - b2nu;

    // ascending m; k from the center outward (0, 1, -1, 2, -2, ...)
    std::vector<int> korder;
    korder.push_back(0);
    for (int a = 1; a <= std::max(cut.k_max, -cut.k_min); ++a) {
        if (a <= cut.k_max) korder.push_back(a);
        if (-a >= cut.k_min) korder.push_back(-a);
    }
    for (int m = 0; m <= cut.m_max; ++m) {
        for (int k : korder) {
            const cplx w = weight_J(k, m, p) * weight_K(k, m, p);
            if (w == cplx(0.0)) continue;
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
                throw std::runtime_error("absorption: non-finite weight at (k=" +
                                         std::to_string(k) + ", m=" + std::to_string(m) + ")");
            SpectrumComponent comp;
            comp.k = k;
            comp.m = m;
            comp.center = p.omega - b2nu - k * p.nu;
            comp.half_width = p.kappa / 2.0 + (m + std::abs(k) / 2.0) * p.gamma + d.gamma_phi;
            comp.weight = w;
            out.components.push_back(comp);
        }
    }

    out.values.resize(out.grid.size());
    for (std::size_t i = 0; i < out.grid.size(); ++i) {
        double acc = 0.0;
        for (const auto& c : out.components) {
            const cplx den(c.half_width, out.grid[i] - c.center);
            acc += (c.weight / den).real();
        }
        if (!std::isfinite(acc))
            throw std::runtime_error("absorption: non-finite value at grid point " +
                                     std::to_string(out.grid[i]));
        out.values[i] = acc;
    }

    const double peak = *std::max_element(out.values.begin(), out.values.end());
    out.normalized = out.values;
    if (peak != 0.0)
        for (double& v : out.normalized) v /= peak;
    return out;
}

std::vector<DephasingRow> dephasing_curve(const std::vector<double>& mbar_grid,
                                          const ModelParams& base) {
    std::vector<DephasingRow> rows;
    rows.reserve(mbar_grid.size());
    for (double mbar : mbar_grid) {
        if (mbar < 0) throw std::invalid_argument("dephasing_curve: mbar must be >= 0");
        ModelParams p = base;
        // the dimensionless ratios are invariant in chi and gamma; substitute
        // harmless values so the chi = 0 / gamma = 0 corners stay finite
        if (p.chi <= 0.0) p.chi = 1.0;
        if (p.gamma <= 0.0) p.gamma = 1.0;
        p.mbar = mbar;
        p.variant = MEVariant::Phenomenological;
        const auto ph = derive_constants(p);
        p.variant = MEVariant::DressedState;
        const auto ds = derive_constants(p);
        DephasingRow r;
        r.mbar = mbar;
        r.phenomenological = ph.gamma_phi / (std::norm(ph.beta) * p.gamma);
        r.dressed_state = ds.gamma_phi / (std::norm(ds.beta) * p.gamma);
        rows.push_back(r);
    }
    return rows;
}

} // namespace omspect::spectrum
