// spectrum.hpp — Closed-form cavity absorption spectrum: per-term weight
// factors, cutoff heuristic, and the dephasing-rate curves.

#pragma once

#include <optional>
#include <vector>

#include "omspect/model.hpp"

namespace omspect::spectrum {

// Summation cutoffs for the (k, m) double sum.
struct Cutoffs {
    int m_max{2};
    int k_min{-2};
    int k_max{2};
};

// Poissonian-tail cutoff estimate (with floors m_max >= 2, k_max >= 2,
// k_min <= -2). The estimate targets plotting accuracy; scale it up when
// tighter convergence is needed.
Cutoffs auto_cutoffs(const ModelParams& params);

// Weight factors of the absorption decomposition. Evaluated in log space;
// exact zeros at the mbar = 0 / beta = 0 corners (0^0 == 1).
cplx weight_K(int k, int m, const ModelParams& params);
cplx weight_J(int k, int m, const ModelParams& params);

// Phase-space distributions (used by tests to re-derive weight_K by
// quadrature): P of the left DHO eigenvector mu_check^dag_{k,m}, and the
// Husimi function of the displaced thermal operator entering the K trace.
cplx p_distribution_left(int k, int m, double mbar, cplx alpha);
cplx q_distribution_0(const ModelParams& params, cplx alpha);

struct SpectrumRequest {
    ModelParams params;
    std::vector<double> omega_p_grid;       // strictly increasing
    std::optional<Cutoffs> cutoffs;         // auto_cutoffs(params) when absent
    bool normalize{false};
};

struct SpectrumComponent {
    int k{0};
    int m{0};
    double center{0.0};        // omega - |beta|^2 nu - k nu
    double half_width{0.0};    // kappa/2 + (m + |k|/2) gamma + Gamma
    cplx weight;               // J_{k,m} K_{k,m}
};

struct SpectrumResult {
    std::vector<double> grid;
    std::vector<double> values;              // Re of the complex sum, per point
    std::vector<double> normalized;          // unit-maximum scaling of values
    std::vector<SpectrumComponent> components;
    double zero_phonon_line{0.0};            // omega - |beta|^2 nu
};

// A(omega_p) = Re sum_{k,m} J K / [i(omega_p - omega + |beta|^2 nu + k nu)
//                                  + kappa/2 + (m + |k|/2) gamma + Gamma]
// Terms are summed ascending in m, then k from the center outward, so results
// are reproducible independent of threading.
SpectrumResult absorption(const SpectrumRequest& req);

struct DephasingRow {
    double mbar;
    double phenomenological;   // Gamma / (|beta|^2 gamma)
    double dressed_state;      // Gamma / (beta^2 gamma)
};

// Dimensionless dephasing rate against mean phonon number for both variants;
// params.mbar and params.variant are ignored.
std::vector<DephasingRow> dephasing_curve(const std::vector<double>& mbar_grid,
                                          const ModelParams& params);

} // namespace omspect::spectrum
