// model.hpp — Physical parameters, master-equation variant, derived constants

#pragma once

#include <complex>
#include <string>
#include <vector>

namespace omspect {

using cplx = std::complex<double>;

enum class MEVariant { Phenomenological, DressedState };

std::string to_string(MEVariant v);

// All rates and frequencies in units of the mechanical frequency nu
// (nu is carried explicitly so dimensional inputs also work).
struct ModelParams {
    double omega{0.0};   // optical mode frequency
    double nu{1.0};      // mechanical frequency (unit scale)
    double chi{0.0};     // single-photon coupling strength
    double kappa{0.0};   // cavity decay rate
    double gamma{0.0};   // mechanical damping rate
    double mbar{0.0};    // mean thermal phonon number
    MEVariant variant{MEVariant::DressedState};
};

// beta and Gamma fully distinguish the two variants; everything downstream
// depends only on these plus ModelParams.
struct DerivedConstants {
    cplx beta;
    double gamma_phi;    // pure dephasing rate
};

// PhME: beta = chi/(nu - i gamma/2),  Gamma = (mbar + 1/2)|beta|^2 gamma
// DSME: beta = chi/nu,                Gamma = 2 beta^2 gamma / ln((mbar+1)/mbar)
// The DSME rate tends to 0 as mbar -> 0; mbar below 1e-12 is clamped to the
// asymptotic form -2 beta^2 gamma / ln(mbar) (relative error < 1e-10).
DerivedConstants derive_constants(const ModelParams& params);

struct ParamReport {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;   // non-fatal (Born-approximation caveat)
    bool ok() const { return errors.empty(); }
};

ParamReport validate_params(const ModelParams& params);

// Threshold for the Born-approximation warning (gamma >= nu/2 warns).
inline constexpr double kBornWarningRatio = 0.5;

} // namespace omspect
