#include "omspect/model.hpp"

#include <cmath>

namespace omspect {

std::string to_string(MEVariant v) {
    return v == MEVariant::Phenomenological ? "ph" : "ds";
}

DerivedConstants derive_constants(const ModelParams& p) {
    DerivedConstants d;
    if (p.variant == MEVariant::Phenomenological) {
        d.beta = p.chi / cplx(p.nu, -p.gamma / 2.0);
        d.gamma_phi = (p.mbar + 0.5) * std::norm(d.beta) * p.gamma;
    } else {
        const double b = p.chi / p.nu;
        d.beta = cplx(b, 0.0);
        if (p.mbar == 0.0) {
            d.gamma_phi = 0.0;
        } else if (p.mbar < 1e-12) {
            d.gamma_phi = -2.0 * b * b * p.gamma / std::log(p.mbar);
        } else {
            d.gamma_phi = 2.0 * b * b * p.gamma / std::log1p(1.0 / p.mbar);
        }
    }
    return d;
}

ParamReport validate_params(const ModelParams& p) {
    ParamReport r;
    auto bad = [&](bool cond, const std::string& msg) {
        if (cond) r.errors.push_back(msg);
    };
    bad(!std::isfinite(p.omega), "omega must be finite");
    bad(!std::isfinite(p.nu) || p.nu <= 0.0, "nu must be > 0");
    bad(!std::isfinite(p.chi) || p.chi < 0.0, "chi must be >= 0");
    bad(!std::isfinite(p.kappa) || p.kappa < 0.0, "kappa must be >= 0");
    bad(!std::isfinite(p.gamma) || p.gamma < 0.0, "gamma must be >= 0");
    bad(!std::isfinite(p.mbar) || p.mbar < 0.0, "mbar must be >= 0");
    if (r.ok() && p.gamma >= kBornWarningRatio * p.nu) {
        r.warnings.push_back(
            "gamma is not small against nu; the Born approximation behind "
            "both master equations is questionable here");
    }
    return r;
}

} // namespace omspect
