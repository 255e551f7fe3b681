// specfun.hpp — Generalized Laguerre polynomials, log-factorials, and the
// closed-form complex-plane integrals used by the spectrum weights.

#pragma once

#include <complex>

#include "omspect/model.hpp"

namespace omspect::specfun {

struct LaguerreOrder {
    int m{0};   // degree
    int k{0};   // superscript order
};

// L_m^{(k)}(x) by the upward three-term recurrence in m.
double laguerre(LaguerreOrder order, double x);
cplx laguerre(LaguerreOrder order, cplx x);

// ln(n!) to >= 12 significant digits; cached table for small n.
double log_factorial(int n);

// I_{j,l}(q,c,sigma,zeta) = int d^2xi xi^l L_j^{(l)}(q|xi|^2) e^{-c|xi|^2}
//                           e^{sigma xi* - zeta* xi}
// Closed form valid for Re(c) > 0; |q - c| below kDegenerateThreshold * |c|
// dispatches to the degenerate limit.
cplx integral_I(int j, int l, cplx q, cplx c, cplx sigma, cplx zeta);

// The q = c limit of integral_I.
cplx integral_I_degenerate(int j, int l, cplx c, cplx sigma, cplx zeta);

inline constexpr double kDegenerateThreshold = 1e-8;

} // namespace omspect::specfun
