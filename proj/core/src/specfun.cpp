#include "omspect/specfun.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace omspect::specfun {

namespace {

template <class T>
T laguerre_impl(int m, int k, T x) {
    if (m < 0 || k < 0) throw std::invalid_argument("laguerre: m, k must be >= 0");
    T p0 = T(1);
    if (m == 0) return p0;
    T p1 = T(1) + T(k) - x;
    for (int j = 1; j < m; ++j) {
        T p2 = ((T(2 * j + k + 1) - x) * p1 - T(j + k) * p0) / T(j + 1);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

// integer power by squaring; unambiguous for complex bases
cplx ipow(cplx base, int e) {
    cplx r(1.0);
    for (cplx b = base; e > 0; e >>= 1, b *= b)
        if (e & 1) r *= b;
    return r;
}

} // namespace

double laguerre(LaguerreOrder o, double x) { return laguerre_impl(o.m, o.k, x); }
cplx laguerre(LaguerreOrder o, cplx x) { return laguerre_impl(o.m, o.k, x); }

double log_factorial(int n) {
    if (n < 0) throw std::invalid_argument("log_factorial: n must be >= 0");
    constexpr int kTable = 4096;
    static const std::vector<double> table = [] {
        std::vector<double> t(kTable);
        long double acc = 0.0L;
        t[0] = 0.0;
        for (int j = 1; j < kTable; ++j) {
            acc += std::log(static_cast<long double>(j));
            t[j] = static_cast<double>(acc);
        }
        return t;
    }();
    if (n < kTable) return table[n];
    return static_cast<double>(std::lgammal(static_cast<long double>(n) + 1.0L));
}

cplx integral_I(int j, int l, cplx q, cplx c, cplx sigma, cplx zeta) {
    if (j < 0 || l < 0) throw std::invalid_argument("integral_I: j, l must be >= 0");
    if (c.real() <= 0.0) throw std::domain_error("integral_I: Re(c) <= 0, integral diverges");
    if (std::abs(q - c) < kDegenerateThreshold * std::abs(c))
        return integral_I_degenerate(j, l, c, sigma, zeta);
    const cplx sz = sigma * std::conj(zeta);
    const cplx arg = q * sz / (c * (q - c));
    cplx v = M_PI * ipow(c - q, j) / ipow(c, j + l + 1);
    v *= ipow(sigma, l) * laguerre({j, l}, arg) * std::exp(-sz / c);
    return v;
}

cplx integral_I_degenerate(int j, int l, cplx c, cplx sigma, cplx zeta) {
    if (j < 0 || l < 0) throw std::invalid_argument("integral_I_degenerate: j, l must be >= 0");
    if (c.real() <= 0.0) throw std::domain_error("integral_I_degenerate: Re(c) <= 0, integral diverges");
    const cplx sz = sigma * std::conj(zeta);
    cplx v = M_PI * std::exp(-log_factorial(j)) / ipow(c, j + l + 1);
    v *= ipow(sigma, l) * ipow(sz, j) * std::exp(-sz / c);
    return v;
}

} // namespace omspect::specfun
