#pragma once

#include "lsdc/scheme.hpp"

namespace lsdc {

/// Communication bound for a T-slot scheme: T * Hq^{-1}(K/(N*T)).
struct MultiShotBound {
    double value = 0.0; ///< the bound itself, in units of gamma
    double rho = 0.0;   ///< per-slot fraction Hq^{-1}(K/(N*T))
    /// K/(N*T) landed at or beyond the 1 - 1/q knee; the inverse is still
    /// exact there but sits on the flat top of the entropy curve.
    bool clamped = false;
};

/// Throws DomainError unless 0 < K/(N*T) <= 1.
MultiShotBound multishot_gamma_bound(std::size_t K, std::size_t N,
                                     std::size_t T, std::uint32_t q);

/// d/dT of T * Hq^{-1}(c/T) in closed form:
///   log_q(1 - x) / log_q((q-1)(1-x)/x)   with  x = Hq^{-1}(c/T).
/// Negative on its whole domain (the bound strictly improves with T).
/// Throws DomainError unless 0 < c/T < 1.
double multishot_gamma_bound_derivative(double c, double T, std::uint32_t q);

/// Builds a T-slot scheme by running the single-shot builder over N*T
/// virtual servers, then reading row t*N + n as slot t of server n.
/// With T = 1 this is exactly build_coded.
Scheme build_multishot(const FqMatrix& F, std::size_t N, std::size_t T,
                       const Strategy& strategy, const BuildOptions& opts = {},
                       GreedyTrace* trace_out = nullptr);

/// max column weight of E divided by N: counts slot entries instead of
/// distinct servers, so it upper-bounds costs().gamma and is the quantity
/// multishot_gamma_bound speaks about. May exceed 1 for T > 1.
Rational column_weight_gamma(const Scheme& s);

} // namespace lsdc
