#include "lsdc/multishot.hpp"

#include <algorithm>
#include <cmath>

#include "lsdc/bounds.hpp"

namespace lsdc {

MultiShotBound multishot_gamma_bound(std::size_t K, std::size_t N,
                                     std::size_t T, std::uint32_t q) {
    if (K == 0 || N == 0 || T == 0)
        throw DomainError("K, N, T must be positive");
    double y = static_cast<double>(K) / (static_cast<double>(N) * T);
    if (y > 1.0)
        throw DomainError("K/(N*T) > 1: demands exceed the addressable space");
    MultiShotBound b;
    b.rho = entropy_q_inv(y, q);
    b.value = static_cast<double>(T) * b.rho;
    b.clamped = y >= 1.0 - 1.0 / q;
    return b;
}

double multishot_gamma_bound_derivative(double c, double T, std::uint32_t q) {
    if (!(c > 0.0) || !(T > 0.0))
        throw DomainError("c and T must be positive");
    double y = c / T;
    if (!(y < 1.0))
        throw DomainError("c/T must lie strictly below 1");
    double x = entropy_q_inv(y, q);
    // d/dT [T * inv(c/T)] = x - Hq(x)/Hq'(x) = log_q(1-x)/Hq'(x)
    return std::log1p(-x) /
           std::log((q - 1.0) * (1.0 - x) / x);
}

Scheme build_multishot(const FqMatrix& F, std::size_t N, std::size_t T,
                       const Strategy& strategy, const BuildOptions& opts,
                       GreedyTrace* trace_out) {
    if (T == 0 || N == 0) throw ShapeError("N and T must be positive");
    Scheme s = build_coded(F, N * T, strategy, opts, trace_out);
    s.N = N;
    s.T = T;
    return s;
}

Rational column_weight_gamma(const Scheme& s) {
    std::vector<unsigned> cw = s.E.col_weights();
    unsigned maxw = *std::max_element(cw.begin(), cw.end());
    return Rational(maxw, static_cast<long long>(s.N));
}

} // namespace lsdc
