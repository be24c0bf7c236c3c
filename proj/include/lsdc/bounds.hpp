#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lsdc/errors.hpp"

namespace lsdc {

/// q-ary entropy H_q(x) = x log_q(q-1) - x log_q(x) - (1-x) log_q(1-x)
/// on [0, 1-1/q]; H_q(0) = 0, H_q(1-1/q) = 1.  Throws DomainError
/// outside the domain (beyond a small floating-point slack).
double entropy_q(double x, std::uint32_t q);

/// Inverse of entropy_q on [0, 1]: bisection down to the floating-point
/// fixed point (well under the 1e-12 tolerance), at most 200 steps.
/// Endpoints are exact: inv(0) = 0, inv(1) = 1 - 1/q.
double entropy_q_inv(double y, std::uint32_t q);

/// h(x) = -x log_q(x), a lower bound of entropy_q on its domain.
double xlog_bound(double x, std::uint32_t q);

/// Inverse of h on its increasing branch [0, min(1/e, 1-1/q)]; throws
/// DomainError for y beyond h(branch top).  Since h <= H_q, this
/// dominates entropy_q_inv wherever defined.
double xlog_bound_inv(double y, std::uint32_t q);

/// Optimum-cost lower bound H_q^{-1}(log_q(L)/N) for L distinct
/// demanded columns on N servers.  DomainError when log_q(L)/N > 1.
double converse_gamma(std::uint64_t l_distinct, std::size_t n, std::uint32_t q);

/// Covering-code achievable point H_q^{-1}(K/N).  DomainError when K > N.
double achievable_gamma(std::size_t k, std::size_t n, std::uint32_t q);

/// Communication-cost scaling of the covering construction at code
/// rate R in (0,1): Delta <= sqrt(log_q(N) / (1-R)), delta = Delta/N.
struct DeltaBound {
    double Delta;
    double delta;
};
DeltaBound asymptotic_delta(std::size_t n, double rate, std::uint32_t q);

/// Corner points of the normalized (gamma, delta) trade-off region.
struct RegionPoint {
    std::string label;
    double gamma;
    double delta;
};
struct RegionReport {
    std::vector<RegionPoint> points;
    /// "label,gamma,delta" rows, 12 significant digits.
    std::string to_csv() const;
};

/// Emits the two uncoded corner points, the coded achievable point and
/// the converse point for a (q, K, N, L) configuration.  The converse
/// point is reported at the coded point's delta level.
RegionReport region_report(std::uint32_t q, std::size_t K, std::size_t N,
                           std::uint64_t L);

/// Deterministic 12-significant-digit formatting used by every CSV
/// writer in the library.
std::string fmt_g12(double v);

} // namespace lsdc
