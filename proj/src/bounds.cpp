#include "lsdc/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace lsdc {

namespace {

constexpr double kSlack = 1e-12;

void check_q(std::uint32_t q) {
    if (q < 2) throw DomainError("entropy base must be >= 2");
}

double apex(std::uint32_t q) { return 1.0 - 1.0 / q; }

} // namespace

double entropy_q(double x, std::uint32_t q) {
    check_q(q);
    double a = apex(q);
    if (!(x >= -kSlack && x <= a + kSlack))
        throw DomainError("entropy argument " + std::to_string(x) +
                          " outside [0, 1-1/q]");
    if (x < 0) x = 0;
    if (x > a) x = a;
    if (x == 0) return 0.0;
    double lq = std::log(static_cast<double>(q));
    double h = x * std::log(static_cast<double>(q - 1)) - x * std::log(x);
    if (x < 1.0) h -= (1.0 - x) * std::log1p(-x);
    return h / lq;
}

double entropy_q_inv(double y, std::uint32_t q) {
    check_q(q);
    if (!(y >= -kSlack && y <= 1.0 + kSlack))
        throw DomainError("entropy inverse argument " + std::to_string(y) +
                          " outside [0, 1]");
    if (y <= 0) return 0.0;
    if (y >= 1) return apex(q);
    double lo = 0.0, hi = apex(q);
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break; // floating-point fixed point
        if (entropy_q(mid, q) < y)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double xlog_bound(double x, std::uint32_t q) {
    check_q(q);
    double a = apex(q);
    if (!(x >= -kSlack && x <= a + kSlack))
        throw DomainError("xlog_bound argument outside [0, 1-1/q]");
    if (x <= 0) return 0.0;
    if (x > a) x = a;
    return -x * std::log(x) / std::log(static_cast<double>(q));
}

double xlog_bound_inv(double y, std::uint32_t q) {
    check_q(q);
    double top = std::min(std::exp(-1.0), apex(q));
    double ymax = xlog_bound(top, q);
    if (!(y >= -kSlack && y <= ymax + kSlack))
        throw DomainError("xlog_bound_inv argument " + std::to_string(y) +
                          " beyond the increasing branch (max " +
                          std::to_string(ymax) + ")");
    if (y <= 0) return 0.0;
    if (y >= ymax) return top;
    double lo = 0.0, hi = top;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (xlog_bound(mid, q) < y)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double converse_gamma(std::uint64_t l_distinct, std::size_t n, std::uint32_t q) {
    check_q(q);
    if (l_distinct == 0) throw DomainError("need at least one demanded column");
    if (n == 0) throw DomainError("need at least one server");
    double y = std::log(static_cast<double>(l_distinct)) /
               (std::log(static_cast<double>(q)) * static_cast<double>(n));
    if (y > 1.0 + kSlack)
        throw DomainError("log_q(L)/N = " + std::to_string(y) +
                          " > 1: more distinct demands than syndromes");
    return entropy_q_inv(std::min(y, 1.0), q);
}

double achievable_gamma(std::size_t k, std::size_t n, std::uint32_t q) {
    check_q(q);
    if (n == 0) throw DomainError("need at least one server");
    if (k > n)
        throw DomainError("K/N = " + std::to_string(k) + "/" + std::to_string(n) +
                          " > 1 outside the entropy-inverse domain");
    return entropy_q_inv(static_cast<double>(k) / static_cast<double>(n), q);
}

DeltaBound asymptotic_delta(std::size_t n, double rate, std::uint32_t q) {
    check_q(q);
    if (n == 0) throw DomainError("need at least one server");
    if (!(rate > 0.0 && rate < 1.0))
        throw DomainError("code rate must lie strictly inside (0, 1)");
    double logqn = std::log(static_cast<double>(n)) /
                   std::log(static_cast<double>(q));
    double big = std::sqrt(logqn / (1.0 - rate));
    return DeltaBound{big, big / static_cast<double>(n)};
}

std::string RegionReport::to_csv() const {
    std::string out = "label,gamma,delta\n";
    for (const auto& p : points)
        out += p.label + "," + fmt_g12(p.gamma) + "," + fmt_g12(p.delta) + "\n";
    return out;
}

RegionReport region_report(std::uint32_t q, std::size_t K, std::size_t N,
                           std::uint64_t L) {
    check_q(q);
    if (K == 0 || N == 0) throw DomainError("K and N must be positive");
    if (K > N) throw DomainError("more users than servers (K > N)");
    double nN = static_cast<double>(N);
    // delta level of the coded construction: sqrt(log_q(N) / (K/N)) / N
    double logqn = std::log(nN) / std::log(static_cast<double>(q));
    double coded_delta = std::sqrt(logqn * nN / static_cast<double>(K)) / nN;
    RegionReport r;
    r.points.push_back({"uncoded_decentralized", 1.0 / nN, 1.0});
    r.points.push_back({"uncoded_centralized", 1.0, 1.0 / nN});
    r.points.push_back({"coded_achievable", achievable_gamma(K, N, q), coded_delta});
    r.points.push_back({"converse", converse_gamma(L, N, q), coded_delta});
    return r;
}

std::string fmt_g12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::string(buf);
}

} // namespace lsdc
