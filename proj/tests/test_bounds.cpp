#include <doctest.h>

#include <cmath>

#include "lsdc/bounds.hpp"

using namespace lsdc;

TEST_CASE("entropy endpoints and a frozen interior value") {
    for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u}) {
        CHECK(entropy_q(0.0, q) == 0.0);
        CHECK(entropy_q(1.0 - 1.0 / q, q) == doctest::Approx(1.0).epsilon(1e-12));
    }
    // H_2(1/4) = 1/4 * 2 + 3/4 * log2(4/3)
    CHECK(entropy_q(0.25, 2) == doctest::Approx(0.8112781244591328).epsilon(1e-12));
}

TEST_CASE("inverse round-trips within 1e-10 on a dense grid") {
    for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u}) {
        for (int i = 0; i <= 1000; ++i) {
            double y = i / 1000.0;
            double x = entropy_q_inv(y, q);
            CHECK(x >= 0.0);
            CHECK(x <= 1.0 - 1.0 / q + 1e-15);
            CHECK(std::abs(entropy_q(x, q) - y) <= 1e-10);
        }
        CHECK(entropy_q_inv(0.0, q) == 0.0);
        CHECK(entropy_q_inv(1.0, q) == 1.0 - 1.0 / q);
    }
}

TEST_CASE("entropy is strictly monotone; so is the inverse") {
    for (std::uint32_t q : {2u, 5u}) {
        double top = 1.0 - 1.0 / q;
        double prev = -1.0;
        for (int i = 0; i <= 200; ++i) {
            double v = entropy_q(top * i / 200.0, q);
            CHECK(v > prev);
            prev = v;
        }
        prev = -1.0;
        for (int i = 0; i <= 200; ++i) {
            double v = entropy_q_inv(i / 200.0, q);
            CHECK(v > prev);
            prev = v;
        }
    }
}

TEST_CASE("domain violations throw") {
    CHECK_THROWS_AS(entropy_q(-0.01, 2), DomainError);
    CHECK_THROWS_AS(entropy_q(0.51, 2), DomainError);
    CHECK_THROWS_AS(entropy_q_inv(-0.01, 2), DomainError);
    CHECK_THROWS_AS(entropy_q_inv(1.01, 2), DomainError);
}

TEST_CASE("x log x lower-bounds the entropy and inverts on its branch") {
    for (std::uint32_t q : {2u, 3u, 7u}) {
        double top = 1.0 - 1.0 / q;
        for (int i = 1; i < 100; ++i) {
            double x = top * i / 100.0;
            CHECK(xlog_bound(x, q) <= entropy_q(x, q) + 1e-12);
        }
        double branch_top = std::min(std::exp(-1.0), top);
        for (int i = 1; i < 50; ++i) {
            double x = branch_top * i / 50.0;
            double y = xlog_bound(x, q);
            CHECK(xlog_bound_inv(y, q) == doctest::Approx(x).epsilon(1e-9));
            // h <= H pointwise means h's inverse dominates H's
            CHECK(entropy_q_inv(y, q) <= xlog_bound_inv(y, q) + 1e-12);
        }
    }
}

TEST_CASE("converse and achievable bounds") {
    CHECK(converse_gamma(1, 8, 2) == 0.0);
    // L = q^K makes the bounds coincide
    CHECK(converse_gamma(8, 8, 2) ==
          doctest::Approx(achievable_gamma(3, 8, 2)).epsilon(1e-12));
    CHECK(achievable_gamma(4, 8, 2) == doctest::Approx(0.1100).epsilon(1e-3));
    CHECK_THROWS_AS(converse_gamma(1u << 10, 8, 2), DomainError);
    CHECK_THROWS_AS(achievable_gamma(9, 8, 2), DomainError);
}

TEST_CASE("asymptotic delta bound") {
    // N = q: log_q(N) = 1, so Delta = 1/sqrt(1-R)
    DeltaBound b = asymptotic_delta(5, 0.5, 5);
    CHECK(b.Delta == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(b.delta == doctest::Approx(std::sqrt(2.0) / 5).epsilon(1e-12));

    DeltaBound big = asymptotic_delta(1 << 10, 0.5, 2);
    CHECK(big.Delta == doctest::Approx(std::sqrt(20.0)).epsilon(1e-12));

    double prev = 1e9;
    for (std::size_t n = 4; n <= 1 << 12; n *= 2) {
        double d = asymptotic_delta(n, 0.5, 2).delta;
        CHECK(d < prev);
        prev = d;
    }
    CHECK_THROWS_AS(asymptotic_delta(8, 1.0, 2), DomainError);
    CHECK_THROWS_AS(asymptotic_delta(8, 0.0, 2), DomainError);
}

TEST_CASE("region report corners") {
    RegionReport r = region_report(2, 4, 8, 6);
    REQUIRE(r.points.size() == 4);
    CHECK(r.points[0].label == "uncoded_decentralized");
    CHECK(r.points[0].gamma == doctest::Approx(1.0 / 8));
    CHECK(r.points[0].delta == doctest::Approx(1.0));
    CHECK(r.points[1].label == "uncoded_centralized");
    CHECK(r.points[1].gamma == doctest::Approx(1.0));
    CHECK(r.points[1].delta == doctest::Approx(1.0 / 8));
    CHECK(r.points[2].label == "coded_achievable");
    CHECK(r.points[2].gamma == doctest::Approx(achievable_gamma(4, 8, 2)));
    CHECK(r.points[3].label == "converse");
    CHECK(r.points[3].gamma == doctest::Approx(converse_gamma(6, 8, 2)));
    CHECK(r.points[3].delta == doctest::Approx(r.points[2].delta));
    // converse below achievable whenever log_q L <= K
    CHECK(r.points[3].gamma <= r.points[2].gamma + 1e-12);

    // L = 1: converse collapses to zero
    CHECK(region_report(2, 3, 6, 1).points[3].gamma == 0.0);
}

TEST_CASE("CSV formatting is deterministic with 12 significant digits") {
    CHECK(fmt_g12(1.0 / 3.0) == "0.333333333333");
    CHECK(fmt_g12(0.0) == "0");
    CHECK(fmt_g12(1.0) == "1");
    RegionReport r = region_report(2, 4, 8, 6);
    std::string csv = r.to_csv();
    CHECK(csv.rfind("label,gamma,delta\n", 0) == 0);
    CHECK(csv == region_report(2, 4, 8, 6).to_csv());
    CHECK(csv.find("uncoded_decentralized,0.125,1\n") != std::string::npos);
}
