#include <doctest.h>

#include "oracles.hpp"
#include "lsdc/multishot.hpp"
#include "lsdc/sim.hpp"

using namespace lsdc;

TEST_CASE("a protocol round reproduces every demanded combination") {
    Scheme s = example_scheme();
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        FqVector w = random_matrix(s.field, 6, 1, 500 + seed).col(0);
        RoundResult r = run_round(s, w);
        CHECK(r.ok);
        CHECK(r.decoded == r.demanded);
        CHECK(r.z == mat_vec(s.E, w));
    }
    // the all-zero input decodes to all zeros
    RoundResult zero = run_round(s, FqVector(s.field, 6));
    CHECK(zero.ok);
    CHECK(zero.decoded.is_zero());
}

TEST_CASE("exhaustive inputs on a small scheme all decode correctly") {
    Field f(2);
    FqMatrix F = random_matrix(f, 2, 3, 31);
    Scheme s = build_coded(F, 5, FullCovering{}, {});
    REQUIRE(verify_scheme(s).ok);
    for (std::uint64_t i = 0; i < 8; ++i) {
        RoundResult r = run_round(s, unpack_index(f, 3, i));
        CHECK(r.ok);
    }
}

TEST_CASE("a corrupted decoder is caught by a unit-vector probe") {
    Scheme s = example_scheme();
    s.D(1, 2) = s.field.add(s.D(1, 2), 3);
    bool caught = false;
    for (std::size_t l = 0; l < 6 && !caught; ++l) {
        FqVector w(s.field, 6);
        w[l] = 1;
        caught = !run_round(s, w).ok;
    }
    CHECK(caught);
}

TEST_CASE("transcript layout is slot-major with decoder-support recipients") {
    Scheme s = example_scheme();
    FqVector w = random_matrix(s.field, 6, 1, 77).col(0);
    RoundResult r = run_round(s, w);
    REQUIRE(r.transcript.size() == 8);
    for (std::size_t j = 0; j < 8; ++j) {
        const TranscriptEntry& e = r.transcript[j];
        CHECK(e.slot == 0);
        CHECK(e.server == j);
        CHECK(e.value == r.z[j]);
        std::vector<std::size_t> expect;
        for (std::size_t k = 0; k < 4; ++k)
            if (s.D(k, j) != 0) expect.push_back(k);
        CHECK(e.recipients == expect);
    }
    // computation assignment mirrors the encoder supports
    for (std::size_t l = 0; l < 6; ++l)
        CHECK(r.column_servers[l] == s.E.col(l).support());
    for (std::size_t n = 0; n < 8; ++n)
        CHECK(r.server_computes[n] == s.E.row(n).support());
}

TEST_CASE("the transcript audit reproduces the matrix-side cost report") {
    auto check_scheme = [](const Scheme& s) {
        FqVector w = random_matrix(s.field, s.L, 1, 123).col(0);
        RoundResult r = run_round(s, w);
        CostReport direct = costs(s);
        CostReport audited = audit_costs(s.K, s.N, s.T, r);
        CHECK(audited.gamma == direct.gamma);
        CHECK(audited.delta == direct.delta);
        CHECK(audited.Delta == direct.Delta);
        CHECK(audited.max_column_support == direct.max_column_support);
        CHECK(audited.d_weight == direct.d_weight);
        CHECK(audited.user_symbols == direct.user_symbols);
        CHECK(audited.column_supports == direct.column_supports);
    };
    check_scheme(example_scheme());

    Field f(3);
    FqMatrix D = oracle::random_full_rank(f, 2, 6, 41);
    FqMatrix F = random_matrix(f, 2, 4, 42);
    check_scheme(build_coded(F, 6, GivenD{D}, {}));
    // two-slot scheme: the audit must merge slots per server
    check_scheme(build_multishot(F, 3, 2, GivenD{D}, {}));
}

TEST_CASE("audit validates transcript shape") {
    Scheme s = example_scheme();
    RoundResult r = run_round(s, FqVector(s.field, 6));
    CHECK_THROWS_AS(audit_costs(4, 7, 1, r), ShapeError);
    r.transcript[0].recipients = {9};
    CHECK_THROWS_AS(audit_costs(4, 8, 1, r), ShapeError);
}

TEST_CASE("hashed subfunction suites are deterministic and in range") {
    Field f(7);
    SubfunctionSuite a = SubfunctionSuite::hashed(f, 6, 99);
    SubfunctionSuite b = SubfunctionSuite::hashed(f, 6, 99);
    SubfunctionSuite c = SubfunctionSuite::hashed(f, 6, 100);
    bool any_diff = false;
    for (std::size_t l = 0; l < 6; ++l)
        for (Dataset d : {0ull, 1ull, 12345ull, ~0ull}) {
            CHECK(a.fns[l](d) == b.fns[l](d));
            CHECK(a.fns[l](d) < 7);
            any_diff |= a.fns[l](d) != c.fns[l](d);
        }
    CHECK(any_diff); // different seeds give a different suite
}

TEST_CASE("polynomial subfunctions evaluate by Horner") {
    Field f(5);
    // f_0(x) = 1 + 2x, f_1(x) = 3x^2
    FqMatrix coeffs = FqMatrix::from_rows(f, {{1, 2, 0}, {0, 0, 3}});
    SubfunctionSuite suite = SubfunctionSuite::polynomials(coeffs);
    REQUIRE(suite.fns.size() == 2);
    CHECK(suite.fns[0](0) == 1);
    CHECK(suite.fns[0](3) == 2); // 1 + 6 mod 5
    CHECK(suite.fns[0](7) == 0); // x = 2: 1 + 4 = 0 mod 5
    CHECK(suite.fns[1](2) == 2); // 3*4 = 12 mod 5
    CHECK(suite.fns[1](0) == 0);
}

TEST_CASE("running on subfunctions wires evaluation into the round") {
    Scheme s = example_scheme();
    SubfunctionSuite suite = SubfunctionSuite::hashed(s.field, 6, 7);
    std::vector<Dataset> data = {10, 20, 30, 40, 50, 60};
    RoundResult r = run_with_subfunctions(s, suite, data);
    CHECK(r.ok);
    for (std::size_t l = 0; l < 6; ++l) CHECK(r.w[l] == suite.fns[l](data[l]));
    CHECK_THROWS_AS(run_with_subfunctions(s, suite, {1, 2, 3}), ShapeError);
}

TEST_CASE("round input validation") {
    Scheme s = example_scheme();
    CHECK_THROWS_AS(run_round(s, FqVector(s.field, 5)), ShapeError);
    CHECK_THROWS_AS(run_round(s, FqVector(Field(5), 6)), FieldError);
}
