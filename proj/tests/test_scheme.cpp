#include <doctest.h>

#include "oracles.hpp"
#include "lsdc/bounds.hpp"
#include "lsdc/scheme.hpp"

using namespace lsdc;

TEST_CASE("the reference instance has the published exact costs") {
    Scheme s = example_scheme();
    CHECK(s.field.q() == 7);
    CHECK(s.K == 4);
    CHECK(s.N == 8);
    CHECK(s.L == 6);
    CHECK(s.T == 1);
    CHECK(verify_scheme(s).ok);
    CostReport c = costs(s);
    CHECK(c.gamma == Rational(6, 8));
    CHECK(c.delta == Rational(19, 32));
    CHECK(c.Delta == Rational(19, 4));
    CHECK(c.max_column_support == 6);
    CHECK(c.d_weight == 19);
    CHECK(c.user_symbols == std::vector<unsigned>{5, 4, 4, 6});
    CHECK(c.column_supports == std::vector<unsigned>{5, 6, 3, 4, 6, 6});
}

TEST_CASE("verification reports the first mismatch") {
    Scheme s = example_scheme();
    s.F(2, 3) = s.field.add(s.F(2, 3), 1);
    VerifyResult v = verify_scheme(s);
    CHECK_FALSE(v.ok);
    CHECK(v.row == 2);
    CHECK(v.col == 3);
    CHECK(v.expected == s.F(2, 3));
    CHECK(v.got == s.field.sub(s.F(2, 3), 1));
}

TEST_CASE("shape and field validation throws") {
    Scheme s = example_scheme();
    s.K = 5;
    CHECK_THROWS_AS(verify_scheme(s), ShapeError);
    Scheme t = example_scheme();
    t.F = FqMatrix(Field(5), 4, 6);
    CHECK_THROWS_AS(verify_scheme(t), FieldError);
}

TEST_CASE("uncoded decentralized: one server per subfunction") {
    Field f(3);
    FqMatrix F = random_matrix(f, 3, 5, 11);
    Scheme s = build_uncoded_decentralized(F);
    CHECK(s.N == 5);
    CHECK(s.E == FqMatrix::identity(f, 5));
    CHECK(s.D == F);
    CHECK(verify_scheme(s).ok);
    CostReport c = costs(s);
    CHECK(c.gamma == Rational(1, 5));
    CHECK(c.delta == Rational(F.weight(), 15));
}

TEST_CASE("uncoded centralized: K direct servers") {
    Scheme ref = example_scheme();
    Scheme s = build_uncoded_centralized(ref.F, 8);
    CHECK(verify_scheme(s).ok);
    CHECK(s.D == hstack(FqMatrix::identity(s.field, 4), FqMatrix(s.field, 4, 4)));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t l = 0; l < 6; ++l) CHECK(s.E(i, l) == ref.F(i, l));
    for (std::size_t i = 4; i < 8; ++i) CHECK(s.E.row(i).is_zero());
    CHECK(costs(s).delta == Rational(4, 32));
    CHECK_THROWS_AS(build_uncoded_centralized(ref.F, 3), ShapeError);

    // K = 1: a single active server
    FqMatrix F1 = random_matrix(Field(3), 1, 4, 5);
    CHECK(costs(build_uncoded_centralized(F1, 6)).delta == Rational(1, 6));
}

TEST_CASE("a zero decoding row means that user receives nothing") {
    Field f(2);
    // hand-built scheme: user 1 demands the zero combination
    FqMatrix F = FqMatrix::from_rows(f, {{0, 0}, {1, 0}});
    FqMatrix D = FqMatrix::from_rows(f, {{0, 0, 0}, {0, 1, 0}});
    FqMatrix E = FqMatrix::from_rows(f, {{1, 1}, {1, 0}, {0, 0}});
    Scheme s{f, 2, 3, 2, 1, F, D, E, {}};
    CHECK(verify_scheme(s).ok);
    CostReport c = costs(s);
    CHECK(c.user_symbols == std::vector<unsigned>{0, 1});
    CHECK(c.delta == Rational(1, 6));
}

TEST_CASE("given-D rebuild of the reference instance can only improve") {
    Scheme ref = example_scheme();
    BuildOptions opts;
    opts.repair = false;
    Scheme s = build_coded(ref.F, 8, GivenD{ref.D}, opts);
    CHECK(verify_scheme(s).ok);
    CHECK(s.D == ref.D);
    CostReport c = costs(s);
    CHECK(c.gamma <= Rational(6, 8));
    // decoded columns are per-coset minimum weight: nothing lighter
    // exists (independent weight-ascending search), and no column is
    // heavier than the hand-built one
    std::vector<unsigned> rebuilt = s.E.col_weights();
    std::vector<unsigned> hand = ref.E.col_weights();
    for (std::size_t l = 0; l < 6; ++l) {
        CHECK(rebuilt[l] <= hand[l]);
        FqVector target = ref.F.col(l);
        for (unsigned w = 0; w < rebuilt[l]; ++w) {
            bool found_lighter = !for_each_vector_of_weight(
                s.field, 8, w, [&](const FqVector& e) {
                    return mat_vec(ref.D, e) != target; // stop if solution
                });
            CHECK_FALSE(found_lighter);
        }
    }
}

TEST_CASE("given-D validates rank and field") {
    Scheme ref = example_scheme();
    FqMatrix bad(ref.field, 4, 8); // zero matrix: rank 0
    CHECK_THROWS_AS(build_coded(ref.F, 8, GivenD{bad}, {}), InfeasibleD);
    CHECK_THROWS_AS(build_coded(ref.F, 3, FullCovering{}, {}), InfeasibleD);
}

TEST_CASE("full covering at an explicit radius meets the gamma budget") {
    Field f(2);
    FqMatrix F = FqMatrix::identity(f, 2);
    BuildOptions opts;
    opts.radius = 1;
    Scheme s = build_coded(F, 4, FullCovering{}, opts);
    CHECK(verify_scheme(s).ok);
    CHECK(s.provenance.radius == 1);
    CHECK(s.provenance.strategy == "full-covering");
    // every demanded column decodes within the covering radius
    CHECK(costs(s).gamma <= Rational(1, 4));
}

TEST_CASE("an infeasible explicit radius throws; auto mode escalates") {
    Field f(2);
    FqMatrix F = FqMatrix::identity(f, 3);
    BuildOptions fixed;
    fixed.radius = 0; // radius 0 needs the whole space as codewords
    CHECK_THROWS_AS(build_coded(F, 4, FullCovering{}, fixed), InfeasibleRadius);
    BuildOptions open;
    open.radius = -1;
    Scheme s = build_coded(F, 4, FullCovering{}, open);
    CHECK(verify_scheme(s).ok);
    CHECK(s.provenance.radius >= 1);
}

TEST_CASE("zero demands decode to zero encodings") {
    Field f(3);
    FqMatrix F(f, 2, 3); // all-zero demands
    Scheme s = build_coded(F, 5, FullCovering{}, {});
    CHECK(verify_scheme(s).ok);
    CHECK(s.E.weight() == 0);
    CHECK(costs(s).gamma == Rational(0));
}

TEST_CASE("partial covering strategy meets its radius on small instances") {
    Field f(2);
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        FqMatrix F = random_matrix(f, 2, 3, seed);
        BuildOptions opts;
        opts.seed = seed;
        opts.repair = false;
        Scheme s = build_coded(F, 5, PartialCovering{}, opts);
        CHECK(verify_scheme(s).ok);
        CHECK(s.provenance.strategy == "partial-covering");
        CHECK(s.provenance.rounds >= 1);
        CHECK(costs(s).max_column_support <=
              static_cast<unsigned>(s.provenance.radius));
    }
}

TEST_CASE("decoder gamma equals the partial covering radius of the x-set") {
    // the defining equivalence: max leader weight over demanded cosets
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        std::uint32_t q = (seed % 2) ? 3 : 2;
        Field f(q);
        std::size_t K = 2 + (seed % 2), N = 4 + (seed % 3), L = 2 + (seed % 2);
        FqMatrix D = oracle::random_full_rank(f, K, N, 3000 + seed);
        FqMatrix F = random_matrix(f, K, L, 4000 + seed);
        BuildOptions opts;
        opts.repair = false;
        Scheme s = build_coded(F, N, GivenD{D}, opts);
        LinearCode code = LinearCode::from_parity_check(D);
        CosetLeaderTable table = CosetLeaderTable::build(code);
        std::vector<FqVector> xs;
        for (auto idx : x_set(F, D).materialize_indices(1 << 20))
            xs.push_back(unpack_index(f, N, idx));
        CHECK(costs(s).max_column_support ==
              partial_covering_radius(code, table, xs));
    }
}

TEST_CASE("x_set is exactly the union of demanded cosets") {
    Field f(2);
    FqMatrix D = oracle::random_full_rank(f, 2, 5, 71);
    FqMatrix F = random_matrix(f, 2, 3, 72);
    auto got = x_set(F, D).materialize_indices(1 << 10);
    std::vector<std::uint64_t> expect;
    for (std::uint64_t i = 0; i < 32; ++i) {
        FqVector x = unpack_index(f, 5, i);
        FqVector s = mat_vec(D, x);
        for (std::size_t l = 0; l < 3; ++l)
            if (s == F.col(l)) {
                expect.push_back(i);
                break;
            }
    }
    CHECK(got == expect);
    FqMatrix deficient(f, 2, 5);
    CHECK_THROWS_AS(x_set(F, deficient), InfeasibleD);
}

TEST_CASE("brute force finds the known optimum for identity demands") {
    Field f(2);
    FqMatrix F = FqMatrix::identity(f, 2);
    BruteForceResult r = brute_force_optimal_gamma(F, 4);
    CHECK(r.gamma == Rational(1, 4));
    CHECK(r.searched == 256);
    CHECK(rank(r.best_D) == 2);
    // and the builder on that D reproduces the optimum
    BuildOptions opts;
    opts.repair = false;
    CHECK(costs(build_coded(F, 4, GivenD{r.best_D}, opts)).gamma ==
          Rational(1, 4));
}

TEST_CASE("brute force is a floor for every strategy") {
    Field f(2);
    FqMatrix F = random_matrix(f, 2, 3, 99);
    BruteForceResult best = brute_force_optimal_gamma(F, 5);
    BuildOptions opts;
    opts.repair = false;
    CHECK(costs(build_coded(F, 5, FullCovering{}, opts)).gamma >= best.gamma);
    CHECK(costs(build_coded(F, 5, PartialCovering{}, opts)).gamma >=
          best.gamma);
    CHECK(best.gamma >=
          Rational(0)); // and the entropy converse holds in floating point
    CHECK(boost::rational_cast<double>(best.gamma) >=
          converse_gamma(distinct_columns(F).size(), 5, 2) - 1e-9);
}

TEST_CASE("brute force observes the candidate guard") {
    Field f(5);
    FqMatrix F = random_matrix(f, 3, 2, 7);
    CHECK_THROWS_AS(brute_force_optimal_gamma(F, 6, 1 << 16), ResourceLimit);
}

TEST_CASE("repair engages idle servers without breaking the factorization") {
    Field f(2);
    // light demands leave three encoding rows zero before repair
    FqMatrix F = FqMatrix::from_rows(f, {{1, 1}, {0, 1}});
    FqMatrix D = hstack(FqMatrix::identity(f, 2), FqMatrix(f, 2, 3));
    BuildOptions raw;
    raw.repair = false;
    Scheme before = build_coded(F, 5, GivenD{D}, raw);
    unsigned zero_rows = 0;
    for (std::size_t i = 0; i < 5; ++i)
        zero_rows += before.E.row(i).is_zero();
    REQUIRE(zero_rows == 3);
    REQUIRE(costs(before).gamma == Rational(2, 5));

    Scheme after = repair_zero_rows(before);
    CHECK(verify_scheme(after).ok);
    CHECK(after.provenance.repaired);
    CHECK(after.provenance.raw_gamma == "2/5");
    for (std::size_t i = 0; i < 5; ++i) CHECK_FALSE(after.E.row(i).is_zero());
    // the copies drop the heaviest column and transmit to nobody, so the
    // decoding load is untouched (and gamma may legitimately worsen)
    CHECK(costs(after).d_weight == costs(before).d_weight);
    CHECK(costs(after).user_symbols == costs(before).user_symbols);

    // the builder applies the same repair by default
    Scheme built = build_coded(F, 5, GivenD{D}, {});
    CHECK(built.provenance.repaired);
    CHECK(verify_scheme(built).ok);
}

TEST_CASE("repair splits the recipients of an exactly copied row") {
    Field f(2);
    // hand-built: server 1 serves both users; server 2 feeds column 0;
    // servers 0 and 3 are idle.  The heaviest column is column 0, which
    // the first nonzero row (row 1) does not touch, so the repair copies
    // it exactly and hands half its recipients to the idle server.
    FqMatrix E = FqMatrix::from_rows(f, {{0, 0}, {0, 1}, {1, 0}, {0, 0}});
    FqMatrix D = FqMatrix::from_rows(f, {{0, 1, 1, 0}, {0, 1, 0, 0}});
    FqMatrix F = mat_mul(D, E);
    Scheme s{f, 2, 4, 2, 1, F, D, E, {}};
    REQUIRE(verify_scheme(s).ok);
    CostReport before = costs(s);

    Scheme after = repair_zero_rows(s);
    CHECK(verify_scheme(after).ok);
    CHECK(after.provenance.repaired);
    CHECK(after.provenance.raw_gamma == "1/4");
    // server 0 took over row 1's linear form and user 1 moved to it
    CHECK(after.E.row(0) == after.E.row(1));
    CHECK(after.D(1, 0) == 1);
    CHECK(after.D(1, 1) == 0);
    CHECK(after.D(0, 1) == 1);
    // per-user symbol counts and total load are preserved by the split
    CHECK(costs(after).d_weight == before.d_weight);
    CHECK(costs(after).user_symbols == before.user_symbols);
    // row 3's only possible copy would be all-zero, so it stays idle
    CHECK(after.E.row(3).is_zero());
}

TEST_CASE("repair is a no-op when no server can usefully be engaged") {
    Scheme ref = example_scheme();
    Scheme same = repair_zero_rows(ref);
    CHECK_FALSE(same.provenance.repaired);
    CHECK(same.E == ref.E);

    // every nonzero row only feeds the heaviest column: copies would
    // all be zero, so nothing changes and nothing is reported repaired
    Field f(2);
    FqMatrix F = FqMatrix::identity(f, 2);
    FqMatrix D = hstack(FqMatrix::identity(f, 2), FqMatrix(f, 2, 3));
    BuildOptions opts; // default repair on
    Scheme s = build_coded(F, 5, GivenD{D}, opts);
    CHECK_FALSE(s.provenance.repaired);
    CHECK(verify_scheme(s).ok);

    Field f3(3);
    Scheme zero = build_coded(FqMatrix(f3, 2, 2), 4, FullCovering{}, {});
    CHECK(zero.E.weight() == 0);
    CHECK_FALSE(zero.provenance.repaired);
}

TEST_CASE("syndrome capacity check") {
    Field f(2);
    CHECK(demands_within_syndrome_capacity(random_matrix(f, 2, 4, 1)));
    CHECK_FALSE(demands_within_syndrome_capacity(random_matrix(f, 2, 5, 1)));
    CHECK(demands_within_syndrome_capacity(random_matrix(Field(7), 8, 100, 1)));
}

TEST_CASE("distinct columns keep first-appearance order") {
    Field f(3);
    FqMatrix F = FqMatrix::from_rows(f, {{1, 2, 1, 0}, {0, 1, 0, 2}});
    auto cols = distinct_columns(F);
    REQUIRE(cols.size() == 3);
    CHECK(cols[0] == F.col(0));
    CHECK(cols[1] == F.col(1));
    CHECK(cols[2] == F.col(3));
}

TEST_CASE("bounds report around a concrete scheme") {
    Scheme s = example_scheme();
    SchemeBoundsReport r = bounds_check(s);
    CHECK(r.distinct == 6);
    CHECK(r.achieved_gamma == doctest::Approx(0.75));
    CHECK(r.converse == doctest::Approx(converse_gamma(6, 8, 7)));
    CHECK(r.achievable == doctest::Approx(achievable_gamma(4, 8, 7)));
    CHECK(r.finite_n_ok);
    CHECK(r.within_capacity);
    CHECK(r.converse <= r.achieved_gamma);
}
