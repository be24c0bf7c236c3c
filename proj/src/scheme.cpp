#include "lsdc/scheme.hpp"

#include <algorithm>
#include <cmath>

#include "lsdc/bounds.hpp"

namespace lsdc {

namespace {

void check_scheme_shapes(const Scheme& s) {
    if (s.F.field() != s.field || s.D.field() != s.field ||
        s.E.field() != s.field)
        throw FieldError("scheme matrices over different fields");
    if (s.T == 0 || s.N == 0 || s.K == 0)
        throw ShapeError("scheme dimensions must be positive");
    if (s.F.rows() != s.K || s.F.cols() != s.L)
        throw ShapeError("F must be K x L");
    if (s.D.rows() != s.K || s.D.cols() != s.N * s.T)
        throw ShapeError("D must be K x N*T");
    if (s.E.rows() != s.N * s.T || s.E.cols() != s.L)
        throw ShapeError("E must be N*T x L");
}

std::string rational_str(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace

VerifyResult verify_scheme(const Scheme& s) {
    check_scheme_shapes(s);
    FqMatrix prod = mat_mul(s.D, s.E);
    for (std::size_t i = 0; i < s.K; ++i)
        for (std::size_t j = 0; j < s.L; ++j)
            if (prod(i, j) != s.F(i, j)) {
                VerifyResult v;
                v.ok = false;
                v.row = i;
                v.col = j;
                v.expected = s.F(i, j);
                v.got = prod(i, j);
                return v;
            }
    VerifyResult v;
    v.ok = true;
    return v;
}

CostReport costs(const Scheme& s) {
    check_scheme_shapes(s);
    CostReport r;
    r.column_supports.assign(s.L, 0);
    for (std::size_t l = 0; l < s.L; ++l) {
        // W_l: servers touching column l in any slot
        std::vector<bool> touched(s.N, false);
        for (std::size_t row = 0; row < s.N * s.T; ++row)
            if (s.E(row, l) != 0) touched[row % s.N] = true;
        for (std::size_t n = 0; n < s.N; ++n)
            r.column_supports[l] += touched[n];
        r.max_column_support = std::max(r.max_column_support, r.column_supports[l]);
    }
    r.user_symbols = s.D.row_weights();
    r.d_weight = s.D.weight();
    r.gamma = Rational(r.max_column_support, static_cast<long long>(s.N));
    r.delta = Rational(r.d_weight, static_cast<long long>(s.K * s.N));
    r.Delta = Rational(r.d_weight, static_cast<long long>(s.K));
    return r;
}

Scheme build_uncoded_decentralized(const FqMatrix& F) {
    const Field& f = F.field();
    Scheme s{f, F.rows(), F.cols(), F.cols(), 1, F,
             F, FqMatrix::identity(f, F.cols()), Provenance{}};
    s.provenance.strategy = "uncoded-decentralized";
    if (!verify_scheme(s).ok) throw Error("internal: uncoded build invalid");
    return s;
}

Scheme build_uncoded_centralized(const FqMatrix& F, std::size_t N) {
    const Field& f = F.field();
    std::size_t K = F.rows(), L = F.cols();
    if (N < K)
        throw ShapeError("uncoded centralized needs at least K servers");
    FqMatrix D = hstack(FqMatrix::identity(f, K), FqMatrix(f, K, N - K));
    FqMatrix E = vstack(F, FqMatrix(f, N - K, L));
    Scheme s{f, K, N, L, 1, F, std::move(D), std::move(E), Provenance{}};
    s.provenance.strategy = "uncoded-centralized";
    if (!verify_scheme(s).ok) throw Error("internal: uncoded build invalid");
    return s;
}

bool demands_within_syndrome_capacity(const FqMatrix& F) {
    // L <= q^K without overflowing: grow q^k until it reaches L
    std::uint64_t l = F.cols();
    std::uint64_t cap = 1;
    for (std::size_t i = 0; i < F.rows(); ++i) {
        if (cap >= l) return true;
        if (cap > (~0ull) / F.field().q()) return true; // q^K huge
        cap *= F.field().q();
    }
    return cap >= l;
}

std::vector<FqVector> distinct_columns(const FqMatrix& F) {
    std::vector<FqVector> out;
    for (std::size_t l = 0; l < F.cols(); ++l) {
        FqVector c = F.col(l);
        bool seen = false;
        for (const auto& p : out)
            if (p == c) { seen = true; break; }
        if (!seen) out.push_back(std::move(c));
    }
    return out;
}

TargetSet x_set(const FqMatrix& F, const FqMatrix& D) {
    if (F.field() != D.field()) throw FieldError("F and D over different fields");
    if (F.rows() != D.rows()) throw ShapeError("F and D row mismatch");
    if (rank(D) != D.rows())
        throw InfeasibleD("D lacks full row rank; not every demand is addressable");
    return TargetSet::cosets(D, distinct_columns(F));
}

namespace {

/// Columns of E := coset leaders decoding the columns of F.
FqMatrix decode_columns(const CosetLeaderTable& table, const FqMatrix& F,
                        std::size_t n) {
    FqMatrix e(F.field(), n, F.cols());
    for (std::size_t l = 0; l < F.cols(); ++l) {
        FqVector leader = table.leader(F.col(l));
        for (std::size_t i = 0; i < n; ++i) e(i, l) = leader[i];
    }
    return e;
}

/// Adds lexicographically-smallest independent vectors until the code
/// has the requested dimension (supercode: coverage only improves).
LinearCode extend_to_dimension(const LinearCode& code, std::size_t dim) {
    if (code.dimension() >= dim) return code;
    const Field& f = code.field();
    std::size_t n = code.length();
    FqMatrix g = code.generator();
    std::uint64_t idx = 1;
    while (g.rows() < dim) {
        FqVector v = unpack_index(f, n, idx++);
        FqMatrix cand = vstack(g, FqMatrix(f, 1, n));
        cand.set_row(g.rows(), v);
        if (rank(cand) > g.rows()) g = std::move(cand);
    }
    return LinearCode::from_generator(g);
}

int initial_radius(double gamma_hint, std::size_t N) {
    double r = std::ceil(gamma_hint * static_cast<double>(N) - 1e-9);
    if (r < 0) r = 0;
    if (r > static_cast<double>(N)) r = static_cast<double>(N);
    return static_cast<int>(r);
}

Scheme assemble(const Field& f, const FqMatrix& F, std::size_t N,
                const FqMatrix& D, const FqMatrix& E, Provenance prov) {
    Scheme s{f, F.rows(), N, F.cols(), 1, F, D, E, std::move(prov)};
    VerifyResult v = verify_scheme(s);
    if (!v.ok)
        throw Error("internal: built scheme fails D*E = F at (" +
                    std::to_string(v.row) + "," + std::to_string(v.col) + ")");
    return s;
}

Scheme build_given_d(const FqMatrix& F, std::size_t N, const FqMatrix& D,
                     const BuildOptions& opts) {
    const Field& f = F.field();
    if (D.field() != f) throw FieldError("D over a different field");
    if (D.rows() != F.rows() || D.cols() != N)
        throw ShapeError("D must be K x N");
    if (rank(D) != D.rows())
        throw InfeasibleD("D lacks full row rank");
    LinearCode code = LinearCode::from_parity_check(D);
    CosetLeaderTable table = CosetLeaderTable::build(code, opts.max_table);
    FqMatrix E = decode_columns(table, F, N);
    Provenance prov;
    prov.strategy = "given-d";
    prov.seed = opts.seed;
    std::vector<unsigned> cw = E.col_weights();
    prov.radius =
        static_cast<int>(*std::max_element(cw.begin(), cw.end()));
    return assemble(f, F, N, D, E, prov);
}

Scheme build_full_covering(const FqMatrix& F, std::size_t N,
                           const BuildOptions& opts, GreedyTrace* trace_out) {
    const Field& f = F.field();
    std::size_t K = F.rows();
    CandidatePolicy policy = opts.policy;
    policy.seed = opts.seed;
    bool escalate = opts.radius < 0;
    int r = escalate ? initial_radius(
                           achievable_gamma(K, N, f.q()), N)
                     : opts.radius;
    for (; r <= static_cast<int>(N); ++r) {
        CoverBuildResult res =
            build_covering_code(f, N, static_cast<unsigned>(r), policy,
                                opts.max_space);
        if (res.code.dimension() > N - K) {
            if (!escalate)
                throw InfeasibleRadius(
                    "covering at radius " + std::to_string(r) + " needs " +
                    std::to_string(res.code.dimension()) +
                    " dimensions, above the budget " + std::to_string(N - K));
            continue;
        }
        LinearCode code = extend_to_dimension(res.code, N - K);
        CosetLeaderTable table = CosetLeaderTable::build(code, opts.max_table);
        FqMatrix E = decode_columns(table, F, N);
        if (trace_out) *trace_out = res.trace;
        Provenance prov;
        prov.strategy = "full-covering";
        prov.seed = opts.seed;
        prov.radius = r;
        return assemble(f, F, N, code.parity_check(), E, prov);
    }
    throw InfeasibleRadius("no feasible covering radius up to N");
}

Scheme build_partial_covering(const FqMatrix& F, std::size_t N,
                              const BuildOptions& opts,
                              GreedyTrace* trace_out) {
    const Field& f = F.field();
    std::size_t K = F.rows();
    CandidatePolicy policy = opts.policy;
    policy.seed = opts.seed;
    std::vector<FqVector> demands = distinct_columns(F);

    // demanded cosets under the trivial full-rank seed [I_K | 0]
    FqMatrix d_init =
        hstack(FqMatrix::identity(f, K), FqMatrix(f, K, N - K));
    std::vector<std::uint64_t> x_initial =
        TargetSet::cosets(d_init, demands).materialize_indices(opts.max_space);

    bool escalate = opts.radius < 0;
    int r = escalate
                ? initial_radius(converse_gamma(demands.size(), N, f.q()), N)
                : opts.radius;
    for (; r <= static_cast<int>(N); ++r) {
        std::vector<std::uint64_t> x = x_initial;
        for (unsigned round = 1; round <= opts.max_rounds; ++round) {
            std::vector<FqVector> pts;
            pts.reserve(x.size());
            for (auto idx : x) pts.push_back(unpack_index(f, N, idx));
            CoverBuildResult res = build_partial_covering_code(
                f, N, static_cast<unsigned>(r),
                TargetSet::explicit_points(f, N, std::move(pts)), policy,
                opts.max_space);
            if (res.code.dimension() > N - K) break; // radius too small
            LinearCode code = extend_to_dimension(res.code, N - K);
            CosetLeaderTable table =
                CosetLeaderTable::build(code, opts.max_table);
            FqMatrix E = decode_columns(table, F, N);
            std::vector<unsigned> cw = E.col_weights();
            unsigned gamma_n = *std::max_element(cw.begin(), cw.end());
            if (gamma_n <= static_cast<unsigned>(r)) {
                if (trace_out) *trace_out = res.trace;
                Provenance prov;
                prov.strategy = "partial-covering";
                prov.seed = opts.seed;
                prov.radius = r;
                prov.rounds = round;
                return assemble(f, F, N, code.parity_check(), E, prov);
            }
            // grow the target by the cosets this D actually demands
            std::vector<std::uint64_t> demanded =
                x_set(F, code.parity_check()).materialize_indices(opts.max_space);
            std::vector<std::uint64_t> merged;
            merged.reserve(x.size() + demanded.size());
            std::set_union(x.begin(), x.end(), demanded.begin(), demanded.end(),
                           std::back_inserter(merged));
            if (merged.size() == x.size())
                throw Error("internal: demand growth stalled"); // unreachable
            x = std::move(merged);
        }
        if (!escalate)
            throw InfeasibleRadius("partial covering infeasible at radius " +
                                   std::to_string(r));
    }
    throw InfeasibleRadius("no feasible partial-covering radius up to N");
}

} // namespace

Scheme build_coded(const FqMatrix& F, std::size_t N, const Strategy& strategy,
                   const BuildOptions& opts, GreedyTrace* trace_out) {
    if (F.rows() == 0 || F.cols() == 0)
        throw ShapeError("demand matrix must be nonempty");
    if (N < F.rows())
        throw InfeasibleD("fewer servers than users: no full-row-rank D exists");
    Scheme s = std::visit(
        [&](const auto& st) -> Scheme {
            using T = std::decay_t<decltype(st)>;
            if constexpr (std::is_same_v<T, GivenD>)
                return build_given_d(F, N, st.D, opts);
            else if constexpr (std::is_same_v<T, FullCovering>)
                return build_full_covering(F, N, opts, trace_out);
            else
                return build_partial_covering(F, N, opts, trace_out);
        },
        strategy);
    if (opts.repair) s = repair_zero_rows(s);
    return s;
}

BruteForceResult brute_force_optimal_gamma(const FqMatrix& F, std::size_t N,
                                           std::uint64_t max_candidates) {
    const Field& f = F.field();
    std::size_t K = F.rows();
    if (N < K)
        throw InfeasibleD("fewer servers than users: no full-row-rank D exists");
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < K * N; ++i) {
        if (total > max_candidates / f.q())
            throw ResourceLimit("q^(K*N) exceeds max_candidates " +
                                std::to_string(max_candidates));
        total *= f.q();
    }
    std::vector<FqVector> targets = distinct_columns(F);
    std::vector<std::uint64_t> target_idx;
    for (const auto& t : targets) target_idx.push_back(pack_index(t));

    unsigned best = static_cast<unsigned>(N) + 1;
    FqMatrix best_d(f, K, N);
    bool found = false;

    std::vector<unsigned> cost(target_idx.size());
    for (std::uint64_t di = 0; di < total; ++di) {
        // digits row-major: D(k,n) = digit K*N-major at position k*N+n
        FqMatrix d(f, K, N);
        std::uint64_t rem = di;
        for (std::size_t pos = K * N; pos-- > 0;) {
            d(pos / N, pos % N) = static_cast<std::uint32_t>(rem % f.q());
            rem /= f.q();
        }
        if (rank(d) != K) continue;
        // min coset weight per demanded syndrome, by weight-major scan
        std::fill(cost.begin(), cost.end(), static_cast<unsigned>(N) + 1);
        std::size_t filled = 0;
        for (unsigned w = 0; w <= N && filled < cost.size(); ++w) {
            for_each_vector_of_weight(f, N, w, [&](const FqVector& e) {
                FqVector s(f, K);
                for (std::size_t i = 0; i < N; ++i) {
                    if (!e[i]) continue;
                    for (std::size_t k = 0; k < K; ++k)
                        s[k] = f.add(s[k], f.mul(d(k, i), e[i]));
                }
                std::uint64_t si = pack_index(s);
                for (std::size_t t = 0; t < target_idx.size(); ++t)
                    if (target_idx[t] == si && cost[t] > N) {
                        cost[t] = w;
                        ++filled;
                    }
                return filled < cost.size();
            });
        }
        unsigned worst = *std::max_element(cost.begin(), cost.end());
        if (worst < best) {
            best = worst;
            best_d = d;
            found = true;
        }
    }
    if (!found) throw InfeasibleD("no full-row-rank D in the search space");
    return BruteForceResult{Rational(best, static_cast<long long>(N)), best_d,
                            total};
}

SchemeBoundsReport bounds_check(const Scheme& s) {
    check_scheme_shapes(s);
    CostReport c = costs(s);
    SchemeBoundsReport r;
    r.distinct = distinct_columns(s.F).size();
    r.achieved_gamma = boost::rational_cast<double>(c.gamma);
    r.converse = converse_gamma(r.distinct, s.N, s.field.q());
    double y = static_cast<double>(s.K) / static_cast<double>(s.N * s.T);
    if (y > 1.0) throw DomainError("K/(N*T) > 1");
    r.achievable = static_cast<double>(s.T) * entropy_q_inv(y, s.field.q());
    // every valid scheme packs its distinct demands inside the ball of
    // its max encoding column weight (distinct columns of F need
    // distinct columns of E)
    std::vector<unsigned> cw = s.E.col_weights();
    unsigned maxw = *std::max_element(cw.begin(), cw.end());
    r.finite_n_ok =
        BigInt(r.distinct) <= hamming_ball_volume(s.N * s.T, maxw, s.field.q());
    r.within_capacity = demands_within_syndrome_capacity(s.F);
    return r;
}

Scheme repair_zero_rows(const Scheme& s) {
    Scheme r = s;
    std::size_t nrows = r.N * r.T;
    bool any = false;
    for (std::size_t i = 0; i < nrows; ++i) {
        if (!r.E.row(i).is_zero()) continue;
        // first nonzero row as the source to copy
        std::size_t j = nrows;
        for (std::size_t cand = 0; cand < nrows; ++cand)
            if (!r.E.row(cand).is_zero()) { j = cand; break; }
        if (j == nrows) break; // E is entirely zero; nothing to copy

        std::vector<unsigned> cw = r.E.col_weights();
        std::size_t lmax = static_cast<std::size_t>(
            std::max_element(cw.begin(), cw.end()) - cw.begin());
        bool exact = (r.E(j, lmax) == 0);

        FqVector newrow = r.E.row(j);
        newrow[lmax] = 0;
        // the source only feeds the heaviest column: copying would leave
        // the server idle anyway, so there is nothing to offload
        if (newrow.is_zero()) continue;
        r.E.set_row(i, newrow);
        for (std::size_t k = 0; k < r.K; ++k) r.D(k, i) = 0;
        if (exact) {
            // identical linear form: split the source's recipients
            std::vector<std::size_t> rec;
            for (std::size_t k = 0; k < r.K; ++k)
                if (r.D(k, j) != 0) rec.push_back(k);
            for (std::size_t m = (rec.size() + 1) / 2; m < rec.size(); ++m) {
                std::size_t k = rec[m];
                r.D(k, i) = r.D(k, j);
                r.D(k, j) = 0;
            }
        }
        any = true;
    }
    if (!any) return r;
    VerifyResult v = verify_scheme(r);
    if (!v.ok) throw Error("internal: repair broke the scheme");
    r.provenance.repaired = true;
    r.provenance.raw_gamma = rational_str(costs(s).gamma);
    return r;
}

Scheme example_scheme() {
    Field f(7);
    FqMatrix F = FqMatrix::from_rows(f, {{2, 4, 4, 5, 5, 0},
                                         {3, 4, 5, 2, 6, 6},
                                         {2, 4, 6, 5, 2, 0},
                                         {3, 5, 0, 2, 3, 1}});
    FqMatrix E = FqMatrix::from_rows(f, {{2, 6, 3, 1, 2, 0},
                                         {4, 5, 2, 0, 3, 0},
                                         {1, 2, 1, 0, 0, 2},
                                         {0, 1, 0, 2, 4, 1},
                                         {2, 0, 0, 1, 3, 2},
                                         {0, 2, 0, 0, 5, 3},
                                         {0, 1, 0, 2, 0, 4},
                                         {2, 0, 0, 0, 4, 5}});
    FqMatrix D = FqMatrix::from_rows(f, {{0, 2, 0, 3, 4, 2, 1, 0},
                                         {4, 0, 0, 2, 1, 3, 0, 0},
                                         {0, 4, 5, 2, 1, 0, 0, 0},
                                         {4, 0, 2, 1, 2, 0, 4, 5}});
    Scheme s{f, 4, 8, 6, 1, std::move(F), std::move(D), std::move(E),
             Provenance{}};
    s.provenance.strategy = "reference-example";
    s.provenance.notes = "hand-constructed reference instance over GF(7)";
    if (!verify_scheme(s).ok) throw Error("internal: reference instance invalid");
    return s;
}

} // namespace lsdc
