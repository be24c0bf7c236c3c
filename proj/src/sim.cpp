#include "lsdc/sim.hpp"

#include <algorithm>

namespace lsdc {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

} // namespace

SubfunctionSuite SubfunctionSuite::hashed(const Field& f, std::size_t count,
                                          std::uint64_t seed) {
    SubfunctionSuite s{f, {}};
    for (std::size_t l = 0; l < count; ++l) {
        std::uint64_t key = splitmix(seed + l);
        std::uint32_t q = f.q();
        s.fns.push_back([key, q](Dataset d) {
            return static_cast<std::uint32_t>(splitmix(d ^ key) % q);
        });
    }
    return s;
}

SubfunctionSuite SubfunctionSuite::polynomials(const FqMatrix& coeffs) {
    SubfunctionSuite s{coeffs.field(), {}};
    for (std::size_t l = 0; l < coeffs.rows(); ++l) {
        std::vector<std::uint32_t> c = coeffs.row(l).data();
        Field f = coeffs.field();
        s.fns.push_back([c, f](Dataset d) {
            std::uint32_t x = static_cast<std::uint32_t>(d % f.q());
            std::uint32_t v = 0;
            for (std::size_t i = c.size(); i-- > 0;)
                v = f.add(f.mul(v, x), c[i]);
            return v;
        });
    }
    return s;
}

RoundResult run_round(const Scheme& s, const FqVector& w) {
    if (w.field() != s.field) throw FieldError("w over a different field");
    if (w.size() != s.L) throw ShapeError("w must have one value per job");
    FqVector z = mat_vec(s.E, w);
    FqVector decoded = mat_vec(s.D, z);
    FqVector demanded = mat_vec(s.F, w);
    RoundResult r{w, z, decoded, demanded, decoded == demanded, {}, {}, {}};
    for (std::size_t row = 0; row < s.N * s.T; ++row) {
        TranscriptEntry e;
        e.slot = row / s.N;
        e.server = row % s.N;
        e.value = z[row];
        for (std::size_t k = 0; k < s.K; ++k)
            if (s.D(k, row) != 0) e.recipients.push_back(k);
        r.transcript.push_back(std::move(e));
    }
    r.column_servers.assign(s.L, {});
    r.server_computes.assign(s.N, {});
    for (std::size_t l = 0; l < s.L; ++l) {
        std::vector<bool> touched(s.N, false);
        for (std::size_t row = 0; row < s.N * s.T; ++row)
            if (s.E(row, l) != 0) touched[row % s.N] = true;
        for (std::size_t n = 0; n < s.N; ++n)
            if (touched[n]) {
                r.column_servers[l].push_back(n);
                r.server_computes[n].push_back(l);
            }
    }
    return r;
}

RoundResult run_with_subfunctions(const Scheme& s, const SubfunctionSuite& suite,
                                  const std::vector<Dataset>& datasets) {
    if (suite.field != s.field)
        throw FieldError("subfunction suite over a different field");
    if (suite.fns.size() != s.L || datasets.size() != s.L)
        throw ShapeError("need one subfunction and one dataset per job");
    FqVector w(s.field, s.L);
    for (std::size_t l = 0; l < s.L; ++l) {
        std::uint32_t v = suite.fns[l](datasets[l]);
        if (v >= s.field.q())
            throw DomainError("subfunction returned a value outside GF(q)");
        w[l] = v;
    }
    return run_round(s, w);
}

CostReport audit_costs(std::size_t K, std::size_t N, std::size_t T,
                       const RoundResult& round) {
    if (round.transcript.size() != N * T)
        throw ShapeError("transcript length is not N*T");
    CostReport r;
    r.column_supports.reserve(round.column_servers.size());
    for (const auto& servers : round.column_servers) {
        r.column_supports.push_back(static_cast<unsigned>(servers.size()));
        r.max_column_support =
            std::max(r.max_column_support, r.column_supports.back());
    }
    r.user_symbols.assign(K, 0);
    for (const auto& e : round.transcript)
        for (auto k : e.recipients) {
            if (k >= K) throw ShapeError("transcript recipient out of range");
            ++r.user_symbols[k];
            ++r.d_weight;
        }
    r.gamma = Rational(r.max_column_support, static_cast<long long>(N));
    r.delta = Rational(r.d_weight, static_cast<long long>(K * N));
    r.Delta = Rational(r.d_weight, static_cast<long long>(K));
    return r;
}

} // namespace lsdc
