#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

#include "lsdc/covering.hpp"

namespace lsdc {

using Rational = boost::rational<long long>;

/// How a scheme was produced; carried through JSON round trips.
struct Provenance {
    std::string strategy;
    std::uint64_t seed = kDefaultSeed;
    int radius = -1;        // covering radius actually used; -1 when n/a
    unsigned rounds = 0;    // demand-growth rounds (partial covering)
    bool repaired = false;  // idle-server repair applied
    std::string raw_gamma;  // pre-repair gamma "a/b" when repaired
    std::string notes;
};

/// A coded computation scheme: K users demand the L columns of F, the
/// N servers (times T slots) compute the rows of E, and users decode
/// with the rows of D.  Valid iff D*E = F over GF(q).
///
/// Multi-shot layout is slot-major: matrix coordinate t*N + n is
/// (server n, slot t), 0-based.  T = 1 is the single-shot case.
struct Scheme {
    Field field;
    std::size_t K, N, L, T;
    FqMatrix F; // K x L
    FqMatrix D; // K x (N*T)
    FqMatrix E; // (N*T) x L
    Provenance provenance;
};

struct VerifyResult {
    bool ok = false;
    // first mismatch of D*E vs F when !ok
    std::size_t row = 0, col = 0;
    std::uint32_t expected = 0, got = 0;
};

/// Checks shapes/fields (throwing ShapeError/FieldError) and then
/// D*E == F, reporting the first mismatching entry.
VerifyResult verify_scheme(const Scheme& s);

/// Exact cost report.
///   gamma = max_l |W_l| / N, where W_l is the set of servers whose
///           encoding row touches column l in any slot;
///   delta = w(D) / (K*N);  Delta = w(D) / K.
struct CostReport {
    Rational gamma, delta, Delta;
    unsigned max_column_support = 0;       // max_l |W_l|
    unsigned d_weight = 0;                 // w(D)
    std::vector<unsigned> user_symbols;    // per user: symbols received
    std::vector<unsigned> column_supports; // per column l: |W_l|
};
CostReport costs(const Scheme& s);

// ------------------------------------------------------------- builders

struct FullCovering {};
struct PartialCovering {};
struct GivenD {
    FqMatrix D;
};
using Strategy = std::variant<FullCovering, PartialCovering, GivenD>;

struct BuildOptions {
    /// Absolute covering-radius budget; -1 derives a start value from
    /// the entropy bounds and escalates until feasible.  With an
    /// explicit radius an infeasible budget throws InfeasibleRadius.
    int radius = -1;
    std::uint64_t seed = kDefaultSeed;
    CandidatePolicy policy{};
    std::uint64_t max_table = kDefaultMaxTable;
    std::uint64_t max_space = kDefaultMaxSpace;
    unsigned max_rounds = 64; // demand-growth rounds (partial covering)
    bool repair = true;       // idle-server repair pass
};

/// N = L, every server computes exactly its own subfunction: E = I,
/// D = F.
Scheme build_uncoded_decentralized(const FqMatrix& F);

/// K of the N servers each serve one user directly: D = [I_K | 0],
/// E = [F; 0].
Scheme build_uncoded_centralized(const FqMatrix& F, std::size_t N);

/// Coded construction: D is the parity check of a covering /
/// partial-covering code (built greedily) or given explicitly, and
/// each column of E is the minimum-weight coset leader decoding the
/// corresponding column of F.  The optional trace output captures the
/// last greedy run.
Scheme build_coded(const FqMatrix& F, std::size_t N, const Strategy& strategy,
                   const BuildOptions& opts = {},
                   GreedyTrace* trace_out = nullptr);

/// true iff L <= q^K, i.e. the demand count does not exceed the number
/// of distinct syndromes K symbols can address.
bool demands_within_syndrome_capacity(const FqMatrix& F);

/// Distinct columns of F in first-appearance order.
std::vector<FqVector> distinct_columns(const FqMatrix& F);

/// The set {x : D x is a column of F} as a union of cosets; the
/// scheme's encoding columns must land inside it.  Throws InfeasibleD
/// when D lacks full row rank.
TargetSet x_set(const FqMatrix& F, const FqMatrix& D);

/// Exhaustive search over every full-row-rank D in GF(q)^{K x N} for
/// the minimum achievable gamma (max column weight of the decoded E
/// over N).  Throws ResourceLimit when q^(K*N) > max_candidates.
struct BruteForceResult {
    Rational gamma;
    FqMatrix best_D;
    std::uint64_t searched = 0;
};
BruteForceResult brute_force_optimal_gamma(const FqMatrix& F, std::size_t N,
                                           std::uint64_t max_candidates = 1ull
                                                                          << 22);

/// Entropy bounds around a concrete scheme plus internal consistency:
/// any valid scheme fits its distinct demands inside the Hamming ball
/// of its max encoding column weight.
struct SchemeBoundsReport {
    double achieved_gamma = 0;
    double converse = 0;   // H_q^{-1}(log_q(distinct)/N)
    double achievable = 0; // T * H_q^{-1}(K/(N*T))
    std::uint64_t distinct = 0;
    bool finite_n_ok = false;
    bool within_capacity = false; // L <= q^K
};
SchemeBoundsReport bounds_check(const Scheme& s);

/// Replaces every all-zero row of E (an idle server) with a copy of
/// the first nonzero row whose entry in the heaviest column is zeroed
/// out, splitting recipients between the two servers when the copy is
/// exact; D is adjusted so all decoded values are unchanged.  Both raw
/// and post-repair gamma are kept (provenance).
Scheme repair_zero_rows(const Scheme& s);

/// The bundled hand-constructed reference instance over GF(7) with 4
/// users, 8 servers and 6 demanded combinations (gamma = 6/8,
/// delta = 19/32).  Exposed by the CLI as `build --paper-example`.
Scheme example_scheme();

} // namespace lsdc
