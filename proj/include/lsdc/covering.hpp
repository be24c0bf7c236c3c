#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lsdc/code.hpp"

namespace lsdc {

/// Fixed default seed: every randomized path is reproducible unless the
/// caller overrides the seed explicitly.  Never wall-clock seeded.
inline constexpr std::uint64_t kDefaultSeed = 1729;

/// Default cap on the ambient space q^n enumerated by the greedy
/// covering builder (bitset over the full space).
inline constexpr std::uint64_t kDefaultMaxSpace = 1ull << 24;

/// How the greedy builder picks candidate vectors to adjoin.
/// Auto = exhaustive over all q^n when n*log2(q) <= 20, seeded random
/// sample beyond that.
enum class CandidateMode { Auto, Exhaustive, RandomSample };

struct CandidatePolicy {
    CandidateMode mode = CandidateMode::Auto;
    std::uint64_t sample_size = 4096;
    std::uint64_t seed = kDefaultSeed;
};

/// Set of points the covering construction must reach: an explicit
/// list, the full space, or a union of cosets {x : H x = s}.
class TargetSet {
public:
    enum class Kind { FullSpace, Explicit, Cosets };

    static TargetSet full_space(Field f, std::size_t n);
    static TargetSet explicit_points(Field f, std::size_t n,
                                     std::vector<FqVector> points);
    /// Union of the cosets of ker(parity) addressed by the given
    /// syndromes (deduplicated).  Throws DomainError if a syndrome is
    /// not reachable from the parity map.
    static TargetSet cosets(const FqMatrix& parity,
                            std::vector<FqVector> syndromes);

    Kind kind() const { return kind_; }
    const Field& field() const { return f_; }
    std::size_t length() const { return n_; }

    /// Exact number of distinct points.
    BigInt size() const;

    /// All points as sorted unique packed indices; throws ResourceLimit
    /// when the set (or, for cosets/full space, q^n bookkeeping) would
    /// exceed max_points.
    std::vector<std::uint64_t> materialize_indices(
        std::uint64_t max_points) const;

    /// For the cosets kind: the deduplicated syndrome list.
    const std::vector<FqVector>& syndromes() const { return syndromes_; }

private:
    TargetSet(Field f, std::size_t n, Kind k) : f_(f), n_(n), kind_(k) {}
    Field f_;
    std::size_t n_;
    Kind kind_;
    std::vector<FqVector> points_;     // Explicit (deduplicated)
    FqMatrix parity_{Field(2), 0, 0};  // Cosets
    std::vector<FqVector> syndromes_;  // Cosets (deduplicated)
};

/// One greedy adjunction: iteration number (= basis size after the
/// step), uncovered target points left after it, and the chosen vector
/// as its packed base-q integer.
struct GreedyStep {
    std::size_t iteration;
    std::uint64_t uncovered_after;
    std::uint64_t chosen_index;
};

struct GreedyTrace {
    std::uint64_t target_points = 0;
    std::uint64_t uncovered_initial = 0; // uncovered after C0 = {0}
    std::vector<GreedyStep> steps;
    /// "iteration,uncovered,chosen" rows; iteration 0 is the start
    /// state with an empty chosen column.
    std::string to_csv() const;
};

struct GreedyChoice {
    FqVector chosen;
    std::uint64_t uncovered_before = 0;
    std::uint64_t uncovered_after = 0;
};

/// One greedy step against an arbitrary current code: picks the vector
/// whose adjunction minimizes the number of uncovered target points
/// (ties broken by smallest packed index).  Returns nullopt when the
/// target is already covered within the radius, i.e. no extension is
/// needed.
std::optional<GreedyChoice> greedy_extend(
    const LinearCode& current, const TargetSet& target, unsigned radius,
    const CandidatePolicy& policy = {},
    std::uint64_t max_space = kDefaultMaxSpace);

struct CoverBuildResult {
    LinearCode code;
    GreedyTrace trace;
};

/// Grows a basis from C0 = {0} until every point of the space (or of
/// the target set) lies within the radius of the code.
CoverBuildResult build_covering_code(
    const Field& f, std::size_t n, unsigned radius,
    const CandidatePolicy& policy = {},
    std::uint64_t max_space = kDefaultMaxSpace);

CoverBuildResult build_partial_covering_code(
    const Field& f, std::size_t n, unsigned radius, const TargetSet& target,
    const CandidatePolicy& policy = {},
    std::uint64_t max_space = kDefaultMaxSpace);

/// Parity check of the product code C1 x C2 x ...: block-diagonal
/// stack of the blocks' parity checks.  Distances and covering radii
/// add across blocks.  Throws FieldError on mixed fields.
LinearCode block_diag_parity(const std::vector<LinearCode>& blocks);

} // namespace lsdc
