#include "lsdc/covering.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace lsdc {

// ---------------------------------------------------------------- TargetSet

TargetSet TargetSet::full_space(Field f, std::size_t n) {
    return TargetSet(f, n, Kind::FullSpace);
}

TargetSet TargetSet::explicit_points(Field f, std::size_t n,
                                     std::vector<FqVector> points) {
    for (const auto& p : points) {
        if (p.field() != f) throw FieldError("target point over a different field");
        if (p.size() != n) throw ShapeError("target point length mismatch");
    }
    std::sort(points.begin(), points.end(),
              [](const FqVector& a, const FqVector& b) { return a.data() < b.data(); });
    points.erase(std::unique(points.begin(), points.end()), points.end());
    TargetSet t(f, n, Kind::Explicit);
    t.points_ = std::move(points);
    return t;
}

TargetSet TargetSet::cosets(const FqMatrix& parity,
                            std::vector<FqVector> syndromes) {
    for (const auto& s : syndromes) {
        if (s.field() != parity.field())
            throw FieldError("syndrome over a different field");
        if (s.size() != parity.rows()) throw ShapeError("syndrome length mismatch");
        if (!solve_particular(parity, s))
            throw DomainError("syndrome not reachable from the parity map");
    }
    std::sort(syndromes.begin(), syndromes.end(),
              [](const FqVector& a, const FqVector& b) { return a.data() < b.data(); });
    syndromes.erase(std::unique(syndromes.begin(), syndromes.end()),
                    syndromes.end());
    TargetSet t(parity.field(), parity.cols(), Kind::Cosets);
    t.parity_ = parity;
    t.syndromes_ = std::move(syndromes);
    return t;
}

BigInt TargetSet::size() const {
    switch (kind_) {
    case Kind::FullSpace: {
        BigInt s = 1;
        for (std::size_t i = 0; i < n_; ++i) s *= f_.q();
        return s;
    }
    case Kind::Explicit:
        return BigInt(points_.size());
    case Kind::Cosets: {
        BigInt coset = 1;
        std::size_t r = rank(parity_);
        for (std::size_t i = 0; i < n_ - r; ++i) coset *= f_.q();
        return BigInt(syndromes_.size()) * coset;
    }
    }
    return 0;
}

std::vector<std::uint64_t> TargetSet::materialize_indices(
    std::uint64_t max_points) const {
    // Packing any point needs q^n to fit an index; full-space and coset
    // enumeration additionally need the count itself under the guard.
    switch (kind_) {
    case Kind::FullSpace: {
        std::uint64_t s = space_size(f_, n_, max_points);
        std::vector<std::uint64_t> idx(s);
        for (std::uint64_t i = 0; i < s; ++i) idx[i] = i;
        return idx;
    }
    case Kind::Explicit: {
        space_size(f_, n_, ~0ull >> 1); // packability
        if (points_.size() > max_points)
            throw ResourceLimit("explicit target set exceeds max_points");
        std::vector<std::uint64_t> idx;
        idx.reserve(points_.size());
        for (const auto& p : points_) idx.push_back(pack_index(p));
        std::sort(idx.begin(), idx.end());
        return idx;
    }
    case Kind::Cosets: {
        space_size(f_, n_, ~0ull >> 1);
        std::vector<FqVector> basis = nullspace_basis(parity_);
        std::uint64_t coset = 1;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (coset > max_points / f_.q())
                throw ResourceLimit("coset enumeration exceeds max_points");
            coset *= f_.q();
        }
        if (syndromes_.size() * coset > max_points)
            throw ResourceLimit("coset enumeration exceeds max_points");
        std::vector<std::uint64_t> idx;
        idx.reserve(syndromes_.size() * coset);
        const Field& f = f_;
        for (const auto& s : syndromes_) {
            FqVector x0 = *solve_particular(parity_, s); // checked at construction
            std::vector<std::uint32_t> coeff(basis.size(), 0);
            for (std::uint64_t c = 0; c < coset; ++c) {
                FqVector x = x0;
                for (std::size_t b = 0; b < basis.size(); ++b) {
                    if (!coeff[b]) continue;
                    for (std::size_t i = 0; i < n_; ++i)
                        x[i] = f.add(x[i], f.mul(coeff[b], basis[b][i]));
                }
                idx.push_back(pack_index(x));
                // odometer over the coefficient vector
                for (std::size_t b = basis.size(); b-- > 0;) {
                    if (++coeff[b] < f.q()) break;
                    coeff[b] = 0;
                }
            }
        }
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
        return idx;
    }
    }
    return {};
}

// -------------------------------------------------------------- GreedyTrace

std::string GreedyTrace::to_csv() const {
    std::string out = "iteration,uncovered,chosen\n";
    out += "0," + std::to_string(uncovered_initial) + ",\n";
    for (const auto& s : steps)
        out += std::to_string(s.iteration) + "," +
               std::to_string(s.uncovered_after) + "," +
               std::to_string(s.chosen_index) + "\n";
    return out;
}

// ------------------------------------------------------------ greedy engine

namespace {

struct CoverState {
    Field f;
    std::size_t n;
    unsigned radius;
    std::uint64_t space = 0;
    std::vector<std::uint8_t> covered;    // whole ambient space F_q^n
    std::vector<std::uint64_t> uncovered; // target indices, sorted
    std::vector<FqVector> basis;

    CoverState(Field f_, std::size_t n_, unsigned r_) : f(f_), n(n_), radius(r_) {}
};

void unpack_digits(const Field& f, std::size_t n, std::uint64_t idx,
                   std::uint32_t* out) {
    for (std::size_t i = n; i-- > 0;) {
        out[i] = static_cast<std::uint32_t>(idx % f.q());
        idx /= f.q();
    }
}

/// Digits of -(alpha*x) for alpha = 1..q-1, used to walk p -> p - alpha*x.
std::vector<std::vector<std::uint32_t>> negated_multiples(
    const Field& f, const std::uint32_t* xd, std::size_t n) {
    std::vector<std::vector<std::uint32_t>> neg(f.q() - 1,
                                                std::vector<std::uint32_t>(n));
    for (std::uint32_t a = 1; a < f.q(); ++a)
        for (std::size_t i = 0; i < n; ++i)
            neg[a - 1][i] = f.neg(f.mul(a, xd[i]));
    return neg;
}

CoverState make_state(const Field& f, std::size_t n, unsigned radius,
                      const std::vector<std::uint64_t>& target,
                      std::uint64_t max_space) {
    CoverState st(f, n, radius);
    st.space = space_size(f, n, max_space);
    st.covered.assign(st.space, 0);
    // C0 = {0}: covered = Hamming ball of the radius around the origin
    unsigned rcap = radius > n ? static_cast<unsigned>(n) : radius;
    for (unsigned w = 0; w <= rcap; ++w)
        for_each_vector_of_weight(f, n, w, [&](const FqVector& v) {
            st.covered[pack_index(v)] = 1;
            return true;
        });
    for (auto p : target)
        if (!st.covered[p]) st.uncovered.push_back(p);
    return st;
}

/// Number of target points still uncovered after adjoining the
/// candidate; aborts early once the count reaches `cap`.
std::uint64_t score_candidate(
    const CoverState& st,
    const std::vector<std::vector<std::uint32_t>>& neg,
    std::uint64_t cap) {
    const std::uint32_t q = st.f.q();
    std::uint64_t cnt = 0;
    std::vector<std::uint32_t> pd(st.n);
    for (auto p : st.uncovered) {
        unpack_digits(st.f, st.n, p, pd.data());
        bool stays = true;
        for (const auto& row : neg) {
            std::uint64_t idx = 0;
            for (std::size_t i = 0; i < st.n; ++i) {
                std::uint32_t d = pd[i] + row[i];
                if (d >= q) d -= q;
                idx = idx * q + d;
            }
            if (st.covered[idx]) { stays = false; break; }
        }
        if (stays && ++cnt >= cap) return cnt;
    }
    return cnt;
}

bool exhaustive_candidates(const CoverState& st, const CandidatePolicy& policy) {
    switch (policy.mode) {
    case CandidateMode::Exhaustive: return true;
    case CandidateMode::RandomSample: return false;
    case CandidateMode::Auto: return st.space <= (1ull << 20);
    }
    return true;
}

std::vector<std::uint64_t> sampled_candidates(const CoverState& st,
                                              const CandidatePolicy& policy) {
    // fresh deterministic engine per iteration
    std::mt19937_64 eng(policy.seed +
                        0x9E3779B97F4A7C15ull * (st.basis.size() + 1));
    std::vector<std::uint64_t> cand;
    cand.reserve(policy.sample_size + 1);
    // the smallest uncovered point guarantees progress even if every
    // random draw is useless
    cand.push_back(st.uncovered.front());
    for (std::uint64_t i = 0; i < policy.sample_size; ++i)
        cand.push_back(1 + eng() % (st.space - 1));
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    return cand;
}

struct StepOutcome {
    std::uint64_t chosen_index;
    std::uint64_t uncovered_after;
};

/// One greedy adjunction; precondition: st.uncovered not empty.
StepOutcome greedy_step(CoverState& st, const CandidatePolicy& policy) {
    const std::uint32_t q = st.f.q();
    std::vector<std::uint32_t> xd(st.n);
    std::uint64_t best_idx = 0;
    std::uint64_t best_score = st.uncovered.size() + 1;

    auto consider = [&](std::uint64_t cidx, bool monic_only) {
        unpack_digits(st.f, st.n, cidx, xd.data());
        if (monic_only) {
            // scalar multiples span the same extension and score alike;
            // the representative with leading digit 1 has the smallest
            // packed index of its class, so skipping the rest keeps the
            // chosen vector identical while scanning q-1 times fewer
            for (std::size_t i = 0; i < st.n; ++i) {
                if (!xd[i]) continue;
                if (xd[i] != 1) return;
                break;
            }
        }
        auto neg = negated_multiples(st.f, xd.data(), st.n);
        std::uint64_t s = score_candidate(st, neg, best_score);
        if (s < best_score) { // strict: first (smallest) index wins ties
            best_score = s;
            best_idx = cidx;
        }
    };

    if (exhaustive_candidates(st, policy)) {
        for (std::uint64_t c = 1; c < st.space; ++c) consider(c, true);
    } else {
        for (auto c : sampled_candidates(st, policy)) consider(c, false);
    }

    // apply the adjunction: covered' = union over alpha of covered + alpha*x
    unpack_digits(st.f, st.n, best_idx, xd.data());
    auto neg = negated_multiples(st.f, xd.data(), st.n);
    std::vector<std::uint64_t> newly;
    std::vector<std::uint32_t> pd(st.n, 0);
    for (std::uint64_t p = 0; p < st.space; ++p) {
        if (!st.covered[p]) {
            for (const auto& row : neg) {
                std::uint64_t idx = 0;
                for (std::size_t i = 0; i < st.n; ++i) {
                    std::uint32_t d = pd[i] + row[i];
                    if (d >= q) d -= q;
                    idx = idx * q + d;
                }
                if (st.covered[idx]) { newly.push_back(p); break; }
            }
        }
        // odometer: next point's digits
        for (std::size_t i = st.n; i-- > 0;) {
            if (++pd[i] < q) break;
            pd[i] = 0;
        }
    }
    for (auto p : newly) st.covered[p] = 1;

    std::vector<std::uint64_t> still;
    still.reserve(st.uncovered.size());
    for (auto p : st.uncovered)
        if (!st.covered[p]) still.push_back(p);
    st.uncovered = std::move(still);
    st.basis.push_back(unpack_index(st.f, st.n, best_idx));
    return StepOutcome{best_idx, st.uncovered.size()};
}

CoverBuildResult run_build(const Field& f, std::size_t n, unsigned radius,
                           const TargetSet& target,
                           const CandidatePolicy& policy,
                           std::uint64_t max_space) {
    std::vector<std::uint64_t> pts = target.materialize_indices(max_space);
    CoverState st = make_state(f, n, radius, pts, max_space);
    GreedyTrace trace;
    trace.target_points = pts.size();
    trace.uncovered_initial = st.uncovered.size();
    while (!st.uncovered.empty()) {
        if (st.basis.size() >= n)
            throw Error("greedy covering failed to terminate"); // unreachable
        StepOutcome out = greedy_step(st, policy);
        trace.steps.push_back(
            GreedyStep{st.basis.size(), out.uncovered_after, out.chosen_index});
    }
    LinearCode code =
        st.basis.empty()
            ? LinearCode::from_parity_check(FqMatrix::identity(f, n))
            : LinearCode::from_generator([&] {
                  FqMatrix g(f, st.basis.size(), n);
                  for (std::size_t i = 0; i < st.basis.size(); ++i)
                      g.set_row(i, st.basis[i]);
                  return g;
              }());
    return CoverBuildResult{std::move(code), std::move(trace)};
}

} // namespace

CoverBuildResult build_covering_code(const Field& f, std::size_t n,
                                     unsigned radius,
                                     const CandidatePolicy& policy,
                                     std::uint64_t max_space) {
    return run_build(f, n, radius, TargetSet::full_space(f, n), policy,
                     max_space);
}

CoverBuildResult build_partial_covering_code(const Field& f, std::size_t n,
                                             unsigned radius,
                                             const TargetSet& target,
                                             const CandidatePolicy& policy,
                                             std::uint64_t max_space) {
    if (target.field() != f) throw FieldError("target set over a different field");
    if (target.length() != n) throw ShapeError("target set length mismatch");
    return run_build(f, n, radius, target, policy, max_space);
}

std::optional<GreedyChoice> greedy_extend(const LinearCode& current,
                                          const TargetSet& target,
                                          unsigned radius,
                                          const CandidatePolicy& policy,
                                          std::uint64_t max_space) {
    const Field& f = current.field();
    if (target.field() != f) throw FieldError("target set over a different field");
    if (target.length() != current.length())
        throw ShapeError("target set length mismatch");
    const std::size_t n = current.length();

    std::vector<std::uint64_t> pts = target.materialize_indices(max_space);
    CoverState st(f, n, radius);
    st.space = space_size(f, n, max_space);

    // covered = points within the radius of the given code, via
    // multi-source BFS from all codewords (one step = one coordinate edit)
    std::vector<std::uint8_t> dist(st.space, 255);
    std::vector<std::uint64_t> frontier;
    {
        FqMatrix g = current.generator();
        std::uint64_t combos = 1;
        for (std::size_t i = 0; i < g.rows(); ++i) {
            if (combos > max_space / f.q())
                throw ResourceLimit("codeword enumeration exceeds max_space");
            combos *= f.q();
        }
        std::vector<std::uint32_t> coeff(g.rows(), 0);
        for (std::uint64_t c = 0; c < combos; ++c) {
            FqVector w(f, n);
            for (std::size_t b = 0; b < g.rows(); ++b)
                if (coeff[b])
                    for (std::size_t i = 0; i < n; ++i)
                        w[i] = f.add(w[i], f.mul(coeff[b], g(b, i)));
            std::uint64_t idx = pack_index(w);
            if (dist[idx] != 0) {
                dist[idx] = 0;
                frontier.push_back(idx);
            }
            for (std::size_t b = g.rows(); b-- > 0;) {
                if (++coeff[b] < f.q()) break;
                coeff[b] = 0;
            }
        }
    }
    unsigned rcap = radius > n ? static_cast<unsigned>(n) : radius;
    std::vector<std::uint32_t> pd(n);
    for (unsigned d = 0; d < rcap && !frontier.empty(); ++d) {
        std::vector<std::uint64_t> next;
        for (auto p : frontier) {
            unpack_digits(f, n, p, pd.data());
            for (std::size_t i = 0; i < n; ++i) {
                // all single-coordinate edits of p
                std::uint64_t place = 1;
                for (std::size_t j = n - 1; j > i; --j) place *= f.q();
                std::uint64_t base = p - pd[i] * place;
                for (std::uint32_t v = 0; v < f.q(); ++v) {
                    if (v == pd[i]) continue;
                    std::uint64_t np = base + v * place;
                    if (dist[np] > d + 1) {
                        dist[np] = static_cast<std::uint8_t>(d + 1);
                        next.push_back(np);
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    st.covered.assign(st.space, 0);
    for (std::uint64_t p = 0; p < st.space; ++p)
        st.covered[p] = (dist[p] <= rcap);
    for (auto p : pts)
        if (!st.covered[p]) st.uncovered.push_back(p);

    if (st.uncovered.empty()) return std::nullopt; // no extension needed
    std::uint64_t before = st.uncovered.size();
    StepOutcome out = greedy_step(st, policy);
    return GreedyChoice{unpack_index(f, n, out.chosen_index), before,
                        out.uncovered_after};
}

LinearCode block_diag_parity(const std::vector<LinearCode>& blocks) {
    if (blocks.empty()) throw ShapeError("block_diag_parity needs blocks");
    const Field& f = blocks[0].field();
    std::size_t n = 0, r = 0;
    for (const auto& b : blocks) {
        if (b.field() != f) throw FieldError("blocks over different fields");
        n += b.length();
        r += b.redundancy();
    }
    FqMatrix h(f, r, n);
    std::size_t ro = 0, co = 0;
    for (const auto& b : blocks) {
        const FqMatrix& hb = b.parity_check();
        for (std::size_t i = 0; i < hb.rows(); ++i)
            for (std::size_t j = 0; j < hb.cols(); ++j)
                h(ro + i, co + j) = hb(i, j);
        ro += hb.rows();
        co += hb.cols();
    }
    return LinearCode::from_parity_check(h);
}

} // namespace lsdc
