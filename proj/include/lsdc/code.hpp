#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lsdc/matrix.hpp"

namespace lsdc {

using BigInt = boost::multiprecision::cpp_int;

/// Default cap on coset-leader table size (number of syndromes).
inline constexpr std::uint64_t kDefaultMaxTable = 1ull << 24;

/// Linear [n, k] code given by a parity-check matrix H with full row
/// rank.  A rank-deficient H is row-reduced at construction (zero rows
/// dropped); a full-rank H is kept exactly as given so that syndromes
/// H*x match the caller's coordinates.
class LinearCode {
public:
    static LinearCode from_parity_check(const FqMatrix& h);
    /// Code = row space of g; parity check derived from its nullspace.
    static LinearCode from_generator(const FqMatrix& g);

    const Field& field() const { return h_.field(); }
    std::size_t length() const { return n_; }
    /// Number of parity checks, n - k.
    std::size_t redundancy() const { return h_.rows(); }
    std::size_t dimension() const { return n_ - h_.rows(); }

    const FqMatrix& parity_check() const { return h_; }
    /// k x n generator (nullspace basis of H); rows span the code.
    FqMatrix generator() const;

    /// H*x; throws ShapeError/FieldError on mismatch.
    FqVector syndrome(const FqVector& x) const;

private:
    LinearCode(std::size_t n, FqMatrix h) : n_(n), h_(std::move(h)) {}
    std::size_t n_;
    FqMatrix h_; // full row rank, possibly 0 rows (the full space F^n)
};

/// Complete syndrome -> minimum-weight coset leader table.
///
/// Built by enumerating vectors in increasing Hamming weight and, within
/// a weight class, lexicographic order; the first vector hitting a
/// syndrome is its leader, so leaders are minimum-weight with a
/// deterministic lexicographic tie-break.
class CosetLeaderTable {
public:
    /// Throws ResourceLimit when q^(n-k) > max_table, or when the dense
    /// storage would be unreasonable (q or n beyond one byte per entry).
    static CosetLeaderTable build(const LinearCode& code,
                                  std::uint64_t max_table = kDefaultMaxTable);

    std::uint64_t size() const { return size_; } // q^(n-k)
    std::size_t length() const { return n_; }

    std::uint64_t syndrome_index(const FqVector& syndrome) const;
    FqVector leader(const FqVector& syndrome) const;
    unsigned leader_weight(const FqVector& syndrome) const;
    FqVector leader_by_index(std::uint64_t idx) const;
    unsigned leader_weight_by_index(std::uint64_t idx) const {
        return weights_[idx];
    }

    /// Maximum leader weight == covering radius of the code.
    unsigned max_leader_weight() const { return max_weight_; }

private:
    CosetLeaderTable(Field f, std::size_t n, std::size_t r, std::uint64_t size)
        : f_(f), n_(n), r_(r), size_(size),
          leaders_(size * n, 0), weights_(size, 0) {}

    Field f_;
    std::size_t n_, r_;
    std::uint64_t size_;
    std::vector<std::uint8_t> leaders_; // size_ x n_, dense
    std::vector<std::uint8_t> weights_;
    unsigned max_weight_ = 0;
};

/// Minimum-weight solution of H*e = syndrome (the coset leader).
FqVector syndrome_decode(const LinearCode& code, const CosetLeaderTable& table,
                         const FqVector& syndrome);

/// max over all syndromes of the leader weight.
unsigned covering_radius(const LinearCode& code,
                         std::uint64_t max_table = kDefaultMaxTable);

/// max over x in xs of d(x, code).  All x in one coset share the same
/// distance to the code (their syndrome's leader weight).
unsigned partial_covering_radius(const LinearCode& code,
                                 const CosetLeaderTable& table,
                                 const std::vector<FqVector>& xs);

/// Exact |B(0, r)| in GF(q)^n: sum_{i=0..r} C(n,i) (q-1)^i.
/// Throws DomainError when r > n.
BigInt hamming_ball_volume(std::size_t n, std::size_t r, std::uint32_t q);

/// Enumerates every vector of GF(q)^n with Hamming weight exactly w in
/// lexicographic order, invoking fn(vec); fn returning false stops the
/// enumeration early (and makes this function return false).
bool for_each_vector_of_weight(
    const Field& f, std::size_t n, unsigned w,
    const std::function<bool(const FqVector&)>& fn);

} // namespace lsdc
