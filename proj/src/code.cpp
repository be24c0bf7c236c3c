#include "lsdc/code.hpp"

#include <string>

namespace lsdc {

namespace {

FqMatrix stack_rows(const Field& f, std::size_t cols,
                    const std::vector<FqVector>& rows) {
    FqMatrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

} // namespace

LinearCode LinearCode::from_parity_check(const FqMatrix& h) {
    Rref r = row_reduce(h);
    if (r.rank == h.rows())
        return LinearCode(h.cols(), h); // already full row rank: keep verbatim
    // keep the nonzero rows of the reduced form
    FqMatrix reduced(h.field(), r.rank, h.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
        reduced.set_row(i, r.mat.row(i));
    return LinearCode(h.cols(), std::move(reduced));
}

LinearCode LinearCode::from_generator(const FqMatrix& g) {
    std::vector<FqVector> basis = nullspace_basis(g);
    return LinearCode(g.cols(), stack_rows(g.field(), g.cols(), basis));
}

FqMatrix LinearCode::generator() const {
    if (h_.rows() == 0) return FqMatrix::identity(field(), n_);
    return stack_rows(field(), n_, nullspace_basis(h_));
}

FqVector LinearCode::syndrome(const FqVector& x) const { return mat_vec(h_, x); }

bool for_each_vector_of_weight(
    const Field& f, std::size_t n, unsigned w,
    const std::function<bool(const FqVector&)>& fn) {
    if (w > n) return true; // empty weight class
    FqVector v(f, n);
    // explicit recursion over positions; zero digit first, then 1..q-1,
    // which yields lexicographic order within the weight class
    std::function<bool(std::size_t, unsigned)> rec =
        [&](std::size_t pos, unsigned rem) -> bool {
        if (pos == n) return fn(v);
        if (n - pos - 1 >= rem) { // room to leave this position zero
            if (!rec(pos + 1, rem)) return false;
        }
        if (rem > 0) {
            for (std::uint32_t d = 1; d < f.q(); ++d) {
                v[pos] = d;
                if (!rec(pos + 1, rem - 1)) { v[pos] = 0; return false; }
            }
            v[pos] = 0;
        }
        return true;
    };
    return rec(0, w);
}

CosetLeaderTable CosetLeaderTable::build(const LinearCode& code,
                                         std::uint64_t max_table) {
    const Field& f = code.field();
    const std::size_t n = code.length();
    const std::size_t r = code.redundancy();
    if (f.q() > 255 || n > 255)
        throw ResourceLimit("coset-leader tables support q <= 255 and n <= 255");
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < r; ++i) {
        if (size > max_table / f.q())
            throw ResourceLimit(
                "coset-leader table needs q^(n-k) = " + std::to_string(f.q()) +
                "^" + std::to_string(r) + " entries, above the max_table limit " +
                std::to_string(max_table));
        size *= f.q();
    }
    if (size > max_table)
        throw ResourceLimit("coset-leader table exceeds max_table limit " +
                            std::to_string(max_table));
    if (size * n > (1ull << 31))
        throw ResourceLimit("coset-leader table storage would exceed 2 GiB");

    CosetLeaderTable t(f, n, r, size);
    const FqMatrix& h = code.parity_check();
    std::vector<bool> seen(size, false);
    std::uint64_t filled = 0;

    for (unsigned w = 0; w <= n && filled < size; ++w) {
        for_each_vector_of_weight(f, n, w, [&](const FqVector& v) {
            // syndrome = sum of H columns scaled by the nonzero entries
            std::uint64_t idx = 0;
            if (r) {
                FqVector s(f, r);
                for (std::size_t i = 0; i < n; ++i) {
                    if (!v[i]) continue;
                    for (std::size_t row = 0; row < r; ++row)
                        s[row] = f.add(s[row], f.mul(h(row, i), v[i]));
                }
                idx = pack_index(s);
            }
            if (!seen[idx]) {
                seen[idx] = true;
                for (std::size_t i = 0; i < n; ++i)
                    t.leaders_[idx * n + i] = static_cast<std::uint8_t>(v[i]);
                t.weights_[idx] = static_cast<std::uint8_t>(w);
                t.max_weight_ = w;
                ++filled;
            }
            return filled < size; // stop as soon as every coset has a leader
        });
    }
    // A full-row-rank H makes every syndrome reachable, so the table is
    // always complete here.
    return t;
}

std::uint64_t CosetLeaderTable::syndrome_index(const FqVector& syndrome) const {
    if (syndrome.field() != f_) throw FieldError("syndrome over a different field");
    if (syndrome.size() != r_) throw ShapeError("syndrome length mismatch");
    return pack_index(syndrome);
}

FqVector CosetLeaderTable::leader(const FqVector& syndrome) const {
    return leader_by_index(syndrome_index(syndrome));
}

unsigned CosetLeaderTable::leader_weight(const FqVector& syndrome) const {
    return weights_[syndrome_index(syndrome)];
}

FqVector CosetLeaderTable::leader_by_index(std::uint64_t idx) const {
    if (idx >= size_) throw ShapeError("syndrome index out of range");
    FqVector v(f_, n_);
    for (std::size_t i = 0; i < n_; ++i) v[i] = leaders_[idx * n_ + i];
    return v;
}

FqVector syndrome_decode(const LinearCode& code, const CosetLeaderTable& table,
                         const FqVector& syndrome) {
    if (syndrome.size() != code.redundancy())
        throw ShapeError("syndrome length does not match parity-check rows");
    return table.leader(syndrome);
}

unsigned covering_radius(const LinearCode& code, std::uint64_t max_table) {
    return CosetLeaderTable::build(code, max_table).max_leader_weight();
}

unsigned partial_covering_radius(const LinearCode& code,
                                 const CosetLeaderTable& table,
                                 const std::vector<FqVector>& xs) {
    unsigned r = 0;
    for (const auto& x : xs) {
        unsigned w = table.leader_weight(code.syndrome(x));
        if (w > r) r = w;
    }
    return r;
}

BigInt hamming_ball_volume(std::size_t n, std::size_t r, std::uint32_t q) {
    if (r > n)
        throw DomainError("ball radius " + std::to_string(r) +
                          " exceeds length " + std::to_string(n));
    BigInt total = 0;
    BigInt binom = 1;   // C(n, i)
    BigInt qm1pow = 1;  // (q-1)^i
    for (std::size_t i = 0; i <= r; ++i) {
        total += binom * qm1pow;
        binom = binom * (n - i) / (i + 1);
        qm1pow *= (q - 1);
    }
    return total;
}

} // namespace lsdc
