#pragma once

#include <cstdint>

#include "lsdc/errors.hpp"

namespace lsdc {

/// Prime field GF(q).  Residues are machine integers in [0, q).
///
/// Only prime q is supported: every demand value, code symbol and
/// decoding coefficient in this library is a residue mod q, and the
/// linear algebra relies on every nonzero element being invertible.
class Field {
public:
    /// Throws DomainError unless q is prime (and 2 <= q < 2^31 so that
    /// products fit in 64 bits).
    explicit Field(std::uint32_t q);

    std::uint32_t q() const { return q_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + q_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : q_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(a) * b) % q_);
    }
    /// a^e by square-and-multiply.
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    /// Multiplicative inverse; throws DivisionByZero on 0.
    std::uint32_t inv(std::uint32_t a) const;

    /// Canonical residue of an arbitrary signed integer.
    std::uint32_t from_int(std::int64_t v) const;

    bool operator==(const Field& o) const { return q_ == o.q_; }
    bool operator!=(const Field& o) const { return q_ != o.q_; }

private:
    std::uint32_t q_;
};

} // namespace lsdc
