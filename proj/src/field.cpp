#include "lsdc/field.hpp"

#include <string>

namespace lsdc {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

} // namespace

Field::Field(std::uint32_t q) : q_(q) {
    if (q >= (1u << 31) || !is_prime(q))
        throw DomainError("field order must be a prime < 2^31, got " +
                          std::to_string(q));
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1 % q_;
    std::uint32_t base = a % q_;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::uint32_t Field::inv(std::uint32_t a) const {
    a %= q_;
    if (a == 0) throw DivisionByZero("inverse of zero in GF(" +
                                     std::to_string(q_) + ")");
    // Fermat: a^(q-2) since q is prime.
    return pow(a, q_ - 2);
}

std::uint32_t Field::from_int(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(q_);
    if (m < 0) m += q_;
    return static_cast<std::uint32_t>(m);
}

} // namespace lsdc
