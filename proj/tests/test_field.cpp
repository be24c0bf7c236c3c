#include <doctest.h>

#include "lsdc/field.hpp"

using namespace lsdc;

TEST_CASE("field axioms hold exhaustively for small primes") {
    for (std::uint32_t q : {2u, 3u, 5u, 7u, 13u}) {
        Field f(q);
        for (std::uint32_t a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            CHECK(f.sub(a, a) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
            for (std::uint32_t b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                CHECK(f.add(a, b) == (a + b) % q);
                CHECK(f.mul(a, b) ==
                      static_cast<std::uint32_t>((std::uint64_t(a) * b) % q));
                CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
                for (std::uint32_t c = 0; c < q; ++c) {
                    CHECK(f.mul(a, f.add(b, c)) ==
                          f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("pow matches repeated multiplication") {
    Field f(11);
    for (std::uint32_t a = 0; a < 11; ++a) {
        std::uint32_t acc = 1;
        for (std::uint32_t e = 0; e < 15; ++e) {
            CHECK(f.pow(a, e) == acc);
            acc = f.mul(acc, a);
        }
    }
}

TEST_CASE("from_int canonicalizes signed values") {
    Field f(7);
    CHECK(f.from_int(0) == 0);
    CHECK(f.from_int(7) == 0);
    CHECK(f.from_int(-1) == 6);
    CHECK(f.from_int(-15) == 6);
    CHECK(f.from_int(20) == 6);
}

TEST_CASE("construction rejects non-primes and accepts a large prime") {
    CHECK_THROWS_AS(Field(0), DomainError);
    CHECK_THROWS_AS(Field(1), DomainError);
    CHECK_THROWS_AS(Field(4), DomainError);
    CHECK_THROWS_AS(Field(9), DomainError);
    CHECK_THROWS_AS(Field(1u << 31), DomainError);

    Field big(2147483647); // 2^31 - 1 is prime
    std::uint32_t a = 123456789;
    CHECK(big.mul(a, big.inv(a)) == 1);
}

TEST_CASE("inverse of zero throws") {
    Field f(5);
    CHECK_THROWS_AS(f.inv(0), DivisionByZero);
}

TEST_CASE("field equality is by modulus") {
    CHECK(Field(5) == Field(5));
    CHECK(Field(5) != Field(7));
}
