#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nilrep/cyclotomic.hpp"
#include "nilrep/modp.hpp"

using namespace nilrep;

TEST_CASE("field construction rejects bad root orders") {
    CHECK_THROWS_AS(CycloField(4), DomainError);
    CHECK_THROWS_AS(CycloField(3), DomainError);
    CHECK_THROWS_AS(CycloField(-5), DomainError);
    CHECK_NOTHROW(CycloField(5));
    CHECK_NOTHROW(CycloField(9));
    CHECK_NOTHROW(CycloField(15));
}

TEST_CASE("degree equals the totient") {
    CHECK(CycloField(5).degree() == 4);
    CHECK(CycloField(7).degree() == 6);
    CHECK(CycloField(9).degree() == 6);
    CHECK(CycloField(15).degree() == 8);
}

TEST_CASE("additive and multiplicative structure") {
    CycloField f(5);
    auto x = f.add(f.eps_pow(1), f.eps_pow(3));
    CHECK(f.is_zero(f.add(x, f.neg(x))));
    CHECK(f.eq(f.mul(f.eps_pow(1), f.eps_pow(4)), f.one()));
    CHECK(f.eq(f.mul(x, f.one()), x));
    CHECK(f.eq(f.mul(f.one(), f.zero()), f.zero()));
}

TEST_CASE("inverses") {
    for (long l : {5L, 7L, 9L}) {
        CycloField f(l);
        CHECK(f.eq(f.inv(f.one()), f.one()));
        CHECK(f.eq(f.inv(f.eps_pow(1)), f.eps_pow(l - 1)));
        auto d = f.sub(f.eps_pow(1), f.eps_pow(-1));
        CHECK(f.eq(f.mul(f.inv(d), d), f.one()));
        CHECK_THROWS_AS(f.inv(f.zero()), DomainError);
    }
}

TEST_CASE("inverse property on random elements") {
    CycloField f(7);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        FieldElem x;
        for (int k = 0; k < 4; ++k) {
            long c = static_cast<long>(rng() % 7) - 3;
            x = f.add(x, f.mul(f.from_int(c), f.eps_pow(static_cast<long>(rng() % 7))));
        }
        if (f.is_zero(x)) continue;
        CHECK(f.eq(f.mul(x, f.inv(x)), f.one()));
    }
}

TEST_CASE("eps powers form a cyclic group") {
    CycloField f(9);
    CHECK(f.eq(f.eps_pow(0), f.one()));
    CHECK(f.eq(f.eps_pow(9), f.one()));
    CHECK(f.eq(f.eps_pow(-1), f.eps_pow(8)));
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        long a = static_cast<long>(rng() % 40) - 20;
        long b = static_cast<long>(rng() % 40) - 20;
        CHECK(f.eq(f.eps_pow(a + b), f.mul(f.eps_pow(a), f.eps_pow(b))));
    }
}

TEST_CASE("quantum integers") {
    CycloField f(5);
    CHECK(f.is_zero(f.quantum_int(0, 1)));
    CHECK(f.eq(f.quantum_int(1, 2), f.one()));
    CHECK(f.is_zero(f.quantum_int(5, 1)));
    CHECK(f.eq(f.quantum_int(2, 1), f.add(f.eps_pow(1), f.eps_pow(-1))));
    CHECK(f.eq(f.quantum_int(-3, 1), f.neg(f.quantum_int(3, 1))));
}

TEST_CASE("quantum integer defining identity") {
    // [a]_d * (eps^d - eps^-d) = eps^{da} - eps^{-da}
    for (long l : {5L, 7L}) {
        CycloField f(l);
        for (long d : {1L, 2L})
            for (long a = -6; a <= 6; ++a) {
                auto lhs = f.mul(f.quantum_int(a, d), f.sub(f.eps_pow(d), f.eps_pow(-d)));
                auto rhs = f.sub(f.eps_pow(d * a), f.eps_pow(-d * a));
                CHECK(f.eq(lhs, rhs));
            }
    }
}

TEST_CASE("quantum factorial") {
    CycloField f(5);
    CHECK(f.eq(f.quantum_factorial(0, 1), f.one()));
    CHECK(f.eq(f.quantum_factorial(1, 2), f.one()));
    CHECK(f.eq(f.quantum_factorial(2, 1), f.add(f.eps_pow(1), f.eps_pow(-1))));
    CHECK_THROWS_AS(f.quantum_factorial(5, 1), DomainError);
}

TEST_CASE("canonical text form round trips") {
    CycloField f(5);
    auto x = f.add(f.from_rational(mpq_class(-1, 2)), f.eps_pow(2));
    CHECK(f.to_string(x) == "[-1/2, 0, 1]");
    CHECK(f.eq(f.parse(f.to_string(x)), x));
    CHECK(f.to_string(f.zero()) == "[0]");
    CHECK(f.is_zero(f.parse("[0]")));
    std::mt19937_64 rng(3);
    for (int t = 0; t < 25; ++t) {
        FieldElem v;
        for (int k = 0; k < 3; ++k)
            v = f.add(v, f.mul(f.from_rational(mpq_class(static_cast<long>(rng() % 9) - 4,
                                                         1 + static_cast<long>(rng() % 4))),
                               f.eps_pow(static_cast<long>(rng() % 5))));
        CHECK(f.eq(f.parse(f.to_string(v)), v));
    }
}

TEST_CASE("modp backend mirrors the exact field") {
    const long l = 5;
    CycloField exact(l);
    ModpField modp(l, 150001);
    CHECK(modp.eps_image() != 1);
    // homomorphism: compare structure constants of quantum integers
    for (long a = -5; a <= 5; ++a)
        for (long d : {1L, 2L}) {
            // [a]_d vanishes in one field iff it vanishes in the other
            CHECK(exact.is_zero(exact.quantum_int(a, d)) ==
                  modp.is_zero(modp.quantum_int(a, d)));
        }
    CHECK(modp.eq(modp.mul(modp.eps_pow(2), modp.eps_pow(3)), modp.one()));
    CHECK(modp.eq(modp.mul(modp.quantum_int(2, 1), modp.inv(modp.quantum_int(2, 1))),
                  modp.one()));
    CHECK_THROWS_AS(ModpField(5, 100003), DomainError);  // 5 does not divide p-1
    CHECK_THROWS_AS(ModpField(5, 150000), DomainError);  // composite
}
