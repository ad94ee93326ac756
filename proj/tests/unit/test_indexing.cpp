#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nilrep/apply.hpp"
#include "nilrep/cyclotomic.hpp"

using namespace nilrep;

TEST_CASE("slot counts match the positive-root counts") {
    CHECK(IndexShape(LieType::A, 3, 5).slot_count() == 6);
    CHECK(IndexShape(LieType::B, 3, 5).slot_count() == 9);
    CHECK(IndexShape(LieType::C, 2, 5).slot_count() == 4);
    CHECK(IndexShape(LieType::D, 4, 5).slot_count() == 12);
    for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D}) {
        int n = min_rank(t) + 1;
        CHECK(IndexShape(t, n, 5).slot_count() ==
              static_cast<std::size_t>(cartan(t, n).positive_roots()));
    }
}

TEST_CASE("rank bounds are enforced") {
    CHECK_THROWS_AS(IndexShape(LieType::C, 1, 5), DomainError);
    CHECK_THROWS_AS(IndexShape(LieType::B, 2, 5), DomainError);
    CHECK_THROWS_AS(IndexShape(LieType::D, 3, 5), DomainError);
    CHECK_NOTHROW(IndexShape(LieType::A, 1, 5));
}

TEST_CASE("encode and decode are inverse, with the documented corners") {
    IndexShape shape(LieType::C, 2, 5);
    MultiIndex zero(shape.slot_count(), 0);
    CHECK(shape.encode(zero) == 0);
    MultiIndex top(shape.slot_count(), 4);
    CHECK(shape.encode(top) == shape.dimension() - 1);
    CHECK(shape.decode(shape.dimension() - 1) == top);
    // unit at slot (1,1) has the radix weight of that slot
    MultiIndex unit(shape.slot_count(), 0);
    unit[static_cast<std::size_t>(shape.slot_of(1, 1))] = 1;
    CHECK(shape.encode(unit) == shape.radix_weight(0));

    std::mt19937_64 rng(17);
    for (int t = 0; t < 100; ++t) {
        std::uint64_t code = rng() % shape.dimension();
        CHECK(shape.encode(shape.decode(code)) == code);
    }
    MultiIndex bad(shape.slot_count(), 0);
    bad[0] = 5;
    CHECK_THROWS_AS(shape.encode(bad), StructuralError);
    CHECK_THROWS_AS(shape.encode(MultiIndex(2, 0)), StructuralError);
}

TEST_CASE("triangular and rectangular slot lookups") {
    IndexShape a(LieType::A, 3, 5);
    CHECK(a.slot_of(1, 1) == 0);
    CHECK(a.slot_of(2, 1) == -1);  // below the diagonal: out of range
    CHECK(a.slot_of(0, 1) == -1);
    CHECK(a.slot_of(1, 4) == -1);
    IndexShape d(LieType::D, 4, 5);
    CHECK(d.slot_of(4, 1) == -1);  // row n does not exist
    CHECK(d.slot_of(3, 4) >= 0);
}

TEST_CASE("index shift wraps cyclically") {
    CycloField f(5);
    IndexShape shape(LieType::C, 2, 5);
    ShiftWord w;
    w.mul_slot(shape.slot_of(1, 1), +1);  // lowers the (1,1) entry
    std::uint64_t zero = 0;
    std::uint64_t wrapped = shift_index(shape, w, zero);
    CHECK(shape.decode(wrapped)[0] == 4);
    ShiftWord winv;
    winv.mul_slot(shape.slot_of(1, 1), -1);
    CHECK(shift_index(shape, winv, wrapped) == zero);

    // empty word is the identity
    CHECK(shift_index(shape, ShiftWord{}, 123) == 123);
}

TEST_CASE("diagonal and shift operators satisfy the exchange relation") {
    // X Z = eps Z X at equal positions; distinct positions commute; both have
    // order l. Checked on every basis vector at rank-2 scale.
    CycloField f(5);
    IndexShape shape(LieType::C, 2, 5);
    const std::vector<long> zero_b(shape.slot_count(), 0);
    for (std::size_t s = 0; s < shape.slot_count(); ++s) {
        ShiftWord xs;
        xs.mul_slot(static_cast<int>(s), +1);
        DiagWord zs;
        zs.mul_slot(static_cast<int>(s), +1);
        for (std::uint64_t code = 0; code < shape.dimension(); ++code) {
            // X(Z u) = eps Z(X u)
            std::uint64_t xu = shift_index(shape, xs, code);
            auto z_then_x = diag_eval(f, shape, zs, zero_b, code);
            auto x_then_z = f.mul(f.eps_pow(1), diag_eval(f, shape, zs, zero_b, xu));
            CHECK(f.eq(z_then_x, x_then_z));
        }
        // order l
        std::uint64_t code = 7 % shape.dimension();
        std::uint64_t cur = code;
        for (long k = 0; k < 5; ++k) cur = shift_index(shape, xs, cur);
        CHECK(cur == code);
        long e = 0;
        for (long k = 0; k < 5; ++k) e += diag_exponent(shape, zs, zero_b, code);
        CHECK(mod_floor(e, 5) == 0);
        // distinct positions commute: shift at s, diagonal at s' untouched
        for (std::size_t s2 = 0; s2 < shape.slot_count(); ++s2) {
            if (s2 == s) continue;
            DiagWord z2;
            z2.mul_slot(static_cast<int>(s2), +1);
            CHECK(diag_exponent(shape, z2, zero_b, shift_index(shape, xs, code)) ==
                  diag_exponent(shape, z2, zero_b, code));
        }
    }
}

TEST_CASE("brace evaluation rejects non-divisible exponents") {
    CycloField f(5);
    IndexShape shape(LieType::C, 2, 5);
    DiagWord w;
    w.mul_slot(0, 1);
    w.brace_d = 2;
    std::vector<long> b(shape.slot_count(), 0);
    MultiIndex m(shape.slot_count(), 0);
    m[0] = 1;  // exponent 1, not divisible by 2
    CHECK_THROWS_AS(diag_eval(f, shape, w, b, shape.encode(m)), InternalError);
}
