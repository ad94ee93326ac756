#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilrep/weyl.hpp"

using namespace nilrep;

TEST_CASE("simple reflections have length one") {
    for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D}) {
        int n = min_rank(t) + 1;
        for (int i = 1; i <= n; ++i) {
            WeylElem w(t, n);
            w.apply(i);
            CHECK(w.length() == 1);
            w.apply(i);
            CHECK(w.length() == 0);  // involutive
        }
    }
}

TEST_CASE("default longest words") {
    CHECK(default_w0_word(LieType::A, 1) == ReducedWord{1});
    CHECK(default_w0_word(LieType::A, 2) == ReducedWord{1, 2, 1});
    CHECK(default_w0_word(LieType::C, 2).size() == 4);
    for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D}) {
        for (int n = min_rank(t); n <= min_rank(t) + 1; ++n) {
            ReducedWord w = default_w0_word(t, n);
            CHECK(static_cast<int>(w.size()) == cartan(t, n).positive_roots());
            CHECK(is_reduced(t, n, w));
        }
    }
}

TEST_CASE("reduced detection") {
    CHECK(is_reduced(LieType::A, 2, {1, 2, 1}));
    CHECK(is_reduced(LieType::A, 2, {2, 1, 2}));
    CHECK_FALSE(is_reduced(LieType::A, 2, {1, 1}));
    CHECK_FALSE(is_reduced(LieType::A, 2, {1, 2, 1, 2}));  // longer than w0
    CHECK(is_reduced(LieType::C, 2, {1, 2, 1, 2}));
    CHECK(is_reduced(LieType::C, 2, {2, 1, 2, 1}));
    CHECK(is_reduced(LieType::D, 4, {3, 4}));  // commuting pair is reduced
}

TEST_CASE("roots of a longest word enumerate the positive roots") {
    for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D}) {
        int n = min_rank(t);
        CartanData cd = cartan(t, n);
        auto roots = roots_of_word(cd, default_w0_word(t, n));
        CHECK(static_cast<int>(roots.size()) == cd.positive_roots());
        // all distinct, all nonnegative coordinate vectors
        for (std::size_t i = 0; i < roots.size(); ++i) {
            bool nonneg = true;
            for (int c : roots[i])
                if (c < 0) nonneg = false;
            CHECK(nonneg);
            for (std::size_t j = i + 1; j < roots.size(); ++j) CHECK(roots[i] != roots[j]);
        }
    }
}

TEST_CASE("cartan data is symmetrizable") {
    for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D}) {
        for (int n = min_rank(t); n <= min_rank(t) + 2; ++n) {
            CartanData cd = cartan(t, n);
            for (int i = 0; i < n; ++i) {
                CHECK(cd.a[i][i] == 2);
                for (int j = 0; j < n; ++j)
                    CHECK(cd.d[i] * cd.a[i][j] == cd.d[j] * cd.a[j][i]);
            }
        }
    }
}
