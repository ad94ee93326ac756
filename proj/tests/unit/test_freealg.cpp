#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nilrep/cyclotomic.hpp"
#include "nilrep/freealg.hpp"

using namespace nilrep;
using F = CycloField;
using FE = FreeElem<F>;
using Vec = SparseVec<F>;

TEST_CASE("braid images of the fixed-index generators") {
    F field(5);
    CartanData cd = cartan(LieType::A, 2);
    FE img = braid_image(field, cd, 1, Symbol{GenKind::E, 1});
    REQUIRE(img.terms.size() == 1);
    const auto& [word, coeff] = *img.terms.begin();
    CHECK(field.eq(coeff, field.neg(field.one())));
    REQUIRE(word.size() == 2);
    CHECK(Symbol::unpack(word[0]).kind == GenKind::F);
    CHECK(Symbol::unpack(word[1]).kind == GenKind::T);

    FE fimg = braid_image(field, cd, 1, Symbol{GenKind::F, 1});
    REQUIRE(fimg.terms.size() == 1);
    CHECK(Symbol::unpack(fimg.terms.begin()->first[0]).kind == GenKind::TInv);
}

TEST_CASE("braid image of a diagonal symbol follows the Cartan pairing") {
    F field(5);
    CartanData cd = cartan(LieType::A, 3);
    // a_13 = 0: t_3 is fixed
    FE fixed = braid_image(field, cd, 1, Symbol{GenKind::T, 3});
    REQUIRE(fixed.terms.size() == 1);
    CHECK(fixed.terms.begin()->first.size() == 1);
    // a_11 = 2: the image word is t_1 t_1^-1 t_1^-1 (no rewriting happens)
    FE self = braid_image(field, cd, 1, Symbol{GenKind::T, 1});
    REQUIRE(self.terms.size() == 1);
    CHECK(self.terms.begin()->first.size() == 3);
}

TEST_CASE("rank-one root vectors") {
    F field(5);
    CartanData cd = cartan(LieType::A, 1);
    RootVectors<F> rv = root_vectors(field, cd, {1});
    REQUIRE(rv.e.size() == 1);
    CHECK(rv.e[0].terms.size() == 1);
    CHECK(rv.roots[0] == std::vector<int>{1});
}

TEST_CASE("root vectors need a reduced longest word") {
    F field(5);
    CartanData cd = cartan(LieType::A, 2);
    CHECK_THROWS_AS(root_vectors(field, cd, ReducedWord{1, 1, 2}), StructuralError);
    CHECK_THROWS_AS(root_vectors(field, cd, ReducedWord{1, 2}), StructuralError);
}

TEST_CASE("braid image on a word in the second slot") {
    // A_2, word (1,2,1): e_{beta_2} = T_1(e_2), a combination of e1e2 and e2e1
    F field(5);
    CartanData cd = cartan(LieType::A, 2);
    RootVectors<F> rv = root_vectors(field, cd, {1, 2, 1});
    CHECK(rv.roots[1] == std::vector<int>{1, 1});
    CHECK(rv.e[1].terms.size() == 2);
}

TEST_CASE("evaluated root vectors obey the weight pairing") {
    // t_j e_beta = eps^{sum d_j a_{ja} c_a} e_beta t_j as operators
    F field(5);
    for (LieType t : {LieType::A, LieType::C}) {
        CartanData cd = cartan(t, 2);
        ModuleSpec spec = make_module_spec(t, 2, 5, {2, 1});
        ModuleOps ops = build_generators(spec);
        RootVectors<F> rv = root_vectors(field, cd, default_w0_word(t, 2));
        std::mt19937_64 rng(5);
        for (std::size_t k = 0; k < rv.e.size(); ++k) {
            for (int s = 0; s < 15; ++s) {
                Vec v = Vec::unit(field, rng() % ops.shape.dimension());
                for (int j = 1; j <= 2; ++j) {
                    long pairing = 0;
                    for (int a = 0; a < 2; ++a)
                        pairing += cd.d[j - 1] * cd.a[j - 1][a] *
                                   rv.roots[k][static_cast<std::size_t>(a)];
                    Vec lhs = act(field, ops, GenKind::T, j, evaluate(field, ops, rv.e[k], v));
                    Vec rhs = evaluate(field, ops, rv.e[k], act(field, ops, GenKind::T, j, v))
                                  .scaled(field, field.eps_pow(pairing));
                    CHECK(lhs.equals(field, rhs));
                }
            }
        }
    }
}

TEST_CASE("longest-element images agree along two reduced words") {
    // T_{w0}(e_i) evaluates to the same operator along either word.
    F field(5);
    CartanData cd = cartan(LieType::C, 2);
    ModuleSpec spec = make_module_spec(LieType::C, 2, 5, {1, 1});
    ModuleOps ops = build_generators(spec);
    auto image_along = [&](const ReducedWord& word, Symbol s) {
        FE x = FE::generator(field, s.kind, s.index);
        for (std::size_t k = word.size(); k-- > 0;) x = braid_T(field, cd, word[k], x);
        return x;
    };
    for (int i = 1; i <= 2; ++i) {
        FE a = image_along({1, 2, 1, 2}, Symbol{GenKind::E, i});
        FE b = image_along({2, 1, 2, 1}, Symbol{GenKind::E, i});
        for (std::uint64_t code = 0; code < ops.shape.dimension(); ++code) {
            Vec u = Vec::unit(field, code);
            CHECK(evaluate(field, ops, a, u).equals(field, evaluate(field, ops, b, u)));
        }
    }
}

TEST_CASE("evaluation identities") {
    F field(5);
    ModuleSpec spec = make_module_spec(LieType::C, 2, 5, {3, 2});
    ModuleOps ops = build_generators(spec);
    CartanData cd = cartan(LieType::C, 2);
    std::mt19937_64 rng(9);

    SUBCASE("the empty word is the identity") {
        Vec v = Vec::unit(field, 17);
        CHECK(evaluate(field, ops, FE::one(field), v).equals(field, v));
    }
    SUBCASE("the mixed commutation relation evaluates to zero") {
        for (int i = 1; i <= 2; ++i) {
            long di = cd.d[i - 1];
            FE comm = FE::generator(field, GenKind::E, i)
                          .times(field, FE::generator(field, GenKind::F, i));
            comm = comm.plus(field, FE::generator(field, GenKind::F, i)
                                        .times(field, FE::generator(field, GenKind::E, i))
                                        .scaled(field, field.neg(field.one())));
            auto s = field.inv(field.sub(field.eps_pow(di), field.eps_pow(-di)));
            FE brace = FE::generator(field, GenKind::T, i)
                           .scaled(field, s)
                           .plus(field, FE::generator(field, GenKind::TInv, i)
                                            .scaled(field, field.neg(s)));
            FE rel = comm.plus(field, brace.scaled(field, field.neg(field.one())));
            for (int t = 0; t < 20; ++t) {
                Vec v = Vec::unit(field, rng() % ops.shape.dimension());
                CHECK(evaluate(field, ops, rel, v).is_zero());
            }
        }
    }
    SUBCASE("root-vector l-th powers vanish") {
        RootVectors<F> rv = root_vectors(field, cd, default_w0_word(LieType::C, 2));
        for (const FE& e : rv.e) {
            for (int t = 0; t < 5; ++t) {
                Vec v = Vec::unit(field, rng() % ops.shape.dimension());
                for (int k = 0; k < 5 && !v.is_zero(); ++k) v = evaluate(field, ops, e, v);
                CHECK(v.is_zero());
            }
        }
    }
}

TEST_CASE("free element text form") {
    F field(5);
    FE x = FE::generator(field, GenKind::E, 1)
               .times(field, FE::generator(field, GenKind::F, 2))
               .times(field, FE::generator(field, GenKind::TInv, 1));
    CHECK(x.to_string(field) == "[1]*e1.f2.t1^-1");
    CHECK(FE{}.to_string(field) == "0");
}
