#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nilrep/analysis.hpp"
#include "nilrep/cyclotomic.hpp"
#include "nilrep/serialize.hpp"

using namespace nilrep;
using F = CycloField;
using Vec = SparseVec<F>;

TEST_CASE("sp(4): the first raising operator on unit vectors") {
    F field(5);
    ModuleSpec spec = make_module_spec(LieType::C, 2, 5, {0, 0});
    ModuleOps ops = build_generators(spec);

    Vec u0 = Vec::unit(field, 0);
    for (int i = 1; i <= 2; ++i) CHECK(act(field, ops, GenKind::E, i, u0).is_zero());

    MultiIndex m(ops.shape.slot_count(), 0);
    m[static_cast<std::size_t>(ops.shape.slot_of(1, 1))] = 1;
    Vec u11 = Vec::unit(field, ops.shape.encode(m));
    Vec img = act(field, ops, GenKind::E, 1, u11);
    // e_1 u(eps_11) = [-1] u(0) = -u(0)
    CHECK(img.support_size() == 1);
    REQUIRE(img.coeff(0) != nullptr);
    CHECK(field.eq(*img.coeff(0), field.neg(field.one())));
}

TEST_CASE("raising operators kill u(0) for every type at default parameters") {
    F field(5);
    struct Case { LieType t; int n; };
    for (Case c : {Case{LieType::A, 2}, Case{LieType::C, 2}, Case{LieType::B, 3},
                   Case{LieType::D, 4}, Case{LieType::D, 5}}) {
        ModuleSpec spec = make_module_spec(c.t, c.n, 5, std::vector<long>(c.n, 3));
        ModuleOps ops = build_generators(spec);
        Vec u0 = Vec::unit(field, 0);
        for (int i = 1; i <= c.n; ++i)
            CHECK(act(field, ops, GenKind::E, i, u0).is_zero());
    }
}

TEST_CASE("diagonal operators invert and have order l on integer weights") {
    F field(5);
    ModuleSpec spec = make_module_spec(LieType::C, 2, 5, {2, 3});
    ModuleOps ops = build_generators(spec);
    std::mt19937_64 rng(23);
    for (int t = 0; t < 20; ++t) {
        Vec v = Vec::unit(field, rng() % ops.shape.dimension());
        for (int i = 1; i <= 2; ++i) {
            CHECK(act(field, ops, GenKind::T, i, act(field, ops, GenKind::TInv, i, v))
                      .equals(field, v));
            Vec w = v;
            for (int k = 0; k < 5; ++k) w = act(field, ops, GenKind::T, i, w);
            CHECK(w.equals(field, v));
        }
    }
}

TEST_CASE("route equality: closed catalogs match the construction words") {
    F field(5);
    SUBCASE("exhaustive at rank 2, raising and lowering") {
        for (LieType t : {LieType::A, LieType::C}) {
            ModuleSpec spec = make_module_spec(t, 2, 5, {1, 3});
            ModuleOps ops = build_generators(spec);
            auto ce = closed_form_e(spec);
            auto cf = closed_form_f(spec);
            for (std::uint64_t code = 0; code < ops.shape.dimension(); ++code) {
                Vec u = Vec::unit(field, code);
                for (int i = 1; i <= 2; ++i) {
                    CHECK(act(field, ops, GenKind::E, i, u)
                              .equals(field, closed_apply(field, ops.shape, ce[i - 1], u)));
                    CHECK(act(field, ops, GenKind::F, i, u)
                              .equals(field, closed_apply(field, ops.shape, cf[i - 1], u)));
                }
            }
        }
    }
    SUBCASE("sampled at higher rank, raising route") {
        struct Case { LieType t; int n; };
        for (Case c : {Case{LieType::B, 3}, Case{LieType::C, 3}, Case{LieType::D, 4},
                       Case{LieType::D, 5}}) {
            ModuleSpec spec = make_module_spec(c.t, c.n, 5, std::vector<long>(c.n, 1));
            ModuleOps ops = build_generators(spec);
            auto ce = closed_form_e(spec);
            std::mt19937_64 rng(31);
            for (int s = 0; s < 40; ++s) {
                Vec u = Vec::unit(field, rng() % ops.shape.dimension());
                for (int i = 1; i <= c.n; ++i)
                    CHECK(act(field, ops, GenKind::E, i, u)
                              .equals(field, closed_apply(field, ops.shape, ce[i - 1], u)));
            }
        }
    }
    SUBCASE("lowering route sampled on random vectors") {
        ModuleSpec spec = make_module_spec(LieType::C, 2, 5, {4, 2});
        ModuleOps ops = build_generators(spec);
        auto cf = closed_form_f(spec);
        std::mt19937_64 rng(7);
        for (int s = 0; s < 200; ++s) {
            Vec u = Vec::unit(field, rng() % ops.shape.dimension());
            for (int i = 1; i <= 2; ++i)
                CHECK(act(field, ops, GenKind::F, i, u)
                          .equals(field, closed_apply(field, ops.shape, cf[i - 1], u)));
        }
    }
}

TEST_CASE("closed catalog spot values") {
    F field(5);
    ModuleSpec spec = make_module_spec(LieType::C, 2, 5, {0, 0});
    IndexShape shape = spec.shape();
    auto ce = closed_form_e(spec);
    // e_2 u(0): the alpha-shifted coefficient is the vanishing bracket
    Vec u0 = Vec::unit(field, 0);
    CHECK(closed_apply(field, shape, ce[1], u0).is_zero());
    // e_2 u(eps_22) contains [-1] at eps^2 on the alpha-shifted target
    MultiIndex m(shape.slot_count(), 0);
    m[static_cast<std::size_t>(shape.slot_of(2, 2))] = 1;
    Vec u22 = Vec::unit(field, shape.encode(m));
    Vec img = closed_apply(field, shape, ce[1], u22);
    MultiIndex target(shape.slot_count(), 0);
    target[static_cast<std::size_t>(shape.slot_of(1, 1))] = 2;
    target[static_cast<std::size_t>(shape.slot_of(2, 1))] = 3;  // -2 mod 5
    const auto* c = img.coeff(shape.encode(target));
    REQUIRE(c != nullptr);
    CHECK(field.eq(*c, field.quantum_int(-1, 2)));
}

TEST_CASE("closed catalogs require the default parameters") {
    ModuleSpec spec = make_module_spec(LieType::C, 2, 5, {0, 0});
    spec.b_exp[0] += 1;
    CHECK_THROWS_AS(closed_form_e(spec), UnsupportedError);
    ModuleSpec bd = make_module_spec(LieType::B, 3, 5, {0, 0, 0});
    CHECK_THROWS_AS(closed_form_f(bd), UnsupportedError);
}

TEST_CASE("defining relations, exhaustively at small rank") {
    F field(5);
    for (LieType t : {LieType::A, LieType::C}) {
        ModuleSpec spec = make_module_spec(t, 2, 5, {2, 1});
        ModuleOps ops = build_generators(spec);
        CartanData cd = cartan(t, 2);
        for (std::uint64_t code = 0; code < ops.shape.dimension(); ++code) {
            auto fail = relations_on_basis(field, ops, cd, code);
            if (fail) FAIL("relation '", *fail, "' fails at index ", code);
        }
    }
}

TEST_CASE("defining relations, sampled at larger rank") {
    F field(5);
    struct Case { LieType t; int n; };
    for (Case c : {Case{LieType::B, 3}, Case{LieType::D, 4}}) {
        ModuleSpec spec = make_module_spec(c.t, c.n, 5, std::vector<long>(c.n, 2));
        ModuleOps ops = build_generators(spec);
        CartanData cd = cartan(c.t, c.n);
        std::mt19937_64 rng(43);
        for (int s = 0; s < 25; ++s) {
            std::uint64_t code = rng() % ops.shape.dimension();
            auto fail = relations_on_basis(field, ops, cd, code);
            if (fail) FAIL("relation '", *fail, "' fails at index ", code);
        }
    }
}

TEST_CASE("type B weight-shift branches: the certification adjudicates") {
    F field(5);
    CartanData cd = cartan(LieType::B, 3);
    auto top_weight_ok = [&](BShiftBranch branch) {
        ModuleSpec spec = make_module_spec(LieType::B, 3, 5, {1, 2, 3}, branch);
        ModuleOps ops = build_generators(spec);
        WeightTable wt = weight_table(ops);
        WeightVector w = wt.weight_of(ops.shape, 0);
        for (int i = 0; i < 3; ++i)
            if (w[static_cast<std::size_t>(i)] !=
                mod_floor(cd.d[i] * spec.lambda[static_cast<std::size_t>(i)], 5))
                return false;
        return true;
    };
    CHECK(top_weight_ok(BShiftBranch::Corrected));
    CHECK_FALSE(top_weight_ok(BShiftBranch::Printed));
}

TEST_CASE("generator dump lists brace, exponents and shifts per term") {
    ModuleSpec spec = make_module_spec(LieType::C, 2, 5, {0, 0});
    ModuleOps ops = build_generators(spec);
    Json j = genop_to_json(ops.shape, ops.e[0]);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);  // e_1 is a single brace times a single shift
    CHECK(j[0]["brace_d"] == 1);
    CHECK(j[0]["z_exponents"].size() == 1);
    CHECK(j[0]["x_shift"].size() == 1);
}

TEST_CASE("generator application is linear") {
    F field(5);
    ModuleSpec spec = make_module_spec(LieType::C, 2, 5, {1, 2});
    ModuleOps ops = build_generators(spec);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 10; ++t) {
        Vec a = Vec::unit(field, rng() % ops.shape.dimension());
        Vec b = Vec::unit(field, rng() % ops.shape.dimension());
        auto s = field.eps_pow(static_cast<long>(rng() % 5));
        Vec combo = a.plus(field, b.scaled(field, s));
        for (int i = 1; i <= 2; ++i) {
            Vec lhs = act(field, ops, GenKind::F, i, combo);
            Vec rhs = act(field, ops, GenKind::F, i, a)
                          .plus(field, act(field, ops, GenKind::F, i, b).scaled(field, s));
            CHECK(lhs.equals(field, rhs));
        }
    }
}
