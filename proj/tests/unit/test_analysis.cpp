#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nilrep/analysis.hpp"
#include "nilrep/cyclotomic.hpp"

using namespace nilrep;
using F = CycloField;
using Vec = SparseVec<F>;

namespace {

// Straightforward whole-space eliminator for the joint raising kernel: build
// the stacked constraint matrix over every basis vector and run plain
// Gauss-Jordan, no weight blocking. Deliberately independent of the library's
// blockwise path.
std::vector<Vec> dense_kernel_oracle(const F& field, const ModuleOps& ops) {
    const std::uint64_t dim = ops.shape.dimension();
    std::vector<std::map<std::size_t, FieldElem>> rows;
    std::map<std::uint64_t, std::size_t> row_of_constraint;
    for (std::uint64_t col = 0; col < dim; ++col) {
        Vec u = Vec::unit(field, col);
        for (int i = 1; i <= ops.spec.rank; ++i) {
            Vec img = act(field, ops, GenKind::E, i, u);
            for (const auto& [target, c] : img.terms()) {
                std::uint64_t key =
                    target * static_cast<std::uint64_t>(ops.spec.rank + 1) +
                    static_cast<std::uint64_t>(i);
                auto [it, fresh] = row_of_constraint.emplace(key, rows.size());
                if (fresh) rows.emplace_back();
                rows[it->second][static_cast<std::size_t>(col)] = c;
            }
        }
    }
    auto kernel = sparse_nullspace(field, std::move(rows), dim);
    std::vector<Vec> out;
    for (const auto& sol : kernel) {
        Vec v;
        for (std::size_t k = 0; k < sol.size(); ++k)
            v.add_term(field, static_cast<std::uint64_t>(k), sol[k]);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

TEST_CASE("echelon basis is canonical and fully reduced") {
    F field(5);
    EchelonBasis<F> basis(field);
    Vec a;
    a.add_term(field, 0, field.one());
    a.add_term(field, 3, field.eps_pow(1));
    Vec b;
    b.add_term(field, 0, field.eps_pow(2));
    b.add_term(field, 5, field.one());
    CHECK(basis.insert(a));
    CHECK(basis.insert(b));
    CHECK_FALSE(basis.insert(a.plus(field, b)));  // dependent
    CHECK(basis.dim() == 2);
    // rows are pivot-normalized and mutually reduced
    for (std::size_t r : basis.order()) {
        const Vec& row = basis.rows()[r];
        CHECK(field.eq(*row.coeff(row.leading()), field.one()));
        for (const auto& [p, r2] : basis.pivots())
            if (p != row.leading()) CHECK(row.coeff(p) == nullptr);
    }
    CHECK(basis.reduce(a.plus(field, b.scaled(field, field.eps_pow(3)))).is_zero());
}

TEST_CASE("weights of the top vector and block translation") {
    F field(5);
    for (LieType t : {LieType::A, LieType::C}) {
        CartanData cd = cartan(t, 2);
        ModuleSpec spec = make_module_spec(t, 2, 5, {3, 1});
        ModuleOps ops = build_generators(spec);
        WeightTable wt = weight_table(ops);
        WeightVector top = wt.weight_of(ops.shape, 0);
        for (int i = 0; i < 2; ++i)
            CHECK(top[static_cast<std::size_t>(i)] ==
                  mod_floor(cd.d[i] * spec.lambda[static_cast<std::size_t>(i)], 5));
        // every raising image lands in the translated weight block
        for (std::uint64_t code = 0; code < ops.shape.dimension(); ++code) {
            WeightVector w = wt.weight_of(ops.shape, code);
            for (int i = 1; i <= 2; ++i) {
                Vec img = act(field, ops, GenKind::E, i, Vec::unit(field, code));
                for (const auto& [target, c] : img.terms()) {
                    WeightVector wt2 = wt.weight_of(ops.shape, target);
                    for (int j = 0; j < 2; ++j)
                        CHECK(wt2[static_cast<std::size_t>(j)] ==
                              mod_floor(w[static_cast<std::size_t>(j)] +
                                            wt.e_shift[static_cast<std::size_t>(i - 1)]
                                                      [static_cast<std::size_t>(j)],
                                        5));
                }
            }
        }
    }
}

TEST_CASE("blockwise kernel agrees with the dense oracle") {
    F field(5);
    struct Case { LieType t; int n; };
    for (Case c : {Case{LieType::A, 1}, Case{LieType::A, 2}}) {
        ModuleSpec spec = make_module_spec(c.t, c.n, 5, std::vector<long>(c.n, 2));
        ModuleOps ops = build_generators(spec);
        EchelonBasis<F> fast = primitive_space_exhaustive(field, ops);
        auto slow = dense_kernel_oracle(field, ops);
        CHECK(fast.dim() == slow.size());
        EchelonBasis<F> slow_basis(field);
        for (auto& v : slow) slow_basis.insert(std::move(v));
        CHECK(fast.same_span(slow_basis));
    }
}

TEST_CASE("exhaustive kernel refuses oversized spaces with guidance") {
    F field(5);
    ModuleSpec spec = make_module_spec(LieType::B, 3, 5, {0, 0, 0});
    ModuleOps ops = build_generators(spec);
    CHECK_THROWS_AS(primitive_space_exhaustive(field, ops), DomainError);
}

TEST_CASE("span dimension ladder at rank one") {
    F field(5);
    for (long lam = 0; lam <= 4; ++lam) {
        ModuleSpec spec = make_module_spec(LieType::A, 1, 5, {lam});
        ModuleOps ops = build_generators(spec);
        SubmoduleBasis<F> span = submodule_span(field, ops, Vec::unit(field, 0));
        CHECK(span.dim() == static_cast<std::size_t>(lam + 1));
        CHECK(span.complete);
        CHECK_FALSE(span.extended);
    }
}

TEST_CASE("span is independent of the sweep order") {
    F field(5);
    ModuleSpec spec = make_module_spec(LieType::C, 2, 5, {2, 3});
    ModuleOps ops = build_generators(spec);
    SubmoduleBasis<F> a = submodule_span(field, ops, Vec::unit(field, 0), {1, 2});
    SubmoduleBasis<F> b = submodule_span(field, ops, Vec::unit(field, 0), {2, 1});
    CHECK(a.dim() == b.dim());
    CHECK(a.basis.same_span(b.basis));
}

TEST_CASE("kernel within the spanned submodule is the top line") {
    F field(5);
    ModuleSpec spec = make_module_spec(LieType::C, 2, 5, {1, 2});
    ModuleOps ops = build_generators(spec);
    SubmoduleBasis<F> span = submodule_span(field, ops, Vec::unit(field, 0));
    EchelonBasis<F> kernel = primitive_space_within(field, ops, span.basis);
    REQUIRE(kernel.dim() == 1);
    CHECK(kernel.rows()[0].support_size() == 1);
    CHECK(kernel.rows()[0].coeff(0) != nullptr);
}

TEST_CASE("a non-weight seed spans the same module as its components") {
    F field(5);
    ModuleSpec spec = make_module_spec(LieType::A, 2, 5, {1, 1});
    ModuleOps ops = build_generators(spec);
    Vec mixed = Vec::unit(field, 0);
    mixed.add_term(field, 7, field.eps_pow(2));
    SubmoduleBasis<F> span = submodule_span(field, ops, mixed);
    CHECK(span.complete);
    // contains both weight components
    CHECK(span.basis.reduce(Vec::unit(field, 0)).is_zero());
    CHECK(span.basis.reduce(Vec::unit(field, 7)).is_zero());
}
