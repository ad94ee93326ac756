// Development scratch: relation / primitivity / route-equality smoke checks.
#include <cstdio>
#include <random>

#include "nilrep/analysis.hpp"
#include "nilrep/cyclotomic.hpp"

using namespace nilrep;

static int failures = 0;

template <class Fn>
void run(const char* name, Fn&& fn) {
    try {
        bool ok = fn();
        std::printf("%-40s %s\n", name, ok ? "PASS" : "FAIL");
        if (!ok) ++failures;
    } catch (const std::exception& e) {
        std::printf("%-40s ERROR: %s\n", name, e.what());
        ++failures;
    }
}

bool relations_exhaustive(LieType ty, int rank, long l) {
    ModuleSpec spec = make_module_spec(ty, rank, l, std::vector<long>(rank, 1));
    ModuleOps ops = build_generators(spec);
    CycloField field(l);
    CartanData cd = cartan(ty, rank);
    for (std::uint64_t code = 0; code < ops.shape.dimension(); ++code) {
        auto fail = relations_on_basis(field, ops, cd, code);
        if (fail) {
            std::printf("  relation '%s' fails at index %llu\n", fail->c_str(),
                        (unsigned long long)code);
            return false;
        }
    }
    return true;
}

bool relations_sampled(LieType ty, int rank, long l, int samples) {
    ModuleSpec spec = make_module_spec(ty, rank, l, std::vector<long>(rank, 2));
    ModuleOps ops = build_generators(spec);
    CycloField field(l);
    CartanData cd = cartan(ty, rank);
    std::mt19937_64 rng(42);
    for (int s = 0; s < samples; ++s) {
        std::uint64_t code = rng() % ops.shape.dimension();
        auto fail = relations_on_basis(field, ops, cd, code);
        if (fail) {
            std::printf("  relation '%s' fails at index %llu\n", fail->c_str(),
                        (unsigned long long)code);
            return false;
        }
    }
    return true;
}

bool primitive_u0(LieType ty, int rank, long l) {
    ModuleSpec spec = make_module_spec(ty, rank, l, std::vector<long>(rank, 3 % l));
    ModuleOps ops = build_generators(spec);
    CycloField field(l);
    auto u0 = SparseVec<CycloField>::unit(field, 0);
    for (int i = 1; i <= rank; ++i)
        if (!act(field, ops, GenKind::E, i, u0).is_zero()) {
            std::printf("  e%d u(0) != 0\n", i);
            return false;
        }
    return true;
}

bool route_equality(LieType ty, int rank, long l, bool with_f, std::uint64_t cap) {
    ModuleSpec spec = make_module_spec(ty, rank, l, std::vector<long>(rank, 1));
    ModuleOps ops = build_generators(spec);
    CycloField field(l);
    auto ce = closed_form_e(spec);
    std::uint64_t dim = ops.shape.dimension();
    std::mt19937_64 rng(7);
    for (std::uint64_t s = 0; s < cap; ++s) {
        std::uint64_t code = dim <= cap ? s : rng() % dim;
        if (dim <= cap && s >= dim) break;
        auto u = SparseVec<CycloField>::unit(field, code);
        for (int i = 1; i <= rank; ++i) {
            auto a = act(field, ops, GenKind::E, i, u);
            auto b = closed_apply(field, ops.shape, ce[i - 1], u);
            if (!a.equals(field, b)) {
                std::printf("  e%d route mismatch at %llu\n", i, (unsigned long long)code);
                return false;
            }
        }
    }
    if (with_f) {
        auto cf = closed_form_f(spec);
        for (std::uint64_t s = 0; s < cap; ++s) {
            std::uint64_t code = dim <= cap ? s : rng() % dim;
            if (dim <= cap && s >= dim) break;
            auto u = SparseVec<CycloField>::unit(field, code);
            for (int i = 1; i <= rank; ++i) {
                auto a = act(field, ops, GenKind::F, i, u);
                auto b = closed_apply(field, ops.shape, cf[i - 1], u);
                if (!a.equals(field, b)) {
                    std::printf("  f%d route mismatch at %llu\n", i, (unsigned long long)code);
                    return false;
                }
            }
        }
    }
    return true;
}

bool highest_weight(LieType ty, int rank, long l) {
    std::mt19937_64 rng(11);
    CartanData cd = cartan(ty, rank);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<long> lambda(rank);
        for (auto& v : lambda) v = static_cast<long>(rng() % static_cast<std::uint64_t>(l));
        ModuleSpec spec = make_module_spec(ty, rank, l, lambda);
        ModuleOps ops = build_generators(spec);
        WeightTable wt = weight_table(ops);
        WeightVector w = wt.weight_of(ops.shape, 0);
        for (int i = 0; i < rank; ++i) {
            if (w[i] != mod_floor(cd.d[i] * lambda[i], l)) {
                std::printf("  t%d u(0): got %ld want %ld (lambda", i + 1, w[i],
                            mod_floor(cd.d[i] * lambda[i], l));
                for (long v : lambda) std::printf(" %ld", v);
                std::printf(")\n");
                return false;
            }
        }
    }
    return true;
}

int main() {
    run("A1 relations exhaustive", [] { return relations_exhaustive(LieType::A, 1, 5); });
    run("A2 relations exhaustive", [] { return relations_exhaustive(LieType::A, 2, 5); });
    run("C2 relations exhaustive", [] { return relations_exhaustive(LieType::C, 2, 5); });
    run("B3 relations sampled", [] { return relations_sampled(LieType::B, 3, 5, 40); });
    run("D4 relations sampled", [] { return relations_sampled(LieType::D, 4, 5, 40); });
    run("D5 relations sampled", [] { return relations_sampled(LieType::D, 5, 5, 25); });
    run("C3 relations sampled", [] { return relations_sampled(LieType::C, 3, 5, 40); });
    run("B3 l=7 relations sampled", [] { return relations_sampled(LieType::B, 3, 7, 15); });
    run("A2 primitive u0", [] { return primitive_u0(LieType::A, 2, 5); });
    run("C2 primitive u0", [] { return primitive_u0(LieType::C, 2, 5); });
    run("B3 primitive u0", [] { return primitive_u0(LieType::B, 3, 5); });
    run("D4 primitive u0", [] { return primitive_u0(LieType::D, 4, 5); });
    run("A2 route equality e+f", [] { return route_equality(LieType::A, 2, 5, true, 200); });
    run("C2 route equality e+f", [] { return route_equality(LieType::C, 2, 5, true, 700); });
    run("B3 route equality e", [] { return route_equality(LieType::B, 3, 5, false, 60); });
    run("D4 route equality e", [] { return route_equality(LieType::D, 4, 5, false, 60); });
    run("D5 route equality e", [] { return route_equality(LieType::D, 5, 5, false, 30); });
    run("A2 highest weight", [] { return highest_weight(LieType::A, 2, 5); });
    run("C2 highest weight", [] { return highest_weight(LieType::C, 2, 5); });
    run("B3 highest weight", [] { return highest_weight(LieType::B, 3, 5); });
    run("D4 highest weight", [] { return highest_weight(LieType::D, 4, 5); });
    std::printf("%d failures\n", failures);
    return failures ? 1 : 0;
}
