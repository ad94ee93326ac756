#pragma once

#include "nilrep/apply.hpp"
#include "nilrep/module_spec.hpp"
#include "nilrep/words.hpp"

namespace nilrep {

/// One module's generator operators: raising e_i, lowering f_i, diagonal
/// t_i^{+-1}, built once from the spec and applied through genop_apply.
struct ModuleOps {
    IndexShape shape;
    ModuleSpec spec;
    std::vector<GenOp> e, f, t, tinv;  // indexed 0..rank-1

    ModuleOps(IndexShape s, ModuleSpec sp) : shape(std::move(s)), spec(std::move(sp)) {}

    const GenOp& op(GenKind kind, int idx) const {
        switch (kind) {
            case GenKind::E: return e[static_cast<std::size_t>(idx - 1)];
            case GenKind::F: return f[static_cast<std::size_t>(idx - 1)];
            case GenKind::T: return t[static_cast<std::size_t>(idx - 1)];
            case GenKind::TInv: return tinv[static_cast<std::size_t>(idx - 1)];
        }
        throw InternalError("bad GenKind");
    }
};

/// Transcription of the construction words for the chosen type and rank.
ModuleOps build_generators(const ModuleSpec& spec);

template <class F>
SparseVec<F> act(const F& field, const ModuleOps& ops, const GenOp& op, const SparseVec<F>& v) {
    return genop_apply(field, ops.shape, op, ops.spec.b_exp, v);
}

template <class F>
SparseVec<F> act(const F& field, const ModuleOps& ops, GenKind kind, int idx,
                 const SparseVec<F>& v) {
    return act(field, ops, ops.op(kind, idx), v);
}

/// Closed-form action rules (explicit coefficient formulas, no word
/// evaluation): an independent route used for differential testing.
struct LinForm {
    std::vector<std::pair<int, long>> coeff;  // (slot, coefficient)
    long constant = 0;

    long eval(const MultiIndex& m) const {
        long v = constant;
        for (const auto& [s, c] : coeff) v += c * m[static_cast<std::size_t>(s)];
        return v;
    }
    void add(int slot, long c) {
        if (c == 0) return;
        for (auto& p : coeff)
            if (p.first == slot) {
                p.second += c;
                return;
            }
        coeff.emplace_back(slot, c);
    }
};

struct ClosedTerm {
    LinForm arg;                             // evaluated at the pre-shift index
    int d = 1;                               // 0: eps^arg; d>0: quantum integer [arg] at eps^d
    std::vector<std::pair<int, int>> delta;  // index increments, wrapped mod l
};

struct ClosedOp {
    std::vector<ClosedTerm> terms;
};

/// Closed-form raising operators e_1..e_n; requires default parameters.
std::vector<ClosedOp> closed_form_e(const ModuleSpec& spec);
/// Closed-form lowering operators; stated only for types A and C.
std::vector<ClosedOp> closed_form_f(const ModuleSpec& spec);

template <class F>
SparseVec<F> closed_apply(const F& field, const IndexShape& shape, const ClosedOp& op,
                          const SparseVec<F>& v) {
    SparseVec<F> out;
    long l = shape.root_order();
    for (const auto& [code, c] : v.terms()) {
        MultiIndex m = shape.decode(code);
        for (const ClosedTerm& term : op.terms) {
            long a = term.arg.eval(m);
            typename F::Elem coeff =
                term.d == 0 ? field.eps_pow(a) : field.quantum_int(a, term.d);
            if (field.is_zero(coeff)) continue;
            std::uint64_t target = code;
            for (const auto& [slot, inc] : term.delta) {
                long cur = m[static_cast<std::size_t>(slot)];
                long next = mod_floor(cur + inc, l);
                target += (static_cast<std::uint64_t>(next) - static_cast<std::uint64_t>(cur)) *
                          shape.radix_weight(static_cast<std::size_t>(slot));
            }
            out.add_term(field, target, field.mul(c, coeff));
        }
    }
    return out;
}

}  // namespace nilrep
