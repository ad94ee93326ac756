#pragma once

#include "nilrep/mod_arith.hpp"
#include "nilrep/sparsevec.hpp"
#include "nilrep/words.hpp"

namespace nilrep {

/// Index shift of a single encoded basis index: subtracts each exponent, with
/// cyclic wrap mod l in every slot.
inline std::uint64_t shift_index(const IndexShape& shape, const ShiftWord& w, std::uint64_t code) {
    long l = shape.root_order();
    for (const auto& [slot, e] : w.exps) {
        long cur = static_cast<long>((code / shape.radix_weight(slot)) % static_cast<std::uint64_t>(l));
        long next = mod_floor(cur - e, l);
        code += (static_cast<std::uint64_t>(next) - static_cast<std::uint64_t>(cur)) *
                shape.radix_weight(slot);
    }
    return code;
}

/// eps exponent of the bare diagonal monomial at index m (before any brace).
inline long diag_exponent(const IndexShape& shape, const DiagWord& w, const std::vector<long>& b,
                          std::uint64_t code) {
    long l = shape.root_order();
    long e = w.eps_offset;
    for (const auto& [slot, z] : w.exps) {
        long m = static_cast<long>((code / shape.radix_weight(slot)) % static_cast<std::uint64_t>(l));
        e += static_cast<long>(z) * (m + b[static_cast<std::size_t>(slot)]);
    }
    return e;
}

/// Diagonal coefficient at index m: eps^E for a plain word, the brace value
/// [E/d] at eps^d otherwise. Brace exponents not divisible by d never arise
/// from well-formed generator words and are reported as internal errors.
template <class F>
typename F::Elem diag_eval(const F& field, const IndexShape& shape, const DiagWord& w,
                           const std::vector<long>& b, std::uint64_t code) {
    long e = diag_exponent(shape, w, b, code);
    if (w.brace_d == 0) return field.eps_pow(e);
    if (e % w.brace_d != 0)
        throw InternalError("brace exponent " + std::to_string(e) + " not divisible by d = " +
                            std::to_string(w.brace_d));
    return field.quantum_int(e / w.brace_d, w.brace_d);
}

/// Single generator term on a basis index: shift first, then the diagonal
/// coefficient at the shifted index (diagonal factors stand left of the
/// shifts, and operators act right to left).
template <class F>
void term_apply_basis(const F& field, const IndexShape& shape, const GenTerm& term,
                      std::uint64_t code, const typename F::Elem& c, const std::vector<long>& b,
                      SparseVec<F>& out) {
    std::uint64_t target = shift_index(shape, term.shift, code);
    typename F::Elem v = field.mul(c, diag_eval(field, shape, term.diag, b, target));
    if (term.eps_prefactor != 0) v = field.mul(v, field.eps_pow(term.eps_prefactor));
    out.add_term(field, target, v);
}

template <class F>
SparseVec<F> term_apply(const F& field, const IndexShape& shape, const GenTerm& term,
                        const std::vector<long>& b, const SparseVec<F>& v) {
    SparseVec<F> out;
    for (const auto& [code, c] : v.terms()) term_apply_basis(field, shape, term, code, c, b, out);
    return out;
}

template <class F>
SparseVec<F> genop_apply(const F& field, const IndexShape& shape, const GenOp& op,
                         const std::vector<long>& b, const SparseVec<F>& v) {
    SparseVec<F> out;
    for (const auto& [code, c] : v.terms())
        for (const GenTerm& term : op.terms) term_apply_basis(field, shape, term, code, c, b, out);
    return out;
}

/// Linear eps-exponent form of a purely diagonal operator (each t_i):
/// exponent(m) = constant + sum coeff_s * m_s.
struct DiagForm {
    std::vector<long> coeff;  // per slot
    long constant = 0;

    long exponent(const IndexShape& shape, std::uint64_t code) const {
        long e = constant;
        long l = shape.root_order();
        for (std::size_t s = 0; s < coeff.size(); ++s)
            if (coeff[s] != 0)
                e += coeff[s] *
                     static_cast<long>((code / shape.radix_weight(s)) % static_cast<std::uint64_t>(l));
        return e;
    }
};

inline DiagForm diag_form(const IndexShape& shape, const GenOp& op, const std::vector<long>& b) {
    if (op.terms.size() != 1 || !op.terms[0].shift.exps.empty() || op.terms[0].diag.brace_d != 0)
        throw StructuralError("diagonal form requested for a non-diagonal operator");
    const GenTerm& t = op.terms[0];
    DiagForm f;
    f.coeff.assign(shape.slot_count(), 0);
    f.constant = t.diag.eps_offset + t.eps_prefactor;
    for (const auto& [slot, z] : t.diag.exps) {
        f.coeff[static_cast<std::size_t>(slot)] += z;
        f.constant += static_cast<long>(z) * b[static_cast<std::size_t>(slot)];
    }
    return f;
}

}  // namespace nilrep
