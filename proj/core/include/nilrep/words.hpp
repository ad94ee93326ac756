#pragma once

#include <cstdint>
#include <vector>

#include "nilrep/indexing.hpp"

namespace nilrep {

/// Laurent monomial in the index-shift operators: exponent per slot. Acting on
/// u(m) it subtracts the exponent vector from m, entries wrapping mod l.
struct ShiftWord {
    std::vector<std::pair<int, int>> exps;  // (slot, exponent), slots unique

    void mul_slot(int slot, int e) {
        if (e == 0) return;
        for (auto& p : exps)
            if (p.first == slot) {
                p.second += e;
                return;
            }
        exps.emplace_back(slot, e);
    }
    void purge_zero() {
        std::erase_if(exps, [](const auto& p) { return p.second == 0; });
    }
};

/// Laurent monomial in the diagonal operators together with a fixed eps power
/// and an optional brace. On u(m) the bare monomial scales by
/// eps^{offset + sum exps*(m + b)}; with brace_d in {1, 2} the whole bracket
/// (h - h^{-1}) / (eps^d - eps^{-d}) is taken instead.
struct DiagWord {
    std::vector<std::pair<int, int>> exps;  // (slot, exponent), slots unique
    long eps_offset = 0;                    // additive eps exponent (weights live here)
    int brace_d = 0;                        // 0 = plain power, else brace at eps^d

    void mul_slot(int slot, int e) {
        if (e == 0) return;
        for (auto& p : exps)
            if (p.first == slot) {
                p.second += e;
                return;
            }
        exps.emplace_back(slot, e);
    }
    void purge_zero() {
        std::erase_if(exps, [](const auto& p) { return p.second == 0; });
    }
};

/// One summand of a generator action: diagonal brace coefficient times index
/// shift, with a constant eps prefactor collecting the shift parameters a_ij.
/// The diagonal part is evaluated at the post-shift index.
struct GenTerm {
    DiagWord diag;
    ShiftWord shift;
    long eps_prefactor = 0;
};

enum class GenKind { E, F, T, TInv };

/// A generator action as an ordered list of terms.
struct GenOp {
    GenKind kind = GenKind::E;
    int index = 0;  // 1-based generator index
    std::vector<GenTerm> terms;
};

}  // namespace nilrep
