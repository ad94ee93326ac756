#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <vector>

#include "nilrep/analysis.hpp"
#include "nilrep/generators.hpp"
#include "nilrep/weyl.hpp"

namespace nilrep {

/// Abstract generator symbol for noncommutative words.
struct Symbol {
    GenKind kind;
    int index;  // 1-based

    std::uint16_t packed() const {
        return static_cast<std::uint16_t>((static_cast<int>(kind) << 12) | index);
    }
    static Symbol unpack(std::uint16_t v) {
        return Symbol{static_cast<GenKind>(v >> 12), v & 0xfff};
    }
};

using FreeWord = std::vector<std::uint16_t>;

/// Noncommutative Laurent polynomial in the abstract generators e_i, f_i,
/// t_i^{+-1} with field coefficients. Canonical form merges identical words
/// and drops zero coefficients; no rewriting across the algebra relations is
/// performed (identities are checked by evaluation on modules).
template <class F>
class FreeElem {
  public:
    using Elem = typename F::Elem;
    std::map<FreeWord, Elem> terms;

    static FreeElem one(const F& field) {
        FreeElem x;
        x.terms[{}] = field.one();
        return x;
    }
    static FreeElem generator(const F& field, GenKind kind, int index) {
        FreeElem x;
        x.terms[{Symbol{kind, index}.packed()}] = field.one();
        return x;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(const F& field, FreeWord w, const Elem& c) {
        if (field.is_zero(c)) return;
        auto [it, fresh] = terms.emplace(std::move(w), c);
        if (!fresh) {
            it->second = field.add(it->second, c);
            if (field.is_zero(it->second)) terms.erase(it);
        }
    }

    FreeElem plus(const F& field, const FreeElem& o) const {
        FreeElem out = *this;
        for (const auto& [w, c] : o.terms) out.add_term(field, w, c);
        return out;
    }

    FreeElem scaled(const F& field, const Elem& s) const {
        FreeElem out;
        if (field.is_zero(s)) return out;
        for (const auto& [w, c] : terms) out.terms[w] = field.mul(s, c);
        return out;
    }

    FreeElem times(const F& field, const FreeElem& o) const {
        FreeElem out;
        for (const auto& [w1, c1] : terms)
            for (const auto& [w2, c2] : o.terms) {
                FreeWord w = w1;
                w.insert(w.end(), w2.begin(), w2.end());
                out.add_term(field, std::move(w), field.mul(c1, c2));
            }
        return out;
    }

    /// Text form "c1*w1 + c2*w2" with dot-separated symbols, e.g.
    /// "[1]*e1.f2.t1^-1".
    std::string to_string(const F& field) const {
        if (terms.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [w, c] : terms) {
            if (!first) out << " + ";
            first = false;
            out << field.to_string(c) << "*";
            if (w.empty()) out << "1";
            for (std::size_t k = 0; k < w.size(); ++k) {
                if (k) out << ".";
                Symbol s = Symbol::unpack(w[k]);
                switch (s.kind) {
                    case GenKind::E: out << "e" << s.index; break;
                    case GenKind::F: out << "f" << s.index; break;
                    case GenKind::T: out << "t" << s.index; break;
                    case GenKind::TInv: out << "t" << s.index << "^-1"; break;
                }
            }
        }
        return out.str();
    }
};

/// The braid automorphism images of a single generator symbol.
template <class F>
FreeElem<F> braid_image(const F& field, const CartanData& cd, int i, Symbol s) {
    using FE = FreeElem<F>;
    long di = cd.d[i - 1];
    auto gen = [&](GenKind k, int idx) { return FE::generator(field, k, idx); };
    if (s.kind == GenKind::T || s.kind == GenKind::TInv) {
        int a = cd.a[i - 1][s.index - 1];
        // T_i(t_j) = t_j t_i^{-a_ij}; inverse symbols map to the inverse word.
        bool inv = (s.kind == GenKind::TInv);
        FE out = FE::one(field);
        out = out.times(field, gen(inv ? GenKind::TInv : GenKind::T, s.index));
        GenKind ik = (a >= 0) == inv ? GenKind::T : GenKind::TInv;
        for (int k = 0; k < std::abs(a); ++k) out = out.times(field, gen(ik, i));
        return out;
    }
    if (s.index == i) {
        if (s.kind == GenKind::E) {  // -f_i t_i
            FE out = gen(GenKind::F, i).times(field, gen(GenKind::T, i));
            return out.scaled(field, field.neg(field.one()));
        }
        FE out = gen(GenKind::TInv, i).times(field, gen(GenKind::E, i));  // -t_i^{-1} e_i
        return out.scaled(field, field.neg(field.one()));
    }
    int a = cd.a[i - 1][s.index - 1];
    int r = -a;  // 0, 1 or 2 for the classical families
    FE acc;
    for (int k = 0; k <= r; ++k) {
        // e-case: (-1)^{k-a} q_i^{-k} e_i^{(r-k)} e_j e_i^{(k)}
        // f-case: (-1)^{k-a} q_i^{+k} f_i^{(k)} f_j f_i^{(r-k)}
        bool ecase = (s.kind == GenKind::E);
        FE word = FE::one(field);
        int left = ecase ? r - k : k;
        int right = ecase ? k : r - k;
        GenKind ik = ecase ? GenKind::E : GenKind::F;
        for (int c = 0; c < left; ++c) word = word.times(field, gen(ik, i));
        word = word.times(field, gen(s.kind, s.index));
        for (int c = 0; c < right; ++c) word = word.times(field, gen(ik, i));
        auto coeff = field.mul(field.inv(field.quantum_factorial(left, di)),
                               field.inv(field.quantum_factorial(right, di)));
        coeff = field.mul(coeff, field.eps_pow(ecase ? -di * k : di * k));
        if ((k - a) % 2 != 0) coeff = field.neg(coeff);
        acc = acc.plus(field, word.scaled(field, coeff));
    }
    return acc;
}

/// Homomorphic extension of T_i to an arbitrary element.
template <class F>
FreeElem<F> braid_T(const F& field, const CartanData& cd, int i, const FreeElem<F>& x) {
    FreeElem<F> out;
    for (const auto& [w, c] : x.terms) {
        FreeElem<F> prod = FreeElem<F>::one(field);
        for (std::uint16_t sym : w)
            prod = prod.times(field, braid_image(field, cd, i, Symbol::unpack(sym)));
        out = out.plus(field, prod.scaled(field, c));
    }
    return out;
}

template <class F>
struct RootVectors {
    std::vector<FreeElem<F>> e;            // e_{beta_k}
    std::vector<FreeElem<F>> f;            // f_{beta_k}
    std::vector<std::vector<int>> roots;   // beta_k in simple-root coordinates
};

/// Root vectors along a reduced word for the longest element, built by
/// memoizing the generator images along the word prefix.
template <class F>
RootVectors<F> root_vectors(const F& field, const CartanData& cd, const ReducedWord& word) {
    if (!is_reduced(cd.type, cd.rank, word))
        throw StructuralError("root vectors need a reduced word");
    if (static_cast<int>(word.size()) != cd.positive_roots())
        throw StructuralError("root vectors need a reduced word for the longest element");
    using FE = FreeElem<F>;
    // images[g] = (T_{i_1} ... T_{i_k})(g) for the current prefix
    std::map<std::uint16_t, FE> images;
    auto image_of = [&](Symbol s) {
        auto it = images.find(s.packed());
        if (it != images.end()) return it->second;
        return FE::generator(field, s.kind, s.index);
    };
    RootVectors<F> rv;
    rv.roots = roots_of_word(cd, word);
    for (std::size_t k = 0; k < word.size(); ++k) {
        rv.e.push_back(image_of(Symbol{GenKind::E, word[k]}));
        rv.f.push_back(image_of(Symbol{GenKind::F, word[k]}));
        if (k + 1 == word.size()) break;
        // extend the prefix by T_{i_{k+1}}
        std::map<std::uint16_t, FE> next;
        for (int j = 1; j <= cd.rank; ++j) {
            for (GenKind kind : {GenKind::E, GenKind::F, GenKind::T, GenKind::TInv}) {
                Symbol s{kind, j};
                FE img = braid_image(field, cd, word[k], s);
                // apply the previous prefix homomorphically
                FE acc;
                for (const auto& [w, c] : img.terms) {
                    FE prod = FE::one(field);
                    for (std::uint16_t sym : w)
                        prod = prod.times(field, image_of(Symbol::unpack(sym)));
                    acc = acc.plus(field, prod.scaled(field, c));
                }
                next[s.packed()] = std::move(acc);
            }
        }
        images = std::move(next);
    }
    return rv;
}

/// Evaluate a free element as an operator on a module vector; words act right
/// to left through the generator operators.
template <class F>
SparseVec<F> evaluate(const F& field, const ModuleOps& ops, const FreeElem<F>& x,
                      const SparseVec<F>& v) {
    SparseVec<F> out;
    for (const auto& [w, c] : x.terms) {
        SparseVec<F> cur = v;
        for (std::size_t k = w.size(); k-- > 0;) {
            Symbol s = Symbol::unpack(w[k]);
            cur = act(field, ops, s.kind, s.index, cur);
            if (cur.is_zero()) break;
        }
        out.add_scaled(field, cur, c);
    }
    return out;
}

/// Operator compiled on the basis: column-per-basis-vector application, used
/// for repeated evaluation of large free elements.
template <class F>
class CompiledOp {
  public:
    CompiledOp(const F& field, const ModuleOps& ops, const FreeElem<F>& x) {
        dim_ = ops.shape.dimension();
        cols_.resize(dim_);
        for (std::uint64_t c = 0; c < dim_; ++c)
            cols_[c] = evaluate(field, ops, x, SparseVec<F>::unit(field, c));
    }

    SparseVec<F> apply(const F& field, const SparseVec<F>& v) const {
        SparseVec<F> out;
        for (const auto& [code, c] : v.terms()) out.add_scaled(field, cols_[code], c);
        return out;
    }

    bool equals(const F& field, const CompiledOp& o) const {
        if (dim_ != o.dim_) return false;
        for (std::uint64_t c = 0; c < dim_; ++c)
            if (!cols_[c].equals(field, o.cols_[c])) return false;
        return true;
    }

  private:
    std::uint64_t dim_ = 0;
    std::vector<SparseVec<F>> cols_;
};

}  // namespace nilrep
