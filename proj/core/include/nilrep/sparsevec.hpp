#pragma once

#include <cstdint>
#include <map>

#include "nilrep/indexing.hpp"

namespace nilrep {

/// Finitely supported linear combination of basis vectors u(m), keyed by the
/// encoded index. Zero coefficients are dropped eagerly, so support and
/// equality are always canonical. Immutable in spirit: operations return new
/// vectors.
template <class F>
class SparseVec {
  public:
    using Elem = typename F::Elem;
    using Terms = std::map<std::uint64_t, Elem>;

    SparseVec() = default;

    static SparseVec unit(const F& field, std::uint64_t code) {
        SparseVec v;
        v.terms_[code] = field.one();
        return v;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    const Elem* coeff(std::uint64_t code) const {
        auto it = terms_.find(code);
        return it == terms_.end() ? nullptr : &it->second;
    }

    /// Leading (smallest encoded) index; vector must be nonzero.
    std::uint64_t leading() const { return terms_.begin()->first; }

    void add_term(const F& field, std::uint64_t code, const Elem& c) {
        if (field.is_zero(c)) return;
        auto [it, fresh] = terms_.emplace(code, c);
        if (!fresh) {
            it->second = field.add(it->second, c);
            if (field.is_zero(it->second)) terms_.erase(it);
        }
    }

    void add_scaled(const F& field, const SparseVec& other, const Elem& scale) {
        if (field.is_zero(scale)) return;
        for (const auto& [code, c] : other.terms_) add_term(field, code, field.mul(scale, c));
    }

    SparseVec plus(const F& field, const SparseVec& other) const {
        SparseVec out = *this;
        for (const auto& [code, c] : other.terms_) out.add_term(field, code, c);
        return out;
    }

    SparseVec minus(const F& field, const SparseVec& other) const {
        SparseVec out = *this;
        for (const auto& [code, c] : other.terms_) out.add_term(field, code, field.neg(c));
        return out;
    }

    SparseVec scaled(const F& field, const Elem& scale) const {
        SparseVec out;
        if (field.is_zero(scale)) return out;
        for (const auto& [code, c] : terms_) {
            Elem v = field.mul(scale, c);
            if (!field.is_zero(v)) out.terms_[code] = v;
        }
        return out;
    }

    bool equals(const F& field, const SparseVec& other) const {
        if (terms_.size() != other.terms_.size()) return false;
        auto a = terms_.begin();
        auto b = other.terms_.begin();
        for (; a != terms_.end(); ++a, ++b)
            if (a->first != b->first || !field.eq(a->second, b->second)) return false;
        return true;
    }

  private:
    Terms terms_;
};

}  // namespace nilrep
