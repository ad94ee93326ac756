#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>

#include "nilrep/generators.hpp"
#include "nilrep/weyl.hpp"

namespace nilrep {

/// Eps-exponent vector (w_1,...,w_n) mod l with t_i u = eps^{w_i} u.
using WeightVector = std::vector<long>;

/// Weight bookkeeping for one module: the diagonal exponent forms of the t_i
/// and the per-generator block translations.
struct WeightTable {
    std::vector<DiagForm> t_form;            // one per index
    std::vector<std::vector<long>> e_shift;  // weight translation of e_i, mod l
    long l = 0;

    WeightVector weight_of(const IndexShape& shape, std::uint64_t code) const {
        WeightVector w(t_form.size());
        for (std::size_t i = 0; i < t_form.size(); ++i)
            w[i] = mod_floor(t_form[i].exponent(shape, code), l);
        return w;
    }
};

inline WeightTable weight_table(const ModuleOps& ops) {
    WeightTable wt;
    wt.l = ops.shape.root_order();
    for (const GenOp& t : ops.t) wt.t_form.push_back(diag_form(ops.shape, t, ops.spec.b_exp));
    CartanData cd = cartan(ops.spec.type, ops.spec.rank);
    wt.e_shift.resize(static_cast<std::size_t>(cd.rank));
    for (int i = 0; i < cd.rank; ++i) {
        std::vector<long> s(static_cast<std::size_t>(cd.rank));
        for (int j = 0; j < cd.rank; ++j)
            s[static_cast<std::size_t>(j)] = mod_floor(cd.d[j] * cd.a[j][i], wt.l);
        wt.e_shift[static_cast<std::size_t>(i)] = std::move(s);
    }
    return wt;
}

// ---------------------------------------------------------------------------
// Defining relations
// ---------------------------------------------------------------------------

/// Checks every defining relation on the single basis vector u(code); returns
/// the name of the first failing relation, if any.
template <class F>
std::optional<std::string> relations_on_basis(const F& field, const ModuleOps& ops,
                                              const CartanData& cd, std::uint64_t code) {
    using Vec = SparseVec<F>;
    const int n = cd.rank;
    Vec u = Vec::unit(field, code);

    auto gen = [&](GenKind k, int idx, const Vec& v) { return act(field, ops, k, idx, v); };

    for (int i = 1; i <= n; ++i) {
        if (!gen(GenKind::T, i, gen(GenKind::TInv, i, u)).equals(field, u))
            return "t" + std::to_string(i) + " t" + std::to_string(i) + "^-1 = 1";
        for (int j = i + 1; j <= n; ++j)
            if (!gen(GenKind::T, i, gen(GenKind::T, j, u))
                     .equals(field, gen(GenKind::T, j, gen(GenKind::T, i, u))))
                return "t" + std::to_string(i) + " t" + std::to_string(j) + " commute";
    }

    for (int i = 1; i <= n; ++i) {
        long di = cd.d[i - 1];
        for (int j = 1; j <= n; ++j) {
            long aij = cd.a[i - 1][j - 1];
            Vec lhs_e = gen(GenKind::T, i, gen(GenKind::E, j, gen(GenKind::TInv, i, u)));
            Vec rhs_e = gen(GenKind::E, j, u).scaled(field, field.eps_pow(di * aij));
            if (!lhs_e.equals(field, rhs_e))
                return "t" + std::to_string(i) + " e" + std::to_string(j) + " t^-1";
            Vec lhs_f = gen(GenKind::T, i, gen(GenKind::F, j, gen(GenKind::TInv, i, u)));
            Vec rhs_f = gen(GenKind::F, j, u).scaled(field, field.eps_pow(-di * aij));
            if (!lhs_f.equals(field, rhs_f))
                return "t" + std::to_string(i) + " f" + std::to_string(j) + " t^-1";
        }
    }

    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            Vec lhs = gen(GenKind::E, i, gen(GenKind::F, j, u))
                          .minus(field, gen(GenKind::F, j, gen(GenKind::E, i, u)));
            if (i == j) {
                long di = cd.d[i - 1];
                auto denom = field.sub(field.eps_pow(di), field.eps_pow(-di));
                Vec rhs = gen(GenKind::T, i, u).minus(field, gen(GenKind::TInv, i, u));
                rhs = rhs.scaled(field, field.inv(denom));
                if (!lhs.equals(field, rhs))
                    return "e" + std::to_string(i) + " f" + std::to_string(i) + " commutator";
            } else if (!lhs.is_zero()) {
                return "e" + std::to_string(i) + " f" + std::to_string(j) + " commute";
            }
        }
    }

    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j || cd.a[i - 1][j - 1] == 0) {
                if (i != j) {
                    // Serre at a_ij = 0 degenerates to plain commutation.
                    Vec se = gen(GenKind::E, i, gen(GenKind::E, j, u))
                                 .minus(field, gen(GenKind::E, j, gen(GenKind::E, i, u)));
                    if (!se.is_zero())
                        return "serre e" + std::to_string(i) + "," + std::to_string(j);
                    Vec sf = gen(GenKind::F, i, gen(GenKind::F, j, u))
                                 .minus(field, gen(GenKind::F, j, gen(GenKind::F, i, u)));
                    if (!sf.is_zero())
                        return "serre f" + std::to_string(i) + "," + std::to_string(j);
                }
                continue;
            }
            long r = 1 - cd.a[i - 1][j - 1];
            long di = cd.d[i - 1];
            for (GenKind kind : {GenKind::E, GenKind::F}) {
                Vec acc;
                for (long k = 0; k <= r; ++k) {
                    Vec v = u;
                    for (long s = 0; s < r - k; ++s) v = gen(kind, i, v);
                    v = gen(kind, j, v);
                    for (long s = 0; s < k; ++s) v = gen(kind, i, v);
                    auto coeff = field.mul(field.inv(field.quantum_factorial(k, di)),
                                           field.inv(field.quantum_factorial(r - k, di)));
                    if (k % 2 == 1) coeff = field.neg(coeff);
                    acc.add_scaled(field, v, coeff);
                }
                if (!acc.is_zero())
                    return std::string("serre ") + (kind == GenKind::E ? "e" : "f") +
                           std::to_string(i) + "," + std::to_string(j);
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Echelon bases and spans
// ---------------------------------------------------------------------------

/// Reduced row-echelon basis over the coefficient field, pivots keyed by
/// encoded index (smallest index of each row). Fully reduced, pivot
/// coefficient one, so a subspace has exactly one representation.
template <class F>
class EchelonBasis {
  public:
    explicit EchelonBasis(const F& field) : field_(&field) {}

    std::size_t dim() const { return rows_.size(); }

    SparseVec<F> reduce(SparseVec<F> v) const {
        while (!v.is_zero()) {
            bool hit = false;
            for (const auto& [code, c] : v.terms()) {
                auto it = pivot_.find(code);
                if (it == pivot_.end()) continue;
                v.add_scaled(*field_, rows_[it->second], field_->neg(c));
                hit = true;
                break;
            }
            if (!hit) break;
        }
        return v;
    }

    /// Inserts the vector if independent; returns whether the rank grew.
    bool insert(SparseVec<F> v, std::string provenance = {}) {
        v = reduce(std::move(v));
        if (v.is_zero()) return false;
        std::uint64_t p = v.leading();
        v = v.scaled(*field_, field_->inv(*v.coeff(p)));
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const auto* c = rows_[r].coeff(p);
            if (c) rows_[r].add_scaled(*field_, v, field_->neg(*c));
        }
        pivot_[p] = rows_.size();
        rows_.push_back(std::move(v));
        prov_.push_back(std::move(provenance));
        return true;
    }

    /// Row positions sorted by pivot index (canonical order).
    std::vector<std::size_t> order() const {
        std::vector<std::size_t> idx;
        idx.reserve(rows_.size());
        for (const auto& [p, r] : pivot_) idx.push_back(r);
        return idx;
    }

    const std::vector<SparseVec<F>>& rows() const { return rows_; }
    const std::vector<std::string>& provenance() const { return prov_; }
    const std::map<std::uint64_t, std::size_t>& pivots() const { return pivot_; }

    bool same_span(const EchelonBasis& other) const {
        if (dim() != other.dim()) return false;
        auto a = order();
        auto b = other.order();
        for (std::size_t k = 0; k < a.size(); ++k)
            if (!rows_[a[k]].equals(*field_, other.rows_[b[k]])) return false;
        return true;
    }

  private:
    const F* field_;
    std::map<std::uint64_t, std::size_t> pivot_;
    std::vector<SparseVec<F>> rows_;
    std::vector<std::string> prov_;
};

template <class F>
struct SubmoduleBasis {
    EchelonBasis<F> basis;
    bool complete = false;       // closed under every generator
    bool extended = false;       // closure needed raising steps beyond the f sweep
    std::size_t dim() const { return basis.dim(); }
};

/// Splits a vector into its weight components (joint eigenspace parts).
template <class F>
std::vector<SparseVec<F>> weight_components(const F& field, const ModuleOps& ops,
                                            const WeightTable& wt, const SparseVec<F>& v) {
    std::map<WeightVector, SparseVec<F>> parts;
    for (const auto& [code, c] : v.terms())
        parts[wt.weight_of(ops.shape, code)].add_term(field, code, c);
    std::vector<SparseVec<F>> out;
    out.reserve(parts.size());
    for (auto& [w, p] : parts) out.push_back(std::move(p));
    return out;
}

/// Breadth-first closure of a seed under the lowering operators, with
/// incremental row reduction, then a closure check under the raising and
/// diagonal operators (extending the sweep if anything escapes). Non-weight
/// seeds are split into weight components first; the submodule generated by a
/// vector contains each of its weight parts.
template <class F>
SubmoduleBasis<F> submodule_span(const F& field, const ModuleOps& ops, const SparseVec<F>& seed,
                                 std::vector<int> gen_order = {}) {
    if (seed.is_zero()) throw StructuralError("submodule span needs a nonzero seed");
    const int n = ops.spec.rank;
    if (gen_order.empty())
        for (int i = 1; i <= n; ++i) gen_order.push_back(i);

    WeightTable wt = weight_table(ops);
    SubmoduleBasis<F> out{EchelonBasis<F>(field)};
    std::deque<std::pair<SparseVec<F>, std::string>> queue;
    for (auto& part : weight_components(field, ops, wt, seed))
        if (out.basis.insert(part, "seed")) queue.emplace_back(std::move(part), "seed");

    auto sweep = [&](bool with_raising) {
        while (!queue.empty()) {
            auto [v, prov] = std::move(queue.front());
            queue.pop_front();
            for (int i : gen_order) {
                SparseVec<F> w = act(field, ops, GenKind::F, i, v);
                std::string p = prov + ".f" + std::to_string(i);
                if (out.basis.insert(w, p)) queue.emplace_back(std::move(w), std::move(p));
            }
            if (with_raising) {
                for (int i : gen_order) {
                    SparseVec<F> w = act(field, ops, GenKind::E, i, v);
                    std::string p = prov + ".e" + std::to_string(i);
                    if (out.basis.insert(w, p)) queue.emplace_back(std::move(w), std::move(p));
                }
            }
        }
    };
    sweep(false);

    // Closure check; a highest-weight seed never escapes, but arbitrary seeds
    // may need raising steps too.
    bool escaped = false;
    do {
        escaped = false;
        std::vector<SparseVec<F>> snapshot = out.basis.rows();
        for (const auto& row : snapshot) {
            for (int i : gen_order) {
                for (GenKind k : {GenKind::E, GenKind::T, GenKind::TInv}) {
                    SparseVec<F> w = act(field, ops, k, i, row);
                    if (out.basis.insert(w, "closure")) {
                        queue.emplace_back(std::move(w), "closure");
                        escaped = true;
                        out.extended = true;
                    }
                }
            }
        }
        if (escaped) sweep(true);
    } while (escaped);

    out.complete = true;
    return out;
}

// ---------------------------------------------------------------------------
// Kernels
// ---------------------------------------------------------------------------

/// Nullspace of a sparse constraint system: rows map unknown -> coefficient,
/// unknowns are 0..count-1. Returns a canonical basis of solution vectors.
template <class F>
std::vector<std::vector<typename F::Elem>> sparse_nullspace(
    const F& field, std::vector<std::map<std::size_t, typename F::Elem>> rows,
    std::size_t count) {
    using Elem = typename F::Elem;
    std::map<std::size_t, std::map<std::size_t, Elem>> pivot_rows;  // unknown -> reduced row
    for (auto& row : rows) {
        // reduce against existing pivots
        while (!row.empty()) {
            auto lead = row.begin();
            auto it = pivot_rows.find(lead->first);
            if (it == pivot_rows.end()) break;
            Elem c = lead->second;
            for (const auto& [u, rc] : it->second) {
                auto [slot, fresh] = row.emplace(u, field.zero());
                slot->second = field.sub(slot->second, field.mul(c, rc));
                if (field.is_zero(slot->second)) row.erase(slot);
            }
        }
        if (row.empty()) continue;
        auto lead = row.begin();
        Elem inv = field.inv(lead->second);
        std::map<std::size_t, Elem> norm;
        for (const auto& [u, c] : row) {
            Elem v = field.mul(inv, c);
            if (!field.is_zero(v)) norm[u] = v;
        }
        std::size_t p = norm.begin()->first;
        // full reduction of earlier pivot rows
        for (auto& [q, prow] : pivot_rows) {
            auto hit = prow.find(p);
            if (hit == prow.end()) continue;
            Elem c = hit->second;
            for (const auto& [u, rc] : norm) {
                auto [slot, fresh] = prow.emplace(u, field.zero());
                slot->second = field.sub(slot->second, field.mul(c, rc));
                if (field.is_zero(slot->second)) prow.erase(slot);
            }
        }
        pivot_rows[p] = std::move(norm);
    }
    std::vector<std::vector<Elem>> kernel;
    for (std::size_t u = 0; u < count; ++u) {
        if (pivot_rows.count(u)) continue;
        std::vector<Elem> vec(count, field.zero());
        vec[u] = field.one();
        for (const auto& [p, prow] : pivot_rows) {
            auto hit = prow.find(u);
            if (hit != prow.end()) vec[p] = field.neg(hit->second);
        }
        kernel.push_back(std::move(vec));
    }
    return kernel;
}

inline constexpr std::uint64_t kExhaustiveKernelBound = 10000;

/// Joint kernel of the raising operators over the whole space, computed block
/// by weight block (each e_i maps a block into a single other block). Refuses
/// spaces above the bound; use the within-submodule scope there.
template <class F>
EchelonBasis<F> primitive_space_exhaustive(const F& field, const ModuleOps& ops,
                                           std::uint64_t bound = kExhaustiveKernelBound) {
    if (ops.shape.dimension() > bound)
        throw DomainError("exhaustive kernel over " + std::to_string(ops.shape.dimension()) +
                          " basis vectors exceeds the bound " + std::to_string(bound) +
                          "; span the submodule first and use the within-submodule scope");
    WeightTable wt = weight_table(ops);
    std::map<WeightVector, std::vector<std::uint64_t>> blocks;
    for (std::uint64_t code = 0; code < ops.shape.dimension(); ++code)
        blocks[wt.weight_of(ops.shape, code)].push_back(code);

    EchelonBasis<F> kernel(field);
    for (const auto& [w, members] : blocks) {
        std::map<std::uint64_t, std::map<std::size_t, typename F::Elem>> constraints;
        for (std::size_t k = 0; k < members.size(); ++k) {
            SparseVec<F> u = SparseVec<F>::unit(field, members[k]);
            for (int i = 1; i <= ops.spec.rank; ++i) {
                SparseVec<F> img = act(field, ops, GenKind::E, i, u);
                for (const auto& [code, c] : img.terms())
                    constraints[code * static_cast<std::uint64_t>(ops.spec.rank + 1) +
                                static_cast<std::uint64_t>(i)][k] = c;
            }
        }
        std::vector<std::map<std::size_t, typename F::Elem>> rows;
        rows.reserve(constraints.size());
        for (auto& [key, row] : constraints) rows.push_back(std::move(row));
        for (const auto& sol : sparse_nullspace(field, std::move(rows), members.size())) {
            SparseVec<F> v;
            for (std::size_t k = 0; k < members.size(); ++k)
                v.add_term(field, members[k], sol[k]);
            kernel.insert(std::move(v), "kernel");
        }
    }
    return kernel;
}

/// Joint kernel of the raising operators restricted to the span of a basis.
template <class F>
EchelonBasis<F> primitive_space_within(const F& field, const ModuleOps& ops,
                                       const EchelonBasis<F>& span) {
    std::vector<std::size_t> rows_in_order = span.order();
    std::size_t k_count = rows_in_order.size();
    std::map<std::uint64_t, std::map<std::size_t, typename F::Elem>> constraints;
    for (std::size_t k = 0; k < k_count; ++k) {
        const SparseVec<F>& b = span.rows()[rows_in_order[k]];
        for (int i = 1; i <= ops.spec.rank; ++i) {
            SparseVec<F> img = act(field, ops, GenKind::E, i, b);
            for (const auto& [code, c] : img.terms())
                constraints[code * static_cast<std::uint64_t>(ops.spec.rank + 1) +
                            static_cast<std::uint64_t>(i)][k] = c;
        }
    }
    std::vector<std::map<std::size_t, typename F::Elem>> rows;
    rows.reserve(constraints.size());
    for (auto& [key, row] : constraints) rows.push_back(std::move(row));
    EchelonBasis<F> kernel(field);
    for (const auto& sol : sparse_nullspace(field, std::move(rows), k_count)) {
        SparseVec<F> v;
        for (std::size_t k = 0; k < k_count; ++k)
            v.add_scaled(field, span.rows()[rows_in_order[k]], sol[k]);
        kernel.insert(std::move(v), "kernel");
    }
    return kernel;
}

}  // namespace nilrep
