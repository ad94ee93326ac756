#include "nilrep/generators.hpp"

namespace nilrep {

namespace {

// Transcription helper for one module: slot lookup plus word assembly with
// range checking. All generator words are built here once per module.
struct Builder {
    const IndexShape& shape;
    const ModuleSpec& spec;
    int n;

    Builder(const IndexShape& s, const ModuleSpec& sp) : shape(s), spec(sp), n(sp.rank) {}

    long lam(int j) const { return spec.lambda_shifted[static_cast<std::size_t>(j - 1)]; }

    int slot(int i, int j) const {
        int s = shape.slot_of(i, j);
        if (s < 0)
            throw InternalError("generator word references out-of-range position (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
        return s;
    }

    void z(DiagWord& w, int i, int j, int e) const { w.mul_slot(slot(i, j), e); }
    void x(ShiftWord& w, int i, int j, int e) const { w.mul_slot(slot(i, j), e); }

    void zmerge(DiagWord& into, const DiagWord& other) const {
        for (const auto& [s, e] : other.exps) into.mul_slot(s, e);
        into.eps_offset += other.eps_offset;
    }

    GenTerm term(DiagWord diag, int brace_d, ShiftWord shift) const {
        diag.purge_zero();
        shift.purge_zero();
        diag.brace_d = brace_d;
        GenTerm t;
        t.eps_prefactor = 0;
        for (const auto& [s, e] : shift.exps)
            t.eps_prefactor += spec.a_exp[static_cast<std::size_t>(s)] * e;
        t.diag = std::move(diag);
        t.shift = std::move(shift);
        return t;
    }

    // Multiply an outer shift-only factor onto a finished term. The diagonal
    // part stays evaluated at the final index, which is only sound when the
    // extra shifts avoid every slot the diagonal reads; the construction
    // words satisfy that and we assert it.
    void extend_shift(GenTerm& t, const ShiftWord& extra) const {
        for (const auto& [s, e] : extra.exps) {
            for (const auto& [ds, de] : t.diag.exps)
                if (ds == s && de != 0 && e != 0)
                    throw InternalError("outer shift collides with a diagonal slot");
            t.shift.mul_slot(s, e);
            t.eps_prefactor += spec.a_exp[static_cast<std::size_t>(s)] * e;
        }
        t.shift.purge_zero();
    }

    GenOp make_t_pair(int j, const DiagWord& t1j, bool inverse) const {
        GenOp op;
        op.kind = inverse ? GenKind::TInv : GenKind::T;
        op.index = j;
        DiagWord w = t1j;
        if (!inverse) {  // t_j is the inverse of the accumulated word
            for (auto& p : w.exps) p.second = -p.second;
            w.eps_offset = -w.eps_offset;
        }
        w.purge_zero();
        w.brace_d = 0;
        GenTerm t;
        t.diag = std::move(w);
        op.terms.push_back(std::move(t));
        return op;
    }
};

// ---------------------------------------------------------------------------
// sp(2n): full n x n grid, d = (1,...,1,2)
// ---------------------------------------------------------------------------

struct SpWords : Builder {
    using Builder::Builder;

    ShiftWord D(int i, int j) const {
        ShiftWord w;
        if (i < 1 || i >= j) return w;  // out of range: identity
        if (j <= n - 1) {
            x(w, i, j - 1, -1);
            x(w, i, j, +1);
            x(w, j + 1, i, -1);
            x(w, j, i, +1);
        } else {
            x(w, i, n - 1, -2);
            x(w, n, i, +2);
        }
        return w;
    }

    DiagWord A(int i, int j) const {
        DiagWord w;
        if (j <= n - 2) {
            z(w, i, j - 1, -1); z(w, i, j, +2); z(w, i, j + 1, -1);
            z(w, j + 2, i, -1); z(w, j + 1, i, +2); z(w, j, i, -1);
        } else if (j == n - 1) {
            z(w, i, n - 2, -1); z(w, i, n - 1, +2); z(w, i, n, -2);
            z(w, n, i, +2); z(w, n - 1, i, -1);
        } else {
            z(w, i, n - 1, -2); z(w, i, n, +4); z(w, n, i, -2);
        }
        return w;
    }

    DiagWord Tdiag(int j) const {
        DiagWord w;
        if (j <= n - 2) {
            z(w, j, j, +2); z(w, j, j + 1, -1); z(w, j + 2, j, -1);
            z(w, j + 1, j, +2); z(w, j + 1, j + 1, -1); z(w, j + 2, j + 1, -1);
        } else if (j == n - 1) {
            z(w, n - 1, n - 1, +2); z(w, n - 1, n, -2); z(w, n, n - 1, +2); z(w, n, n, -2);
        } else {
            z(w, n, n, +4);
        }
        w.eps_offset = lam(j);
        return w;
    }

    DiagWord T(int i, int j) const {  // T_{i,j}, i <= j
        DiagWord w = Tdiag(j);
        for (int k = i; k <= j - 1; ++k) zmerge(w, A(k, j));
        return w;
    }

    GenTerm F(int j) const {
        DiagWord dw;
        ShiftWord sw;
        int d;
        if (j <= n - 1) {
            z(dw, j, j, -1);
            d = 1;
        } else {
            z(dw, n, n, -2);
            d = 2;
        }
        x(sw, j, j, +1);
        return term(std::move(dw), d, std::move(sw));
    }

    std::vector<GenTerm> C(int i, int j) const {
        std::vector<GenTerm> out;
        if (j <= n - 1) {
            DiagWord d1; ShiftWord s1;
            z(d1, i, j, -1); z(d1, i, j - 1, +1);
            x(s1, i, j, +1);
            out.push_back(term(std::move(d1), 1, std::move(s1)));

            DiagWord d2; ShiftWord s2;
            z(d2, j, i, -1); z(d2, j + 1, i, +1);
            x(s2, i, j, +1); x(s2, j, i, +1); x(s2, i, j - 1, -1);
            out.push_back(term(std::move(d2), 1, std::move(s2)));
        } else {
            // Long-root column. The printed display pairs the three braces
            // with the wrong monomials and drops the inverse powers of
            // x_{i,n-1}; the pairing below is the unique one that satisfies
            // the defining relations (and it reproduces the explicit action
            // catalog up to one misprinted coefficient there).
            DiagWord d1; ShiftWord s1;
            z(d1, i, n - 1, +2); z(d1, i, n, -2);
            x(s1, i, n, +1);
            out.push_back(term(std::move(d1), 2, std::move(s1)));

            DiagWord d2; ShiftWord s2;
            z(d2, i, n - 1, +1); z(d2, n, i, -1);
            x(s2, i, n - 1, -1); x(s2, i, n, +1); x(s2, n, i, +1);
            out.push_back(term(std::move(d2), 1, std::move(s2)));

            DiagWord d3; ShiftWord s3;
            z(d3, i, n, +2); z(d3, n, i, -2);
            x(s3, i, n - 1, -2); x(s3, i, n, +1); x(s3, n, i, +2);
            out.push_back(term(std::move(d3), 2, std::move(s3)));
        }
        return out;
    }

    std::vector<GenTerm> B(int i, int j) const {
        std::vector<GenTerm> out;
        if (j <= n - 2) {
            DiagWord d1;
            z(d1, i, j + 1, -1); z(d1, j + 2, i, -1); z(d1, j + 1, i, +2);
            z(d1, j, i, -1); z(d1, i, j, +1);
            zmerge(d1, T(i + 1, j));
            ShiftWord s1;
            x(s1, i, j, -1);
            out.push_back(term(std::move(d1), 1, std::move(s1)));

            DiagWord d2;
            z(d2, j, i, -1); z(d2, j + 1, i, +1);
            zmerge(d2, T(i + 1, j));
            ShiftWord s2;
            x(s2, j + 1, i, -1);
            out.push_back(term(std::move(d2), 1, std::move(s2)));
        } else if (j == n - 1) {
            DiagWord d1;
            z(d1, i, n, -2); z(d1, i, n - 1, +1); z(d1, n, i, +2); z(d1, n - 1, i, -1);
            zmerge(d1, T(i + 1, n - 1));
            ShiftWord s1;
            x(s1, i, n - 1, -1);
            out.push_back(term(std::move(d1), 1, std::move(s1)));

            DiagWord d2;
            z(d2, n - 1, i, -1); z(d2, n, i, +1);
            zmerge(d2, T(i + 1, n - 1));
            ShiftWord s2;
            x(s2, n, i, -1);
            out.push_back(term(std::move(d2), 1, std::move(s2)));
        } else {
            DiagWord d1;
            z(d1, i, n, +2); z(d1, n, i, -2);
            zmerge(d1, T(i + 1, n));
            ShiftWord s1;
            x(s1, i, n, -1);
            out.push_back(term(std::move(d1), 2, std::move(s1)));
        }
        return out;
    }

    std::vector<GenTerm> E(int j) const {
        std::vector<GenTerm> out;
        if (j <= n - 2) {
            DiagWord d1;
            z(d1, j, j, +1); z(d1, j, j + 1, -1); z(d1, j + 2, j, -1);
            z(d1, j + 1, j, +2); z(d1, j + 1, j + 1, -1); z(d1, j + 2, j + 1, -1);
            d1.eps_offset = lam(j);
            ShiftWord s1;
            x(s1, j, j, -1);
            out.push_back(term(std::move(d1), 1, std::move(s1)));

            DiagWord d2;
            z(d2, j + 1, j, +1); z(d2, j + 1, j + 1, -1); z(d2, j + 2, j + 1, -1);
            d2.eps_offset = lam(j);
            ShiftWord s2;
            x(s2, j + 1, j, -1);
            out.push_back(term(std::move(d2), 1, std::move(s2)));
        } else if (j == n - 1) {
            DiagWord d1;
            z(d1, n - 1, n - 1, +1); z(d1, n - 1, n, -2); z(d1, n, n - 1, +2); z(d1, n, n, -2);
            d1.eps_offset = lam(n - 1);
            ShiftWord s1;
            x(s1, n - 1, n - 1, -1);
            out.push_back(term(std::move(d1), 1, std::move(s1)));

            DiagWord d2;
            z(d2, n, n - 1, +1); z(d2, n, n, -2);
            d2.eps_offset = lam(n - 1);
            ShiftWord s2;
            x(s2, n, n - 1, -1);
            out.push_back(term(std::move(d2), 1, std::move(s2)));
        } else {
            DiagWord d1;
            z(d1, n, n, +2);
            d1.eps_offset = lam(n);
            ShiftWord s1;
            x(s1, n, n, -1);
            out.push_back(term(std::move(d1), 2, std::move(s1)));
        }
        return out;
    }

    GenOp build_e(int j) const {
        GenOp op;
        op.kind = GenKind::E;
        op.index = j;
        if (j == 1) {
            op.terms.push_back(F(1));
            return op;
        }
        ShiftWord dprod;
        for (int k = 1; k <= j - 1; ++k)
            for (const auto& [s, e] : D(k, j).exps) dprod.mul_slot(s, e);
        GenTerm lead = F(j);
        extend_shift(lead, dprod);
        op.terms.push_back(std::move(lead));
        for (int q = 1; q <= j - 1; ++q) {
            ShiftWord pre;
            for (int p = 1; p <= q - 1; ++p)
                for (const auto& [s, e] : D(p, j).exps) pre.mul_slot(s, e);
            for (GenTerm t : C(q, j)) {
                extend_shift(t, pre);
                op.terms.push_back(std::move(t));
            }
        }
        return op;
    }

    GenOp build_f(int j) const {
        GenOp op;
        op.kind = GenKind::F;
        op.index = j;
        for (GenTerm t : E(j)) op.terms.push_back(std::move(t));
        for (int i = 1; i <= j - 1; ++i)
            for (GenTerm t : B(i, j)) op.terms.push_back(std::move(t));
        return op;
    }
};

// ---------------------------------------------------------------------------
// so(2n+1): full n x n grid, d = (2,...,2,1)
// ---------------------------------------------------------------------------

struct SoOddWords : Builder {
    using Builder::Builder;

    ShiftWord D(int i, int j) const {
        ShiftWord w;
        if (i < 1 || i >= j) return w;
        if (j <= n - 1) {
            x(w, i, j - 1, -1);
            x(w, i, j, +1);
            x(w, j + 1, i, -1);
            x(w, j, i, +1);
        } else {
            x(w, i, n - 1, -1);
            x(w, n, i, +1);
        }
        return w;
    }

    DiagWord A(int i, int j) const {
        DiagWord w;
        if (j <= n - 2) {
            z(w, i, j - 1, -2); z(w, i, j, +4); z(w, i, j + 1, -2);
            z(w, j + 2, i, -2); z(w, j + 1, i, +4); z(w, j, i, -2);
        } else if (j == n - 1) {
            z(w, i, n - 2, -2); z(w, i, n - 1, +4); z(w, i, n, -2);
            z(w, n, i, +4); z(w, n - 1, i, -2);
        } else {
            z(w, i, n - 1, -2); z(w, i, n, +2); z(w, n, i, -2);
        }
        return w;
    }

    DiagWord Tdiag(int j) const {
        DiagWord w;
        if (j <= n - 2) {
            z(w, j, j, +4); z(w, j, j + 1, -2); z(w, j + 2, j, -2);
            z(w, j + 1, j, +4); z(w, j + 1, j + 1, -2); z(w, j + 2, j + 1, -2);
        } else if (j == n - 1) {
            z(w, n - 1, n - 1, +4); z(w, n - 1, n, -2); z(w, n, n - 1, +4); z(w, n, n, -2);
        } else {
            z(w, n, n, +2);
        }
        w.eps_offset = lam(j);
        return w;
    }

    DiagWord T(int i, int j) const {
        DiagWord w = Tdiag(j);
        for (int k = i; k <= j - 1; ++k) zmerge(w, A(k, j));
        return w;
    }

    GenTerm F(int j) const {
        DiagWord dw;
        ShiftWord sw;
        int d;
        if (j <= n - 1) {
            z(dw, j, j, -2);
            d = 2;
        } else {
            z(dw, n, n, -1);
            d = 1;
        }
        x(sw, j, j, +1);
        return term(std::move(dw), d, std::move(sw));
    }

    std::vector<GenTerm> C(int i, int j) const {
        std::vector<GenTerm> out;
        if (j <= n - 1) {
            DiagWord d1; ShiftWord s1;
            z(d1, i, j - 1, +2); z(d1, i, j, -2);
            x(s1, i, j, +1);
            out.push_back(term(std::move(d1), 2, std::move(s1)));

            DiagWord d2; ShiftWord s2;
            z(d2, j + 1, i, +2); z(d2, j, i, -2);
            x(s2, i, j - 1, -1); x(s2, i, j, +1); x(s2, j, i, +1);
            out.push_back(term(std::move(d2), 2, std::move(s2)));
        } else {
            DiagWord d1; ShiftWord s1;
            z(d1, i, n - 1, +2); z(d1, i, n, -1);
            x(s1, i, n, +1);
            out.push_back(term(std::move(d1), 1, std::move(s1)));

            DiagWord d2; ShiftWord s2;
            z(d2, n, i, -2); z(d2, i, n, +1);
            x(s2, i, n - 1, -1); x(s2, i, n, +1); x(s2, n, i, +1);
            out.push_back(term(std::move(d2), 1, std::move(s2)));
        }
        return out;
    }

    std::vector<GenTerm> B(int i, int j) const {
        std::vector<GenTerm> out;
        if (j <= n - 2) {
            DiagWord d1;
            z(d1, i, j, +2); z(d1, i, j + 1, -2); z(d1, j + 2, i, -2);
            z(d1, j + 1, i, +4); z(d1, j, i, -2);
            zmerge(d1, T(i + 1, j));
            ShiftWord s1;
            x(s1, i, j, -1);
            out.push_back(term(std::move(d1), 2, std::move(s1)));

            // The second lowering monomial is inverted like its analogues in
            // the other families; the non-inverted reading fails the defining
            // relations.
            DiagWord d2;
            z(d2, j + 1, i, +2); z(d2, j, i, -2);
            zmerge(d2, T(i + 1, j));
            ShiftWord s2;
            x(s2, j + 1, i, -1);
            out.push_back(term(std::move(d2), 2, std::move(s2)));
        } else if (j == n - 1) {
            DiagWord d1;
            z(d1, i, n - 1, +2); z(d1, i, n, -2); z(d1, n, i, +4); z(d1, n - 1, i, -2);
            zmerge(d1, T(i + 1, n - 1));
            ShiftWord s1;
            x(s1, i, n - 1, -1);
            out.push_back(term(std::move(d1), 2, std::move(s1)));

            DiagWord d2;
            z(d2, n, i, +2); z(d2, n - 1, i, -2);
            zmerge(d2, T(i + 1, n - 1));
            ShiftWord s2;
            x(s2, n, i, -1);
            out.push_back(term(std::move(d2), 2, std::move(s2)));
        } else {
            DiagWord d1;
            z(d1, i, n, +1); z(d1, n, i, -2);
            zmerge(d1, T(i + 1, n));
            ShiftWord s1;
            x(s1, i, n, -1);
            out.push_back(term(std::move(d1), 1, std::move(s1)));
        }
        return out;
    }

    std::vector<GenTerm> E(int j) const {
        std::vector<GenTerm> out;
        if (j <= n - 2) {
            DiagWord d1;
            z(d1, j, j, +2); z(d1, j, j + 1, -2); z(d1, j + 2, j, -2);
            z(d1, j + 1, j, +4); z(d1, j + 1, j + 1, -2); z(d1, j + 2, j + 1, -2);
            d1.eps_offset = lam(j);
            ShiftWord s1;
            x(s1, j, j, -1);
            out.push_back(term(std::move(d1), 2, std::move(s1)));

            DiagWord d2;
            z(d2, j + 1, j, +2); z(d2, j + 1, j + 1, -2); z(d2, j + 2, j + 1, -2);
            d2.eps_offset = lam(j);
            ShiftWord s2;
            x(s2, j + 1, j, -1);
            out.push_back(term(std::move(d2), 2, std::move(s2)));
        } else if (j == n - 1) {
            DiagWord d1;
            z(d1, n - 1, n - 1, +2); z(d1, n - 1, n, -2); z(d1, n, n - 1, +4); z(d1, n, n, -2);
            d1.eps_offset = lam(n - 1);
            ShiftWord s1;
            x(s1, n - 1, n - 1, -1);
            out.push_back(term(std::move(d1), 2, std::move(s1)));

            // Brace degree follows the short/long pattern of the first term.
            DiagWord d2;
            z(d2, n, n - 1, +2); z(d2, n, n, -2);
            d2.eps_offset = lam(n - 1);
            ShiftWord s2;
            x(s2, n, n - 1, -1);
            out.push_back(term(std::move(d2), 2, std::move(s2)));
        } else {
            DiagWord d1;
            z(d1, n, n, +1);
            d1.eps_offset = lam(n);
            ShiftWord s1;
            x(s1, n, n, -1);
            out.push_back(term(std::move(d1), 1, std::move(s1)));
        }
        return out;
    }

    GenOp build_e(int j) const {
        GenOp op;
        op.kind = GenKind::E;
        op.index = j;
        if (j == 1) {
            op.terms.push_back(F(1));
            return op;
        }
        ShiftWord dprod;
        for (int k = 1; k <= j - 1; ++k)
            for (const auto& [s, e] : D(k, j).exps) dprod.mul_slot(s, e);
        GenTerm lead = F(j);
        extend_shift(lead, dprod);
        op.terms.push_back(std::move(lead));
        for (int q = 1; q <= j - 1; ++q) {
            ShiftWord pre;
            for (int p = 1; p <= q - 1; ++p)
                for (const auto& [s, e] : D(p, j).exps) pre.mul_slot(s, e);
            for (GenTerm t : C(q, j)) {
                extend_shift(t, pre);
                op.terms.push_back(std::move(t));
            }
        }
        return op;
    }

    GenOp build_f(int j) const {
        GenOp op;
        op.kind = GenKind::F;
        op.index = j;
        for (GenTerm t : E(j)) op.terms.push_back(std::move(t));
        for (int i = 1; i <= j - 1; ++i)
            for (GenTerm t : B(i, j)) op.terms.push_back(std::move(t));
        return op;
    }
};

// ---------------------------------------------------------------------------
// so(2n): (n-1) x n grid, d = (1,...,1)
// ---------------------------------------------------------------------------

struct SoEvenWords : Builder {
    using Builder::Builder;

    ShiftWord D(int i, int j) const {
        ShiftWord w;
        if (i < 1 || i >= j) return w;
        if (j <= n - 2) {
            x(w, i, j - 1, -1);
            x(w, i, j, +1);
            x(w, j + 1, i, -1);
            x(w, j, i, +1);
        } else if (j == n - 1) {
            x(w, i, n - 2, -1);
            x(w, i, n - 1, +1);
            x(w, i, n, -1);
            x(w, n - 1, i, +1);
        } else {
            x(w, i, n - 2, -1);
            x(w, i, n, +1);
            x(w, i, n - 1, -1);
            x(w, n - 1, i, +1);
        }
        return w;
    }

    DiagWord A(int i, int j) const {
        DiagWord w;
        if (j <= n - 3) {
            z(w, i, j - 1, -1); z(w, i, j, +2); z(w, i, j + 1, -1);
            z(w, j + 2, i, -1); z(w, j + 1, i, +2); z(w, j, i, -1);
        } else if (j == n - 2) {
            z(w, i, n - 3, -1); z(w, i, n - 2, +2); z(w, i, n - 1, -1);
            z(w, i, n, -1); z(w, n - 1, i, +2); z(w, n - 2, i, -1);
        } else if (j == n - 1) {
            z(w, i, n - 2, -1); z(w, i, n - 1, +2); z(w, n - 1, i, -1);
        } else {
            z(w, i, n - 2, -1); z(w, i, n, +2); z(w, n - 1, i, -1);
        }
        return w;
    }

    DiagWord Tdiag(int j) const {  // diagonal seed for column j; j = n uses slot (n-1, n)
        DiagWord w;
        if (j <= n - 3) {
            z(w, j, j, +2); z(w, j, j + 1, -1); z(w, j + 2, j, -1);
            z(w, j + 1, j, +2); z(w, j + 1, j + 1, -1); z(w, j + 2, j + 1, -1);
        } else if (j == n - 2) {
            z(w, n - 2, n - 2, +2); z(w, n - 2, n - 1, -1); z(w, n - 2, n, -1);
            z(w, n - 1, n - 2, +2); z(w, n - 1, n - 1, -1); z(w, n - 1, n, -1);
        } else if (j == n - 1) {
            z(w, n - 1, n - 1, +2);
        } else {
            z(w, n - 1, n, +2);
        }
        w.eps_offset = lam(j);
        return w;
    }

    DiagWord T(int i, int j) const {
        DiagWord w = Tdiag(j);
        int top = (j <= n - 1) ? j - 1 : n - 2;
        for (int k = i; k <= top; ++k) zmerge(w, A(k, j));
        return w;
    }

    GenTerm F(int i, int j) const {  // F_{j,j} for j < n lives at (j, j); F for e_n at (n-1, n)
        DiagWord dw;
        ShiftWord sw;
        z(dw, i, j, -1);
        x(sw, i, j, +1);
        return term(std::move(dw), 1, std::move(sw));
    }

    std::vector<GenTerm> C(int i, int j) const {
        std::vector<GenTerm> out;
        DiagWord d1, d2;
        ShiftWord s1, s2;
        if (j <= n - 2) {
            z(d1, i, j - 1, +1); z(d1, i, j, -1);
            x(s1, i, j, +1);
            z(d2, j + 1, i, +1); z(d2, j, i, -1);
            x(s2, i, j - 1, -1); x(s2, i, j, +1); x(s2, j, i, +1);
        } else if (j == n - 1) {
            z(d1, i, n - 2, +1); z(d1, i, n - 1, -1);
            x(s1, i, n - 1, +1);
            z(d2, i, n, +1); z(d2, n - 1, i, -1);
            x(s2, i, n - 2, -1); x(s2, i, n - 1, +1); x(s2, n - 1, i, +1);
        } else {
            z(d1, i, n - 2, +1); z(d1, i, n, -1);
            x(s1, i, n, +1);
            z(d2, i, n - 1, +1); z(d2, n - 1, i, -1);
            x(s2, i, n - 2, -1); x(s2, i, n, +1); x(s2, n - 1, i, +1);
        }
        out.push_back(term(std::move(d1), 1, std::move(s1)));
        out.push_back(term(std::move(d2), 1, std::move(s2)));
        return out;
    }

    // The last-column pair as it enters the (n-1)-th raising operator: same
    // braces as C(i, n), but the mixed monomial steps through column n-1.
    // The printed form (x_{i,n} there, and one more leading product factor)
    // contradicts both the explicit action catalog and the defining
    // relations.
    std::vector<GenTerm> C_cross(int i) const {
        std::vector<GenTerm> out;
        DiagWord d1, d2;
        ShiftWord s1, s2;
        z(d1, i, n - 2, +1); z(d1, i, n, -1);
        x(s1, i, n, +1);
        z(d2, i, n - 1, +1); z(d2, n - 1, i, -1);
        x(s2, i, n - 2, -1); x(s2, i, n - 1, +1); x(s2, n - 1, i, +1);
        out.push_back(term(std::move(d1), 1, std::move(s1)));
        out.push_back(term(std::move(d2), 1, std::move(s2)));
        return out;
    }

    std::vector<GenTerm> B(int i, int j) const {
        std::vector<GenTerm> out;
        if (j <= n - 3) {
            DiagWord d1;
            z(d1, i, j, +1); z(d1, i, j + 1, -1); z(d1, j + 2, i, -1);
            z(d1, j + 1, i, +2); z(d1, j, i, -1);
            zmerge(d1, T(i + 1, j));
            ShiftWord s1;
            x(s1, i, j, -1);
            out.push_back(term(std::move(d1), 1, std::move(s1)));

            DiagWord d2;
            z(d2, j + 1, i, +1); z(d2, j, i, -1);
            zmerge(d2, T(i + 1, j));
            ShiftWord s2;
            x(s2, j + 1, i, -1);
            out.push_back(term(std::move(d2), 1, std::move(s2)));
        } else if (j == n - 2) {
            DiagWord d1;
            z(d1, i, n - 2, +1); z(d1, i, n - 1, -1); z(d1, i, n, -1);
            z(d1, n - 1, i, +2); z(d1, n - 2, i, -1);
            zmerge(d1, T(i + 1, n - 2));
            ShiftWord s1;
            x(s1, i, n - 2, -1);
            out.push_back(term(std::move(d1), 1, std::move(s1)));

            DiagWord d2;
            z(d2, n - 1, i, +1); z(d2, n - 2, i, -1);
            zmerge(d2, T(i + 1, n - 2));
            ShiftWord s2;
            x(s2, n - 1, i, -1);
            out.push_back(term(std::move(d2), 1, std::move(s2)));
        } else if (j == n - 1) {
            DiagWord d1;
            z(d1, i, n - 1, +1); z(d1, n - 1, i, -1);
            zmerge(d1, T(i + 1, n - 1));
            ShiftWord s1;
            x(s1, i, n - 1, -1);
            out.push_back(term(std::move(d1), 1, std::move(s1)));
        } else {
            DiagWord d1;
            z(d1, i, n, +1); z(d1, n - 1, i, -1);
            zmerge(d1, T(i + 1, n));
            ShiftWord s1;
            x(s1, i, n, -1);
            out.push_back(term(std::move(d1), 1, std::move(s1)));
        }
        return out;
    }

    std::vector<GenTerm> E(int j) const {
        std::vector<GenTerm> out;
        if (j <= n - 3) {
            DiagWord d1;
            z(d1, j, j, +1); z(d1, j, j + 1, -1); z(d1, j + 2, j, -1);
            z(d1, j + 1, j, +2); z(d1, j + 1, j + 1, -1); z(d1, j + 2, j + 1, -1);
            d1.eps_offset = lam(j);
            ShiftWord s1;
            x(s1, j, j, -1);
            out.push_back(term(std::move(d1), 1, std::move(s1)));

            DiagWord d2;
            z(d2, j + 1, j, +1); z(d2, j + 1, j + 1, -1); z(d2, j + 2, j + 1, -1);
            d2.eps_offset = lam(j);
            ShiftWord s2;
            x(s2, j + 1, j, -1);
            out.push_back(term(std::move(d2), 1, std::move(s2)));
        } else if (j == n - 2) {
            DiagWord d1;
            z(d1, n - 2, n - 2, +1); z(d1, n - 2, n - 1, -1); z(d1, n - 2, n, -1);
            z(d1, n - 1, n - 2, +2); z(d1, n - 1, n - 1, -1); z(d1, n - 1, n, -1);
            d1.eps_offset = lam(n - 2);
            ShiftWord s1;
            x(s1, n - 2, n - 2, -1);
            out.push_back(term(std::move(d1), 1, std::move(s1)));

            DiagWord d2;
            z(d2, n - 1, n - 2, +1); z(d2, n - 1, n - 1, -1); z(d2, n - 1, n, -1);
            d2.eps_offset = lam(n - 2);
            ShiftWord s2;
            x(s2, n - 1, n - 2, -1);
            out.push_back(term(std::move(d2), 1, std::move(s2)));
        } else if (j == n - 1) {
            DiagWord d1;
            z(d1, n - 1, n - 1, +1);
            d1.eps_offset = lam(n - 1);
            ShiftWord s1;
            x(s1, n - 1, n - 1, -1);
            out.push_back(term(std::move(d1), 1, std::move(s1)));
        } else {
            DiagWord d1;
            z(d1, n - 1, n, +1);
            d1.eps_offset = lam(n);
            ShiftWord s1;
            x(s1, n - 1, n, -1);
            out.push_back(term(std::move(d1), 1, std::move(s1)));
        }
        return out;
    }

    ShiftWord dprod(int row_parity_base, int col, int from, int to) const {
        // product of D_{row_parity_base + 2p, col} for p in [from, to]
        ShiftWord w;
        for (int p = from; p <= to; ++p) {
            int row = row_parity_base + 2 * p;
            for (const auto& [s, e] : D(row, col).exps) w.mul_slot(s, e);
        }
        return w;
    }

    GenOp build_e(int j) const {
        GenOp op;
        op.kind = GenKind::E;
        op.index = j;
        if (j == 1) {
            op.terms.push_back(F(1, 1));
            return op;
        }
        if (j <= n - 2) {
            ShiftWord dp;
            for (int k = 1; k <= j - 1; ++k)
                for (const auto& [s, e] : D(k, j).exps) dp.mul_slot(s, e);
            GenTerm lead = F(j, j);
            extend_shift(lead, dp);
            op.terms.push_back(std::move(lead));
            for (int q = 1; q <= j - 1; ++q) {
                ShiftWord pre;
                for (int p = 1; p <= q - 1; ++p)
                    for (const auto& [s, e] : D(p, j).exps) pre.mul_slot(s, e);
                for (GenTerm t : C(q, j)) {
                    extend_shift(t, pre);
                    op.terms.push_back(std::move(t));
                }
            }
            return op;
        }
        // The last two raising operators interleave odd and even rows; the
        // even and odd rank branches differ in which diagonal seed they use.
        bool even = (n % 2 == 0);
        bool is_nm1 = (j == n - 1);
        if (even) {
            int h = n / 2 - 1;
            if (is_nm1) {
                GenTerm lead = F(n - 1, n - 1);
                extend_shift(lead, dprod(-1, n - 1, 1, h));  // rows 1,3,...,n-3
                extend_shift(lead, dprod(0, n, 1, h));       // rows 2,4,...,n-2
                op.terms.push_back(std::move(lead));
                for (int q = 1; q <= h; ++q) {
                    ShiftWord preA = dprod(-1, n - 1, 1, q - 1);
                    ShiftWord preB = dprod(0, n, 1, q - 1);
                    for (GenTerm t : C(2 * q - 1, n - 1)) {
                        extend_shift(t, preA);
                        extend_shift(t, preB);
                        op.terms.push_back(std::move(t));
                    }
                    ShiftWord preA2 = dprod(-1, n - 1, 1, q);
                    for (GenTerm t : C(2 * q, n)) {
                        extend_shift(t, preA2);
                        extend_shift(t, preB);
                        op.terms.push_back(std::move(t));
                    }
                }
            } else {
                GenTerm lead = F(n - 1, n);
                extend_shift(lead, dprod(0, n - 1, 1, h));   // rows 2,4,...,n-2
                extend_shift(lead, dprod(-1, n, 1, h));      // rows 1,3,...,n-3
                op.terms.push_back(std::move(lead));
                for (int q = 1; q <= h; ++q) {
                    ShiftWord preA = dprod(0, n - 1, 1, q - 1);
                    ShiftWord preB2 = dprod(-1, n, 1, q);
                    for (GenTerm t : C(2 * q, n - 1)) {
                        extend_shift(t, preA);
                        extend_shift(t, preB2);
                        op.terms.push_back(std::move(t));
                    }
                    ShiftWord preB = dprod(-1, n, 1, q - 1);
                    for (GenTerm t : C(2 * q - 1, n)) {
                        extend_shift(t, preA);
                        extend_shift(t, preB);
                        op.terms.push_back(std::move(t));
                    }
                }
            }
        } else {
            if (is_nm1) {
                GenTerm lead = F(n - 1, n);
                extend_shift(lead, dprod(-1, n - 1, 1, (n - 1) / 2));
                extend_shift(lead, dprod(0, n, 1, (n - 3) / 2));
                op.terms.push_back(std::move(lead));
                for (int q = 1; q <= (n - 1) / 2; ++q) {
                    ShiftWord preA = dprod(-1, n - 1, 1, q - 1);
                    ShiftWord preB = dprod(0, n, 1, q - 1);
                    for (GenTerm t : C(2 * q - 1, n - 1)) {
                        extend_shift(t, preA);
                        extend_shift(t, preB);
                        op.terms.push_back(std::move(t));
                    }
                }
                for (int q = 1; q <= (n - 3) / 2; ++q) {
                    ShiftWord preA2 = dprod(-1, n - 1, 1, q);
                    ShiftWord preB = dprod(0, n, 1, q - 1);
                    for (GenTerm t : C(2 * q, n)) {
                        extend_shift(t, preA2);
                        extend_shift(t, preB);
                        op.terms.push_back(std::move(t));
                    }
                }
            } else {
                GenTerm lead = F(n - 1, n - 1);
                extend_shift(lead, dprod(0, n - 1, 1, (n - 3) / 2));
                extend_shift(lead, dprod(-1, n, 1, (n - 1) / 2));
                op.terms.push_back(std::move(lead));
                for (int q = 1; q <= (n - 3) / 2; ++q) {
                    ShiftWord preA = dprod(0, n - 1, 1, q - 1);
                    ShiftWord preB2 = dprod(-1, n, 1, q);
                    for (GenTerm t : C(2 * q, n - 1)) {
                        extend_shift(t, preA);
                        extend_shift(t, preB2);
                        op.terms.push_back(std::move(t));
                    }
                }
                for (int q = 1; q <= (n - 1) / 2; ++q) {
                    ShiftWord preA = dprod(0, n - 1, 1, q - 1);
                    ShiftWord preB = dprod(-1, n, 1, q - 1);
                    for (GenTerm t : C(2 * q - 1, n)) {
                        extend_shift(t, preA);
                        extend_shift(t, preB);
                        op.terms.push_back(std::move(t));
                    }
                }
            }
        }
        return op;
    }

    GenOp build_f(int j) const {
        GenOp op;
        op.kind = GenKind::F;
        op.index = j;
        for (GenTerm t : E(j)) op.terms.push_back(std::move(t));
        // The i = n-1 summand of the last lowering operator would need a
        // diagonal seed at the nonexistent (n, n) position; it is absent
        // (keeping it breaks the mixed commutation relations).
        int top = (j == n) ? n - 2 : j - 1;
        for (int i = 1; i <= top; ++i)
            for (GenTerm t : B(i, j)) op.terms.push_back(std::move(t));
        return op;
    }
};

// ---------------------------------------------------------------------------
// sl(n+1): triangular grid, direct action formulas
// ---------------------------------------------------------------------------

struct SlWords : Builder {
    using Builder::Builder;

    long b_of(int i, int j) const {
        int s = shape.slot_of(i, j);
        return s < 0 ? 0 : spec.b_exp[static_cast<std::size_t>(s)];
    }
    long a_of(int i, int j) const {
        int s = shape.slot_of(i, j);
        return s < 0 ? 0 : spec.a_exp[static_cast<std::size_t>(s)];
    }

    // Linear eps-exponent form over slots, with out-of-range terms dropped.
    struct Form {
        std::vector<std::pair<int, long>> coeff;
        long constant = 0;
    };

    static void addslot(Form& f, int s, long c) {
        if (c == 0) return;
        for (auto& p : f.coeff)
            if (p.first == s) {
                p.second += c;
                return;
            }
        f.coeff.emplace_back(s, c);
    }

    void addm(Form& f, int i, int j, long c) const {
        int s = shape.slot_of(i, j);
        if (s < 0) return;
        addslot(f, s, c);
    }

    // lambda'_i + m_{i-1,i-1} + b_{i-1,i-1}
    //   + sum_{p=i}^{j} (m_{i-1,p} - 2 m_{i,p} + m_{i+1,p} + b_{i-1,p} - 2 b_{i,p} + b_{i+1,p})
    Form weight_form(int i, int j) const {
        Form f;
        f.constant = lam(i) + b_of(i - 1, i - 1);
        addm(f, i - 1, i - 1, +1);
        for (int p = i; p <= j; ++p) {
            addm(f, i - 1, p, +1);
            addm(f, i, p, -2);
            addm(f, i + 1, p, +1);
            f.constant += b_of(i - 1, p) - 2 * b_of(i, p) + b_of(i + 1, p);
        }
        return f;
    }

    // Bracket coefficient evaluated at the pre-shift index; converted to the
    // post-shift convention of GenTerm.
    GenTerm from_form(const Form& f, int brace_d, const std::vector<std::pair<int, int>>& delta,
                      long prefactor) const {
        GenTerm t;
        t.diag.brace_d = brace_d;
        long offset = f.constant;
        for (const auto& [s, c] : f.coeff) {
            t.diag.mul_slot(s, static_cast<int>(c));
            offset -= c * spec.b_exp[static_cast<std::size_t>(s)];
            for (const auto& [ds, inc] : delta)
                if (ds == s) offset -= c * inc;
        }
        t.diag.purge_zero();
        t.diag.eps_offset = offset;
        for (const auto& [s, inc] : delta) t.shift.mul_slot(s, -inc);
        t.shift.purge_zero();
        t.eps_prefactor = prefactor;
        return t;
    }

    GenOp build_e(int i) const {
        GenOp op;
        op.kind = GenKind::E;
        op.index = i;
        for (int k = 1; k <= i; ++k) {
            int c = n - i + k;
            Form f;
            f.constant = b_of(k - 1, c) - b_of(k, c) + 1;
            addm(f, k - 1, c, +1);
            addm(f, k, c, -1);
            std::vector<std::pair<int, int>> delta;
            long pref = 0;
            delta.emplace_back(slot(k, c), -1);
            for (int p = k + 1; p <= i; ++p) {
                delta.emplace_back(slot(p - 1, n - i + p), +1);
                delta.emplace_back(slot(p, n - i + p), -1);
                pref += -a_of(p - 1, n - i + p) + a_of(p, n - i + p);
            }
            op.terms.push_back(from_form(f, 1, delta, pref));
        }
        return op;
    }

    GenOp build_f(int i) const {
        GenOp op;
        op.kind = GenKind::F;
        op.index = i;
        for (int k = i; k <= n; ++k) {
            Form mu = weight_form(i, k - 1);
            Form f;
            f.constant = b_of(i, k) - b_of(i + 1, k) + 1 - mu.constant;
            addm(f, i, k, +1);
            addm(f, i + 1, k, -1);
            for (const auto& [s, c] : mu.coeff) addslot(f, s, -c);
            std::vector<std::pair<int, int>> delta{{slot(i, k), +1}};
            op.terms.push_back(from_form(f, 1, delta, -a_of(i, k)));
        }
        return op;
    }

    GenOp build_t(int i, bool inverse) const {
        Form mu = weight_form(i, n);
        if (inverse) {
            mu.constant = -mu.constant;
            for (auto& p : mu.coeff) p.second = -p.second;
        }
        GenOp op;
        op.kind = inverse ? GenKind::TInv : GenKind::T;
        op.index = i;
        op.terms.push_back(from_form(mu, 0, {}, 0));
        return op;
    }
};

}  // namespace

ModuleOps build_generators(const ModuleSpec& spec) {
    IndexShape shape(spec.type, spec.rank, spec.l);
    if (spec.a_exp.size() != shape.slot_count() || spec.b_exp.size() != shape.slot_count())
        throw StructuralError("parameter tables do not match the index grid");
    if (static_cast<int>(spec.lambda_shifted.size()) != spec.rank)
        throw StructuralError("shifted weight length does not match the rank");
    ModuleOps ops(shape, spec);
    int n = spec.rank;

    switch (spec.type) {
        case LieType::A: {
            SlWords w(ops.shape, ops.spec);
            for (int i = 1; i <= n; ++i) {
                ops.e.push_back(w.build_e(i));
                ops.f.push_back(w.build_f(i));
                ops.t.push_back(w.build_t(i, false));
                ops.tinv.push_back(w.build_t(i, true));
            }
            break;
        }
        case LieType::C: {
            SpWords w(ops.shape, ops.spec);
            for (int j = 1; j <= n; ++j) {
                ops.e.push_back(w.build_e(j));
                ops.f.push_back(w.build_f(j));
                ops.t.push_back(w.make_t_pair(j, w.T(1, j), false));
                ops.tinv.push_back(w.make_t_pair(j, w.T(1, j), true));
            }
            break;
        }
        case LieType::B: {
            SoOddWords w(ops.shape, ops.spec);
            for (int j = 1; j <= n; ++j) {
                ops.e.push_back(w.build_e(j));
                ops.f.push_back(w.build_f(j));
                ops.t.push_back(w.make_t_pair(j, w.T(1, j), false));
                ops.tinv.push_back(w.make_t_pair(j, w.T(1, j), true));
            }
            break;
        }
        case LieType::D: {
            SoEvenWords w(ops.shape, ops.spec);
            for (int j = 1; j <= n; ++j) {
                ops.e.push_back(w.build_e(j));
                ops.f.push_back(w.build_f(j));
                ops.t.push_back(w.make_t_pair(j, w.T(1, j), false));
                ops.tinv.push_back(w.make_t_pair(j, w.T(1, j), true));
            }
            break;
        }
    }
    return ops;
}

}  // namespace nilrep
