#pragma once

#include <chrono>
#include <numeric>
#include <random>

#include "nilrep/certificate.hpp"
#include "nilrep/freealg.hpp"
#include "nilrep/threading.hpp"

namespace nilrep {

enum class Suite {
    Relation,
    Primitive,
    Submodule,
    Highest,
    Nilpotent,
    Steinberg,
    Lowest,
    Central,
    Irreducible,
    All,
};

Suite suite_from_name(const std::string& name);
std::string suite_name(Suite s);

struct CertifyOptions {
    std::uint64_t seed = 1;
    long sample = 1000;        // sampled basis vectors when exhaustive sweeps are infeasible
    std::uint64_t exhaustive_bound = kExhaustiveKernelBound;
    int threads = 0;           // 0: QGR_THREADS or 1
    ReducedWord w0;            // empty: default word
    int max_braid_rank = 4;    // root vectors only below this rank
};

namespace detail {

inline double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

template <class F>
Json witness_vec(const F& field, const IndexShape& shape, const SparseVec<F>& v) {
    return sparsevec_to_json(field, shape, v);
}

/// Random vector with a handful of eps-power terms, for sampled identities.
template <class F>
SparseVec<F> random_vector(const F& field, const IndexShape& shape, std::mt19937_64& rng,
                           int terms = 6) {
    SparseVec<F> v;
    for (int k = 0; k < terms; ++k)
        v.add_term(field, draw(rng, shape.dimension()),
                   field.eps_pow(static_cast<long>(rng() % 32)));
    if (v.is_zero()) v.add_term(field, draw(rng, shape.dimension()), field.one());
    return v;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Suite runners (each appends CheckResults to the certificate)
// ---------------------------------------------------------------------------

template <class F>
void run_relation_suite(const F& field, const ModuleOps& ops, const CertifyOptions& opt,
                        Certificate& cert) {
    auto t0 = std::chrono::steady_clock::now();
    CartanData cd = cartan(ops.spec.type, ops.spec.rank);
    std::uint64_t dim = ops.shape.dimension();
    bool exhaustive = dim <= std::max<std::uint64_t>(opt.exhaustive_bound, 100000);
    std::vector<std::uint64_t> codes;
    if (exhaustive) {
        codes.resize(dim);
        std::iota(codes.begin(), codes.end(), 0);
    } else {
        std::mt19937_64 rng(opt.seed);
        codes.resize(static_cast<std::size_t>(std::max<long>(opt.sample, 1)));
        for (auto& c : codes) c = detail::draw(rng, dim);
    }
    std::vector<std::string> failures(codes.size());
    parallel_for(codes.size(), opt.threads, [&](std::size_t b, std::size_t e) {
        for (std::size_t k = b; k < e; ++k) {
            auto r = relations_on_basis(field, ops, cd, codes[k]);
            if (r) failures[k] = *r;
        }
    });
    CheckResult res;
    res.name = "relations";
    res.pass = true;
    for (std::size_t k = 0; k < codes.size(); ++k) {
        if (failures[k].empty()) continue;
        res.pass = false;
        res.detail = "relation '" + failures[k] + "' fails on u(m), m = index " +
                     std::to_string(codes[k]);
        res.witness =
            detail::witness_vec(field, ops.shape, SparseVec<F>::unit(field, codes[k]));
        break;
    }
    if (res.pass)
        res.detail = (exhaustive ? "all defining relations on every basis vector ("
                                 : "all defining relations on sampled basis vectors (") +
                     std::to_string(codes.size()) + " checked)";
    cert.checks.push_back(std::move(res));
    cert.timings_ms["relations"] = detail::ms_since(t0);
}

template <class F>
void run_primitive_suite(const F& field, const ModuleOps& ops, const CertifyOptions& opt,
                         Certificate& cert) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult res;
    res.name = "primitive";
    if (ops.shape.dimension() <= opt.exhaustive_bound) {
        EchelonBasis<F> kernel = primitive_space_exhaustive(field, ops, opt.exhaustive_bound);
        cert.dims["primitive_kernel"] = kernel.dim();
        res.pass = kernel.dim() == 1;
        if (res.pass) {
            const SparseVec<F>& row = kernel.rows()[0];
            res.pass = row.support_size() == 1 && row.coeff(0) != nullptr;
        }
        res.detail = res.pass ? "joint raising kernel is exactly the line through u(0)"
                              : "joint raising kernel has dimension " +
                                    std::to_string(kernel.dim());
        if (!res.pass && kernel.dim() > 0)
            res.witness = detail::witness_vec(field, ops.shape, kernel.rows()[0]);
    } else {
        // within-submodule scope plus randomized whole-space spot checks
        SubmoduleBasis<F> span =
            submodule_span(field, ops, SparseVec<F>::unit(field, 0));
        EchelonBasis<F> kernel = primitive_space_within(field, ops, span.basis);
        cert.dims["submodule"] = span.dim();
        cert.dims["primitive_kernel_within"] = kernel.dim();
        bool within_ok = kernel.dim() == 1 && kernel.rows()[0].support_size() == 1 &&
                         kernel.rows()[0].coeff(0) != nullptr;
        std::mt19937_64 rng(opt.seed + 1);
        bool spot_ok = true;
        for (long s = 0; s < std::max<long>(opt.sample / 10, 20) && spot_ok; ++s) {
            SparseVec<F> v = detail::random_vector(field, ops.shape, rng);
            if (v.support_size() == 1 && v.coeff(0) != nullptr) continue;
            bool killed_by_all = true;
            for (int i = 1; i <= ops.spec.rank && killed_by_all; ++i)
                if (!act(field, ops, GenKind::E, i, v).is_zero()) killed_by_all = false;
            if (killed_by_all) {
                spot_ok = false;
                res.witness = detail::witness_vec(field, ops.shape, v);
            }
        }
        res.pass = within_ok && spot_ok;
        res.detail = res.pass
                         ? "kernel within the spanned submodule is the line through u(0); "
                           "random whole-space vectors are not primitive"
                         : (within_ok ? "a random vector outside C u(0) is primitive"
                                      : "within-submodule kernel is not the u(0) line");
    }
    cert.checks.push_back(std::move(res));
    cert.timings_ms["primitive"] = detail::ms_since(t0);
}

template <class F>
void run_submodule_suite(const F& field, const ModuleOps& ops, const CertifyOptions&,
                         Certificate& cert) {
    auto t0 = std::chrono::steady_clock::now();
    SubmoduleBasis<F> span = submodule_span(field, ops, SparseVec<F>::unit(field, 0));
    cert.dims["submodule"] = span.dim();
    CheckResult res;
    res.name = "submodule";
    res.pass = span.complete && !span.extended;
    res.detail = "span of u(0) closed under every generator, dimension " +
                 std::to_string(span.dim()) +
                 (span.extended ? " (needed raising steps: seed was not highest weight)" : "");
    cert.checks.push_back(std::move(res));
    cert.timings_ms["submodule"] = detail::ms_since(t0);
}

template <class F>
void run_highest_suite(const F& field, const ModuleOps& ops, const CertifyOptions&,
                       Certificate& cert) {
    auto t0 = std::chrono::steady_clock::now();
    CartanData cd = cartan(ops.spec.type, ops.spec.rank);
    WeightTable wt = weight_table(ops);
    WeightVector w = wt.weight_of(ops.shape, 0);
    CheckResult res;
    res.name = "highest-weight";
    res.pass = true;
    for (int i = 0; i < ops.spec.rank; ++i) {
        long want = mod_floor(cd.d[i] * ops.spec.lambda[static_cast<std::size_t>(i)], ops.spec.l);
        if (w[static_cast<std::size_t>(i)] != want) {
            res.pass = false;
            res.detail = "t_" + std::to_string(i + 1) + " u(0) = eps^" +
                         std::to_string(w[static_cast<std::size_t>(i)]) + ", expected eps^" +
                         std::to_string(want);
            break;
        }
    }
    if (res.pass) res.detail = "t_i u(0) = eps_i^{lambda_i} u(0) for every i";
    if (ops.spec.type == LieType::B) {
        res.detail += res.pass ? "; weight-shift branch '" : "; tried weight-shift branch '";
        res.detail +=
            (ops.spec.b_branch == BShiftBranch::Printed ? "printed'" : "corrected'");
    }
    cert.checks.push_back(std::move(res));
    cert.timings_ms["highest"] = detail::ms_since(t0);
    (void)field;
}

template <class F>
void run_nilpotent_suite(const F& field, const ModuleOps& ops, const CertifyOptions& opt,
                         Certificate& cert) {
    auto t0 = std::chrono::steady_clock::now();
    const long l = ops.spec.l;
    std::mt19937_64 rng(opt.seed + 2);
    std::uint64_t dim = ops.shape.dimension();
    CheckResult res;
    res.name = "nilpotent";
    res.pass = true;
    std::string detail;

    // t_i^l acts as the identity (integer shifted weights)
    for (long s = 0; s < 50 && res.pass; ++s) {
        std::uint64_t code = detail::draw(rng, dim);
        SparseVec<F> v = SparseVec<F>::unit(field, code);
        for (int i = 1; i <= ops.spec.rank && res.pass; ++i) {
            SparseVec<F> w = v;
            for (long k = 0; k < l; ++k) w = act(field, ops, GenKind::T, i, w);
            if (!w.equals(field, v)) {
                res.pass = false;
                detail = "t_" + std::to_string(i) + "^l differs from the identity";
                res.witness = detail::witness_vec(field, ops.shape, v);
            }
        }
    }

    // simple-root l-th powers vanish on sampled basis vectors
    for (long s = 0; s < std::max<long>(opt.sample / 10, 20) && res.pass; ++s) {
        std::uint64_t code = detail::draw(rng, dim);
        for (int i = 1; i <= ops.spec.rank && res.pass; ++i) {
            for (GenKind kind : {GenKind::E, GenKind::F}) {
                SparseVec<F> w = SparseVec<F>::unit(field, code);
                for (long k = 0; k < l && !w.is_zero(); ++k) w = act(field, ops, kind, i, w);
                if (!w.is_zero()) {
                    res.pass = false;
                    detail = std::string(kind == GenKind::E ? "e_" : "f_") + std::to_string(i) +
                             "^l does not vanish";
                    res.witness =
                        detail::witness_vec(field, ops.shape, SparseVec<F>::unit(field, code));
                }
            }
        }
    }

    // root vectors along the reduced word, on compilable modules
    if (res.pass && ops.spec.rank <= opt.max_braid_rank && dim <= opt.exhaustive_bound) {
        CartanData cd = cartan(ops.spec.type, ops.spec.rank);
        ReducedWord w0 = opt.w0.empty() ? default_w0_word(cd.type, cd.rank) : opt.w0;
        RootVectors<F> rv = root_vectors(field, cd, w0);
        for (std::size_t k = 0; k < rv.e.size() && res.pass; ++k) {
            CompiledOp<F> eb(field, ops, rv.e[k]);
            CompiledOp<F> fb(field, ops, rv.f[k]);
            SparseVec<F> w = SparseVec<F>::unit(field, 0);
            for (long p = 0; p < l && !w.is_zero(); ++p) w = fb.apply(field, w);
            if (!w.is_zero()) {
                res.pass = false;
                detail = "f_beta^l u(0) != 0 for root vector " + std::to_string(k + 1);
                res.witness = detail::witness_vec(field, ops.shape, w);
                break;
            }
            for (long s = 0; s < 100 && res.pass; ++s) {
                SparseVec<F> v = SparseVec<F>::unit(field, detail::draw(rng, dim));
                for (long p = 0; p < l && !v.is_zero(); ++p) v = eb.apply(field, v);
                if (!v.is_zero()) {
                    res.pass = false;
                    detail = "e_beta^l v != 0 for root vector " + std::to_string(k + 1);
                    res.witness = detail::witness_vec(field, ops.shape, v);
                }
            }
        }
        if (res.pass)
            detail = "t_i^l = 1, simple e_i^l = f_i^l = 0, and e_beta^l = 0, f_beta^l u(0) = 0 "
                     "for all " +
                     std::to_string(rv.e.size()) + " root vectors";
    } else if (res.pass) {
        detail = "t_i^l = 1 and simple e_i^l = f_i^l = 0 on sampled basis vectors "
                 "(root vectors need rank <= " +
                 std::to_string(opt.max_braid_rank) + " and a compilable module)";
    }
    res.detail = std::move(detail);
    cert.checks.push_back(std::move(res));
    cert.timings_ms["nilpotent"] = detail::ms_since(t0);
}

template <class F>
void run_steinberg_suite(const F& field, const ModuleOps& ops, const CertifyOptions& opt,
                         Certificate& cert) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult res;
    res.name = "steinberg";
    bool is_steinberg = true;
    for (long v : ops.spec.lambda)
        if (v != ops.spec.l - 1) is_steinberg = false;
    if (!is_steinberg) {
        res.pass = false;
        res.detail = "steinberg check needs lambda = (l-1,...,l-1)";
        cert.checks.push_back(std::move(res));
        return;
    }
    if (ops.shape.dimension() > opt.exhaustive_bound)
        throw DomainError("steinberg span over " + std::to_string(ops.shape.dimension()) +
                          " basis vectors exceeds the exhaustive bound");
    SubmoduleBasis<F> span = submodule_span(field, ops, SparseVec<F>::unit(field, 0));
    cert.dims["submodule"] = span.dim();
    res.pass = span.dim() == ops.shape.dimension();
    if (res.pass) {
        // every unit vector must reduce to zero against the basis
        for (std::uint64_t c = 0; c < ops.shape.dimension() && res.pass; ++c)
            if (!span.basis.reduce(SparseVec<F>::unit(field, c)).is_zero()) {
                res.pass = false;
                res.detail = "unit vector " + std::to_string(c) + " not in the span";
            }
    }
    if (res.pass)
        res.detail = "span of u(0) at the top weight fills the module: dimension " +
                     std::to_string(span.dim());
    else if (res.detail.empty())
        res.detail = "span dimension " + std::to_string(span.dim()) + " != l^N = " +
                     std::to_string(ops.shape.dimension());
    cert.checks.push_back(std::move(res));
    cert.timings_ms["steinberg"] = detail::ms_since(t0);
}

template <class F>
void run_lowest_suite(const F& field, const ModuleOps& ops, const CertifyOptions& opt,
                      Certificate& cert) {
    auto t0 = std::chrono::steady_clock::now();
    if (ops.spec.type == LieType::A)
        throw UnsupportedError("no lowest multi-index is defined for type A");
    CheckResult res;
    res.name = "lowest";
    res.pass = true;
    MultiIndex ml = lowest_index(ops.shape, ops.spec.lambda);
    SparseVec<F> low = SparseVec<F>::unit(field, ops.shape.encode(ml));
    for (int j = 1; j <= ops.spec.rank && res.pass; ++j) {
        SparseVec<F> w = act(field, ops, GenKind::F, j, low);
        if (!w.is_zero()) {
            res.pass = false;
            res.detail = "f_" + std::to_string(j) + " u(m^lambda) != 0";
            res.witness = detail::witness_vec(field, ops.shape, w);
        }
    }
    bool top = true;
    for (long v : ops.spec.lambda)
        if (v != ops.spec.l - 1) top = false;
    if (res.pass && top) {
        // u(0) never occurs in lowering images at the top weight
        std::mt19937_64 rng(opt.seed + 3);
        for (long s = 0; s < 100 && res.pass; ++s) {
            SparseVec<F> v = detail::random_vector(field, ops.shape, rng);
            for (int j = 1; j <= ops.spec.rank && res.pass; ++j) {
                SparseVec<F> w = act(field, ops, GenKind::F, j, v);
                if (w.coeff(0) != nullptr) {
                    res.pass = false;
                    res.detail = "u(0) occurs in f_" + std::to_string(j) + " v";
                    res.witness = detail::witness_vec(field, ops.shape, v);
                }
            }
        }
    }
    if (res.pass)
        res.detail = top ? "f_j u(m^lambda) = 0 and u(0) never occurs in lowering images"
                         : "f_j u(m^lambda) = 0 for every j";
    cert.checks.push_back(std::move(res));
    cert.timings_ms["lowest"] = detail::ms_since(t0);
}

template <class F>
void run_central_suite(const F& field, const ModuleOps& ops, const CertifyOptions& opt,
                       Certificate& cert) {
    auto t0 = std::chrono::steady_clock::now();
    const long l = ops.spec.l;
    std::mt19937_64 rng(opt.seed + 4);
    std::uint64_t dim = ops.shape.dimension();
    CheckResult res;
    res.name = "central";
    res.pass = true;

    auto commutes_on = [&](const std::function<SparseVec<F>(const SparseVec<F>&)>& op,
                           const SparseVec<F>& v) {
        for (int i = 1; i <= ops.spec.rank; ++i)
            for (GenKind k : {GenKind::E, GenKind::F, GenKind::T}) {
                SparseVec<F> a = op(act(field, ops, k, i, v));
                SparseVec<F> b = act(field, ops, k, i, op(v));
                if (!a.equals(field, b)) return false;
            }
        return true;
    };

    // t_i^l is central
    for (long s = 0; s < 20 && res.pass; ++s) {
        SparseVec<F> v = SparseVec<F>::unit(field, detail::draw(rng, dim));
        for (int i = 1; i <= ops.spec.rank && res.pass; ++i) {
            auto op = [&](const SparseVec<F>& x) {
                SparseVec<F> w = x;
                for (long k = 0; k < l; ++k) w = act(field, ops, GenKind::T, i, w);
                return w;
            };
            if (!commutes_on(op, v)) {
                res.pass = false;
                res.detail = "t_" + std::to_string(i) + "^l is not central";
                res.witness = detail::witness_vec(field, ops.shape, v);
            }
        }
    }

    // root-vector l-th powers are central (they vanish on these modules, but
    // the commutation is checked honestly)
    if (res.pass && ops.spec.rank <= opt.max_braid_rank && dim <= opt.exhaustive_bound) {
        CartanData cd = cartan(ops.spec.type, ops.spec.rank);
        ReducedWord w0 = opt.w0.empty() ? default_w0_word(cd.type, cd.rank) : opt.w0;
        RootVectors<F> rv = root_vectors(field, cd, w0);
        for (std::size_t k = 0; k < rv.e.size() && res.pass; ++k) {
            for (const FreeElem<F>* fe : {&rv.e[k], &rv.f[k]}) {
                CompiledOp<F> cop(field, ops, *fe);
                auto op = [&](const SparseVec<F>& x) {
                    SparseVec<F> w = x;
                    for (long p = 0; p < l && !w.is_zero(); ++p) w = cop.apply(field, w);
                    return w;
                };
                for (long s = 0; s < 5 && res.pass; ++s) {
                    SparseVec<F> v = SparseVec<F>::unit(field, detail::draw(rng, dim));
                    if (!commutes_on(op, v)) {
                        res.pass = false;
                        res.detail = "root-vector l-th power is not central (root " +
                                     std::to_string(k + 1) + ")";
                        res.witness = detail::witness_vec(field, ops.shape, v);
                    }
                }
            }
        }
        if (res.pass) res.detail = "t_i^l and all root-vector l-th powers commute with the action";
    } else if (res.pass) {
        res.detail = "t_i^l commutes with the action on sampled vectors";
    }
    cert.checks.push_back(std::move(res));
    cert.timings_ms["central"] = detail::ms_since(t0);
}

template <class F>
void run_irreducible_suite(const F& field, const ModuleOps& ops, const CertifyOptions& opt,
                           Certificate& cert) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult res;
    res.name = "irreducible";
    res.pass = true;
    SubmoduleBasis<F> span = submodule_span(field, ops, SparseVec<F>::unit(field, 0));
    cert.dims["submodule"] = span.dim();

    // word-length cap from the nilpotency degree: (l-1) * sum of root heights
    CartanData cd = cartan(ops.spec.type, ops.spec.rank);
    long height_sum = 0;
    for (const auto& beta : roots_of_word(cd, default_w0_word(cd.type, cd.rank)))
        for (int c : beta) height_sum += c;
    long cap = (ops.spec.l - 1) * height_sum;

    std::mt19937_64 rng(opt.seed + 5);
    auto order = span.basis.order();
    for (long trial = 0; trial < 20 && res.pass; ++trial) {
        // random nonzero vector in the span
        SparseVec<F> v;
        for (const std::size_t r : order)
            if (rng() % 3 == 0)
                v.add_scaled(field, span.basis.rows()[r],
                             field.eps_pow(static_cast<long>(rng() % 16)));
        if (v.is_zero()) v = span.basis.rows()[order[trial % order.size()]];
        long steps = 0;
        while (steps <= cap) {
            int raised = 0;
            for (int i = 1; i <= ops.spec.rank; ++i) {
                SparseVec<F> w = act(field, ops, GenKind::E, i, v);
                if (!w.is_zero()) {
                    v = std::move(w);
                    raised = i;
                    break;
                }
            }
            if (!raised) break;
            ++steps;
        }
        if (steps > cap) {
            res.pass = false;
            res.detail = "raising ascent exceeded the nilpotency cap " + std::to_string(cap);
            break;
        }
        if (v.is_zero() || v.support_size() != 1 || v.coeff(0) == nullptr) {
            res.pass = false;
            res.detail = "ascent ended on a primitive vector outside C u(0)";
            res.witness = detail::witness_vec(field, ops.shape, v);
            break;
        }
    }
    if (res.pass)
        res.detail = "20 random submodule vectors ascend to scalar multiples of u(0)";
    cert.checks.push_back(std::move(res));
    cert.timings_ms["irreducible"] = detail::ms_since(t0);
}

/// Runs the requested suite (or all of them) and assembles the certificate.
template <class F>
Certificate certify(const F& field, const ModuleSpec& spec, Suite suite,
                    const CertifyOptions& opt, std::string backend_name = "exact") {
    ModuleOps ops = build_generators(spec);
    Certificate cert;
    cert.spec = spec;
    cert.backend = std::move(backend_name);
    cert.seed = opt.seed;
    cert.dims["module"] = ops.shape.dimension();

    auto want = [&](Suite s) { return suite == s || suite == Suite::All; };
    if (want(Suite::Relation)) run_relation_suite(field, ops, opt, cert);
    if (want(Suite::Primitive)) run_primitive_suite(field, ops, opt, cert);
    if (want(Suite::Submodule)) run_submodule_suite(field, ops, opt, cert);
    if (want(Suite::Highest)) run_highest_suite(field, ops, opt, cert);
    if (want(Suite::Nilpotent)) run_nilpotent_suite(field, ops, opt, cert);
    if (want(Suite::Steinberg)) {
        bool top = true;
        for (long v : spec.lambda)
            if (v != spec.l - 1) top = false;
        if (suite == Suite::Steinberg || top) run_steinberg_suite(field, ops, opt, cert);
    }
    if (want(Suite::Lowest) && spec.type != LieType::A) run_lowest_suite(field, ops, opt, cert);
    if (want(Suite::Central)) run_central_suite(field, ops, opt, cert);
    if (want(Suite::Irreducible)) run_irreducible_suite(field, ops, opt, cert);
    return cert;
}

}  // namespace nilrep
