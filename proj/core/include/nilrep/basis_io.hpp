#pragma once

#include <istream>
#include <ostream>

#include "nilrep/analysis.hpp"
#include "nilrep/serialize.hpp"

namespace nilrep {

/// Newline-delimited JSON dump: a header object, then one row object per
/// line (streaming friendly for large bases).
template <class F>
void dump_basis_ndjson(std::ostream& out, const F& field, const IndexShape& shape,
                       const ModuleSpec& spec, const SubmoduleBasis<F>& basis) {
    Json header;
    header["schema"] = 1;
    header["kind"] = "basis";
    header["spec"] = module_spec_to_json(spec);
    header["rows"] = basis.dim();
    header["complete"] = basis.complete;
    out << header.dump() << "\n";
    auto order = basis.basis.order();
    for (std::size_t k = 0; k < order.size(); ++k) {
        const auto& row = basis.basis.rows()[order[k]];
        Json j;
        j["pivot"] = row.leading();
        j["prov"] = basis.basis.provenance()[order[k]];
        j["vec"] = sparsevec_to_json(field, shape, row);
        out << j.dump() << "\n";
    }
}

template <class F>
SubmoduleBasis<F> load_basis_ndjson(std::istream& in, const F& field, const IndexShape& shape) {
    std::string line;
    if (!std::getline(in, line)) throw StructuralError("empty basis dump");
    Json header = Json::parse(line);
    if (header.value("kind", "") != "basis")
        throw StructuralError("not a basis dump");
    SubmoduleBasis<F> out{EchelonBasis<F>(field)};
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Json j = Json::parse(line);
        SparseVec<F> row = sparsevec_from_json(field, shape, j.at("vec"));
        if (!out.basis.insert(std::move(row), j.value("prov", std::string{})))
            throw StructuralError("dependent row in basis dump");
    }
    if (out.basis.dim() != header.at("rows").get<std::size_t>())
        throw StructuralError("basis dump row count mismatch");
    out.complete = header.value("complete", false);
    return out;
}

/// Re-checks closure of a loaded basis under every generator without
/// re-spanning: each image must reduce to zero against the rows.
template <class F>
bool closure_check(const F& field, const ModuleOps& ops, const SubmoduleBasis<F>& basis) {
    for (const auto& row : basis.basis.rows())
        for (int i = 1; i <= ops.spec.rank; ++i)
            for (GenKind k : {GenKind::E, GenKind::F, GenKind::T, GenKind::TInv}) {
                SparseVec<F> img = act(field, ops, k, i, row);
                if (!basis.basis.reduce(std::move(img)).is_zero()) return false;
            }
    return true;
}

}  // namespace nilrep
