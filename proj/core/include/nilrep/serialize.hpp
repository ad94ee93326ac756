#pragma once

#include <json.hpp>

#include "nilrep/generators.hpp"
#include "nilrep/sparsevec.hpp"

namespace nilrep {

using Json = nlohmann::ordered_json;

/// {"l": .., "shape": "C2", "terms": [{"m": [...], "c": "<coeff text>"}]}
/// Round trips bit-exactly: terms are emitted in encoded-index order and
/// coefficients in canonical text form.
template <class F>
Json sparsevec_to_json(const F& field, const IndexShape& shape, const SparseVec<F>& v) {
    Json terms = Json::array();
    for (const auto& [code, c] : v.terms()) {
        Json t;
        t["m"] = shape.decode(code);
        t["c"] = field.to_string(c);
        terms.push_back(std::move(t));
    }
    Json out;
    out["l"] = shape.root_order();
    out["shape"] = shape.name();
    out["terms"] = std::move(terms);
    return out;
}

template <class F>
SparseVec<F> sparsevec_from_json(const F& field, const IndexShape& shape, const Json& j) {
    if (j.at("l").get<long>() != shape.root_order() ||
        j.at("shape").get<std::string>() != shape.name())
        throw StructuralError("serialized vector belongs to a different module");
    SparseVec<F> v;
    for (const Json& t : j.at("terms")) {
        MultiIndex m = t.at("m").get<MultiIndex>();
        v.add_term(field, shape.encode(m), field.parse(t.at("c").get<std::string>()));
    }
    return v;
}

/// Term-by-term dump of a generator word, e.g. for diffing transcriptions.
Json genop_to_json(const IndexShape& shape, const GenOp& op);
Json module_spec_to_json(const ModuleSpec& spec);
ModuleSpec module_spec_from_json(const Json& j);

}  // namespace nilrep
