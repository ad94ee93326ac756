#include "nilrep/serialize.hpp"

namespace nilrep {

namespace {

Json slot_exps_to_json(const IndexShape& shape, const std::vector<std::pair<int, int>>& exps) {
    Json out = Json::array();
    for (const auto& [s, e] : exps) {
        auto [i, j] = shape.slot(static_cast<std::size_t>(s));
        Json entry;
        entry["i"] = i;
        entry["j"] = j;
        entry["e"] = e;
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace

Json genop_to_json(const IndexShape& shape, const GenOp& op) {
    Json terms = Json::array();
    for (const GenTerm& t : op.terms) {
        Json term;
        term["brace_d"] = t.diag.brace_d;
        term["z_exponents"] = slot_exps_to_json(shape, t.diag.exps);
        term["eps_offset"] = t.diag.eps_offset;
        term["x_shift"] = slot_exps_to_json(shape, t.shift.exps);
        if (t.eps_prefactor != 0) term["eps_prefactor"] = t.eps_prefactor;
        terms.push_back(std::move(term));
    }
    return terms;
}

Json module_spec_to_json(const ModuleSpec& spec) {
    Json j;
    j["type"] = std::string(1, type_letter(spec.type));
    j["rank"] = spec.rank;
    j["ell"] = spec.l;
    j["lambda"] = spec.lambda;
    j["lambda_shifted"] = spec.lambda_shifted;
    j["a_exponents"] = spec.a_exp;
    j["b_exponents"] = spec.b_exp;
    if (spec.type == LieType::B)
        j["b_shift_branch"] =
            spec.b_branch == BShiftBranch::Printed ? "printed" : "corrected";
    return j;
}

ModuleSpec module_spec_from_json(const Json& j) {
    ModuleSpec spec;
    spec.type = type_from_letter(j.at("type").get<std::string>().at(0));
    spec.rank = j.at("rank").get<int>();
    spec.l = j.at("ell").get<long>();
    spec.lambda = j.at("lambda").get<std::vector<long>>();
    spec.lambda_shifted = j.at("lambda_shifted").get<std::vector<long>>();
    spec.a_exp = j.at("a_exponents").get<std::vector<long>>();
    spec.b_exp = j.at("b_exponents").get<std::vector<long>>();
    if (j.contains("b_shift_branch"))
        spec.b_branch = j.at("b_shift_branch").get<std::string>() == "printed"
                            ? BShiftBranch::Printed
                            : BShiftBranch::Corrected;
    return spec;
}

}  // namespace nilrep
