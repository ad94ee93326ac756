#include "nilrep/certificate.hpp"

namespace nilrep {

Json Certificate::to_json(bool normalize_timings) const {
    Json j;
    j["schema"] = 1;
    j["spec"] = module_spec_to_json(spec);
    j["backend"] = backend;
    Json cs = Json::array();
    for (const CheckResult& c : checks) {
        Json cj;
        cj["name"] = c.name;
        cj["status"] = c.pass ? "pass" : "fail";
        if (c.witness) cj["witness"] = *c.witness;
        cj["detail"] = c.detail;
        cs.push_back(std::move(cj));
    }
    j["checks"] = std::move(cs);
    Json dj = Json::object();
    for (const auto& [k, v] : dims) dj[k] = v;
    j["dims"] = std::move(dj);
    j["seed"] = seed;
    Json tj = Json::object();
    for (const auto& [k, v] : timings_ms) tj[k] = normalize_timings ? 0.0 : v;
    j["timings_ms"] = std::move(tj);
    return j;
}

}  // namespace nilrep
