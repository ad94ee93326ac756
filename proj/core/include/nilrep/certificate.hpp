#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilrep/serialize.hpp"

namespace nilrep {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    std::optional<Json> witness;  // serialized counterexample vector
};

/// Machine-checkable run record: which checks ran, what they found, and the
/// dimensions and seeds needed to reproduce them.
struct Certificate {
    ModuleSpec spec;
    std::string backend = "exact";
    std::vector<CheckResult> checks;
    std::map<std::string, std::uint64_t> dims;
    std::uint64_t seed = 0;
    std::map<std::string, double> timings_ms;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    Json to_json(bool normalize_timings = false) const;
};

}  // namespace nilrep
