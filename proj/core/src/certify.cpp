#include "nilrep/certify.hpp"

namespace nilrep {

Suite suite_from_name(const std::string& name) {
    if (name == "relation" || name == "relations") return Suite::Relation;
    if (name == "primitive") return Suite::Primitive;
    if (name == "submodule") return Suite::Submodule;
    if (name == "highest") return Suite::Highest;
    if (name == "nilpotent") return Suite::Nilpotent;
    if (name == "steinberg") return Suite::Steinberg;
    if (name == "lowest") return Suite::Lowest;
    if (name == "central") return Suite::Central;
    if (name == "irreducible") return Suite::Irreducible;
    if (name == "all") return Suite::All;
    throw StructuralError("unknown suite '" + name + "'");
}

std::string suite_name(Suite s) {
    switch (s) {
        case Suite::Relation: return "relation";
        case Suite::Primitive: return "primitive";
        case Suite::Submodule: return "submodule";
        case Suite::Highest: return "highest";
        case Suite::Nilpotent: return "nilpotent";
        case Suite::Steinberg: return "steinberg";
        case Suite::Lowest: return "lowest";
        case Suite::Central: return "central";
        case Suite::Irreducible: return "irreducible";
        case Suite::All: return "all";
    }
    throw InternalError("bad Suite");
}

}  // namespace nilrep
