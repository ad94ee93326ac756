#pragma once

#include <vector>

#include "nilrep/indexing.hpp"

namespace nilrep {

/// The highest-weight shift for type B is printed ambiguously in its source;
/// both readings are implemented and the t-eigenvalue certification selects.
enum class BShiftBranch {
    Printed,    // lambda'_j = -2(lambda_j - 2) for j < n
    Corrected,  // lambda'_j = -2(lambda_j + 2) for j < n
};

/// Everything needed to instantiate one module: algebra type, rank, root
/// order, highest weight, and the specialization exponent tables (a and b are
/// stored as integer eps-exponents, per slot of the index grid).
struct ModuleSpec {
    LieType type = LieType::A;
    int rank = 0;
    long l = 0;
    std::vector<long> lambda;          // weight in Z_l^n
    std::vector<long> lambda_shifted;  // integer weight the module is built from
    std::vector<long> a_exp;           // per slot, default all 0
    std::vector<long> b_exp;           // per slot, per-type defaults
    BShiftBranch b_branch = BShiftBranch::Corrected;

    IndexShape shape() const { return IndexShape(type, rank, l); }
};

/// Default specialization tables (a all zero; b per type) on the given shape.
std::pair<std::vector<long>, std::vector<long>> default_params(const IndexShape& shape);

/// Per-type weight shift lambda -> lambda'.
std::vector<long> lambda_shift(LieType type, int rank, const std::vector<long>& lambda,
                               BShiftBranch branch = BShiftBranch::Corrected);

/// Spec with default parameters and the shifted weight filled in.
ModuleSpec make_module_spec(LieType type, int rank, long l, std::vector<long> lambda,
                            BShiftBranch branch = BShiftBranch::Corrected);

bool has_default_params(const IndexShape& shape, const ModuleSpec& spec);

/// The explicit lowest multi-index m^lambda killed by every lowering
/// operator; defined for types B, C, D (entries reduced mod l).
MultiIndex lowest_index(const IndexShape& shape, const std::vector<long>& lambda);

}  // namespace nilrep
