#pragma once

#include <string>
#include <vector>

#include "nilrep/errors.hpp"

namespace nilrep {

enum class LieType { A, B, C, D };

char type_letter(LieType t);
LieType type_from_letter(char c);

/// Smallest rank the construction is stated for: A >= 1, C >= 2, B >= 3, D >= 4.
int min_rank(LieType t);

/// Cartan matrix, symmetrizers and root bookkeeping for one of the four
/// classical families.
struct CartanData {
    LieType type;
    int rank;
    std::vector<std::vector<int>> a;  // a[i][j], 0-based
    std::vector<int> d;               // d[i] with d_i a_ij = d_j a_ji

    int positive_roots() const;

    /// Reflection s_i on root coordinates (v = sum c_j alpha_j).
    void reflect(int i, std::vector<int>& c) const;
};

CartanData cartan(LieType type, int rank);

}  // namespace nilrep
