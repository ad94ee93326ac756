#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nilrep/cartan.hpp"
#include "nilrep/mod_arith.hpp"

namespace nilrep {

/// Point of the exponent grid labeling the tensor basis; entries in [0, l-1]
/// laid out row-major over the shape's slots.
using MultiIndex = std::vector<int>;

/// The per-type exponent grid: A uses the upper triangle 1 <= i <= j <= n,
/// B and C the full n x n square, D the rows 1..n-1 by columns 1..n. The slot
/// count always equals the number of positive roots.
class IndexShape {
  public:
    IndexShape(LieType type, int rank, long l);

    LieType type() const { return type_; }
    int rank() const { return rank_; }
    long root_order() const { return l_; }

    std::size_t slot_count() const { return slots_.size(); }
    const std::vector<std::pair<int, int>>& slots() const { return slots_; }
    std::pair<int, int> slot(std::size_t s) const { return slots_[s]; }

    /// Slot of grid position (i, j), 1-based; -1 when (i, j) is out of range
    /// (including i or j <= 0), which callers treat per the vanishing
    /// conventions of the generator formulas.
    int slot_of(int i, int j) const;

    /// Total dimension l^N; shape construction rejects sizes above 2^63.
    std::uint64_t dimension() const { return dim_; }

    std::uint64_t encode(const MultiIndex& m) const;
    MultiIndex decode(std::uint64_t code) const;

    /// Weight of one slot in the mixed-radix encoding (l^s).
    std::uint64_t radix_weight(std::size_t s) const { return weight_[s]; }

    std::string name() const;  // e.g. "C2"

  private:
    LieType type_;
    int rank_;
    long l_;
    std::vector<std::pair<int, int>> slots_;
    std::vector<int> lookup_;  // (rows+2) x (cols+2), -1 padded
    int lookup_cols_ = 0;
    std::vector<std::uint64_t> weight_;
    std::uint64_t dim_ = 0;
};

}  // namespace nilrep
