#include "nilrep/indexing.hpp"

#include <limits>

namespace nilrep {

IndexShape::IndexShape(LieType type, int rank, long l) : type_(type), rank_(rank), l_(l) {
    if (rank < min_rank(type))
        throw DomainError(std::string("rank below minimum for type ") + type_letter(type));
    if (l < 5 || l % 2 == 0) throw DomainError("root order must be odd and >= 5");

    int rows = (type == LieType::D) ? rank - 1 : rank;
    int cols = rank;
    for (int i = 1; i <= rows; ++i)
        for (int j = (type == LieType::A ? i : 1); j <= cols; ++j)
            slots_.emplace_back(i, j);

    lookup_cols_ = cols + 2;
    lookup_.assign(static_cast<std::size_t>(rows + 2) * lookup_cols_, -1);
    for (std::size_t s = 0; s < slots_.size(); ++s)
        lookup_[static_cast<std::size_t>(slots_[s].first) * lookup_cols_ + slots_[s].second] =
            static_cast<int>(s);

    weight_.resize(slots_.size());
    std::uint64_t w = 1;
    for (std::size_t s = 0; s < slots_.size(); ++s) {
        weight_[s] = w;
        if (s + 1 < slots_.size()) {
            if (w > std::numeric_limits<std::uint64_t>::max() / 2 / static_cast<std::uint64_t>(l))
                throw DomainError("index space l^N exceeds the 63-bit encoding range");
            w *= static_cast<std::uint64_t>(l);
        }
    }
    if (w > std::numeric_limits<std::uint64_t>::max() / 2 / static_cast<std::uint64_t>(l))
        throw DomainError("index space l^N exceeds the 63-bit encoding range");
    dim_ = w * static_cast<std::uint64_t>(l);
}

int IndexShape::slot_of(int i, int j) const {
    int rows = (type_ == LieType::D) ? rank_ - 1 : rank_;
    if (i < 1 || i > rows || j < 1 || j > rank_) return -1;
    return lookup_[static_cast<std::size_t>(i) * lookup_cols_ + j];
}

std::uint64_t IndexShape::encode(const MultiIndex& m) const {
    if (m.size() != slots_.size())
        throw StructuralError("multi-index has wrong slot count for this shape");
    std::uint64_t code = 0;
    for (std::size_t s = 0; s < m.size(); ++s) {
        if (m[s] < 0 || m[s] >= l_)
            throw StructuralError("multi-index entry outside [0, l-1]");
        code += static_cast<std::uint64_t>(m[s]) * weight_[s];
    }
    return code;
}

MultiIndex IndexShape::decode(std::uint64_t code) const {
    if (code >= dim_) throw StructuralError("encoded index out of range");
    MultiIndex m(slots_.size());
    for (std::size_t s = 0; s < slots_.size(); ++s) {
        m[s] = static_cast<int>(code % static_cast<std::uint64_t>(l_));
        code /= static_cast<std::uint64_t>(l_);
    }
    return m;
}

std::string IndexShape::name() const {
    return std::string(1, type_letter(type_)) + std::to_string(rank_);
}

}  // namespace nilrep
