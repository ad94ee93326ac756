#include "nilrep/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace nilrep {

WeylElem::WeylElem(LieType type, int rank) : type_(type), rank_(rank) {
    int sz = (type == LieType::A) ? rank + 1 : rank;
    w_.resize(sz);
    std::iota(w_.begin(), w_.end(), 1);
}

void WeylElem::apply(int i) {
    if (i < 1 || i > rank_) throw StructuralError("reflection index out of range");
    switch (type_) {
        case LieType::A:
            std::swap(w_[i - 1], w_[i]);
            break;
        case LieType::B:
        case LieType::C:
            if (i < rank_)
                std::swap(w_[i - 1], w_[i]);
            else
                w_[rank_ - 1] = -w_[rank_ - 1];
            break;
        case LieType::D:
            if (i < rank_) {
                std::swap(w_[i - 1], w_[i]);
            } else {
                std::swap(w_[rank_ - 2], w_[rank_ - 1]);
                w_[rank_ - 2] = -w_[rank_ - 2];
                w_[rank_ - 1] = -w_[rank_ - 1];
            }
            break;
    }
}

long WeylElem::length() const {
    // number of positive roots mapped to negative ones
    std::size_t n = w_.size();
    if (type_ == LieType::A) {
        long inv = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (w_[i] > w_[j]) ++inv;
        return inv;
    }
    long count = 0;
    // e_i - e_j and e_i + e_j, i < j
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            int a = w_[i], b = w_[j];
            bool diff_neg =
                (a > 0 && b > 0 && a > b) || (a < 0 && b < 0 && a > b) || (a < 0 && b > 0);
            bool sum_neg = (a < 0 && b < 0) || ((a > 0) != (b > 0) && a + b > 0);
            if (diff_neg) ++count;
            if (sum_neg) ++count;
        }
    if (type_ == LieType::B || type_ == LieType::C)
        for (int v : w_)
            if (v < 0) ++count;
    return count;
}

bool is_reduced(LieType type, int rank, const ReducedWord& word) {
    WeylElem w(type, rank);
    for (int i : word) w.apply(i);
    return w.length() == static_cast<long>(word.size());
}

ReducedWord default_w0_word(LieType type, int rank) {
    CartanData cd = cartan(type, rank);
    long target = cd.positive_roots();
    WeylElem w(type, rank);
    ReducedWord word;
    long len = 0;
    while (len < target) {
        bool advanced = false;
        for (int i = 1; i <= rank; ++i) {
            WeylElem next = w;
            next.apply(i);
            if (next.length() > len) {
                w = next;
                len = next.length();
                word.push_back(i);
                advanced = true;
                break;
            }
        }
        if (!advanced) throw InternalError("length ascent stalled before the longest element");
    }
    if (!is_reduced(type, rank, word))
        throw InternalError("default longest-element word failed the reduced check");
    return word;
}

std::vector<std::vector<int>> roots_of_word(const CartanData& cd, const ReducedWord& word) {
    std::vector<std::vector<int>> roots;
    roots.reserve(word.size());
    for (std::size_t k = 0; k < word.size(); ++k) {
        std::vector<int> c(cd.rank, 0);
        c[word[k] - 1] = 1;
        for (std::size_t j = k; j-- > 0;) cd.reflect(word[j] - 1, c);
        roots.push_back(std::move(c));
    }
    return roots;
}

}  // namespace nilrep
