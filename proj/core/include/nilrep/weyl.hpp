#pragma once

#include <vector>

#include "nilrep/cartan.hpp"

namespace nilrep {

/// Sequence of simple-reflection indices (1-based), intended to spell a
/// reduced expression.
using ReducedWord = std::vector<int>;

/// Concrete Weyl-group element in the permutation model (type A) or the
/// signed-permutation models (B/C/D). Entry w[k] is the signed image of k+1.
class WeylElem {
  public:
    WeylElem(LieType type, int rank);

    /// Right-multiply by the simple reflection s_i (1-based i).
    void apply(int i);

    long length() const;

    LieType type() const { return type_; }
    const std::vector<int>& images() const { return w_; }

  private:
    LieType type_;
    int rank_;
    std::vector<int> w_;
};

/// A word is reduced exactly when the folded element has length equal to the
/// word length.
bool is_reduced(LieType type, int rank, const ReducedWord& word);

/// Greedy length-ascent word for the longest element; validated reduced and
/// of length equal to the number of positive roots.
ReducedWord default_w0_word(LieType type, int rank);

/// Positive roots beta_k = s_{i_1}...s_{i_{k-1}}(alpha_{i_k}) of a reduced
/// word for w0, in simple-root coordinates.
std::vector<std::vector<int>> roots_of_word(const CartanData& cd, const ReducedWord& word);

}  // namespace nilrep
