#pragma once

#include <ostream>
#include <vector>

#include "braidcert/braid_word.hpp"

namespace braidcert::garside {

/// Left normal form Delta^r * A_1 * ... * A_k.
///
/// Each A_i is a permutation braid encoded by its image in S_n (the
/// projection of braid_word.hpp, so a factor's permutation is
/// permutation_image of any positive word for it). No A_i is the identity
/// or the half twist, and every adjacent pair is left-weighted: each
/// generator that can start A_{i+1} already ends A_i.
///
/// Two words represent the same braid iff their normal forms compare equal.
struct NormalForm {
  int strands = 2;
  int delta_power = 0;
  std::vector<Permutation> factors;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
  friend auto operator<=>(const NormalForm&, const NormalForm&) = default;
};

std::ostream& operator<<(std::ostream& os, const NormalForm& nf);

NormalForm normal_form(const BraidWord& w);

/// Word equality in B_n. Throws MismatchError on differing strand counts.
bool equal(const BraidWord& lhs, const BraidWord& rhs);

/// The positive word spelling a permutation braid: a reduced expression,
/// choosing the smallest available generator at each step.
BraidWord permutation_braid_word(const Permutation& p);

/// A word for the normal form: the half-twist power followed by the
/// factor words.
BraidWord word_of(const NormalForm& nf);

/// A short word for the braid: Delta^r A_1..A_k for r >= 0, otherwise the
/// left fraction Delta^{-(s-t)} tau^{t-1}(dA_1)^-1 ... (dA_t)^-1 A_{t+1}..A_k
/// with s = -r, t = min(s, k) and dA = A^-1 Delta.
BraidWord compact_word(const NormalForm& nf);
BraidWord compact_word(const BraidWord& w);

struct PositiveDecomposition {
  int delta_power = 0;
  BraidWord positive_part;
};

/// w = Delta^r * P with P positive and r maximal.
PositiveDecomposition positive_decomposition(const BraidWord& w);

/// A positive word q that conjugates exactly like `b`: q = Delta^{2m} b
/// for the least m >= 0 making it positive. A word that is already
/// positive is returned unchanged.
BraidWord positive_conjugator(const BraidWord& b);

}  // namespace braidcert::garside
