#pragma once

#include <vector>

#include "braidcert/braid_word.hpp"
#include "braidcert/hurwitz.hpp"
#include "braidcert/rewrite.hpp"

namespace braidcert::frames {

/// The standard generators conjugated by `conjugator`: the ordered tuple
/// (sigma_1[b], ..., sigma_{n-1}[b]) with a[b] = b^-1 a b.
///
/// Different conjugators may describe the same frame; compare frames
/// element-wise with same_frame().
struct Frame {
  int strands = 2;
  BraidWord conjugator{2};

  static Frame standard(int strands) { return Frame{strands, BraidWord(strands)}; }
};

/// The product F_{i_1} ... F_{i_m} over a frame, kept symbolic as the
/// positive index word i_1 ... i_m.
struct FrameFactorization {
  Frame frame;
  BraidWord indices;
};

/// The n-1 frame elements, i-th equal to sigma_i[b].
std::vector<BraidWord> frame_elements(const Frame& fr);

/// True when both frames have element-wise equal braids.
bool same_frame(const Frame& a, const Frame& b);

/// The tuple whose k-th entry is the frame element named by indices[k].
Factorization realize(const FrameFactorization& ff);

/// Index word (1 2 ... n-1)^n, i.e. the full twist pattern.
BraidWord full_twist_pattern(int strands);

/// Certificate between two full-twist factorizations over one frame.
/// Throws NotEquivalent unless both index words equal the full twist, and
/// std::invalid_argument if the frames differ.
Certificate same_frame_certificate(const FrameFactorization& from,
                                   const FrameFactorization& to,
                                   const rewrite::SearchLimits& limits = {});

/// X_i * Pi ~ Pi * X_{i-1} for 1 < i <= n-1, Pi = X_1 ... X_{n-1}, on tuples
/// of length n.
Certificate pi_shift_certificate(int i, int strands);

/// X_1 * Pi * Pi ~ Pi * Pi * X_{n-1}, on tuples of length 2n-1.
Certificate pi2_shift_certificate(int strands);

/// Takes (X_1 ... X_{n-1})^n to (X_1[X_j] ... X_{n-1}[X_j])^n for any frame X.
///
/// Results are cached per (j, n); the cache is shared across threads.
Certificate one_conj_certificate(int j, int strands);

/// Takes (X_1 ... X_{n-1})^n to (X_1[b] ... X_{n-1}[b])^n for any braid b.
Certificate conj_certificate(const BraidWord& b, int strands);

/// Certificate between full-twist factorizations over arbitrary frames.
/// Throws NotEquivalent unless both realize to the full twist.
Certificate main_theorem_certificate(const FrameFactorization& from,
                                     const FrameFactorization& to,
                                     const rewrite::SearchLimits& limits = {});

}  // namespace braidcert::frames
