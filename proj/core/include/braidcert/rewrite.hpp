#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include "braidcert/braid_word.hpp"
#include "braidcert/hurwitz.hpp"

namespace braidcert::rewrite {

enum class RelationKind { kCommutation, kTriple };
enum class StepDirection { kForward, kBackward };

/// One application of a defining relation to a positive word.
///
/// Commutation at p swaps letters p and p+1 (|a - b| > 1). Triple at p
/// rewrites a b a into b a b (letters p..p+2, |a - b| = 1). Both rewrites
/// are their own inverses on words, so the direction only chooses how the
/// step is realized by Hurwitz moves: forward uses forward moves, backward
/// uses the inverse moves in reverse order.
struct RelationStep {
  std::size_t position = 0;
  RelationKind kind = RelationKind::kCommutation;
  StepDirection direction = StepDirection::kForward;

  friend bool operator==(const RelationStep&, const RelationStep&) = default;
};

std::ostream& operator<<(std::ostream& os, const RelationStep& s);

/// Whether `step` may be applied to `word`.
bool applicable(const BraidWord& word, const RelationStep& step);

/// Throws std::invalid_argument naming the position and kind when the step
/// does not apply.
BraidWord apply_relation(const BraidWord& word, const RelationStep& step);

struct SearchLimits {
  std::size_t max_states = 1'000'000;
  /// After stripping a common prefix and suffix, words up to this length
  /// are joined by one bidirectional search. Longer ones are aligned one
  /// leading letter at a time by left-divisor recursion, with every emitted
  /// step charged against max_states.
  std::size_t bidirectional_max_length = 12;
};

/// A sequence of relation steps turning `from` into `to` letter for letter.
///
/// Both words must be positive with the same strand count. Throws
/// NotEquivalent when they are different braids and BudgetExhausted when
/// the search stores more than max_states words or emits more than that
/// many steps. Search order is fixed (positions ascending, commutation
/// before triple), so the result is reproducible.
std::vector<RelationStep> rewrite_path(const BraidWord& from, const BraidWord& to,
                                       const SearchLimits& limits = {});

/// Hurwitz moves realizing `step` on a tuple whose entries at the affected
/// positions satisfy the relation.
///   commutation at p -> R_{p+1}
///   triple at p      -> R_{p+2}, R_{p+1}
/// Backward steps use the inverse moves in reverse order.
std::vector<HurwitzMove> step_to_moves(const RelationStep& step);

/// Certificate between two tuples of frame generators given by positive
/// index words (letter i standing for the i-th element of any frame).
/// Throws NotEquivalent if the words are different braids.
Certificate positive_he_certificate(const BraidWord& from, const BraidWord& to,
                                    const SearchLimits& limits = {});

}  // namespace braidcert::rewrite
