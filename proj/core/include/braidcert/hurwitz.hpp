#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "braidcert/braid_word.hpp"

namespace braidcert {

enum class MoveDirection { kForward, kInverse };

/// R_k (forward) or R_k^-1 (inverse), acting on entries k and k+1 (1-based).
///   forward: (t_k, t_{k+1}) -> (t_k t_{k+1} t_k^-1, t_k)
///   inverse: (t_k, t_{k+1}) -> (t_{k+1}, t_{k+1}^-1 t_k t_{k+1})
struct HurwitzMove {
  int k = 1;
  MoveDirection direction = MoveDirection::kForward;

  HurwitzMove inverse() const;
  friend bool operator==(const HurwitzMove&, const HurwitzMove&) = default;
};

std::ostream& operator<<(std::ostream& os, const HurwitzMove& m);

struct Certificate;

/// An ordered tuple (t_1, ..., t_m) of braids, read as the factorization
/// t_1 * ... * t_m of its product. Entries are kept freely reduced.
class Factorization {
 public:
  explicit Factorization(int strands) : strands_(strands) {}
  Factorization(int strands, std::vector<BraidWord> entries);

  int strands() const noexcept { return strands_; }
  std::size_t length() const noexcept { return entries_.size(); }
  const std::vector<BraidWord>& entries() const noexcept { return entries_; }
  const BraidWord& operator[](std::size_t i) const { return entries_[i]; }

  /// Freely reduced concatenation of all entries.
  BraidWord product() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  friend Factorization apply_move(Factorization&& f, const HurwitzMove& m);
  friend Factorization replay(const Factorization& f, const Certificate& c);
  int strands_;
  std::vector<BraidWord> entries_;
};

std::ostream& operator<<(std::ostream& os, const Factorization& f);

/// (sigma_1, ..., sigma_{n-1}) repeated n times: n(n-1) one-letter entries.
Factorization delta_squared_factorization(int strands);

/// A replayable witness of Hurwitz equivalence between tuples of length
/// source_length.
struct Certificate {
  std::size_t source_length = 0;
  std::vector<HurwitzMove> moves;

  std::size_t size() const noexcept { return moves.size(); }
  bool empty() const noexcept { return moves.empty(); }

  /// Throws std::out_of_range if some move does not fit source_length.
  void validate() const;

  /// Append `next`, which must act on tuples of the same length.
  Certificate& append(const Certificate& next);
  /// The certificate undoing this one: moves reversed, directions flipped.
  Certificate reversed() const;
  /// This certificate acting on a window starting `offset` entries into a
  /// tuple of `new_length` entries.
  Certificate shifted(std::size_t offset, std::size_t new_length) const;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Literal action of one move; throws std::out_of_range for a bad k.
Factorization apply_move(const Factorization& f, const HurwitzMove& m);
Factorization apply_move(Factorization&& f, const HurwitzMove& m);

/// Apply the certificate's moves left to right. Throws MismatchError if
/// the certificate was issued for a different tuple length.
///
/// Literal conjugation makes entry words grow exponentially along long
/// certificates, so an entry that outgrows 2n^2 letters is re-spelled with
/// garside::compact_word when that is shorter. Entries of the result are
/// therefore equal as braids, not letter for letter, to a purely literal
/// replay.
Factorization replay(const Factorization& f, const Certificate& c);

struct Verdict {
  bool ok = false;
  /// 0-based index of the first entry that differs, when !ok and the
  /// lengths agree.
  std::optional<std::size_t> first_mismatch;
  std::string diagnostic;

  explicit operator bool() const noexcept { return ok; }
};

/// True iff replay(from, c) equals `to` entry by entry as braids. Never
/// throws; problems are reported in the verdict.
Verdict verify_certificate(const Factorization& from, const Factorization& to,
                           const Certificate& c);

/// Entry-wise braid equality of two tuples.
bool entrywise_equal(const Factorization& a, const Factorization& b);

struct OrbitSearchLimits {
  int max_depth = 6;
  std::size_t max_states = 1'000'000;
};

/// Bidirectional breadth-first search over the Hurwitz orbit, keyed on the
/// normal forms of the entries.
///
/// Returns a certificate leading from `from` to `to` of length at most
/// max_depth, or nullopt when none exists within that depth. Throws
/// NotEquivalent if the products differ and BudgetExhausted once more than
/// max_states distinct tuples have been stored. A nullopt is not a proof
/// of inequivalence.
std::optional<Certificate> orbit_search(const Factorization& from,
                                        const Factorization& to,
                                        const OrbitSearchLimits& limits = {});

}  // namespace braidcert
