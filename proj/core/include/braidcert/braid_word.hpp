#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace braidcert {

/// Signed Artin generator index: +i is sigma_i, -i is its inverse.
/// Indices are 1-based, so valid letters on n strands lie in
/// {-(n-1), ..., -1, 1, ..., n-1}.
using Letter = int;

/// A word in the Artin generators of B_n.
///
/// Words are kept literal: construction validates letters but never
/// reduces. Use free_reduce(), or concat() which reduces, when a reduced
/// representative is needed. Equality of group elements is decided by
/// garside::equal, not by operator== (which is literal).
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands);
  BraidWord(int strands, std::vector<Letter> letters);
  BraidWord(int strands, std::initializer_list<Letter> letters);

  int strands() const noexcept { return strands_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  /// True when no letter is an inverse generator.
  bool is_positive() const noexcept;
  /// Sum of the signs of all letters (abelianization B_n -> Z).
  int exponent_sum() const noexcept;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 2;
  std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, const BraidWord& w);

/// A bijection on {1, ..., n}. Stored 0-based.
class Permutation {
 public:
  explicit Permutation(int size = 0);  // identity
  explicit Permutation(std::vector<int> zero_based_images);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  /// 1-based image of a 1-based point.
  int image(int point) const { return images_.at(point - 1) + 1; }
  std::span<const int> zero_based() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  /// Apply *this first, then `next`.
  Permutation then(const Permutation& next) const;
  /// Cycle lengths in non-increasing order, fixed points included.
  std::vector<int> cycle_type() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// Parse whitespace-separated signed generator indices. Throws ParseError
/// naming the offending token. The result is not reduced.
BraidWord word_from_text(std::string_view text, int strands);
/// Inverse of word_from_text: letters joined by single spaces.
std::string word_to_text(const BraidWord& w);

BraidWord free_reduce(const BraidWord& w);
BraidWord invert(const BraidWord& w);
/// Juxtapose then freely reduce. Throws MismatchError on differing n.
BraidWord concat(const BraidWord& lhs, const BraidWord& rhs);

/// a[b] := b^-1 a b, freely reduced.
///
/// This is the convention under which an inverse Hurwitz move on a pair
/// (x, y) produces (y, x[y]).
BraidWord conjugate(const BraidWord& a, const BraidWord& b);

/// The positive half twist sigma_1 (sigma_2 sigma_1) ... (sigma_{n-1} ... sigma_1).
BraidWord half_twist(int strands);
/// The half twist raised to an integer power (negative powers inverted).
BraidWord half_twist_power(int strands, int power);
/// (sigma_1 ... sigma_{n-1})^n as a flat word.
BraidWord full_twist(int strands);

/// Image under B_n -> S_n, sigma_i -> (i i+1). A homomorphism:
/// image(uv) == image(u).then(image(v)).
Permutation permutation_image(const BraidWord& w);

}  // namespace braidcert
