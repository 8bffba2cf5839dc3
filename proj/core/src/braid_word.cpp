#include "braidcert/braid_word.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>

#include "braidcert/errors.hpp"

namespace braidcert {

namespace {

void check_strands(int strands) {
  if (strands < 2) {
    throw std::invalid_argument("strand count must be at least 2, got " +
                                std::to_string(strands));
  }
}

void check_letter(int strands, Letter l) {
  if (l == 0 || std::abs(l) >= strands) {
    throw std::out_of_range("generator index " + std::to_string(l) +
                            " out of range for B_" + std::to_string(strands));
  }
}

void require_same_strands(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    throw MismatchError("words on different strand counts: " +
                        std::to_string(a.strands()) + " vs " +
                        std::to_string(b.strands()));
  }
}

// Append with on-the-fly cancellation; `out` stays freely reduced.
void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == -l) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

BraidWord::BraidWord(int strands) : strands_(strands) { check_strands(strands); }

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  check_strands(strands);
  for (Letter l : letters_) check_letter(strands, l);
}

BraidWord::BraidWord(int strands, std::initializer_list<Letter> letters)
    : BraidWord(strands, std::vector<Letter>(letters)) {}

bool BraidWord::is_positive() const noexcept {
  return std::all_of(letters_.begin(), letters_.end(),
                     [](Letter l) { return l > 0; });
}

int BraidWord::exponent_sum() const noexcept {
  int sum = 0;
  for (Letter l : letters_) sum += l > 0 ? 1 : -1;
  return sum;
}

std::ostream& operator<<(std::ostream& os, const BraidWord& w) {
  os << '[';
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i) os << ' ';
    os << w[i];
  }
  return os << ']';
}

Permutation::Permutation(int size) : images_(static_cast<std::size_t>(size)) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> zero_based_images)
    : images_(std::move(zero_based_images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[v]) {
      throw std::invalid_argument("images do not form a bijection");
    }
    seen[v] = true;
  }
}

bool Permutation::is_identity() const noexcept {
  for (int i = 0; i < size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) {
    throw MismatchError("composing permutations of different sizes");
  }
  std::vector<int> out(images_.size());
  for (int i = 0; i < size(); ++i) out[i] = next.images_[images_[i]];
  return Permutation(std::move(out));
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (int x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  os << '(';
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) os << ' ';
    os << p.image(i);
  }
  return os << ')';
}

BraidWord word_from_text(std::string_view text, int strands) {
  check_strands(strands);
  std::vector<Letter> letters;
  std::size_t pos = 0;
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',';
  };
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_space(text[end])) ++end;
    std::string_view token = text.substr(pos, end - pos);
    std::string_view digits = token;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() ||
        digits.empty()) {
      throw ParseError("not a signed integer: '" + std::string(token) + "'");
    }
    if (value == 0 || std::abs(value) >= strands) {
      throw ParseError("generator index out of range for B_" +
                       std::to_string(strands) + ": '" + std::string(token) +
                       "'");
    }
    letters.push_back(value);
    pos = end;
  }
  return BraidWord(strands, std::move(letters));
}

std::string word_to_text(const BraidWord& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i) os << ' ';
    os << w[i];
  }
  return os.str();
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (Letter l : w.letters()) push_reduced(out, l);
  return BraidWord(w.strands(), std::move(out));
}

BraidWord invert(const BraidWord& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  for (Letter& l : out) l = -l;
  return BraidWord(w.strands(), std::move(out));
}

BraidWord concat(const BraidWord& lhs, const BraidWord& rhs) {
  require_same_strands(lhs, rhs);
  std::vector<Letter> out;
  out.reserve(lhs.length() + rhs.length());
  for (Letter l : lhs.letters()) push_reduced(out, l);
  for (Letter l : rhs.letters()) push_reduced(out, l);
  return BraidWord(lhs.strands(), std::move(out));
}

BraidWord conjugate(const BraidWord& a, const BraidWord& b) {
  require_same_strands(a, b);
  return concat(concat(invert(b), a), b);
}

BraidWord half_twist(int strands) {
  check_strands(strands);
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(strands * (strands - 1) / 2));
  for (int top = 1; top < strands; ++top) {
    for (int i = top; i >= 1; --i) out.push_back(i);
  }
  return BraidWord(strands, std::move(out));
}

BraidWord half_twist_power(int strands, int power) {
  const BraidWord unit = power >= 0 ? half_twist(strands) : invert(half_twist(strands));
  std::vector<Letter> out;
  for (int k = 0; k < std::abs(power); ++k) {
    out.insert(out.end(), unit.letters().begin(), unit.letters().end());
  }
  return BraidWord(strands, std::move(out));
}

BraidWord full_twist(int strands) {
  check_strands(strands);
  std::vector<Letter> out;
  for (int block = 0; block < strands; ++block) {
    for (int i = 1; i < strands; ++i) out.push_back(i);
  }
  return BraidWord(strands, std::move(out));
}

Permutation permutation_image(const BraidWord& w) {
  // Track which point sits at each position; the result maps a start
  // position to its final position.
  std::vector<int> at(static_cast<std::size_t>(w.strands()));
  std::iota(at.begin(), at.end(), 0);
  for (Letter l : w.letters()) {
    int i = std::abs(l) - 1;
    std::swap(at[i], at[i + 1]);
  }
  std::vector<int> images(at.size());
  for (int pos = 0; pos < w.strands(); ++pos) images[at[pos]] = pos;
  return Permutation(std::move(images));
}

}  // namespace braidcert
