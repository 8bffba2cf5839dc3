#pragma once

// Reference implementations used only by the tests. They deliberately avoid
// the library's normal form and rewrite code.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <random>
#include <set>
#include <vector>

#include "braidcert/braid_word.hpp"
#include "braidcert/hurwitz.hpp"

namespace oracle {

using Letters = std::vector<int>;

inline Letters letters_of(const braidcert::BraidWord& w) {
  return {w.letters().begin(), w.letters().end()};
}

// Every positive word reachable from `seed` by the two defining relations,
// applied literally at every position in both directions.
inline std::set<Letters> positive_class(const Letters& seed) {
  std::set<Letters> seen{seed};
  std::deque<Letters> todo{seed};
  while (!todo.empty()) {
    Letters w = std::move(todo.front());
    todo.pop_front();
    auto visit = [&](Letters v) {
      if (seen.insert(v).second) todo.push_back(std::move(v));
    };
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      if (std::abs(w[p] - w[p + 1]) > 1) {
        Letters v = w;
        std::swap(v[p], v[p + 1]);
        visit(std::move(v));
      }
      if (p + 2 < w.size() && w[p] == w[p + 2] && std::abs(w[p] - w[p + 1]) == 1) {
        Letters v = w;
        v[p] = v[p + 2] = w[p + 1];
        v[p + 1] = w[p];
        visit(std::move(v));
      }
    }
  }
  return seen;
}

// Unreduced Burau representation over Z/p with t fixed. Equal braids give
// equal matrices, so a mismatch proves two words differ.
class Burau {
 public:
  static constexpr std::uint64_t kPrime = 1'000'000'007ULL;

  explicit Burau(int strands, std::uint64_t t = 48'271) : n_(strands), t_(t % kPrime) {
    t_inv_ = power(t_, kPrime - 2);
  }

  using Matrix = std::vector<std::uint64_t>;

  Matrix of(const Letters& word) const {
    Matrix m(static_cast<std::size_t>(n_ * n_), 0);
    for (int i = 0; i < n_; ++i) m[static_cast<std::size_t>(i * n_ + i)] = 1;
    for (int l : word) m = times_generator(m, l);
    return m;
  }

  Matrix of(const braidcert::BraidWord& w) const { return of(letters_of(w)); }

 private:
  static std::uint64_t power(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    for (b %= kPrime; e; e >>= 1, b = b * b % kPrime) {
      if (e & 1) r = r * b % kPrime;
    }
    return r;
  }

  // Right multiplication by the 2x2 block of sigma_i^{+-1} at rows i-1, i.
  Matrix times_generator(const Matrix& m, int letter) const {
    const int i = std::abs(letter) - 1;
    std::uint64_t a, b, c, d;
    if (letter > 0) {
      a = (1 + kPrime - t_) % kPrime, b = t_, c = 1, d = 0;
    } else {
      a = 0, b = 1, c = t_inv_, d = (1 + kPrime - t_inv_) % kPrime;
    }
    Matrix out = m;
    for (int r = 0; r < n_; ++r) {
      const std::uint64_t x = m[static_cast<std::size_t>(r * n_ + i)];
      const std::uint64_t y = m[static_cast<std::size_t>(r * n_ + i + 1)];
      out[static_cast<std::size_t>(r * n_ + i)] = (x * a + y * c) % kPrime;
      out[static_cast<std::size_t>(r * n_ + i + 1)] = (x * b + y * d) % kPrime;
    }
    return out;
  }

  int n_;
  std::uint64_t t_;
  std::uint64_t t_inv_;
};

inline braidcert::BraidWord random_word(std::mt19937& rng, int strands, int max_length,
                                        bool positive = false) {
  std::uniform_int_distribution<int> len(0, max_length);
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::bernoulli_distribution neg(positive ? 0.0 : 0.5);
  std::vector<int> letters(static_cast<std::size_t>(len(rng)));
  for (int& l : letters) l = neg(rng) ? -gen(rng) : gen(rng);
  return braidcert::BraidWord(strands, std::move(letters));
}

inline braidcert::Factorization random_factorization(std::mt19937& rng, int strands,
                                                     int length, int max_entry) {
  std::vector<braidcert::BraidWord> entries;
  for (int k = 0; k < length; ++k) entries.push_back(random_word(rng, strands, max_entry));
  return braidcert::Factorization(strands, std::move(entries));
}

// Apply `steps` random relation applications to a positive word.
inline Letters scramble_positive(std::mt19937& rng, Letters w, int steps) {
  for (int s = 0; s < steps; ++s) {
    std::vector<std::pair<std::size_t, bool>> options;
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      if (std::abs(w[p] - w[p + 1]) > 1) options.emplace_back(p, false);
      if (p + 2 < w.size() && w[p] == w[p + 2] && std::abs(w[p] - w[p + 1]) == 1) {
        options.emplace_back(p, true);
      }
    }
    if (options.empty()) break;
    const auto [p, triple] =
        options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    if (triple) {
      const int a = w[p];
      w[p] = w[p + 2] = w[p + 1];
      w[p + 1] = a;
    } else {
      std::swap(w[p], w[p + 1]);
    }
  }
  return w;
}

// Every positive word of the given length over n strands.
inline std::vector<Letters> all_positive_words(int strands, int length) {
  std::vector<Letters> out{Letters{}};
  for (int k = 0; k < length; ++k) {
    std::vector<Letters> next;
    for (const Letters& w : out) {
      for (int g = 1; g < strands; ++g) {
        Letters v = w;
        v.push_back(g);
        next.push_back(std::move(v));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace oracle
