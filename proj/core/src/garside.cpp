#include "braidcert/garside.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

#include "braidcert/errors.hpp"

namespace braidcert::garside {

namespace {

// Simple elements are handled as raw 0-based image vectors here. For a
// permutation braid A with image p (strand starting at position k ends at
// p[k]):
//   A * sigma_i is simple  iff  the strands ending at i, i+1 have not crossed,
//   sigma_i * A is simple  iff  p[i] < p[i+1].
using Simple = std::vector<int>;

Simple identity_simple(int n) {
  Simple s(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) s[k] = k;
  return s;
}

Simple delta_simple(int n) {
  Simple s(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) s[k] = n - 1 - k;
  return s;
}

bool is_identity(const Simple& s) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] != static_cast<int>(k)) return false;
  }
  return true;
}

bool is_delta(const Simple& s) {
  const int n = static_cast<int>(s.size());
  for (int k = 0; k < n; ++k) {
    if (s[k] != n - 1 - k) return false;
  }
  return true;
}

// sigma_i (0-based i) can be the first letter of s.
bool starts_with(const Simple& s, int i) { return s[i] > s[i + 1]; }

// sigma_i (0-based i) can be the last letter of s: the strands now at
// positions i and i+1 have already crossed.
bool ends_with(const Simple& inv, int i) {
  return inv[i] > inv[i + 1];
}

Simple inverse_of(const Simple& s) {
  Simple inv(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) inv[s[k]] = static_cast<int>(k);
  return inv;
}

// Garside automorphism: conjugation by Delta, sigma_i -> sigma_{n-i}.
void flip(Simple& s) {
  const int n = static_cast<int>(s.size());
  Simple out(s.size());
  for (int k = 0; k < n; ++k) out[k] = n - 1 - s[n - 1 - k];
  s = std::move(out);
}

// Make (a, b) left-weighted by sliding generators from the front of b onto
// the back of a. Returns whether anything moved.
bool left_weight(Simple& a, Simple& b) {
  const int n = static_cast<int>(a.size());
  Simple a_inv = inverse_of(a);
  bool changed = false;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (starts_with(b, i) && !ends_with(a_inv, i)) {
        // a <- a * sigma_i: swap the strands ending at i, i+1.
        std::swap(a_inv[i], a_inv[i + 1]);
        a[a_inv[i]] = i;
        a[a_inv[i + 1]] = i + 1;
        // b <- sigma_i^-1 * b: swap the start positions i, i+1.
        std::swap(b[i], b[i + 1]);
        moved = changed = true;
      }
    }
  }
  return changed;
}

class Builder {
 public:
  explicit Builder(int n) : n_(n) {}

  void push_positive(int i) {
    Simple s = identity_simple(n_);
    std::swap(s[i], s[i + 1]);
    append(std::move(s));
  }

  // Delta^r A_1..A_k sigma_i^-1 = Delta^{r-1} tau(A_1)..tau(A_k) tau(X_i),
  // where X_i = sigma_i^-1 Delta.
  void push_negative(int i) {
    --delta_power_;
    for (Simple& f : factors_) flip(f);
    Simple x = delta_simple(n_);
    std::swap(x[i], x[i + 1]);
    flip(x);
    append(std::move(x));
  }

  NormalForm finish() && {
    std::size_t lead = 0;
    while (lead < factors_.size() && is_delta(factors_[lead])) ++lead;
    NormalForm nf;
    nf.strands = n_;
    nf.delta_power = delta_power_ + static_cast<int>(lead);
    for (std::size_t k = lead; k < factors_.size(); ++k) {
      if (is_identity(factors_[k])) break;
      nf.factors.emplace_back(std::move(factors_[k]));
    }
    return nf;
  }

 private:
  void append(Simple s) {
    factors_.push_back(std::move(s));
    for (std::size_t k = factors_.size() - 1; k > 0; --k) {
      if (!left_weight(factors_[k - 1], factors_[k])) break;
    }
    // Leading half twists and trailing identities stay in place during the
    // build; folding them early keeps the factor list short.
    while (!factors_.empty() && is_identity(factors_.back())) factors_.pop_back();
    std::size_t lead = 0;
    while (lead < factors_.size() && is_delta(factors_[lead])) ++lead;
    if (lead > 0) {
      // Delta^r Delta^lead B = Delta^{r+lead} B; the remaining factors are
      // unchanged because Delta is moved without passing anything.
      delta_power_ += static_cast<int>(lead);
      factors_.erase(factors_.begin(), factors_.begin() + static_cast<long>(lead));
    }
  }

  int n_;
  int delta_power_ = 0;
  std::vector<Simple> factors_;
};

}  // namespace

std::ostream& operator<<(std::ostream& os, const NormalForm& nf) {
  os << "D^" << nf.delta_power;
  for (const Permutation& f : nf.factors) os << ' ' << permutation_braid_word(f);
  return os;
}

NormalForm normal_form(const BraidWord& w) {
  Builder b(w.strands());
  for (Letter l : w.letters()) {
    if (l > 0) {
      b.push_positive(l - 1);
    } else {
      b.push_negative(-l - 1);
    }
  }
  return std::move(b).finish();
}

bool equal(const BraidWord& lhs, const BraidWord& rhs) {
  if (lhs.strands() != rhs.strands()) {
    throw MismatchError("cannot compare words on " + std::to_string(lhs.strands()) +
                        " and " + std::to_string(rhs.strands()) + " strands");
  }
  if (lhs == rhs) return true;
  if (lhs.exponent_sum() != rhs.exponent_sum()) return false;
  return normal_form(lhs) == normal_form(rhs);
}

BraidWord permutation_braid_word(const Permutation& p) {
  Simple s(p.zero_based().begin(), p.zero_based().end());
  const int n = p.size();
  std::vector<Letter> out;
  for (bool found = true; found;) {
    found = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (starts_with(s, i)) {
        out.push_back(i + 1);
        std::swap(s[i], s[i + 1]);
        found = true;
        break;
      }
    }
  }
  return BraidWord(n, std::move(out));
}

BraidWord word_of(const NormalForm& nf) {
  std::vector<Letter> out;
  const BraidWord head = half_twist_power(nf.strands, nf.delta_power);
  out.assign(head.letters().begin(), head.letters().end());
  for (const Permutation& f : nf.factors) {
    const BraidWord fw = permutation_braid_word(f);
    out.insert(out.end(), fw.letters().begin(), fw.letters().end());
  }
  return BraidWord(nf.strands, std::move(out));
}

BraidWord compact_word(const NormalForm& nf) {
  const int n = nf.strands;
  if (nf.delta_power >= 0) return word_of(nf);
  const std::size_t s = static_cast<std::size_t>(-nf.delta_power);
  const std::size_t t = std::min(s, nf.factors.size());
  std::vector<Letter> out;
  const BraidWord head = half_twist_power(n, -static_cast<int>(s - t));
  out.assign(head.letters().begin(), head.letters().end());
  for (std::size_t i = 0; i < t; ++i) {
    const auto& img = nf.factors[i].zero_based();
    // dA = A^-1 Delta as a permutation: first undo A, then reverse.
    Simple complement(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) complement[img[k]] = n - 1 - k;
    if ((t - 1 - i) % 2 == 1) flip(complement);
    const BraidWord cw = invert(permutation_braid_word(Permutation(std::move(complement))));
    out.insert(out.end(), cw.letters().begin(), cw.letters().end());
  }
  for (std::size_t i = t; i < nf.factors.size(); ++i) {
    const BraidWord fw = permutation_braid_word(nf.factors[i]);
    out.insert(out.end(), fw.letters().begin(), fw.letters().end());
  }
  return BraidWord(n, std::move(out));
}

BraidWord compact_word(const BraidWord& w) { return compact_word(normal_form(w)); }

PositiveDecomposition positive_decomposition(const BraidWord& w) {
  const NormalForm nf = normal_form(w);
  std::vector<Letter> out;
  for (const Permutation& f : nf.factors) {
    const BraidWord fw = permutation_braid_word(f);
    out.insert(out.end(), fw.letters().begin(), fw.letters().end());
  }
  return {nf.delta_power, BraidWord(w.strands(), std::move(out))};
}

BraidWord positive_conjugator(const BraidWord& b) {
  if (b.is_positive()) return b;
  const PositiveDecomposition d = positive_decomposition(b);
  int power = d.delta_power;
  while (power < 0) power += 2;
  return concat(half_twist_power(b.strands(), power), d.positive_part);
}

}  // namespace braidcert::garside
