#include "braidcert/hurwitz.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "braidcert/errors.hpp"
#include "braidcert/garside.hpp"

namespace braidcert {

HurwitzMove HurwitzMove::inverse() const {
  return {k, direction == MoveDirection::kForward ? MoveDirection::kInverse
                                                  : MoveDirection::kForward};
}

std::ostream& operator<<(std::ostream& os, const HurwitzMove& m) {
  os << 'R' << m.k;
  if (m.direction == MoveDirection::kInverse) os << "^-1";
  return os;
}

Factorization::Factorization(int strands, std::vector<BraidWord> entries)
    : strands_(strands), entries_(std::move(entries)) {
  for (BraidWord& e : entries_) {
    if (e.strands() != strands_) {
      throw MismatchError("factorization entry on " + std::to_string(e.strands()) +
                          " strands in a tuple over " + std::to_string(strands_));
    }
    e = free_reduce(e);
  }
}

BraidWord Factorization::product() const {
  BraidWord acc(strands_);
  for (const BraidWord& e : entries_) acc = concat(acc, e);
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Factorization& f) {
  os << '(';
  for (std::size_t i = 0; i < f.length(); ++i) {
    if (i) os << ", ";
    os << f[i];
  }
  return os << ')';
}

Factorization delta_squared_factorization(int strands) {
  if (strands < 2) {
    throw std::invalid_argument("full twist needs at least 2 strands");
  }
  std::vector<BraidWord> entries;
  entries.reserve(static_cast<std::size_t>(strands * (strands - 1)));
  for (int block = 0; block < strands; ++block) {
    for (int i = 1; i < strands; ++i) entries.emplace_back(strands, std::vector<Letter>{i});
  }
  return Factorization(strands, std::move(entries));
}

void Certificate::validate() const {
  for (const HurwitzMove& m : moves) {
    if (m.k < 1 || static_cast<std::size_t>(m.k) >= source_length) {
      std::ostringstream os;
      os << "move " << m << " does not fit a tuple of length " << source_length;
      throw std::out_of_range(os.str());
    }
  }
}

Certificate& Certificate::append(const Certificate& next) {
  if (next.source_length != source_length) {
    throw MismatchError("cannot chain certificates for lengths " +
                        std::to_string(source_length) + " and " +
                        std::to_string(next.source_length));
  }
  moves.insert(moves.end(), next.moves.begin(), next.moves.end());
  return *this;
}

Certificate Certificate::reversed() const {
  Certificate out{source_length, {}};
  out.moves.reserve(moves.size());
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) out.moves.push_back(it->inverse());
  return out;
}

Certificate Certificate::shifted(std::size_t offset, std::size_t new_length) const {
  if (offset + source_length > new_length) {
    throw std::out_of_range("window of length " + std::to_string(source_length) +
                            " at offset " + std::to_string(offset) +
                            " exceeds tuple length " + std::to_string(new_length));
  }
  Certificate out{new_length, moves};
  for (HurwitzMove& m : out.moves) m.k += static_cast<int>(offset);
  return out;
}

Factorization apply_move(Factorization&& f, const HurwitzMove& m) {
  if (m.k < 1 || static_cast<std::size_t>(m.k) >= f.length()) {
    std::ostringstream os;
    os << "move " << m << " out of range for a tuple of length " << f.length();
    throw std::out_of_range(os.str());
  }
  BraidWord& left = f.entries_[static_cast<std::size_t>(m.k - 1)];
  BraidWord& right = f.entries_[static_cast<std::size_t>(m.k)];
  if (m.direction == MoveDirection::kForward) {
    BraidWord moved = concat(concat(left, right), invert(left));
    right = std::move(left);
    left = std::move(moved);
  } else {
    BraidWord moved = conjugate(left, right);
    left = std::move(right);
    right = std::move(moved);
  }
  return std::move(f);
}

Factorization apply_move(const Factorization& f, const HurwitzMove& m) {
  return apply_move(Factorization(f), m);
}

Factorization replay(const Factorization& f, const Certificate& c) {
  if (c.source_length != f.length()) {
    throw MismatchError("certificate for length " + std::to_string(c.source_length) +
                        " replayed on a tuple of length " + std::to_string(f.length()));
  }
  Factorization out = f;
  const std::size_t limit = static_cast<std::size_t>(2 * f.strands() * f.strands());
  auto tidy = [limit](BraidWord& e) {
    if (e.length() <= limit) return;
    BraidWord shorter = free_reduce(garside::compact_word(e));
    if (shorter.length() < e.length()) e = std::move(shorter);
  };
  for (const HurwitzMove& m : c.moves) {
    out = apply_move(std::move(out), m);
    tidy(out.entries_[static_cast<std::size_t>(m.k - 1)]);
    tidy(out.entries_[static_cast<std::size_t>(m.k)]);
  }
  return out;
}

bool entrywise_equal(const Factorization& a, const Factorization& b) {
  if (a.strands() != b.strands() || a.length() != b.length()) return false;
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (!garside::equal(a[i], b[i])) return false;
  }
  return true;
}

Verdict verify_certificate(const Factorization& from, const Factorization& to,
                           const Certificate& c) {
  Verdict v;
  if (from.strands() != to.strands()) {
    v.diagnostic = "strand counts differ";
    return v;
  }
  if (from.length() != to.length()) {
    v.diagnostic = "tuple lengths differ: " + std::to_string(from.length()) + " vs " +
                   std::to_string(to.length());
    return v;
  }
  Factorization end(from.strands());
  try {
    end = replay(from, c);
  } catch (const std::exception& e) {
    v.diagnostic = e.what();
    return v;
  }
  for (std::size_t i = 0; i < end.length(); ++i) {
    if (!garside::equal(end[i], to[i])) {
      std::ostringstream os;
      os << "entry " << i << " differs: replay gives " << end[i] << ", expected "
         << to[i];
      v.first_mismatch = i;
      v.diagnostic = os.str();
      return v;
    }
  }
  v.ok = true;
  return v;
}

namespace {

using StateKey = std::vector<garside::NormalForm>;

struct StateKeyHash {
  std::size_t operator()(const StateKey& key) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b9 + (h << 6) + (h >> 2); };
    for (const garside::NormalForm& nf : key) {
      mix(static_cast<std::size_t>(nf.delta_power + 1024));
      for (const Permutation& p : nf.factors) {
        for (int x : p.zero_based()) mix(static_cast<std::size_t>(x));
        mix(0xff);
      }
      mix(0xfff);
    }
    return h;
  }
};

StateKey key_of(const Factorization& f) {
  StateKey key;
  key.reserve(f.length());
  for (const BraidWord& e : f.entries()) key.push_back(garside::normal_form(e));
  return key;
}

struct Node {
  Factorization tuple;
  std::size_t parent;
  HurwitzMove via;
  int depth;
};

constexpr std::size_t kRoot = static_cast<std::size_t>(-1);

struct Side {
  std::vector<Node> nodes;
  std::unordered_map<StateKey, std::size_t, StateKeyHash> index;
  std::size_t level_begin = 0;  // first node of the deepest complete level
  int depth = 0;

  std::vector<HurwitzMove> path_to(std::size_t at) const {
    std::vector<HurwitzMove> path;
    for (; nodes[at].parent != kRoot; at = nodes[at].parent) path.push_back(nodes[at].via);
    return {path.rbegin(), path.rend()};
  }
};

}  // namespace

std::optional<Certificate> orbit_search(const Factorization& from,
                                        const Factorization& to,
                                        const OrbitSearchLimits& limits) {
  if (from.strands() != to.strands()) throw MismatchError("strand counts differ");
  if (from.length() != to.length()) {
    throw MismatchError("tuple lengths differ: " + std::to_string(from.length()) +
                        " vs " + std::to_string(to.length()));
  }
  if (!garside::equal(from.product(), to.product())) {
    throw NotEquivalent("the two factorizations have different products");
  }
  const std::size_t m = from.length();
  StateKey from_key = key_of(from);
  StateKey to_key = key_of(to);
  if (from_key == to_key) return Certificate{m, {}};

  Side sides[2];
  std::size_t stored = 0;
  auto store = [&](Side& side, Factorization tuple, StateKey key, std::size_t parent,
                   HurwitzMove via, int depth) {
    if (++stored > limits.max_states) {
      throw BudgetExhausted("orbit search exceeded " + std::to_string(limits.max_states) +
                            " states");
    }
    side.index.emplace(std::move(key), side.nodes.size());
    side.nodes.push_back(Node{std::move(tuple), parent, via, depth});
  };
  store(sides[0], from, std::move(from_key), kRoot, {}, 0);
  store(sides[1], to, std::move(to_key), kRoot, {}, 0);

  auto finish = [&](int expanding, std::size_t own_parent, HurwitzMove via,
                    std::size_t other_node) {
    const Side& own = sides[expanding];
    const Side& other = sides[1 - expanding];
    std::vector<HurwitzMove> own_path = own.path_to(own_parent);
    own_path.push_back(via);
    std::vector<HurwitzMove> other_path = other.path_to(other_node);
    // Arrange as source-side path followed by the undone target-side path.
    const std::vector<HurwitzMove>& head = expanding == 0 ? own_path : other_path;
    const std::vector<HurwitzMove>& tail = expanding == 0 ? other_path : own_path;
    Certificate c{m, head};
    for (auto it = tail.rbegin(); it != tail.rend(); ++it) c.moves.push_back(it->inverse());
    return c;
  };

  while (sides[0].depth + sides[1].depth < limits.max_depth) {
    const std::size_t width0 = sides[0].nodes.size() - sides[0].level_begin;
    const std::size_t width1 = sides[1].nodes.size() - sides[1].level_begin;
    if (width0 == 0 || width1 == 0) return std::nullopt;
    const int expanding = width1 < width0 ? 1 : 0;
    Side& own = sides[expanding];
    Side& other = sides[1 - expanding];
    const std::size_t begin = own.level_begin;
    const std::size_t end = own.nodes.size();
    for (std::size_t at = begin; at < end; ++at) {
      for (int k = 1; static_cast<std::size_t>(k) < m; ++k) {
        for (MoveDirection dir : {MoveDirection::kForward, MoveDirection::kInverse}) {
          const HurwitzMove move{k, dir};
          Factorization child = apply_move(own.nodes[at].tuple, move);
          StateKey key = key_of(child);
          if (auto hit = other.index.find(key); hit != other.index.end()) {
            return finish(expanding, at, move, hit->second);
          }
          if (own.index.contains(key)) continue;
          store(own, std::move(child), std::move(key), at, move, own.depth + 1);
        }
      }
    }
    own.level_begin = end;
    ++own.depth;
  }
  return std::nullopt;
}

}  // namespace braidcert
