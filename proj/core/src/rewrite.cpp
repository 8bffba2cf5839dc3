#include "braidcert/rewrite.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>

#include "braidcert/errors.hpp"
#include "braidcert/garside.hpp"

namespace braidcert::rewrite {

namespace {

// Positive words are searched as byte strings, one generator index per byte.
using Key = std::string;

Key key_of(std::span<const Letter> letters) {
  Key k;
  k.reserve(letters.size());
  for (Letter l : letters) k.push_back(static_cast<char>(l));
  return k;
}

bool commutes_at(const Key& w, std::size_t p) {
  return p + 1 < w.size() && std::abs(w[p] - w[p + 1]) > 1;
}

bool triple_at(const Key& w, std::size_t p) {
  return p + 2 < w.size() && w[p] == w[p + 2] && std::abs(w[p] - w[p + 1]) == 1;
}

void apply_in_place(Key& w, const RelationStep& s) {
  if (s.kind == RelationKind::kCommutation) {
    std::swap(w[s.position], w[s.position + 1]);
  } else {
    const char a = w[s.position];
    const char b = w[s.position + 1];
    w[s.position] = b;
    w[s.position + 1] = a;
    w[s.position + 2] = b;
  }
}

// Neighbours in the fixed expansion order.
template <typename Visit>
void for_each_step(const Key& w, Visit&& visit) {
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    if (commutes_at(w, p)) {
      if (visit(RelationStep{p, RelationKind::kCommutation, StepDirection::kForward})) return;
    }
    if (triple_at(w, p)) {
      if (visit(RelationStep{p, RelationKind::kTriple, StepDirection::kForward})) return;
    }
  }
}

struct Tree {
  struct Node {
    Key word;
    std::size_t parent;
    RelationStep via;
  };
  static constexpr std::size_t kRoot = static_cast<std::size_t>(-1);

  std::vector<Node> nodes;
  std::unordered_map<Key, std::size_t> index;

  std::vector<RelationStep> path_to(std::size_t at) const {
    std::vector<RelationStep> path;
    for (; nodes[at].parent != kRoot; at = nodes[at].parent) path.push_back(nodes[at].via);
    return {path.rbegin(), path.rend()};
  }
};

class Budget {
 public:
  explicit Budget(std::size_t cap) : cap_(cap) {}
  void charge() {
    if (++used_ > cap_) {
      throw BudgetExhausted("rewrite search exceeded " + std::to_string(cap_) + " words");
    }
  }

 private:
  std::size_t cap_;
  std::size_t used_ = 0;
};

void offset_steps(std::vector<RelationStep>& steps, std::size_t offset) {
  for (RelationStep& s : steps) s.position += offset;
}

// Bidirectional BFS between two words of one rewrite class. Steps found
// from the target side are recorded as backward steps.
std::vector<RelationStep> bidirectional(const Key& from, const Key& to, Budget& budget) {
  Tree trees[2];
  std::size_t level_begin[2] = {0, 0};
  for (int s = 0; s < 2; ++s) {
    const Key& root = s == 0 ? from : to;
    budget.charge();
    trees[s].index.emplace(root, 0);
    trees[s].nodes.push_back({root, Tree::kRoot, {}});
  }
  for (;;) {
    const std::size_t w0 = trees[0].nodes.size() - level_begin[0];
    const std::size_t w1 = trees[1].nodes.size() - level_begin[1];
    if (w0 == 0 || w1 == 0) {
      throw ConstructionError("rewrite class exhausted without meeting");
    }
    const int side = w1 < w0 ? 1 : 0;
    Tree& own = trees[side];
    const Tree& other = trees[1 - side];
    const std::size_t end = own.nodes.size();
    for (std::size_t at = level_begin[side]; at < end; ++at) {
      std::optional<std::vector<RelationStep>> found;
      const Key word = own.nodes[at].word;
      for_each_step(word, [&](const RelationStep& step) {
        Key child = word;
        apply_in_place(child, step);
        if (auto hit = other.index.find(child); hit != other.index.end()) {
          std::vector<RelationStep> own_path = own.path_to(at);
          own_path.push_back(step);
          std::vector<RelationStep> other_path = other.path_to(hit->second);
          std::vector<RelationStep>& head = side == 0 ? own_path : other_path;
          std::vector<RelationStep>& tail = side == 0 ? other_path : own_path;
          std::vector<RelationStep> path = head;
          for (auto it = tail.rbegin(); it != tail.rend(); ++it) {
            RelationStep back = *it;
            back.direction = StepDirection::kBackward;
            path.push_back(back);
          }
          found = std::move(path);
          return true;
        }
        if (own.index.contains(child)) return false;
        budget.charge();
        own.index.emplace(child, own.nodes.size());
        own.nodes.push_back({std::move(child), at, step});
        return false;
      });
      if (found) return *found;
    }
    level_begin[side] = end;
  }
}

void emit(Key& w, const RelationStep& step, std::vector<RelationStep>& out, Budget& budget) {
  budget.charge();
  apply_in_place(w, step);
  out.push_back(step);
}

// Rewrites w[at..] into a word starting with `a`, which must left-divide
// it. If w[at] = x differs from a, the least common multiple of a and x
// (xa when they commute, xax otherwise) also divides, so the suffix after
// x can be made to start with a (and then x) before one last relation.
void bring_to_front(Key& w, std::size_t at, char a, std::vector<RelationStep>& out,
                    Budget& budget) {
  if (at >= w.size()) throw ConstructionError("letter does not divide the word");
  const char x = w[at];
  if (x == a) return;
  bring_to_front(w, at + 1, a, out, budget);
  if (std::abs(x - a) > 1) {
    emit(w, {at, RelationKind::kCommutation, StepDirection::kForward}, out, budget);
  } else {
    bring_to_front(w, at + 2, x, out, budget);
    emit(w, {at, RelationKind::kTriple, StepDirection::kForward}, out, budget);
  }
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const RelationStep& s) {
  os << (s.kind == RelationKind::kCommutation ? "comm" : "triple") << '@' << s.position;
  if (s.direction == StepDirection::kBackward) os << "(back)";
  return os;
}

bool applicable(const BraidWord& word, const RelationStep& step) {
  const Key w = key_of(word.letters());
  if (!word.is_positive()) return false;
  return step.kind == RelationKind::kCommutation ? commutes_at(w, step.position)
                                                 : triple_at(w, step.position);
}

BraidWord apply_relation(const BraidWord& word, const RelationStep& step) {
  if (!applicable(word, step)) {
    std::ostringstream os;
    os << "relation " << step << " does not apply to " << word;
    throw std::invalid_argument(os.str());
  }
  Key w = key_of(word.letters());
  apply_in_place(w, step);
  return BraidWord(word.strands(), std::vector<Letter>(w.begin(), w.end()));
}

std::vector<RelationStep> rewrite_path(const BraidWord& from, const BraidWord& to,
                                       const SearchLimits& limits) {
  if (from.strands() != to.strands()) throw MismatchError("strand counts differ");
  if (!from.is_positive() || !to.is_positive()) {
    throw std::invalid_argument("rewrite_path needs positive words");
  }
  if (from.length() != to.length() || !garside::equal(from, to)) {
    std::ostringstream os;
    os << from << " and " << to << " are different braids";
    throw NotEquivalent(os.str());
  }

  Key current = key_of(from.letters());
  const Key target = key_of(to.letters());
  Budget budget(limits.max_states);
  std::vector<RelationStep> path;

  while (current != target) {
    // Equal positive words with a common prefix or suffix stay equal once
    // it is removed (the positive monoid is cancellative).
    std::size_t lead = 0;
    while (current[lead] == target[lead]) ++lead;
    std::size_t trail = 0;
    while (current[current.size() - 1 - trail] == target[target.size() - 1 - trail]) ++trail;
    const std::size_t core_len = current.size() - lead - trail;
    if (core_len <= limits.bidirectional_max_length) {
      std::vector<RelationStep> steps =
          bidirectional(current.substr(lead, core_len), target.substr(lead, core_len), budget);
      offset_steps(steps, lead);
      for (const RelationStep& s : steps) {
        apply_in_place(current, s);
        path.push_back(s);
      }
    } else {
      bring_to_front(current, lead, target[lead], path, budget);
    }
  }
  return path;
}

std::vector<HurwitzMove> step_to_moves(const RelationStep& step) {
  const int k = static_cast<int>(step.position) + 1;
  std::vector<HurwitzMove> moves;
  if (step.kind == RelationKind::kCommutation) {
    moves.push_back({k, MoveDirection::kForward});
  } else {
    moves.push_back({k + 1, MoveDirection::kForward});
    moves.push_back({k, MoveDirection::kForward});
  }
  if (step.direction == StepDirection::kBackward) {
    std::reverse(moves.begin(), moves.end());
    for (HurwitzMove& m : moves) m = m.inverse();
  }
  return moves;
}

Certificate positive_he_certificate(const BraidWord& from, const BraidWord& to,
                                    const SearchLimits& limits) {
  Certificate c{from.length(), {}};
  for (const RelationStep& step : rewrite_path(from, to, limits)) {
    for (const HurwitzMove& m : step_to_moves(step)) c.moves.push_back(m);
  }
  return c;
}

}  // namespace braidcert::rewrite
