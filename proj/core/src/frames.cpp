#include "braidcert/frames.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "braidcert/errors.hpp"
#include "braidcert/garside.hpp"

namespace braidcert::frames {

namespace {

BraidWord generator(int strands, int i) { return BraidWord(strands, {i}); }

BraidWord index_word(int strands, const std::vector<int>& indices) {
  return BraidWord(strands, std::vector<Letter>(indices.begin(), indices.end()));
}

std::vector<int> repeat(const std::vector<int>& block, int times) {
  std::vector<int> out;
  for (int t = 0; t < times; ++t) out.insert(out.end(), block.begin(), block.end());
  return out;
}

std::vector<int> ascending(int first, int last) {
  std::vector<int> out;
  for (int i = first; i <= last; ++i) out.push_back(i);
  return out;
}

std::vector<int> descending(int first, int last) {
  std::vector<int> out;
  for (int i = first; i >= last; --i) out.push_back(i);
  return out;
}

std::vector<int> join(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Builds a certificate stage by stage, replaying each stage on the running
// tuple and checking it against the expected intermediate tuple.
class StagedBuild {
 public:
  StagedBuild(int j, int strands)
      : j_(j),
        n_(strands),
        current_(delta_squared_factorization(strands)),
        cert_{current_.length(), {}} {}

  std::size_t length() const { return cert_.source_length; }

  void stage(const char* name, const Certificate& moves, const std::vector<BraidWord>& expected) {
    current_ = replay(current_, moves);
    cert_.append(moves);
    const Factorization want(n_, expected);
    if (!entrywise_equal(current_, want)) {
      std::ostringstream os;
      os << "one-generator conjugation schedule (j=" << j_ << ", n=" << n_
         << ") failed at stage '" << name << "': got " << current_;
      throw ConstructionError(os.str());
    }
  }

  Certificate finish() && { return std::move(cert_); }

 private:
  int j_;
  int n_;
  Factorization current_;
  Certificate cert_;
};

// Entries named by a sequence of 1-based frame indices.
std::vector<BraidWord> entries(const std::vector<BraidWord>& frame, const std::vector<int>& ids) {
  std::vector<BraidWord> out;
  out.reserve(ids.size());
  for (int id : ids) out.push_back(frame.at(static_cast<std::size_t>(id - 1)));
  return out;
}

Certificate moves_of(std::size_t length, std::vector<HurwitzMove> moves) {
  Certificate c{length, std::move(moves)};
  c.validate();
  return c;
}

// X_{n-1} sits just right of X_{n-2} in every block; one inverse move per
// block turns the pair into (X_{n-1}, X_{n-2}[X_{n-1}]).
Certificate last_generator_case(int n) {
  const int block = n - 1;
  const int j = n - 1;
  StagedBuild build(j, n);
  const std::size_t len = build.length();
  const std::vector<BraidWord> conj_frame = frame_elements(Frame{n, generator(n, j)});

  std::vector<HurwitzMove> swaps;
  for (int m = 1; m <= n; ++m) swaps.push_back({m * block - 1, MoveDirection::kInverse});
  // Entries are X_1..X_{n-3}, X_{n-1} (= A_{n-1}) and A_{n-2} = X_{n-2}[X_{n-1}].
  const std::vector<int> swapped = repeat(join({ascending(1, n - 3), {n - 1, n - 2}}), n);
  build.stage("pair swap", moves_of(len, swaps), entries(conj_frame, swapped));

  build.stage("same-frame rewrite",
              rewrite::positive_he_certificate(index_word(n, swapped), full_twist_pattern(n)),
              entries(conj_frame, repeat(ascending(1, n - 1), n)));
  return std::move(build).finish();
}

// Mirror of the last-generator case: rewrite each block to descending order
// so that X_1 sits just right of X_2, then swap those pairs.
Certificate first_generator_case(int n) {
  const int block = n - 1;
  StagedBuild build(1, n);
  const std::size_t len = build.length();
  const std::vector<BraidWord> std_frame = frame_elements(Frame::standard(n));
  const std::vector<BraidWord> conj_frame = frame_elements(Frame{n, generator(n, 1)});

  const std::vector<int> mirrored = repeat(descending(n - 1, 1), n);
  build.stage("mirror blocks",
              rewrite::positive_he_certificate(full_twist_pattern(n), index_word(n, mirrored)),
              entries(std_frame, mirrored));

  std::vector<HurwitzMove> swaps;
  for (int m = 1; m <= n; ++m) swaps.push_back({m * block - 1, MoveDirection::kInverse});
  const std::vector<int> swapped = repeat(join({descending(n - 1, 3), {1, 2}}), n);
  build.stage("pair swap", moves_of(len, swaps), entries(conj_frame, swapped));

  build.stage("same-frame rewrite",
              rewrite::positive_he_certificate(index_word(n, swapped), full_twist_pattern(n)),
              entries(conj_frame, repeat(ascending(1, n - 1), n)));
  return std::move(build).finish();
}

// 1 < j < n-1. Positions below are 1-based move indices; a block of the
// full twist pattern has n-1 entries.
Certificate interior_case(int j, int n) {
  const int block = n - 1;
  StagedBuild build(j, n);
  const std::size_t len = build.length();
  const std::vector<BraidWord> x = frame_elements(Frame::standard(n));
  const std::vector<BraidWord> a = frame_elements(Frame{n, generator(n, j)});

  // Entries mixing the two frames: positive ids name A_i, negative ids X_|i|.
  auto mixed = [&](const std::vector<int>& ids) {
    std::vector<BraidWord> out;
    for (int id : ids) {
      out.push_back(id > 0 ? a[static_cast<std::size_t>(id - 1)]
                           : x[static_cast<std::size_t>(-id - 1)]);
    }
    return out;
  };
  auto neg = [](std::vector<int> v) {
    for (int& i : v) i = -i;
    return v;
  };

  // (X_{j-1}, X_j) -> (X_j, X_{j-1}[X_j]) in every block.
  std::vector<HurwitzMove> moves;
  for (int m = 0; m < n; ++m) moves.push_back({m * block + j - 1, MoveDirection::kInverse});
  build.stage("pair swap", moves_of(len, moves),
              mixed(repeat(join({neg(ascending(1, j - 2)), {-j, j - 1}, neg(ascending(j + 1, n - 1))}),
                           n)));

  // X_j commutes left past X_{j-2}, ..., X_1 to the front of its block.
  moves.clear();
  for (int m = 0; m < n; ++m) {
    for (int k = j - 2; k >= 1; --k) moves.push_back({m * block + k, MoveDirection::kForward});
  }
  const std::vector<int> fronted =
      join({{-j}, neg(ascending(1, j - 2)), {j - 1}, neg(ascending(j + 1, n - 1))});
  build.stage("front commutations", moves_of(len, moves), mixed(repeat(fronted, n)));

  // The X_j leading block m+1 commutes left past X_{n-1}, ..., X_{j+2} of
  // block m, landing just right of X_{j+1}.
  moves.clear();
  for (int m = 0; m + 1 < n; ++m) {
    for (int k = (m + 1) * block; k >= m * block + j + 2; --k) {
      moves.push_back({k, MoveDirection::kForward});
    }
  }
  const std::vector<int> body =
      join({neg(ascending(1, j - 2)), {j - 1, -(j + 1), -j}, neg(ascending(j + 2, n - 1))});
  const std::vector<int> tail =
      join({neg(ascending(1, j - 2)), {j - 1, -(j + 1)}, neg(ascending(j + 2, n - 1))});
  build.stage("back commutations", moves_of(len, moves),
              mixed(join({{-j}, repeat(body, n - 1), tail})));

  // (X_{j+1}, X_j) -> (X_j, X_{j+1}[X_j]) in all but the last block.
  moves.clear();
  for (int m = 0; m + 1 < n; ++m) moves.push_back({m * block + j + 1, MoveDirection::kInverse});
  // From here on every entry is in frame A except one X_{j+1} near the end.
  const std::vector<int> pi = ascending(1, n - 1);
  const std::vector<int> last = join({ascending(1, j - 1), {-(j + 1)}, ascending(j + 2, n - 1)});
  build.stage("second pair swap", moves_of(len, moves),
              mixed(join({{j}, repeat(pi, n - 1), last})));

  // A_j Pi^{n-1} -> Pi^{j-1} A_1 Pi^{n-j} by j-1 single shifts.
  Certificate shifts{len, {}};
  for (int t = 1; t <= j - 1; ++t) {
    shifts.append(pi_shift_certificate(j - t + 1, n).shifted(static_cast<std::size_t>((t - 1) * block), len));
  }
  build.stage("single shifts", shifts,
              mixed(join({repeat(pi, j - 1), {1}, repeat(pi, n - j), last})));

  // A_1 Pi Pi -> Pi Pi A_{n-1}.
  build.stage("double shift",
              pi2_shift_certificate(n).shifted(static_cast<std::size_t>((j - 1) * block), len),
              mixed(join({repeat(pi, j + 1), {n - 1}, repeat(pi, n - j - 2), last})));

  // A_{n-1} Pi^{n-j-2} -> Pi^{n-j-2} A_{j+1}.
  shifts = Certificate{len, {}};
  for (int t = 1; t <= n - j - 2; ++t) {
    shifts.append(pi_shift_certificate(n - t, n).shifted(static_cast<std::size_t>((j + t) * block), len));
  }
  build.stage("trailing shifts", shifts, mixed(join({repeat(pi, n - 1), {j + 1}, last})));

  // A_{j+1} commutes right past A_1, ..., A_{j-1}.
  moves.clear();
  for (int k = 1; k <= j - 1; ++k) moves.push_back({(n - 1) * block + k, MoveDirection::kForward});
  build.stage("final commutations", moves_of(len, moves),
              mixed(join({repeat(pi, n - 1), ascending(1, j - 1), {j + 1, -(j + 1)},
                          ascending(j + 2, n - 1)})));

  // (A_{j+1}, X_{j+1}) -> (X_{j+1}[A_{j+1}^-1], A_{j+1}) = (A_j, A_{j+1}).
  build.stage("closing move", moves_of(len, {{(n - 1) * block + j, MoveDirection::kForward}}),
              mixed(repeat(pi, n)));
  return std::move(build).finish();
}

void check_full_twist(const FrameFactorization& ff, const char* which) {
  if (!ff.indices.is_positive()) {
    throw std::invalid_argument(std::string(which) + " index word must be positive");
  }
  if (!garside::equal(ff.indices, full_twist(ff.frame.strands))) {
    std::ostringstream os;
    os << which << " index word " << ff.indices << " does not multiply to the full twist";
    throw NotEquivalent(os.str());
  }
}

void check_consistent(const FrameFactorization& ff) {
  if (ff.frame.conjugator.strands() != ff.frame.strands ||
      ff.indices.strands() != ff.frame.strands) {
    throw MismatchError("frame factorization mixes strand counts");
  }
}

}  // namespace

std::vector<BraidWord> frame_elements(const Frame& fr) {
  std::vector<BraidWord> out;
  out.reserve(static_cast<std::size_t>(fr.strands - 1));
  for (int i = 1; i < fr.strands; ++i) {
    out.push_back(conjugate(generator(fr.strands, i), fr.conjugator));
  }
  return out;
}

bool same_frame(const Frame& a, const Frame& b) {
  if (a.strands != b.strands) return false;
  if (a.conjugator == b.conjugator) return true;
  const std::vector<BraidWord> ea = frame_elements(a);
  const std::vector<BraidWord> eb = frame_elements(b);
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (!garside::equal(ea[i], eb[i])) return false;
  }
  return true;
}

Factorization realize(const FrameFactorization& ff) {
  check_consistent(ff);
  const std::vector<BraidWord> elems = frame_elements(ff.frame);
  std::vector<BraidWord> out;
  out.reserve(ff.indices.length());
  for (Letter l : ff.indices.letters()) {
    if (l < 1) {
      throw std::invalid_argument("frame index " + std::to_string(l) + " outside 1.." +
                                  std::to_string(ff.frame.strands - 1));
    }
    out.push_back(elems[static_cast<std::size_t>(l - 1)]);
  }
  return Factorization(ff.frame.strands, std::move(out));
}

BraidWord full_twist_pattern(int strands) { return full_twist(strands); }

Certificate same_frame_certificate(const FrameFactorization& from, const FrameFactorization& to,
                                   const rewrite::SearchLimits& limits) {
  check_consistent(from);
  check_consistent(to);
  if (!same_frame(from.frame, to.frame)) {
    throw std::invalid_argument("same-frame certificate requested for different frames");
  }
  check_full_twist(from, "source");
  check_full_twist(to, "target");
  return rewrite::positive_he_certificate(from.indices, to.indices, limits);
}

Certificate pi_shift_certificate(int i, int strands) {
  if (i <= 1 || i >= strands) {
    throw std::out_of_range("shift index " + std::to_string(i) + " outside 2.." +
                            std::to_string(strands - 1));
  }
  const BraidWord from = index_word(strands, join({{i}, ascending(1, strands - 1)}));
  const BraidWord to = index_word(strands, join({ascending(1, strands - 1), {i - 1}}));
  return rewrite::positive_he_certificate(from, to);
}

Certificate pi2_shift_certificate(int strands) {
  if (strands < 2) throw std::out_of_range("double shift needs at least 2 strands");
  const std::size_t len = static_cast<std::size_t>(2 * strands - 1);
  // X_1 Pi X_1 ... X_{n-1}: each Pi X_i becomes X_{i+1} Pi, walking Pi right.
  Certificate c{len, {}};
  for (int i = 1; i <= strands - 2; ++i) {
    c.append(pi_shift_certificate(i + 1, strands).reversed().shifted(static_cast<std::size_t>(i), len));
  }
  return c;
}

Certificate one_conj_certificate(int j, int strands) {
  if (strands < 2) throw std::out_of_range("need at least 2 strands");
  if (j < 1 || j >= strands) {
    throw std::out_of_range("generator index " + std::to_string(j) + " outside 1.." +
                            std::to_string(strands - 1));
  }
  static std::mutex cache_mutex;
  static std::map<std::pair<int, int>, Certificate> cache;
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find({j, strands}); it != cache.end()) return it->second;
  }
  Certificate c;
  if (strands == 2) {
    c = Certificate{2, {}};  // sigma_1[sigma_1] = sigma_1
  } else if (j == strands - 1) {
    c = last_generator_case(strands);
  } else if (j == 1) {
    c = first_generator_case(strands);
  } else {
    c = interior_case(j, strands);
  }
  std::lock_guard lock(cache_mutex);
  return cache.try_emplace({j, strands}, std::move(c)).first->second;
}

Certificate conj_certificate(const BraidWord& b, int strands) {
  if (b.strands() != strands) throw MismatchError("conjugator on the wrong strand count");
  const BraidWord q = garside::positive_conjugator(free_reduce(b));
  Certificate c{static_cast<std::size_t>(strands * (strands - 1)), {}};
  // Applying the step for X_j to the frame conjugated by c yields the frame
  // conjugated by X_j c, so the letters of q are consumed right to left.
  for (auto it = q.letters().rbegin(); it != q.letters().rend(); ++it) {
    c.append(one_conj_certificate(*it, strands));
  }
  return c;
}

Certificate main_theorem_certificate(const FrameFactorization& from, const FrameFactorization& to,
                                     const rewrite::SearchLimits& limits) {
  check_consistent(from);
  check_consistent(to);
  if (from.frame.strands != to.frame.strands) throw MismatchError("strand counts differ");
  check_full_twist(from, "source");
  check_full_twist(to, "target");
  const int n = from.frame.strands;

  Certificate c;
  if (same_frame(from.frame, to.frame)) {
    c = same_frame_certificate(from, to, limits);
  } else {
    const FrameFactorization from_pattern{from.frame, full_twist_pattern(n)};
    const FrameFactorization to_pattern{to.frame, full_twist_pattern(n)};
    c = same_frame_certificate(from, from_pattern, limits);
    // Conjugating frame b1 by c gives frame c*b1; c = b2 b1^-1 lands on b2.
    c.append(conj_certificate(concat(to.frame.conjugator, invert(from.frame.conjugator)), n));
    c.append(same_frame_certificate(to, to_pattern, limits).reversed());
  }

  const Verdict v = verify_certificate(realize(from), realize(to), c);
  if (!v) {
    throw ConstructionError("frame-bridging certificate failed replay: " + v.diagnostic);
  }
  return c;
}

}  // namespace braidcert::frames
