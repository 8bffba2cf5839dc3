#include <doctest.h>

#include <random>
#include <stdexcept>

#include "braidcert/errors.hpp"
#include "braidcert/frames.hpp"
#include "braidcert/garside.hpp"
#include "oracles.hpp"

using namespace braidcert;
using frames::Frame;
using frames::FrameFactorization;

namespace {

Factorization pattern_over(const BraidWord& b) {
  return frames::realize({Frame{b.strands(), b}, frames::full_twist_pattern(b.strands())});
}

bool verifies(const Factorization& from, const Factorization& to, const Certificate& c) {
  const Verdict v = verify_certificate(from, to, c);
  if (!v.ok) MESSAGE(v.diagnostic);
  return v.ok;
}

FrameFactorization random_pattern(std::mt19937& rng, const Frame& frame, int steps) {
  const auto w = oracle::scramble_positive(rng, oracle::letters_of(full_twist(frame.strands)),
                                           steps);
  return {frame, BraidWord(frame.strands, w)};
}

}  // namespace

TEST_CASE("frame_elements") {
  const auto std4 = frames::frame_elements(Frame::standard(4));
  REQUIRE(std4.size() == 3);
  for (int i = 1; i <= 3; ++i) CHECK(std4[i - 1] == BraidWord(4, {i}));

  for (int n = 3; n <= 6; ++n) {
    const auto el = frames::frame_elements(Frame{n, BraidWord(n, {n - 1})});
    CHECK(el[n - 3] == BraidWord(n, {-(n - 1), n - 2, n - 1}));
    for (int i = 1; i < n - 2; ++i) CHECK(garside::equal(el[i - 1], BraidWord(n, {i})));
  }
}

TEST_CASE("frame relations and centrality for random conjugators") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 3;
    const Frame fr{n, oracle::random_word(rng, n, 6)};
    const auto el = frames::frame_elements(fr);
    for (int i = 0; i < n - 1; ++i) {
      CHECK(garside::equal(el[i], conjugate(BraidWord(n, {i + 1}), fr.conjugator)));
      for (int j = 0; j < n - 1; ++j) {
        if (std::abs(i - j) > 1) {
          CHECK(garside::equal(concat(el[i], el[j]), concat(el[j], el[i])));
        } else if (std::abs(i - j) == 1) {
          CHECK(garside::equal(concat(concat(el[i], el[j]), el[i]),
                               concat(concat(el[j], el[i]), el[j])));
        }
      }
    }
    CHECK(garside::equal(pattern_over(fr.conjugator).product(), full_twist(n)));
  }
}

TEST_CASE("realize") {
  CHECK(frames::realize({Frame::standard(4), frames::full_twist_pattern(4)}) ==
        delta_squared_factorization(4));
  CHECK(frames::realize({Frame{3, BraidWord(3, {1, -2})}, BraidWord(3)}).length() == 0);
  CHECK_THROWS_AS(frames::realize({Frame::standard(3), BraidWord(3, {-1})}),
                  std::invalid_argument);
}

TEST_CASE("same_frame") {
  CHECK(frames::same_frame(Frame::standard(3), Frame{3, full_twist(3)}));
  CHECK_FALSE(frames::same_frame(Frame::standard(3), Frame{3, BraidWord(3, {1})}));
}

TEST_CASE("same_frame_certificate") {
  const Frame std3 = Frame::standard(3);
  const FrameFactorization a{std3, full_twist(3)};
  const FrameFactorization b{std3, BraidWord(3, {1, 2, 1, 1, 2, 1})};
  CHECK(frames::same_frame_certificate(a, a).empty());
  const Certificate c = frames::same_frame_certificate(a, b);
  CHECK_FALSE(c.empty());
  CHECK(verifies(frames::realize(a), frames::realize(b), c));

  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const Frame fr{3, oracle::random_word(rng, 3, 5)};
    CHECK(verifies(frames::realize({fr, a.indices}), frames::realize({fr, b.indices}), c));
  }

  const FrameFactorization bad{std3, BraidWord(3, {1, 2, 1, 2, 1, 1})};
  CHECK_THROWS_AS(frames::same_frame_certificate(a, bad), NotEquivalent);
  CHECK_THROWS_AS(frames::same_frame_certificate(a, {Frame{3, BraidWord(3, {1})}, b.indices}),
                  std::invalid_argument);
}

TEST_CASE("pi_shift_certificate") {
  const Certificate c = frames::pi_shift_certificate(2, 3);
  CHECK(c.moves == std::vector<HurwitzMove>{{2, MoveDirection::kForward},
                                            {1, MoveDirection::kForward}});
  const Frame std4 = Frame::standard(4);
  CHECK(verifies(frames::realize({std4, BraidWord(4, {3, 1, 2, 3})}),
                 frames::realize({std4, BraidWord(4, {1, 2, 3, 2})}),
                 frames::pi_shift_certificate(3, 4)));
  CHECK(verifies(frames::realize({std4, BraidWord(4, {2, 1, 2, 3})}),
                 frames::realize({std4, BraidWord(4, {1, 2, 3, 1})}),
                 frames::pi_shift_certificate(2, 4)));
  CHECK_THROWS_AS(frames::pi_shift_certificate(1, 4), std::out_of_range);
  CHECK_THROWS_AS(frames::pi_shift_certificate(4, 4), std::out_of_range);
}

TEST_CASE("pi2_shift_certificate") {
  const Frame std2 = Frame::standard(2);
  CHECK(verifies(frames::realize({std2, BraidWord(2, {1, 1, 1})}),
                 frames::realize({std2, BraidWord(2, {1, 1, 1})}),
                 frames::pi2_shift_certificate(2)));
  const Frame std3 = Frame::standard(3);
  CHECK(verifies(frames::realize({std3, BraidWord(3, {1, 1, 2, 1, 2})}),
                 frames::realize({std3, BraidWord(3, {1, 2, 1, 2, 2})}),
                 frames::pi2_shift_certificate(3)));
  CHECK(frames::pi2_shift_certificate(4).source_length == 7);
}

TEST_CASE("one_conj_certificate") {
  for (int n = 2; n <= 6; ++n) {
    for (int j = 1; j < n; ++j) {
      CAPTURE(n);
      CAPTURE(j);
      const Certificate c = frames::one_conj_certificate(j, n);
      CHECK(c.source_length == static_cast<std::size_t>(n * (n - 1)));
      CHECK(verifies(delta_squared_factorization(n), pattern_over(BraidWord(n, {j})), c));
      CHECK(frames::one_conj_certificate(j, n) == c);
    }
  }
  CHECK_THROWS_AS(frames::one_conj_certificate(0, 4), std::out_of_range);
  CHECK_THROWS_AS(frames::one_conj_certificate(4, 4), std::out_of_range);
}

TEST_CASE("one_conj certificates are frame independent") {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 3 + trial % 2;
    const BraidWord b = oracle::random_word(rng, n, 3);
    const int j = 1 + trial % (n - 1);
    CHECK(verifies(pattern_over(b), pattern_over(concat(BraidWord(n, {j}), b)),
                   frames::one_conj_certificate(j, n)));
  }
}

TEST_CASE("conj_certificate") {
  CHECK(frames::conj_certificate(BraidWord(4), 4).empty());
  CHECK(frames::conj_certificate(BraidWord(4, {2}), 4) == frames::one_conj_certificate(2, 4));
  for (const BraidWord& b : {BraidWord(4, {-2}), BraidWord(3, {-1, 2}), BraidWord(4, {1, -3, 2})}) {
    CHECK(verifies(delta_squared_factorization(b.strands()), pattern_over(b),
                   frames::conj_certificate(b, b.strands())));
  }
  CHECK_THROWS_AS(frames::conj_certificate(BraidWord(3, {1}), 4), MismatchError);
}

TEST_CASE("main_theorem_certificate") {
  const Frame std3 = Frame::standard(3);
  const FrameFactorization a{std3, full_twist(3)};
  CHECK(frames::main_theorem_certificate(a, a).empty());

  const FrameFactorization b{std3, BraidWord(3, {2, 1, 2, 2, 1, 2})};
  CHECK(frames::main_theorem_certificate(a, b) == frames::same_frame_certificate(a, b));

  const FrameFactorization c{Frame{3, BraidWord(3, {1, 2})}, full_twist(3)};
  const Certificate cert = frames::main_theorem_certificate(a, c);
  CHECK(verifies(frames::realize(a), frames::realize(c), cert));
  CHECK(verifies(frames::realize(c), frames::realize(a), cert.reversed()));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 3 + trial % 2;
    const FrameFactorization from =
        random_pattern(rng, Frame{n, oracle::random_word(rng, n, 3)}, 60);
    const FrameFactorization to = random_pattern(rng, Frame{n, oracle::random_word(rng, n, 3)}, 60);
    CHECK(verifies(frames::realize(from), frames::realize(to),
                   frames::main_theorem_certificate(from, to)));
  }

  const FrameFactorization bad{std3, BraidWord(3, {1, 2, 1, 2})};
  CHECK_THROWS_AS(frames::main_theorem_certificate(a, bad), NotEquivalent);
}
