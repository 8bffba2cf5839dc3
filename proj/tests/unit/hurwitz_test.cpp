#include <doctest.h>

#include <algorithm>
#include <random>

#include "braidcert/errors.hpp"
#include "braidcert/garside.hpp"
#include "braidcert/hurwitz.hpp"
#include "oracles.hpp"

using namespace braidcert;

namespace {

HurwitzMove fwd(int k) { return {k, MoveDirection::kForward}; }
HurwitzMove inv(int k) { return {k, MoveDirection::kInverse}; }

Factorization tuple(int n, std::vector<std::vector<int>> entries) {
  std::vector<BraidWord> words;
  for (auto& e : entries) words.emplace_back(n, std::move(e));
  return Factorization(n, std::move(words));
}

std::vector<int> sorted_exponents(const Factorization& f) {
  std::vector<int> out;
  for (const BraidWord& e : f.entries()) out.push_back(e.exponent_sum());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> sorted_cycle_types(const Factorization& f) {
  std::vector<std::vector<int>> out;
  for (const BraidWord& e : f.entries()) out.push_back(permutation_image(e).cycle_type());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("apply_move literal action") {
  const Factorization f = tuple(4, {{1}, {2}});
  const Factorization g = apply_move(f, fwd(1));
  CHECK(g[0] == BraidWord(4, {1, 2, -1}));
  CHECK(g[1] == BraidWord(4, {1}));
  const Factorization h = apply_move(f, inv(1));
  CHECK(h[0] == BraidWord(4, {2}));
  CHECK(h[1] == BraidWord(4, {-2, 1, 2}));

  const Factorization c = apply_move(tuple(4, {{1}, {3}}), fwd(1));
  CHECK(entrywise_equal(c, tuple(4, {{3}, {1}})));
  CHECK(entrywise_equal(apply_move(g, inv(1)), f));

  CHECK_THROWS_AS(apply_move(f, fwd(2)), std::out_of_range);
  CHECK_THROWS_AS(apply_move(f, fwd(0)), std::out_of_range);
}

TEST_CASE("entries are stored reduced and share n") {
  const Factorization f = tuple(3, {{1, -1, 2}});
  CHECK(f[0] == BraidWord(3, {2}));
  CHECK_THROWS_AS(Factorization(3, {BraidWord(3), BraidWord(4)}), MismatchError);
}

TEST_CASE("certificate operations") {
  Certificate c{5, {fwd(1), inv(3)}};
  CHECK_NOTHROW(c.validate());
  CHECK(c.reversed().moves == std::vector<HurwitzMove>{fwd(3), inv(1)});
  const Certificate s = c.shifted(2, 9);
  CHECK(s.source_length == 9);
  CHECK(s.moves == std::vector<HurwitzMove>{fwd(3), inv(5)});
  CHECK_THROWS(c.shifted(5, 9));
  Certificate bad{3, {fwd(3)}};
  CHECK_THROWS_AS(bad.validate(), std::out_of_range);
  CHECK_THROWS_AS(c.append(Certificate{4, {}}), MismatchError);
  c.append(Certificate{5, {fwd(2)}});
  CHECK(c.size() == 3);
}

TEST_CASE("replay") {
  const Factorization f = tuple(3, {{1}, {2}, {1}});
  CHECK(replay(f, Certificate{3, {}}) == f);
  const Factorization g = replay(f, Certificate{3, {fwd(2), fwd(1)}});
  CHECK(entrywise_equal(g, tuple(3, {{2}, {1}, {2}})));
  CHECK(garside::equal(g.product(), f.product()));
  CHECK_THROWS_AS(replay(f, Certificate{4, {}}), MismatchError);
}

TEST_CASE("verify_certificate") {
  const Factorization f = tuple(3, {{1}, {2}, {1}});
  const Factorization g = tuple(3, {{2}, {1}, {2}});
  CHECK(verify_certificate(f, f, Certificate{3, {}}).ok);
  CHECK(verify_certificate(f, g, Certificate{3, {fwd(2), fwd(1)}}).ok);

  const Verdict dropped = verify_certificate(f, g, Certificate{3, {fwd(2)}});
  CHECK_FALSE(dropped.ok);
  REQUIRE(dropped.first_mismatch.has_value());
  CHECK(*dropped.first_mismatch == 0);
  CHECK_FALSE(dropped.diagnostic.empty());

  const Verdict lengths = verify_certificate(f, tuple(3, {{1}}), Certificate{3, {}});
  CHECK_FALSE(lengths.ok);
  CHECK_FALSE(lengths.first_mismatch.has_value());
  CHECK_FALSE(verify_certificate(f, g, Certificate{3, {fwd(7)}}).ok);
}

TEST_CASE("Hurwitz move invariants on random tuples") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 4;
    const int m = 2 + trial % 6;
    const Factorization f = oracle::random_factorization(rng, n, m, 6);
    const int k = std::uniform_int_distribution<int>(1, m - 1)(rng);
    for (HurwitzMove mv : {fwd(k), inv(k)}) {
      const Factorization g = apply_move(f, mv);
      CHECK(garside::equal(g.product(), f.product()));
      CHECK(entrywise_equal(apply_move(g, mv.inverse()), f));
      CHECK(sorted_exponents(g) == sorted_exponents(f));
      CHECK(sorted_cycle_types(g) == sorted_cycle_types(f));
      for (std::size_t i = 0; i < f.length(); ++i) {
        if (i + 1 != static_cast<std::size_t>(k) && i != static_cast<std::size_t>(k)) {
          CHECK(g[i] == f[i]);
        }
      }
    }
  }
}

TEST_CASE("braid action laws") {
  std::mt19937 rng(91);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + trial % 3;
    const int m = 4 + trial % 4;
    const Factorization f = oracle::random_factorization(rng, n, m, 4);
    std::uniform_int_distribution<int> pick(1, m - 1);
    const int k = pick(rng), j = pick(rng);
    if (std::abs(k - j) > 1) {
      CHECK(entrywise_equal(replay(f, {std::size_t(m), {fwd(k), fwd(j)}}),
                            replay(f, {std::size_t(m), {fwd(j), fwd(k)}})));
    }
    if (k + 1 < m) {
      CHECK(entrywise_equal(replay(f, {std::size_t(m), {fwd(k), fwd(k + 1), fwd(k)}}),
                            replay(f, {std::size_t(m), {fwd(k + 1), fwd(k), fwd(k + 1)}})));
    }
  }
}

TEST_CASE("replay re-spells long entries without changing them") {
  std::mt19937 rng(5);
  const Factorization f = oracle::random_factorization(rng, 3, 6, 5);
  Certificate c{6, {}};
  for (int s = 0; s < 200; ++s) c.moves.push_back(fwd(1 + s % 5));
  Factorization literal = f;
  for (int s = 0; s < 40; ++s) literal = apply_move(std::move(literal), c.moves[s]);
  Certificate head{6, {c.moves.begin(), c.moves.begin() + 40}};
  CHECK(entrywise_equal(replay(f, head), literal));
  const Factorization end = replay(f, c);
  CHECK(garside::equal(end.product(), f.product()));
  CHECK(verify_certificate(end, f, c.reversed()).ok);
}

TEST_CASE("orbit_search") {
  const Factorization d3 = delta_squared_factorization(3);
  const auto same = orbit_search(d3, d3);
  REQUIRE(same.has_value());
  CHECK(same->empty());

  const Factorization a = tuple(3, {{1}, {2}, {1}});
  const Factorization b = tuple(3, {{2}, {1}, {2}});
  const auto two = orbit_search(a, b, {2, 1000});
  REQUIRE(two.has_value());
  CHECK(two->size() == 2);
  CHECK(verify_certificate(a, b, *two).ok);

  CHECK_THROWS_AS(orbit_search(a, tuple(3, {{1}, {1}, {1}})), NotEquivalent);
  CHECK_THROWS_AS(orbit_search(a, b, {6, 1}), BudgetExhausted);
  CHECK_FALSE(orbit_search(a, b, {1, 1000}).has_value());
  CHECK_THROWS_AS(orbit_search(a, tuple(3, {{1}, {2}})), MismatchError);
}

TEST_CASE("orbit_search reconnects scrambles") {
  std::mt19937 rng(31);
  const Factorization d3 = delta_squared_factorization(3);
  for (int trial = 0; trial < 5; ++trial) {
    Certificate scramble{6, {}};
    for (int s = 0; s < 4; ++s) {
      const int k = std::uniform_int_distribution<int>(1, 5)(rng);
      scramble.moves.push_back(std::bernoulli_distribution(0.5)(rng) ? fwd(k) : inv(k));
    }
    const Factorization target = replay(d3, scramble);
    const auto found = orbit_search(d3, target, {5, 1'000'000});
    REQUIRE(found.has_value());
    CHECK(found->size() <= 5);
    CHECK(verify_certificate(d3, target, *found).ok);
  }
}
