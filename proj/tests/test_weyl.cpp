#include "afflim/errors.hpp"
#include "afflim/weyl.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <set>

using namespace afflim;

namespace {

using Key = std::pair<std::vector<std::int64_t>, IntVec>;
Key key_of(const AffineElement& w) { return {w.linear.data(), w.trans}; }

/// Breadth-first search over the Cayley graph: element -> distance from e.
std::map<Key, int> cayley_ball(const RootSystem& rs, int radius) {
  std::map<Key, int> dist;
  std::vector<AffineElement> frontier{identity_element(rs)};
  dist[key_of(frontier.front())] = 0;
  for (int d = 1; d <= radius; ++d) {
    std::vector<AffineElement> next;
    for (const auto& w : frontier)
      for (int i = 0; i <= rs.rank(); ++i) {
        AffineElement v = multiply_simple(rs, w, i);
        if (dist.emplace(key_of(v), d).second) next.push_back(std::move(v));
      }
    frontier = std::move(next);
  }
  return dist;
}

Word random_word(std::mt19937_64& rng, int letters, int size) {
  std::uniform_int_distribution<int> pick(0, letters - 1);
  Word w(static_cast<std::size_t>(size));
  for (auto& x : w) x = pick(rng);
  return w;
}

}  // namespace

TEST_CASE("length equals Cayley graph distance") {
  for (const std::string name : {"A2", "B2", "G2", "A3"}) {
    CAPTURE(name);
    RootSystem rs(DynkinType::parse(name));
    const int radius = rs.rank() == 3 ? 5 : 7;
    for (const auto& [k, d] : cayley_ball(rs, radius)) {
      AffineElement w;
      w.linear = IntMatrix(rs.rank());
      for (int i = 0; i < rs.rank(); ++i)
        for (int j = 0; j < rs.rank(); ++j) w.linear(i, j) = k.first[static_cast<std::size_t>(i * rs.rank() + j)];
      w.trans = k.second;
      CHECK(length(rs, w) == d);
    }
  }
}

TEST_CASE("ball sizes in the affine A2 group") {
  // Growth series of affine A2: 1, 3, 6, 9, 12, ... (3k elements of length k >= 1).
  RootSystem rs(DynkinType::parse("A2"));
  const auto ball = cayley_ball(rs, 6);
  std::map<int, int> by_length;
  for (const auto& [k, d] : ball) ++by_length[d];
  CHECK(by_length[0] == 1);
  for (int d = 1; d <= 6; ++d) CHECK(by_length[d] == 3 * d);
}

TEST_CASE("reduced words, inversion sets and reduce") {
  std::mt19937_64 rng(11);
  for (const std::string name : {"A3", "B3", "C2", "G2", "D4", "F4"}) {
    CAPTURE(name);
    RootSystem rs(DynkinType::parse(name));
    for (int trial = 0; trial < 200; ++trial) {
      const Word w = random_word(rng, rs.rank() + 1, 1 + trial % 10);
      const AffineElement e = word_to_element(rs, w);
      const bool reduced = length(rs, e) == static_cast<std::int64_t>(w.size());
      CHECK(is_reduced(rs, w) == reduced);
      const Word r = reduce(rs, e);
      CHECK(word_to_element(rs, r) == e);
      CHECK(static_cast<std::int64_t>(r.size()) == length(rs, e));
      if (reduced) {
        const auto inv = inversion_set(rs, w);
        CHECK(inv.size() == w.size());
        std::set<AffineRoot> distinct(inv.items.begin(), inv.items.end());
        CHECK(distinct.size() == w.size());
        for (const auto& b : inv.items) CHECK(b.positive());
      } else {
        CHECK_THROWS_AS(inversion_set(rs, w), Error);
      }
    }
  }
}

TEST_CASE("affine action is compatible with evaluation") {
  std::mt19937_64 rng(5);
  RootSystem rs(DynkinType::parse("B3"));
  for (int trial = 0; trial < 100; ++trial) {
    const AffineElement w = word_to_element(rs, random_word(rng, 4, 8));
    const AffineRoot beta{rs.roots()[static_cast<std::size_t>(trial) % rs.roots().size()], trial % 5 - 2};
    const RatVec x{Rational(1, 3), Rational(-2, 7), Rational(5, 11)};
    CHECK(evaluate(rs, act_affine_root(rs, w, beta), act_point(w, x)) == evaluate(rs, beta, x));
    CHECK(multiply(w, inverse(rs, w)).is_identity());
  }
}

TEST_CASE("right descents lower the length") {
  RootSystem rs(DynkinType::parse("C3"));
  const AffineElement w = word_to_element(rs, parse_word("0 1 2 3 2 1"));
  for (int i = 0; i <= 3; ++i)
    CHECK(is_right_descent(rs, w, i) == (length(rs, multiply_simple(rs, w, i)) < length(rs, w)));
}

TEST_CASE("longest quotient element of A2 at node 1") {
  RootSystem rs(DynkinType::parse("A2"));
  const auto q = longest_quotient_element(rs, 1);
  // Minimal coset representatives of W/W_{2} have length at most 2.
  CHECK(q.word.size() == 2);
  CHECK(is_reduced(rs, q.word));
  CHECK(word_to_element(rs, q.word) == q.element);
}

TEST_CASE("word syntax") {
  CHECK(parse_word("0 1 2") == Word{0, 1, 2});
  CHECK(parse_word("0,1,2") == Word{0, 1, 2});
  CHECK(parse_word("012[10]") == Word{0, 1, 2, 10});
  CHECK(format_word(Word{3, 1, 0}) == "3 1 0");
  CHECK_THROWS_AS(parse_word("0 x"), Error);
  RootSystem rs(DynkinType::parse("A2"));
  CHECK_THROWS_AS(check_letters(rs, Word{0, 3}), Error);
}
