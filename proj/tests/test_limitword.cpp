#include "afflim/errors.hpp"
#include "afflim/limitword.hpp"

#include <doctest.h>

using namespace afflim;

TEST_CASE("minimal class counts are coweight orbit sizes") {
  for (const auto& t : all_types(5)) {
    CAPTURE(t.name());
    RootSystem rs(t);
    const auto counts = minimal_counts(rs);
    REQUIRE(counts.size() == static_cast<std::size_t>(t.rank));
    for (int i = 1; i <= t.rank; ++i) CHECK(counts[static_cast<std::size_t>(i - 1)] == orbit(rs, rs.coweight(i)).size());
  }
}

TEST_CASE("type A minimal classes: binomial counts") {
  RootSystem rs(DynkinType::parse("A3"));
  const auto classes = enumerate_minimal(rs);
  CHECK(classes.size() == 4 + 6 + 4);
  for (const auto& c : classes) {
    CHECK(is_reduced(rs, c.word.truncation(4)));
    CHECK(translation_direction(rs, c.word).coweight_index == c.coweight_index);
  }
}

TEST_CASE("walks are reduced and certify their coweight") {
  for (const auto& t : all_types(6)) {
    RootSystem rs(t);
    for (int i = 1; i <= t.rank; ++i) {
      CAPTURE(t.name());
      CAPTURE(i);
      const auto pw = lambda_walk(rs, to_rat(scaled_coweight(rs, i)));
      CHECK(is_reduced(rs, pw.truncation(3)));
      const auto d = translation_direction(rs, pw);
      CHECK(d.coweight_index == i);
      CHECK(translation_power(rs, pw) == d.power);
    }
  }
}

TEST_CASE("truncated inversions lie on the translation ray") {
  RootSystem rs(DynkinType::parse("B3"));
  for (int i = 1; i <= 3; ++i) {
    const RatVec lambda = to_rat(scaled_coweight(rs, i));
    const auto pw = lambda_walk(rs, lambda);
    const auto ray = translation_ray_hyperplanes(rs, lambda, 3);
    const auto inv = truncated_inversion_set(rs, pw, 200);
    REQUIRE(saturated_level(rs, pw, 200) >= 3);
    std::size_t low = 0;
    for (const auto& b : inv.items)
      if (b.level <= 3) {
        ++low;
        CHECK(std::find(ray.begin(), ray.end(), b) != ray.end());
      }
    CHECK(low == ray.size());
  }
}

TEST_CASE("seeded walks reach the same limit") {
  RootSystem rs(DynkinType::parse("C3"));
  const RatVec lambda = to_rat(scaled_coweight(rs, 2));
  const auto base = lambda_walk(rs, lambda);
  for (std::uint64_t s = 1; s <= 10; ++s) CHECK(limit_equal(rs, base, lambda_walk(rs, lambda, WalkStrategy::seeded(s)), 30));
}

TEST_CASE("walk input validation") {
  RootSystem rs(DynkinType::parse("B2"));
  try {
    lambda_walk(rs, RatVec{Rational(0), Rational(0)});
    FAIL("zero vector accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroVector);
  }
  CHECK_THROWS_AS(lambda_walk(rs, RatVec{Rational(1, 3), Rational(0)}), Error);
}

TEST_CASE("periodic word helpers") {
  const PeriodicWord pw{{0}, {1, 2}};
  CHECK(pw.truncation(2) == Word{0, 1, 2, 1, 2});
  CHECK(pw.reps_for_depth(6) == 3);
}
