#include "afflim/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace afflim;

TEST_CASE("rational vectors round-trip to integers") {
  CHECK(to_int(RatVec{Rational(4, 2), Rational(-3)}) == IntVec{2, -3});
  CHECK_FALSE(to_int(RatVec{Rational(1, 2)}).has_value());
  CHECK(common_denominator(RatVec{Rational(1, 2), Rational(2, 3), Rational(5)}) == 6);
  CHECK(to_string(RatVec{Rational(1, 2), Rational(-2)}) == "(1/2,-2)");
}

TEST_CASE("Gauss-Jordan inverse times the matrix is the identity") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3);
  int inverted = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 5;
    RatMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = entry(rng);
    const auto inv = m.inverse();
    if (!inv) continue;
    ++inverted;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational s = 0;
        for (int k = 0; k < n; ++k) s += m(i, k) * (*inv)(k, j);
        CHECK(s.numerator() == (i == j ? 1 : 0));
        CHECK(s.denominator() == 1);
      }
  }
  CHECK(inverted > 100);
}

TEST_CASE("singular matrices have no inverse") {
  RatMatrix m(2);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 2;
  m(1, 1) = 4;
  CHECK_FALSE(m.inverse().has_value());
}

TEST_CASE("integer matrix product is associative and respects identity") {
  IntMatrix a(3), b(3), c(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      a(i, j) = i - j;
      b(i, j) = i * j + 1;
      c(i, j) = (i + 2 * j) % 3 - 1;
    }
  CHECK((a * b) * c == a * (b * c));
  CHECK(IntMatrix::identity(3) * a == a);
  CHECK(a.apply(IntVec{1, 0, 0}) == IntVec{0, 1, 2});
}
