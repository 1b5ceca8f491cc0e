#include "afflim/errors.hpp"
#include "afflim/rootsys.hpp"

#include <doctest.h>

#include <map>

using namespace afflim;

namespace {

/// Coxeter number from the classification.
int coxeter_number(const DynkinType& t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return n + 1;
    case Family::B:
    case Family::C: return 2 * n;
    case Family::D: return 2 * n - 2;
    case Family::E: return n == 6 ? 12 : n == 7 ? 18 : 30;
    case Family::F: return 12;
    case Family::G: return 6;
  }
  return 0;
}

std::size_t weyl_order(const DynkinType& t) {
  std::size_t f = 1;
  for (int i = 2; i <= t.rank; ++i) f *= static_cast<std::size_t>(i);
  switch (t.family) {
    case Family::A: return f * static_cast<std::size_t>(t.rank + 1);
    case Family::B:
    case Family::C: return f << t.rank;
    case Family::D: return f << (t.rank - 1);
    case Family::E: return t.rank == 6 ? 51840 : t.rank == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

std::vector<int> nodes_with_mark_one(const IntVec& v) {
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == 1) out.push_back(static_cast<int>(i) + 1);
  return out;
}

}  // namespace

TEST_CASE("root counts and highest root height match the Coxeter number") {
  for (const auto& t : all_types(8)) {
    CAPTURE(t.name());
    RootSystem rs(t);
    const int h = coxeter_number(t);
    CHECK(rs.positive_roots().size() == static_cast<std::size_t>(t.rank * h / 2));
    CHECK(rs.roots().size() == 2 * rs.positive_roots().size());
    CHECK(rs.height(rs.highest_root()) == h - 1);
    for (const auto& r : rs.positive_roots()) CHECK(rs.root_index(r).has_value());
  }
}

TEST_CASE("Cartan matrix is the normalised Gram matrix") {
  for (const auto& t : all_types(6)) {
    CAPTURE(t.name());
    RootSystem rs(t);
    for (int i = 1; i <= t.rank; ++i) {
      CHECK(rs.cartan(i, i) == 2);
      for (int j = 1; j <= t.rank; ++j) {
        CHECK(rs.form(i, j) == rs.form(j, i));
        const Rational c = Rational(2) * rs.form(i, j) / rs.form(i, i);
        CHECK(c.denominator() == 1);
        CHECK(c.numerator() == rs.cartan(i, j));
      }
    }
  }
}

TEST_CASE("long roots have squared length 2") {
  for (const auto& t : all_types(6)) {
    RootSystem rs(t);
    Rational longest = 0;
    for (const auto& r : rs.positive_roots()) longest = std::max(longest, rs.pairing(r, r));
    CHECK(longest.numerator() == 2);
    CHECK(longest.denominator() == 1);
  }
}

TEST_CASE("orbit of a regular vector has the order of the Weyl group") {
  for (const auto& t : all_types(5)) {
    CAPTURE(t.name());
    RootSystem rs(t);
    RatVec rho(static_cast<std::size_t>(t.rank), Rational(0));
    for (const auto& c : rs.coweights()) rho = rho + c;
    CHECK(orbit(rs, rho).size() == weyl_order(t));
  }
  RootSystem e6(DynkinType::make(Family::E, 6));
  // The orbit of a fundamental coweight is |W| / |W_J|: 51840 / |W(D5)| = 27.
  CHECK(orbit(e6, e6.coweight(1)).size() == 27);
}

TEST_CASE("minuscule and cominuscule nodes") {
  const std::map<std::string, std::pair<std::vector<int>, std::vector<int>>> expected = {
      {"A3", {{1, 2, 3}, {1, 2, 3}}}, {"B4", {{4}, {1}}}, {"C4", {{1}, {4}}}, {"D5", {{1, 4, 5}, {1, 4, 5}}},
      {"E6", {{1, 5}, {1, 5}}},       {"E7", {{6}, {6}}}, {"E8", {{}, {}}},   {"F4", {{}, {}}},
      {"G2", {{}, {}}}};
  for (const auto& [name, sets] : expected) {
    CAPTURE(name);
    RootSystem rs(DynkinType::parse(name));
    std::vector<int> minu, comin;
    for (int i = 1; i <= rs.rank(); ++i) {
      if (minuscule(rs, i)) minu.push_back(i);
      if (cominuscule(rs, i)) comin.push_back(i);
    }
    CHECK(minu == sets.first);
    CHECK(comin == sets.second);
    CHECK(comin == nodes_with_mark_one(rs.marks()));
  }
}

TEST_CASE("affine diagram shapes") {
  RootSystem e7(DynkinType::parse("E7"));
  CHECK(e7.neighbors(3) == std::vector<int>{2, 4, 7});
  CHECK(e7.neighbors(0) == std::vector<int>{1});
  RootSystem g2(DynkinType::parse("G2"));
  CHECK(g2.bond(0, 1) == 3);
  CHECK(g2.bond(1, 2) == 6);
  CHECK(g2.bond(0, 2) == 2);
  RootSystem c3(DynkinType::parse("C3"));
  CHECK(c3.bond(0, 1) == 4);
  CHECK(c3.bond(2, 3) == 4);
  RootSystem a1(DynkinType::parse("A1"));
  CHECK(a1.bond(0, 1) == kInfiniteBond);
  RootSystem a3(DynkinType::parse("a3"));
  CHECK(a3.neighbors(0) == std::vector<int>{1, 3});
}

TEST_CASE("reflections are involutions fixing the root lattice") {
  for (const auto& t : all_types(5)) {
    RootSystem rs(t);
    for (int i = 0; i <= t.rank; ++i)
      for (const auto& r : rs.roots()) {
        const IntVec s = rs.reflect(i, r);
        CHECK(rs.root_index(s).has_value());
        CHECK(rs.reflect(i, s) == r);
      }
  }
}

TEST_CASE("type parsing") {
  CHECK(DynkinType::parse("e7").name() == "E7");
  CHECK_THROWS_AS(DynkinType::parse("Q3"), Error);
  try {
    DynkinType::parse("D3");
    FAIL("D3 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidRank);
  }
  CHECK_FALSE(valid_rank(Family::E, 5));
  CHECK(valid_rank(Family::B, 2));
}
