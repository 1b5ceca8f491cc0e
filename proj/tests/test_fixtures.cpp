#include "afflim/errors.hpp"
#include "afflim/fixtures.hpp"

#include <doctest.h>

using namespace afflim;

TEST_CASE("minimal word rows: one per coweight, reduced") {
  for (const auto& t : all_types(8)) {
    if (t.family == Family::A) continue;
    CAPTURE(t.name());
    RootSystem rs(t);
    const auto rows = table1_fixture(rs);
    CHECK(rows.size() == static_cast<std::size_t>(t.rank));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(rows[i].coweight == static_cast<int>(i) + 1);
      CHECK(is_reduced(rs, rows[i].word.truncation(4)));
    }
  }
  CHECK_THROWS_AS(table1_fixture(RootSystem(DynkinType::parse("A3"))), Error);
}

TEST_CASE("minimal word rows certify their coweight in the classical types") {
  for (const auto& t : all_types(7)) {
    if (t.family == Family::A || t.family == Family::E || t.family == Family::F || t.family == Family::G) continue;
    CAPTURE(t.name());
    RootSystem rs(t);
    for (const auto& row : table1_fixture(rs)) CHECK(translation_direction(rs, row.word).coweight_index == row.coweight);
  }
}

TEST_CASE("fully commutative rows") {
  RootSystem d5(DynkinType::parse("D5"));
  CHECK(is_reduced(d5, table3_fixture(d5).front().word.truncation(3)));
  CHECK_FALSE(is_reduced(d5, table3_fixture(d5, DnReading::Literal).front().word.truncation(3)));

  RootSystem e6(DynkinType::parse("E6"));
  const auto rep = table3_verify(e6);
  REQUIRE(rep.rows.size() == 2);
  CHECK(rep.rows[0].listed == 6);
  CHECK(rep.rows[0].certified == 5);
  CHECK(rep.rows[1].certified == 1);
  CHECK(rep.complete());

  RootSystem a3(DynkinType::parse("A3"));
  CHECK(table3_verify(a3).certified == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS(table3_fixture(RootSystem(DynkinType::parse("B2"))), Error);
}

TEST_CASE("heavy node labels") {
  RootSystem g2(DynkinType::parse("G2"));
  CHECK(table2_expectation(g2).node == 1);
  CHECK(table2_expectation(g2).printed_node == 2);
  RootSystem e8(DynkinType::parse("E8"));
  CHECK(table2_expectation(e8).exponent == 7);
  CHECK(table2_label(e8, 5) == 5);
}

TEST_CASE("E7 block schedule") {
  RootSystem rs(DynkinType::parse("E7"));
  const auto bd = branch_decomposition(rs, 3);
  const auto bf = block_factorization(rs, bd, table3_fixture(rs).front().word, 200);
  REQUIRE(bf.separators.size() > 8);
  CHECK(schedule_offset(bf, bd, e7_block_schedule(), 1, bf.separators.size()).has_value());
}
