#include "afflim/errors.hpp"
#include "afflim/fixtures.hpp"
#include "afflim/fullcomm.hpp"

#include <doctest.h>

#include <cstdlib>
#include <map>
#include <random>

using namespace afflim;

namespace {

/// Reduced words of every element of the finite parabolic subgroup on
/// letters 1..n, one per element.
std::vector<Word> finite_elements(const RootSystem& rs) {
  std::map<std::pair<std::vector<std::int64_t>, IntVec>, bool> seen;
  std::vector<std::pair<AffineElement, Word>> frontier{{identity_element(rs), {}}};
  std::vector<Word> out{{}};
  seen[{frontier.front().first.linear.data(), frontier.front().first.trans}] = true;
  while (!frontier.empty()) {
    std::vector<std::pair<AffineElement, Word>> next;
    for (const auto& [e, w] : frontier)
      for (int i = 1; i <= rs.rank(); ++i) {
        AffineElement f = multiply_simple(rs, e, i);
        if (!seen.emplace(std::make_pair(f.linear.data(), f.trans), true).second) continue;
        Word wi = w;
        wi.push_back(i);
        out.push_back(wi);
        next.emplace_back(std::move(f), std::move(wi));
      }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("fully commutative element counts of finite Weyl groups") {
  // Stembridge: A_n Catalan, B_n (n+2)C_n - 1, D_n (n+3)/2 C_n - 1,
  // F4 106, dihedral of order 2m has 2m - 1.
  const std::map<std::string, std::size_t> expected = {{"A3", 14}, {"A4", 42}, {"B3", 24}, {"B4", 83},
                                                        {"D4", 48}, {"F4", 106}, {"G2", 11}};
  for (const auto& [name, count] : expected) {
    CAPTURE(name);
    RootSystem rs(DynkinType::parse(name));
    std::size_t by_class = 0, by_planes = 0;
    for (const Word& w : finite_elements(rs)) {
      if (fc_by_commutation_class(rs, w).verdict == FcVerdict::FC) ++by_class;
      if (fc_by_rank2_inversions(rs, w).fully_commutative) ++by_planes;
    }
    CHECK(by_class == count);
    CHECK(by_planes == count);
  }
}

TEST_CASE("the two tests agree on random affine words") {
  std::mt19937_64 rng(21);
  for (const std::string name : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
    CAPTURE(name);
    RootSystem rs(DynkinType::parse(name));
    std::uniform_int_distribution<int> letter(0, rs.rank());
    int checked = 0;
    while (checked < 100) {
      Word w;
      for (int k = 0; k < 14; ++k) {
        w.push_back(letter(rng));
        if (!is_reduced(rs, w)) w.pop_back();
      }
      const auto bfs = fc_by_commutation_class(rs, w);
      REQUIRE(bfs.verdict != FcVerdict::BudgetExceeded);
      CHECK((bfs.verdict == FcVerdict::FC) == fc_by_rank2_inversions(rs, w).fully_commutative);
      ++checked;
    }
  }
}

TEST_CASE("braid witnesses") {
  RootSystem rs(DynkinType::parse("A2"));
  const auto r = fc_by_commutation_class(rs, parse_word("1 2 1"));
  CHECK(r.verdict == FcVerdict::NotFC);
  const auto p = fc_by_rank2_inversions(rs, parse_word("1 2 1"));
  REQUIRE(p.witness.has_value());
  CHECK(p.witness->kind == Rank2Kind::A2);
  CHECK(fc_by_commutation_class(rs, parse_word("1 2 0")).verdict == FcVerdict::FC);
  CHECK_THROWS_AS(fc_by_commutation_class(rs, parse_word("1 1")), Error);
  CHECK(fc_by_commutation_class(RootSystem(DynkinType::parse("D4")), parse_word("1 3 4 2 1 3 4"), 2).verdict ==
        FcVerdict::BudgetExceeded);
}

TEST_CASE("node classification in small types") {
  RootSystem c2(DynkinType::parse("C2"));
  CHECK(fc_nodes(classification_check(c2)) == std::vector<int>{1, 2});
  RootSystem b3(DynkinType::parse("B3"));
  for (const auto& row : classification_check(b3)) CHECK(row.consistent());
  RootSystem a2(DynkinType::parse("A2"));
  CHECK(fc_nodes(classification_check(a2)) == std::vector<int>{1, 2});
}

TEST_CASE("G2: the long-root walk is fully commutative") {
  RootSystem rs(DynkinType::parse("G2"));
  CHECK(fc_node(rs, 2));
  CHECK_FALSE(fc_node(rs, 1));
  // The walk period is the minimal word of coweight 2 up to rotation.
  const Word w = PeriodicWord{{}, parse_word("0 1 2 1 2")}.truncation(6);
  CHECK(fc_by_commutation_class(rs, w).verdict == FcVerdict::FC);
  // Every quotient representative of the dihedral group is shorter than 6.
  CHECK(fc_node_via_quotient(rs, 1));
  CHECK(fc_node_via_quotient(rs, 2));
}

TEST_CASE("branch decompositions") {
  RootSystem d5(DynkinType::parse("D5"));
  CHECK(default_branch_node(d5) == 2);
  const auto bd = branch_decomposition(d5, 2);
  REQUIRE(bd.branches.size() == 3);
  CHECK(bd.branches[0].nodes == std::vector<int>{0});
  CHECK(bd.branches[1].nodes == std::vector<int>{1});
  CHECK(bd.branches[2].nodes == std::vector<int>{3, 4, 5});
  CHECK(bd.branches[2].kind == BranchKind::D);
  RootSystem e7(DynkinType::parse("E7"));
  CHECK(default_branch_node(e7) == 3);
  RootSystem b4(DynkinType::parse("B4"));
  const auto bb = branch_decomposition(b4, default_branch_node(b4));
  CHECK(bb.branches.back().kind == BranchKind::B);
  CHECK_FALSE(is_branch_node(b4, 1));
  RootSystem f4(DynkinType::parse("F4"));
  CHECK_THROWS_AS(default_branch_node(f4), Error);
}

TEST_CASE("densities: search agrees with heaps and witnesses replay") {
  for (const std::string name : {"B4", "C4", "D5", "E6", "E7"}) {
    CAPTURE(name);
    RootSystem rs(DynkinType::parse(name));
    const auto bd = branch_decomposition(rs, default_branch_node(rs));
    for (const auto& row : table3_fixture(rs)) {
      const auto bf = block_factorization(rs, bd, row.word, 120);
      for (std::size_t p = 1; p + 1 < bf.separators.size(); ++p) {
        int sum = 0;
        for (std::size_t b = 0; b < bd.branches.size(); ++b) {
          const auto d = density(rs, bf, bd, b, p);
          REQUIRE(d.value.has_value());
          CHECK(density_exact(rs, bf, bd, b, p).value == d.value);
          sum += *d.value;
          if (*d.value != 1) {
            const auto parts = block_of(bd, replay_swaps(rs, bf.word, d.window_begin, d.swaps), p);
            for (std::size_t o = 0; o < parts.size(); ++o)
              if ((*d.value == 0) == (o == b)) CHECK(parts[o].empty());
          }
        }
        CHECK(sum >= 2);
      }
    }
  }
}

TEST_CASE("illegal swaps are rejected") {
  RootSystem rs(DynkinType::parse("A3"));
  CHECK_THROWS_AS(replay_swaps(rs, parse_word("1 2 3"), 0, {0}), Error);
  CHECK(replay_swaps(rs, parse_word("1 3 2"), 0, {0}) == parse_word("3 1 2"));
}

TEST_CASE("budget from the environment") {
  setenv("AFFLIM_BUDGET", "123", 1);
  CHECK(budget_from_env(17) == 123);
  setenv("AFFLIM_BUDGET", "lots", 1);
  CHECK(budget_from_env(17) == 17);
  unsetenv("AFFLIM_BUDGET");
  CHECK(budget_from_env(17) == 17);
}
