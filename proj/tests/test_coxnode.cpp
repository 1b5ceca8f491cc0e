#include "afflim/coxnode.hpp"
#include "afflim/errors.hpp"
#include "afflim/fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace afflim;

namespace {

/// Node i whose coweight is a positive multiple of the dominant
/// representative of the translation part of c^m, m the order of the
/// linear part.  Computed by brute force.
std::optional<int> brute_coxeter_node(const RootSystem& rs, const Word& c) {
  const AffineElement e = word_to_element(rs, c);
  AffineElement p = e;
  while (!p.linear.is_identity()) p = multiply(p, e);
  RatVec v = to_rat(p.trans);
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 1; i <= rs.rank() && !moved; ++i)
      if (rs.coroot_pairing(i, v) < 0) {
        v = rs.reflect(i, v);
        moved = true;
      }
  }
  std::optional<int> node;
  for (int i = 1; i <= rs.rank(); ++i) {
    // Dominant: pairings with simple roots; a multiple of omega_i^vee has exactly one nonzero.
    if (rs.pairing(v, to_rat(rs.node_root(i))) > 0) {
      if (node) return std::nullopt;
      node = i;
    }
  }
  return node;
}

}  // namespace

TEST_CASE("Coxeter elements translate along the heavy node") {
  std::mt19937_64 rng(3);
  for (const auto& t : all_types(6)) {
    if (t.family == Family::A) continue;
    CAPTURE(t.name());
    RootSystem rs(t);
    const int heavy = heavy_node_graph(rs);
    CHECK(heavy == table2_expectation(rs).node);
    std::vector<int> order(static_cast<std::size_t>(t.rank + 1));
    std::iota(order.begin(), order.end(), 0);
    for (int trial = 0; trial < 6; ++trial) {
      std::shuffle(order.begin(), order.end(), rng);
      const Word c = coxeter_word(rs, order);
      CHECK(brute_coxeter_node(rs, c) == heavy);
      CHECK(coxeter_node_certify(rs, c).node == heavy);
    }
  }
}

TEST_CASE("conjugation paths conjugate Coxeter elements") {
  std::mt19937_64 rng(9);
  for (const std::string name : {"B4", "D5", "E6", "F4", "G2", "A3"}) {
    CAPTURE(name);
    RootSystem rs(DynkinType::parse(name));
    std::vector<int> order(static_cast<std::size_t>(rs.rank() + 1));
    std::iota(order.begin(), order.end(), 0);
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(order.begin(), order.end(), rng);
      const Word c1 = coxeter_word(rs, order);
      std::shuffle(order.begin(), order.end(), rng);
      const Word c2 = coxeter_word(rs, order);
      if (rs.type().family == Family::A && !is_acyclic(rs, orientation_of(rs, c1))) continue;
      try {
        const Word v = conjugation_path(rs, c1, c2);
        const AffineElement ve = word_to_element(rs, v);
        CHECK(multiply(multiply(ve, word_to_element(rs, c1)), inverse(rs, ve)) == word_to_element(rs, c2));
        if (rs.type().family != Family::A) CHECK(std::find(v.begin(), v.end(), 0) == v.end());
      } catch (const Error& e) {
        // Affine A_n has several conjugacy classes of Coxeter elements.
        CHECK(e.code() == ErrorCode::UnsupportedType);
        CHECK(rs.type().family == Family::A);
      }
    }
  }
}

TEST_CASE("bipartite walk exponents") {
  for (const auto& t : all_types(8)) {
    if (t.family == Family::A) continue;
    CAPTURE(t.name());
    RootSystem rs(t);
    const auto b = heavy_node_bipartite(rs);
    const auto h = table2_expectation(rs);
    CHECK(b.exponent == h.exponent);
    CHECK(b.node == h.node);
    CHECK(b.trace.front() == rs.highest_root());
    CHECK(b.trace.back() == rs.node_root(b.node));
  }
}

TEST_CASE("coxeter word validation") {
  RootSystem rs(DynkinType::parse("B3"));
  CHECK_THROWS_AS(coxeter_word(rs, {0, 1, 1, 3}), Error);
  CHECK(coxeter_word(rs, {3, 2, 1, 0}) == Word{3, 2, 1, 0});
}
