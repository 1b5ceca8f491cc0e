#pragma once

// Coxeter elements of the affine group, orientation flips, and the heavy
// node of the finite diagram.

#include "afflim/rootsys.hpp"
#include "afflim/weyl.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace afflim {

/// Edges of the affine diagram (bond != 2), each directed from the letter
/// that comes first in the Coxeter word.
struct Orientation {
  std::vector<std::pair<int, int>> arcs;

  friend bool operator==(const Orientation&, const Orientation&) = default;
};

/// Throws NotPermutation unless `order` lists 0..n once each.
Word coxeter_word(const RootSystem& rs, const std::vector<int>& order);
Orientation orientation_of(const RootSystem& rs, const Word& coxeter);
bool is_acyclic(const RootSystem& rs, const Orientation& o);

/// v with v c1 v^{-1} = c2, built from source/sink flips away from node 0.
Word conjugation_path(const RootSystem& rs, const Word& c1, const Word& c2);

int heavy_node_graph(const RootSystem& rs);

struct BipartiteOrbit {
  int node = 0;
  /// xi followed by every intermediate root.
  std::vector<IntVec> trace;
  /// Number of single-part reflections applied.
  int applications = 0;
  /// Number of alternating pairs, counting a trailing single part as one.
  int exponent = 0;
  /// Colour class of the terminal node, and the other class.
  std::vector<int> f_part;
  std::vector<int> u_part;
  /// The f_part reflection fixes xi, so the walk opens with u_part.
  bool f_fixes_xi = false;
};

/// Two-colouring of the finite diagram; the part containing node 1 first.
std::pair<std::vector<int>, std::vector<int>> bipartition(const RootSystem& rs);
/// Product of the commuting reflections in `part`, ascending order.
IntVec reflect_part(const RootSystem& rs, const std::vector<int>& part, const IntVec& x);

BipartiteOrbit heavy_node_bipartite(const RootSystem& rs);
/// Same walk but forcing the part applied first; returns nullopt if it
/// never reaches a simple root with strictly decreasing heights.
std::optional<int> bipartite_terminal(const RootSystem& rs, bool start_with_first_colour);

struct CoxeterCertificate {
  std::optional<int> node;
  std::int64_t power = 0;
  IntVec translation;
  Word conjugator;
};

CoxeterCertificate coxeter_node_certify(const RootSystem& rs, const Word& coxeter);

}  // namespace afflim
