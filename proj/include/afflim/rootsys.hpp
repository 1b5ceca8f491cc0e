#pragma once

// Finite root systems of every crystallographic type, together with the
// affine node, in the node labelling of the affine Dynkin diagrams used
// throughout the library:
//
//   A_n  0 joined to 1 and n (a cycle), chain 1-2-...-n
//   B_n  chain 1-...-(n-1)=>n (n short), 0 joined to 2
//   C_n  0=>1-...-(n-1)<=n (n long, 1..n-1 short)
//   D_n  chain 1-...-(n-2), (n-2)-(n-1), (n-2)-n, 0 joined to 2
//   E_6  chain 1-2-3-4-5, 3-6, 0 joined to 6
//   E_7  chain 1-...-6, 3-7, 0 joined to 1
//   E_8  chain 1-...-7, 5-8, 0 joined to 1
//   F_4  0-1-2=>3-4 (1,2 long)
//   G_2  0-1=>2 (1 long)
//
// Long roots have squared length 2.

#include "afflim/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace afflim {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct DynkinType {
  Family family = Family::A;
  int rank = 1;

  /// Throws Error(InvalidRank) for combinations outside the classification.
  static DynkinType make(Family family, int rank);
  /// Parses "B5", "e7", "A2"; throws InvalidArgument or InvalidRank.
  static DynkinType parse(std::string_view text);

  std::string name() const;
  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

bool valid_rank(Family family, int rank);

/// Bond order m_ij of the affine diagram; kInfiniteBond marks the
/// unlabelled edge of the affine A_1 diagram.
inline constexpr int kInfiniteBond = 0;

class RootSystem {
 public:
  explicit RootSystem(DynkinType type);

  const DynkinType& type() const { return type_; }
  int rank() const { return n_; }

  /// A[i][j] = <alpha_i^vee, alpha_j>, 1-based finite indices.
  std::int64_t cartan(int i, int j) const;
  /// B[i][j] = <alpha_i, alpha_j>, 1-based finite indices.
  Rational form(int i, int j) const;

  const std::vector<IntVec>& positive_roots() const { return positive_; }
  /// Positive roots followed by their negatives.
  const std::vector<IntVec>& roots() const { return all_roots_; }
  std::optional<std::size_t> root_index(const IntVec& v) const;

  const IntVec& highest_root() const { return highest_; }
  /// b_1..b_n, the coordinates of the highest root (0-based vector).
  const IntVec& marks() const { return highest_; }
  /// omega_j^vee for j = 1..n (0-based vector).
  const std::vector<RatVec>& coweights() const { return coweights_; }
  const RatVec& coweight(int j) const { return coweights_.at(static_cast<std::size_t>(j - 1)); }
  /// alpha_j^vee in root coordinates for j = 1..n (0-based vector).
  const std::vector<IntVec>& coroots() const { return coroots_; }
  /// k_1..k_n (0-based vector).
  const std::vector<std::int64_t>& k() const { return k_; }
  std::int64_t k(int j) const { return k_.at(static_cast<std::size_t>(j - 1)); }
  /// Coefficients of the highest root of the dual system in the simple coroot basis.
  const IntVec& highest_coroot() const { return highest_coroot_; }

  /// m_ij for i != j in 0..n; 2 means the generators commute.
  int bond(int i, int j) const;
  /// Neighbours of node i in the affine diagram (bond != 2).
  const std::vector<int>& neighbors(int i) const { return neighbors_.at(static_cast<std::size_t>(i)); }
  /// Neighbours among the finite nodes 1..n only.
  std::vector<int> finite_neighbors(int i) const;

  /// Linear part of the simple root of node i (alpha_0 = -xi).
  const IntVec& node_root(int i) const { return node_root_.at(static_cast<std::size_t>(i)); }
  /// <x, alpha_i^vee> for a lattice vector x, node i in 0..n.
  std::int64_t coroot_pairing(int i, const IntVec& x) const;
  /// Row r with <x, alpha_i^vee> = r . x.
  const IntVec& coroot_row(int i) const { return coroot_rows_.at(static_cast<std::size_t>(i)); }
  Rational coroot_pairing(int i, const RatVec& x) const;
  /// Linear reflection s_i (s_0 acts as the reflection in xi).
  IntVec reflect(int i, const IntVec& x) const;
  RatVec reflect(int i, const RatVec& x) const;
  /// Squared length of the simple root of node i.
  Rational node_length(int i) const;

  /// 6<x,y>, an exact integer for lattice vectors.
  std::int64_t pair6(const IntVec& x, const IntVec& y) const;
  /// <x,y> for lattice vectors known to pair integrally (e.g. a root with a coroot-lattice vector).
  std::int64_t pair_int(const IntVec& x, const IntVec& y) const;
  /// 6*B*x, cached per root for fast pairings.
  IntVec gram6(const IntVec& x) const;

  Rational pairing(const RatVec& x, const RatVec& y) const;
  Rational pairing(const IntVec& x, const IntVec& y) const;

  bool in_coroot_lattice(const RatVec& v) const;
  bool in_coroot_lattice(const IntVec& v) const;

  bool is_positive_root_vector(const IntVec& v) const;
  std::int64_t height(const IntVec& v) const;

  /// Inverse Gram matrix; its columns are the coweights.
  const RatMatrix& form_inverse() const { return form_inverse_; }

  /// A multiple of the exponent of the finite Weyl group, used to cap
  /// order searches.
  std::int64_t exponent_bound() const { return exponent_bound_; }

  friend bool operator==(const RootSystem& a, const RootSystem& b);

 private:
  DynkinType type_;
  int n_ = 0;
  std::vector<Rational> lengths_;   // squared lengths of alpha_1..alpha_n
  std::vector<std::int64_t> form6_;  // 6*B, row-major
  IntMatrix cartan_;
  RatMatrix form_inverse_;
  std::vector<IntVec> positive_;
  std::vector<IntVec> all_roots_;
  std::unordered_map<IntVec, std::size_t, IntVecHash> root_lookup_;
  IntVec highest_;
  IntVec highest_coroot_;
  std::vector<RatVec> coweights_;
  std::vector<IntVec> coroots_;
  std::vector<std::int64_t> k_;
  std::vector<IntVec> node_root_;       // 0..n
  std::vector<IntVec> coroot_rows_;     // 0..n, row r with <x, alpha_i^vee> = r.x
  std::vector<std::vector<int>> bonds_;  // (n+1)x(n+1)
  std::vector<std::vector<int>> neighbors_;
  std::int64_t exponent_bound_ = 1;
};

/// W-orbit of v under s_1..s_n in breadth-first discovery order.
std::vector<RatVec> orbit(const RootSystem& rs, const RatVec& v);
/// Size of the orbit of an integer vector without materialising rationals.
std::size_t orbit_size(const RootSystem& rs, const IntVec& v);

struct DominantRep {
  RatVec vector;
  /// Word u with u * v = vector, in product order.
  Word word;
};

/// Greedy walk to the dominant chamber, reflecting at the smallest index
/// with negative pairing.  Throws ZeroVector.
DominantRep dominant_rep(const RootSystem& rs, const RatVec& v);

/// Coefficient of alpha_i in the highest root is 1.
bool cominuscule(const RootSystem& rs, int i);
/// Coefficient of alpha_i^vee in the highest coroot is 1.
bool minuscule(const RootSystem& rs, int i);

/// Every type the library ships tests for: A1.., B2.., C2.., D4.., E6-8, F4, G2
/// with rank at most max_rank.
std::vector<DynkinType> all_types(int max_rank);

}  // namespace afflim
