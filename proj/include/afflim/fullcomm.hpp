#pragma once

// Full commutativity: the commutation-class search, the rank-2 inversion
// test, node classification, and branch densities.

#include "afflim/limitword.hpp"
#include "afflim/rootsys.hpp"
#include "afflim/weyl.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace afflim {

inline constexpr std::int64_t kDefaultBudget = 100'000;

/// Budget from AFFLIM_BUDGET when set to a positive integer, else `fallback`.
std::int64_t budget_from_env(std::int64_t fallback = kDefaultBudget);

enum class FcVerdict { FC, NotFC, BudgetExceeded };
const char* verdict_name(FcVerdict v);

struct CommutationResult {
  FcVerdict verdict = FcVerdict::FC;
  std::size_t explored = 0;
  /// A word in the class carrying a braid factor, when one was found.
  Word witness;
};

/// Throws NotReducedInput.
CommutationResult fc_by_commutation_class(const RootSystem& rs, const Word& word, std::int64_t budget = kDefaultBudget);

enum class Rank2Kind { A1xA1, A2, B2, G2 };
const char* kind_name(Rank2Kind k);

struct Rank2Subsystem {
  /// The two inversions that span the plane.
  AffineRoot first;
  AffineRoot second;
  /// Positive affine roots in the plane.
  std::vector<AffineRoot> positive_members;
  Rank2Kind kind = Rank2Kind::A1xA1;
};

struct Rank2Result {
  bool fully_commutative = true;
  std::optional<Rank2Subsystem> witness;
  std::size_t planes = 0;
};

/// Throws NotReducedInput.
Rank2Result fc_by_rank2_inversions(const RootSystem& rs, const Word& word);

inline constexpr int kDefaultFcPeriods = 3;
inline constexpr std::int64_t kMinFcLetters = 60;

/// Rank-2 test on prefix + max(periods, enough for kMinFcLetters) periods.
bool fc_infinite(const RootSystem& rs, const PeriodicWord& pw, int periods = kDefaultFcPeriods);

bool fc_node(const RootSystem& rs, int i);
bool fc_node_via_quotient(const RootSystem& rs, int i);

struct NodeClassification {
  int node = 0;
  bool minuscule = false;
  bool cominuscule = false;
  bool fc_walk = false;
  bool fc_quotient = false;

  bool consistent() const { return (minuscule || cominuscule) == fc_walk && fc_walk == fc_quotient; }
};

std::vector<NodeClassification> classification_check(const RootSystem& rs);
std::vector<int> fc_nodes(const std::vector<NodeClassification>& rows);

// Branch densities.

enum class BranchKind { A, B, D };
const char* branch_kind_name(BranchKind k);

struct Branch {
  std::vector<int> nodes;  // ascending
  BranchKind kind = BranchKind::A;
  int size = 0;
  /// labels[k] is the branch-local label (1..size) of nodes[k]; label 1 is
  /// joined to the branch node.
  std::vector<int> labels;
};

struct BranchDecomposition {
  int branch_node = 0;
  std::vector<Branch> branches;
};

/// Throws NoBranchNode when v is not a branch node.
BranchDecomposition branch_decomposition(const RootSystem& rs, int v);
bool is_branch_node(const RootSystem& rs, int v);
/// A trivalent branch node if there is one, else the smallest; throws NoBranchNode.
int default_branch_node(const RootSystem& rs);

struct BlockFactorization {
  int branch_node = 0;
  Word word;
  /// Positions of the branch-node letter in `word`.
  std::vector<std::size_t> separators;
  /// blocks[p][b]: letters of branch b in block p, in word order.
  std::vector<std::vector<Word>> blocks;
};

BlockFactorization block_factorization(const RootSystem& rs, const BranchDecomposition& bd, const Word& word);
BlockFactorization block_factorization(const RootSystem& rs, const BranchDecomposition& bd, const PeriodicWord& pw,
                                       std::int64_t depth);

struct DensityResult {
  /// 0, 1, 2; absent when the budget ran out.
  std::optional<int> value;
  std::size_t explored = 0;
  /// Adjacent swap positions, relative to the start of the window, that
  /// empty the block (value 0) or clear the other branches (value 2).
  std::vector<std::size_t> swaps;
  std::size_t window_begin = 0;
};

/// Search over the commutation class of blocks p-1, p, p+1 (p >= 1).
DensityResult density(const RootSystem& rs, const BlockFactorization& bf, const BranchDecomposition& bd,
                      std::size_t branch, std::size_t p, std::int64_t budget = kDefaultBudget);

/// Heap-interval evaluation of the same quantity.
DensityResult density_exact(const RootSystem& rs, const BlockFactorization& bf, const BranchDecomposition& bd,
                            std::size_t branch, std::size_t p);

/// Applies `swaps` to the window of `bf.word` starting at `window_begin`,
/// checking every swap exchanges distinct commuting letters, and returns the
/// resulting word; throws Internal on an illegal swap.
Word replay_swaps(const RootSystem& rs, const Word& word, std::size_t window_begin, const std::vector<std::size_t>& swaps);

/// Block p of `word` split at the branch-node letter, by branch.
std::vector<Word> block_of(const BranchDecomposition& bd, const Word& word, std::size_t p);

}  // namespace afflim
