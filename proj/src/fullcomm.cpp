#include "afflim/fullcomm.hpp"

#include "afflim/errors.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace afflim {

namespace {

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept { return boost::hash_range(w.begin(), w.end()); }
};

bool commute(const RootSystem& rs, int a, int b) { return a != b && rs.bond(a, b) == 2; }

/// Start of a factor s_a s_b s_a ... of length m_ab >= 3, or npos.
std::size_t braid_position(const RootSystem& rs, const Word& w) {
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    const int a = w[k], b = w[k + 1];
    if (a == b) continue;
    const int m = rs.bond(a, b);
    if (m < 3 || k + static_cast<std::size_t>(m) > w.size()) continue;
    bool alternating = true;
    for (int t = 2; t < m && alternating; ++t) alternating = w[k + static_cast<std::size_t>(t)] == (t % 2 == 0 ? a : b);
    if (alternating) return k;
  }
  return std::string::npos;
}

InversionSet inversions_of_input(const RootSystem& rs, const Word& word) {
  try {
    return inversion_set(rs, word);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotReduced) throw Error(ErrorCode::NotReducedInput, format_word(word));
    throw;
  }
}

}  // namespace

std::int64_t budget_from_env(std::int64_t fallback) {
  const char* env = std::getenv("AFFLIM_BUDGET");
  if (!env) return fallback;
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(env, env + std::strlen(env), v);
  if (ec != std::errc() || *p != '\0' || v <= 0) return fallback;
  return v;
}

const char* verdict_name(FcVerdict v) {
  switch (v) {
    case FcVerdict::FC: return "FC";
    case FcVerdict::NotFC: return "NotFC";
    case FcVerdict::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

CommutationResult fc_by_commutation_class(const RootSystem& rs, const Word& word, std::int64_t budget) {
  if (!is_reduced(rs, word)) throw Error(ErrorCode::NotReducedInput, format_word(word));
  CommutationResult out;
  std::unordered_set<Word, WordHash> seen{word};
  std::deque<Word> queue{word};
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    ++out.explored;
    if (braid_position(rs, cur) != std::string::npos) {
      out.verdict = FcVerdict::NotFC;
      out.witness = std::move(cur);
      return out;
    }
    for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
      if (!commute(rs, cur[k], cur[k + 1])) continue;
      Word next = cur;
      std::swap(next[k], next[k + 1]);
      if (seen.insert(next).second) {
        if (static_cast<std::int64_t>(seen.size()) > budget) {
          out.verdict = FcVerdict::BudgetExceeded;
          return out;
        }
        queue.push_back(std::move(next));
      }
    }
  }
  return out;
}

const char* kind_name(Rank2Kind k) {
  switch (k) {
    case Rank2Kind::A1xA1: return "A1xA1";
    case Rank2Kind::A2: return "A2";
    case Rank2Kind::B2: return "B2";
    case Rank2Kind::G2: return "G2";
  }
  return "?";
}

Rank2Result fc_by_rank2_inversions(const RootSystem& rs, const Word& word) {
  const InversionSet inv = inversions_of_input(rs, word);
  std::unordered_set<AffineRoot, AffineRootHash> inverted(inv.items.begin(), inv.items.end());

  // Roots in the span of two independent roots, as delta*det = A*g1 + B*g2.
  struct Member {
    std::size_t root;
    std::int64_t a, b;
  };
  struct Plane {
    std::int64_t det;
    std::vector<Member> members;
  };
  std::map<std::pair<std::size_t, std::size_t>, Plane> planes;
  auto plane_of = [&](std::size_t i1, std::size_t i2) -> const Plane& {
    auto it = planes.find({i1, i2});
    if (it != planes.end()) return it->second;
    const IntVec& g1 = rs.roots()[i1];
    const IntVec& g2 = rs.roots()[i2];
    const IntVec h1 = rs.gram6(g1), h2 = rs.gram6(g2);
    const std::int64_t p11 = dot(g1, h1), p12 = dot(g1, h2), p22 = dot(g2, h2);
    Plane pl{p11 * p22 - p12 * p12, {}};
    for (std::size_t d = 0; d < rs.roots().size(); ++d) {
      const IntVec& delta = rs.roots()[d];
      const std::int64_t r1 = dot(delta, h1), r2 = dot(delta, h2);
      const std::int64_t a = r1 * p22 - r2 * p12;
      const std::int64_t b = p11 * r2 - p12 * r1;
      bool in_span = true;
      for (std::size_t j = 0; j < delta.size() && in_span; ++j) in_span = pl.det * delta[j] == a * g1[j] + b * g2[j];
      if (in_span) pl.members.push_back({d, a, b});
    }
    return planes.emplace(std::pair{i1, i2}, std::move(pl)).first->second;
  };

  Rank2Result out;
  std::set<std::vector<AffineRoot>> checked;
  for (std::size_t x = 0; x < inv.items.size(); ++x)
    for (std::size_t y = x + 1; y < inv.items.size(); ++y) {
      const AffineRoot& b1 = inv.items[x];
      const AffineRoot& b2 = inv.items[y];
      const std::size_t i1 = *rs.root_index(b1.root), i2 = *rs.root_index(b2.root);
      if (b1.root == b2.root || b1.root == -b2.root) continue;
      const Plane& pl = plane_of(i1, i2);
      std::vector<AffineRoot> pos;
      for (const auto& m : pl.members) {
        const std::int64_t num = m.a * b1.level + m.b * b2.level;
        if (num % pl.det != 0) continue;
        AffineRoot r{rs.roots()[m.root], num / pl.det};
        if (r.positive()) pos.push_back(std::move(r));
      }
      if (pos.size() < 3) continue;
      std::sort(pos.begin(), pos.end());
      if (!checked.insert(pos).second) continue;
      ++out.planes;
      const bool all_in = std::all_of(pos.begin(), pos.end(), [&](const AffineRoot& r) { return inverted.count(r) > 0; });
      if (!all_in) continue;
      Rank2Subsystem sub{b1, b2, pos, Rank2Kind::A2};
      sub.kind = pos.size() == 3 ? Rank2Kind::A2 : pos.size() == 4 ? Rank2Kind::B2 : Rank2Kind::G2;
      out.fully_commutative = false;
      out.witness = std::move(sub);
      return out;
    }
  return out;
}

bool fc_infinite(const RootSystem& rs, const PeriodicWord& pw, int periods) {
  const std::int64_t reps = std::max<std::int64_t>(periods, pw.reps_for_depth(kMinFcLetters));
  return fc_by_rank2_inversions(rs, pw.truncation(reps)).fully_commutative;
}

bool fc_node(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank()) throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(i));
  return fc_infinite(rs, lambda_walk(rs, to_rat(scaled_coweight(rs, i))));
}

bool fc_node_via_quotient(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank()) throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(i));
  Word w = longest_quotient_element(rs, i).word;
  std::reverse(w.begin(), w.end());
  return fc_by_rank2_inversions(rs, w).fully_commutative;
}

std::vector<NodeClassification> classification_check(const RootSystem& rs) {
  std::vector<NodeClassification> rows;
  for (int i = 1; i <= rs.rank(); ++i)
    rows.push_back({i, minuscule(rs, i), cominuscule(rs, i), fc_node(rs, i), fc_node_via_quotient(rs, i)});
  return rows;
}

std::vector<int> fc_nodes(const std::vector<NodeClassification>& rows) {
  std::vector<int> out;
  for (const auto& r : rows)
    if (r.fc_walk && r.fc_quotient) out.push_back(r.node);
  return out;
}

const char* branch_kind_name(BranchKind k) {
  switch (k) {
    case BranchKind::A: return "A";
    case BranchKind::B: return "B";
    case BranchKind::D: return "D";
  }
  return "?";
}

namespace {

std::optional<BranchDecomposition> try_branch(const RootSystem& rs, int v) {
  if (v < 0 || v > rs.rank()) throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(v));
  for (int u : rs.neighbors(v))
    if (rs.bond(v, u) != 3) return std::nullopt;
  const int total = rs.rank() + 1;
  std::vector<int> comp(static_cast<std::size_t>(total), -1);
  BranchDecomposition bd{v, {}};
  for (int start : rs.neighbors(v)) {
    if (comp[static_cast<std::size_t>(start)] >= 0) return std::nullopt;  // two arcs into one component
    const int id = static_cast<int>(bd.branches.size());
    std::vector<int> nodes;
    std::deque<int> queue{start};
    comp[static_cast<std::size_t>(start)] = id;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      nodes.push_back(x);
      for (int y : rs.neighbors(x))
        if (y != v && comp[static_cast<std::size_t>(y)] < 0) {
          comp[static_cast<std::size_t>(y)] = id;
          queue.push_back(y);
        }
    }
    auto inside = [&](int x) { return comp[static_cast<std::size_t>(x)] == id; };
    auto degree = [&](int x) {
      int d = 0;
      for (int y : rs.neighbors(x)) d += inside(y) ? 1 : 0;
      return d;
    };
    // Walk away from the branch node along the unique continuation.
    std::vector<int> path{start};
    int prev = v, cur = start;
    std::optional<BranchKind> kind;
    std::vector<int> leaves;
    for (;;) {
      std::vector<int> next;
      for (int y : rs.neighbors(cur))
        if (y != prev && inside(y)) next.push_back(y);
      if (next.empty()) {
        kind = BranchKind::A;
        break;
      }
      if (next.size() == 2) {
        if (degree(next[0]) != 1 || degree(next[1]) != 1) return std::nullopt;
        leaves = next;
        kind = BranchKind::D;
        break;
      }
      if (next.size() > 2) return std::nullopt;
      prev = cur;
      cur = next[0];
      path.push_back(cur);
    }
    // Bonds: all single except possibly the last edge of a B branch.
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      const int m = rs.bond(path[k], path[k + 1]);
      const bool last = k + 2 == path.size();
      if (m == 3) continue;
      if (m == 4 && last && *kind == BranchKind::A) {
        kind = BranchKind::B;
        continue;
      }
      return std::nullopt;
    }
    for (int leaf : leaves)
      if (rs.bond(path.back(), leaf) != 3) return std::nullopt;
    if (nodes.size() != path.size() + leaves.size()) return std::nullopt;

    Branch br;
    br.kind = *kind;
    br.size = static_cast<int>(nodes.size());
    std::sort(leaves.begin(), leaves.end());
    std::map<int, int> label;
    for (std::size_t k = 0; k < path.size(); ++k) label[path[k]] = static_cast<int>(k) + 1;
    for (std::size_t k = 0; k < leaves.size(); ++k) label[leaves[k]] = static_cast<int>(path.size() + k) + 1;
    for (auto [node, l] : label) {
      br.nodes.push_back(node);
      br.labels.push_back(l);
    }
    bd.branches.push_back(std::move(br));
  }
  if (bd.branches.size() < 2) return std::nullopt;
  return bd;
}

}  // namespace

bool is_branch_node(const RootSystem& rs, int v) { return try_branch(rs, v).has_value(); }

BranchDecomposition branch_decomposition(const RootSystem& rs, int v) {
  auto bd = try_branch(rs, v);
  if (!bd) throw Error(ErrorCode::NoBranchNode, "node " + std::to_string(v) + " of " + rs.type().name());
  return *bd;
}

int default_branch_node(const RootSystem& rs) {
  std::optional<int> smallest;
  for (int v = 0; v <= rs.rank(); ++v) {
    if (!is_branch_node(rs, v)) continue;
    if (rs.neighbors(v).size() >= 3) return v;
    if (!smallest) smallest = v;
  }
  if (!smallest) throw Error(ErrorCode::NoBranchNode, rs.type().name());
  return *smallest;
}

namespace {

int branch_of(const BranchDecomposition& bd, int letter) {
  for (std::size_t b = 0; b < bd.branches.size(); ++b)
    if (std::binary_search(bd.branches[b].nodes.begin(), bd.branches[b].nodes.end(), letter)) return static_cast<int>(b);
  return -1;
}

std::vector<std::size_t> separators_of(const BranchDecomposition& bd, const Word& word) {
  std::vector<std::size_t> seps;
  for (std::size_t k = 0; k < word.size(); ++k)
    if (word[k] == bd.branch_node) seps.push_back(k);
  return seps;
}

}  // namespace

std::vector<Word> block_of(const BranchDecomposition& bd, const Word& word, std::size_t p) {
  const auto seps = separators_of(bd, word);
  std::vector<Word> out(bd.branches.size());
  const std::size_t begin = p == 0 ? 0 : seps.at(p - 1) + 1;
  const std::size_t end = p < seps.size() ? seps[p] : word.size();
  for (std::size_t k = begin; k < end; ++k) out[static_cast<std::size_t>(branch_of(bd, word[k]))].push_back(word[k]);
  return out;
}

BlockFactorization block_factorization(const RootSystem& rs, const BranchDecomposition& bd, const Word& word) {
  check_letters(rs, word);
  BlockFactorization bf;
  bf.branch_node = bd.branch_node;
  bf.word = word;
  bf.separators = separators_of(bd, word);
  for (std::size_t p = 0; p <= bf.separators.size(); ++p) bf.blocks.push_back(block_of(bd, word, p));
  return bf;
}

BlockFactorization block_factorization(const RootSystem& rs, const BranchDecomposition& bd, const PeriodicWord& pw,
                                       std::int64_t depth) {
  return block_factorization(rs, bd, pw.truncation(pw.reps_for_depth(depth)));
}

namespace {

void require_block(const BlockFactorization& bf, const BranchDecomposition& bd, std::size_t branch, std::size_t p) {
  if (branch >= bd.branches.size()) throw Error(ErrorCode::IndexOutOfRange, "branch " + std::to_string(branch));
  if (p < 1 || p >= bf.separators.size())
    throw Error(ErrorCode::IndexOutOfRange, "block " + std::to_string(p) + " is not delimited on both sides");
}

/// Which branches have letters strictly between the first two branch-node letters.
std::vector<bool> present_between(const BranchDecomposition& bd, const Word& seg) {
  std::vector<bool> present(bd.branches.size(), false);
  int seen = 0;
  for (int x : seg) {
    if (x == bd.branch_node) {
      if (++seen == 2) break;
      continue;
    }
    if (seen == 1) present[static_cast<std::size_t>(branch_of(bd, x))] = true;
  }
  return present;
}

int classify(const std::vector<bool>& present, std::size_t branch, bool& is_two) {
  bool others = false;
  for (std::size_t b = 0; b < present.size(); ++b)
    if (b != branch && present[b]) others = true;
  is_two = !others;
  return !present[branch] ? 0 : (!others ? 2 : 1);
}

std::vector<std::size_t> swaps_to(const RootSystem& rs, std::vector<std::size_t> ids, const std::vector<std::size_t>& target,
                                  const Word& letters) {
  // Bubble the current arrangement of element ids into `target`.
  std::vector<std::size_t> rank(ids.size());
  for (std::size_t k = 0; k < target.size(); ++k) rank[target[k]] = k;
  std::vector<std::size_t> swaps;
  for (std::size_t pass = 0; pass < ids.size(); ++pass) {
    bool moved = false;
    for (std::size_t k = 0; k + 1 < ids.size(); ++k)
      if (rank[ids[k]] > rank[ids[k + 1]]) {
        if (!commute(rs, letters[ids[k]], letters[ids[k + 1]])) throw Error(ErrorCode::Internal, "non-commuting swap");
        std::swap(ids[k], ids[k + 1]);
        swaps.push_back(k);
        moved = true;
      }
    if (!moved) break;
  }
  return swaps;
}

}  // namespace

DensityResult density(const RootSystem& rs, const BlockFactorization& bf, const BranchDecomposition& bd, std::size_t branch,
                      std::size_t p, std::int64_t budget) {
  require_block(bf, bd, branch, p);
  const auto& seps = bf.separators;
  DensityResult out;
  out.window_begin = p >= 2 ? seps[p - 2] + 1 : 0;
  const std::size_t end = p + 1 < seps.size() ? seps[p + 1] : bf.word.size();
  const Word start(bf.word.begin() + static_cast<std::ptrdiff_t>(out.window_begin),
                   bf.word.begin() + static_cast<std::ptrdiff_t>(end));

  std::unordered_map<Word, std::pair<Word, std::size_t>, WordHash> parent;
  parent.emplace(start, std::pair{Word{}, std::string::npos});
  std::deque<Word> queue{start};
  auto finish = [&](const Word& w, int value) {
    out.value = value;
    for (Word cur = w; parent.at(cur).second != std::string::npos; cur = parent.at(cur).first)
      out.swaps.push_back(parent.at(cur).second);
    std::reverse(out.swaps.begin(), out.swaps.end());
    out.explored = parent.size();
  };
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    bool two = false;
    const int v = classify(present_between(bd, cur), branch, two);
    if (v != 1) {
      finish(cur, v);
      return out;
    }
    for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
      if (!commute(rs, cur[k], cur[k + 1])) continue;
      Word next = cur;
      std::swap(next[k], next[k + 1]);
      if (parent.count(next)) continue;
      if (static_cast<std::int64_t>(parent.size()) >= budget) {
        out.explored = parent.size();
        return out;
      }
      parent.emplace(next, std::pair{cur, k});
      queue.push_back(std::move(next));
    }
  }
  out.value = 1;
  out.explored = parent.size();
  return out;
}

DensityResult density_exact(const RootSystem& rs, const BlockFactorization& bf, const BranchDecomposition& bd,
                            std::size_t branch, std::size_t p) {
  require_block(bf, bd, branch, p);
  const std::size_t a = bf.separators[p - 1], b = bf.separators[p];
  const std::size_t len = b - a + 1;
  const Word seg(bf.word.begin() + static_cast<std::ptrdiff_t>(a), bf.word.begin() + static_cast<std::ptrdiff_t>(b) + 1);
  auto related = [&](std::size_t x, std::size_t y) { return !commute(rs, seg[x], seg[y]); };

  std::vector<bool> above(len, false), below(len, false);
  above[0] = true;
  for (std::size_t x = 1; x < len; ++x)
    for (std::size_t y = 0; y < x && !above[x]; ++y) above[x] = above[y] && related(y, x);
  below[len - 1] = true;
  for (std::size_t x = len - 1; x-- > 0;)
    for (std::size_t y = x + 1; y < len && !below[x]; ++y) below[x] = below[y] && related(x, y);

  std::vector<bool> present(bd.branches.size(), false);
  std::vector<std::size_t> early, middle, late;
  for (std::size_t x = 1; x + 1 < len; ++x) {
    if (above[x] && below[x]) {
      present[static_cast<std::size_t>(branch_of(bd, seg[x]))] = true;
      middle.push_back(x);
    } else if (!above[x]) {
      early.push_back(x);
    } else {
      late.push_back(x);
    }
  }
  DensityResult out;
  out.window_begin = a;
  out.explored = len;
  bool two = false;
  out.value = classify(present, branch, two);
  if (*out.value != 1) {
    std::vector<std::size_t> target = early;
    target.push_back(0);
    target.insert(target.end(), middle.begin(), middle.end());
    target.push_back(len - 1);
    target.insert(target.end(), late.begin(), late.end());
    std::vector<std::size_t> ids(len);
    for (std::size_t k = 0; k < len; ++k) ids[k] = k;
    out.swaps = swaps_to(rs, ids, target, seg);
  }
  return out;
}

Word replay_swaps(const RootSystem& rs, const Word& word, std::size_t window_begin, const std::vector<std::size_t>& swaps) {
  Word w = word;
  for (std::size_t s : swaps) {
    const std::size_t k = window_begin + s;
    if (k + 1 >= w.size() || !commute(rs, w[k], w[k + 1]))
      throw Error(ErrorCode::Internal, "illegal swap at position " + std::to_string(k));
    std::swap(w[k], w[k + 1]);
  }
  return w;
}

}  // namespace afflim
