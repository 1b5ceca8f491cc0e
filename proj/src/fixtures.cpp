#include "afflim/fixtures.hpp"

#include "afflim/errors.hpp"

#include <algorithm>

namespace afflim {

namespace {

/// a, a+1, ..., b; empty when a > b.
Word up(int a, int b) {
  Word w;
  for (int i = a; i <= b; ++i) w.push_back(i);
  return w;
}

/// a, a-1, ..., b; empty when a < b.
Word down(int a, int b) {
  Word w;
  for (int i = a; i >= b; --i) w.push_back(i);
  return w;
}

Word cat(std::initializer_list<Word> parts) {
  Word w;
  for (const auto& p : parts) w.insert(w.end(), p.begin(), p.end());
  return w;
}

FixtureRow row(int k, Word period) { return {k, PeriodicWord{{}, std::move(period)}}; }

std::vector<FixtureRow> listed(std::initializer_list<const char*> words) {
  std::vector<FixtureRow> out;
  int k = 1;
  for (const char* w : words) out.push_back(row(k++, parse_word(w)));
  return out;
}

/// One Coxeter word per acyclic orientation of the affine A_n cycle.
std::vector<Word> cycle_coxeter_words(const RootSystem& rs) {
  const int m = rs.rank() + 1;
  std::vector<Word> out;
  if (m == 2) return {{0, 1}, {1, 0}};
  for (unsigned mask = 1; mask + 1 < (1u << m); ++mask) {
    // Bit i set: the edge i -- i+1 points forward.
    std::vector<int> indeg(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) ++indeg[static_cast<std::size_t>((mask >> i) & 1u ? (i + 1) % m : i)];
    Word order;
    std::vector<bool> done(static_cast<std::size_t>(m), false);
    while (static_cast<int>(order.size()) < m) {
      int v = 0;
      while (done[static_cast<std::size_t>(v)] || indeg[static_cast<std::size_t>(v)] > 0) ++v;
      done[static_cast<std::size_t>(v)] = true;
      order.push_back(v);
      if ((mask >> v) & 1u) --indeg[static_cast<std::size_t>((v + 1) % m)];
      const int prev = (v + m - 1) % m;
      if (!((mask >> prev) & 1u)) --indeg[static_cast<std::size_t>(prev)];
    }
    out.push_back(std::move(order));
  }
  return out;
}

}  // namespace

std::vector<FixtureRow> table1_fixture(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<FixtureRow> out;
  switch (rs.type().family) {
    case Family::A:
      throw Error(ErrorCode::UnsupportedType, "no minimal-word rows for type A");
    case Family::B:
      for (int k = 1; k <= n - 1; ++k) out.push_back(row(k, cat({up(0, n), down(n - 1, k + 1)})));
      out.push_back(row(n, cat({{0}, up(2, n), up(1, n)})));
      return out;
    case Family::C:
      for (int k = 1; k <= n; ++k) out.push_back(row(k, cat({up(0, n), down(n - 1, k)})));
      return out;
    case Family::D:
      for (int k = 1; k <= n - 2; ++k) out.push_back(row(k, cat({up(0, n), down(n - 2, k + 1)})));
      out.push_back(row(n - 1, cat({{0}, up(2, n - 2), {n}, up(1, n - 2), {n - 1}})));
      out.push_back(row(n, cat({{0}, up(2, n - 1), up(1, n - 2), {n}})));
      return out;
    case Family::G:
      return listed({"0 1 2", "0 1 2 1 2"});
    case Family::F:
      return listed({"0 1 2 3 4 2 3 2", "0 1 2 3 4", "0 1 2 3 4 2 3", "0 1 2 3 4 1 2 3"});
    case Family::E:
      if (n == 6)
        return listed({"0 6 3 4 5 2 3 4 6 3 2 1", "0 6 3 4 5 2 3 4 1", "0 1 2 3 4 5 6", "0 6 3 2 1 4 3 2 5",
                       "0 6 3 2 1 4 3 2 6 3 4 5", "0 6 3 4 5 2 3 4 1 2 3"});
      if (n == 7)
        return listed({"0 3 1 4 2 7 3 4 2 7 5 1 3 2 6 4 5", "0 2 4 3 2 6 4 7 1 5 3", "0 1 2 3 4 5 6 7",
                       "0 7 3 5 2 3 4 6 1 3", "0 2 5 3 4 7 3 2 1 6 7 3 4", "0 2 1 7 3 4 2 5 6 3 4 5 7 3 4 2 3 1",
                       "0 2 6 7 1 3 2 3 5 7 4 5 3 4"});
      return listed({"0 8 5 4 6 1 5 2 3 7 4 8 6 5 4 8 3 6 7 5 2 1 4 6 3 5 2 4 3",
                     "0 4 3 1 5 7 6 4 2 5 3 6 1 4 8 2 5 8 6", "0 8 5 4 1 3 4 7 6 7 5 2 4 6",
                     "0 5 3 2 1 4 7 8 5 4 6", "0 1 2 3 4 5 6 7 8", "0 2 1 6 3 7 4 3 5 8 6 4 5",
                     "0 4 5 8 6 3 4 5 4 2 3 1 2 7 4 6 3 8 5 6 8 7 1", "0 5 3 1 8 2 6 5 4 6 3 7 6 5 6 2 4"});
  }
  throw Error(ErrorCode::Internal, "unknown family");
}

std::vector<FixtureRow> table3_fixture(const RootSystem& rs, DnReading reading) {
  const int n = rs.rank();
  switch (rs.type().family) {
    case Family::A:
      return {{std::nullopt, PeriodicWord{{}, up(0, n)}}};
    case Family::B:
      if (n < 3) throw Error(ErrorCode::UnsupportedType, "no fully commutative rows for B2");
      return {row(1, cat({{2, 0}, up(1, n), down(n - 1, 3)})), row(n, cat({{2, 0}, up(3, n), {2, 1}, up(3, n)}))};
    case Family::C:
      return {row(1, cat({{1}, up(0, n), down(n - 1, 2)})), row(n, up(0, n))};
    case Family::D: {
      Word first = cat({{2, 0, 1, 2}, up(3, n - 2), {n - 1, n}, down(n - 2, 3)});
      if (reading == DnReading::Literal) first.insert(first.begin() + 4, 3);
      return {row(1, first), row(n - 1, cat({{2, 0}, up(3, n - 2), {n - 1, 2, 1}, up(3, n - 2), {n}})),
              row(n, cat({{2, 1}, up(3, n - 2), {n - 1, 2, 0}, up(3, n - 2), {n}}))};
    }
    case Family::E:
      if (n == 6)
        return {row(6, parse_word("3 2 5 4 3 1 2 6 3 4 0 6")), row(1, parse_word("3 2 0 6 3 1 2 4 3 5 4 6"))};
      if (n == 7) return {row(6, parse_word("3 7 5 4 3 2 6 5 4 3 7 1 2 3 0 1 2 4"))};
      return {};
    case Family::F:
    case Family::G:
      return {};
  }
  throw Error(ErrorCode::Internal, "unknown family");
}

HeavyExpectation table2_expectation(const RootSystem& rs) {
  const int n = rs.rank();
  HeavyExpectation h;
  switch (rs.type().family) {
    case Family::A: throw Error(ErrorCode::UnsupportedType, "no heavy node in type A");
    case Family::B: h = {n / 2, n - 1, 0}; break;
    case Family::C: h = {n / 2, n, 0}; break;
    case Family::D: h = {(n - 1) / 2, n - 2, 0}; break;
    case Family::E: h = n == 6 ? HeavyExpectation{3, 3, 0} : n == 7 ? HeavyExpectation{4, 3, 0} : HeavyExpectation{7, 5, 0}; break;
    case Family::F: h = {3, 2, 0}; break;
    case Family::G: h = {1, 1, 0}; break;
  }
  h.printed_node = table2_label(rs, h.node);
  return h;
}

int table2_label(const RootSystem& rs, int node) {
  if (rs.type().family == Family::G && (node == 1 || node == 2)) return 3 - node;
  return node;
}

std::vector<int> expected_fc_nodes(const RootSystem& rs) {
  const int n = rs.rank();
  switch (rs.type().family) {
    case Family::A: return up(1, n);
    case Family::B:
    case Family::C: return {1, n};
    case Family::D: return {1, n - 1, n};
    case Family::E: return n == 6 ? std::vector<int>{1, 5} : n == 7 ? std::vector<int>{6} : std::vector<int>{};
    case Family::F:
    case Family::G: return {};
  }
  return {};
}

std::vector<ScheduleRow> e7_block_schedule() {
  return {{{7}, {{7}, {}, {7}, {}}},
          {{0, 1, 2}, {{1, 2}, {0, 1, 2}, {}, {2}}},
          {{4, 5, 6}, {{}, {4}, {5, 4}, {6, 5, 4}}}};
}

std::optional<std::size_t> schedule_offset(const BlockFactorization& bf, const BranchDecomposition& bd,
                                           const std::vector<ScheduleRow>& schedule, std::size_t first, std::size_t last) {
  // Pair each schedule row with the branch on the same nodes.
  std::vector<std::size_t> branch_for(schedule.size());
  for (std::size_t r = 0; r < schedule.size(); ++r) {
    auto it = std::find_if(bd.branches.begin(), bd.branches.end(),
                           [&](const Branch& b) { return b.nodes == schedule[r].nodes; });
    if (it == bd.branches.end()) return std::nullopt;
    branch_for[r] = static_cast<std::size_t>(it - bd.branches.begin());
  }
  const std::size_t cycle = schedule.front().cycle.size();
  for (std::size_t o = 0; o < cycle; ++o) {
    bool ok = true;
    for (std::size_t p = first; p < last && p < bf.blocks.size() && ok; ++p)
      for (std::size_t r = 0; r < schedule.size() && ok; ++r)
        ok = bf.blocks[p][branch_for[r]] == schedule[r].cycle[(p + o) % cycle];
    if (ok) return o;
  }
  return std::nullopt;
}

Table3Report table3_verify(const RootSystem& rs, int periods) {
  Table3Report rep;
  rep.fc_nodes = fc_nodes(classification_check(rs));
  for (auto& fr : table3_fixture(rs)) {
    Table3Check c;
    c.listed = fr.coweight;
    c.word = fr.word;
    c.reduced = is_reduced(rs, fr.word.truncation(std::max<std::int64_t>(periods, fr.word.reps_for_depth(kMinFcLetters))));
    if (c.reduced) {
      c.fully_commutative = fc_infinite(rs, fr.word, periods);
      c.certified = translation_direction(rs, fr.word).coweight_index;
      if (c.certified) rep.certified.push_back(*c.certified);
    }
    if (c.listed && c.certified && *c.listed != *c.certified)
      c.note = "listed under coweight " + std::to_string(*c.listed) + ", certifies " + std::to_string(*c.certified);
    if (!c.reduced) c.note = "not reduced";
    rep.rows.push_back(std::move(c));
  }
  if (rs.type().family == Family::A)
    for (const Word& c : cycle_coxeter_words(rs)) {
      const auto d = translation_direction(rs, PeriodicWord{{}, c});
      if (d.coweight_index) rep.certified.push_back(*d.coweight_index);
    }
  std::sort(rep.certified.begin(), rep.certified.end());
  rep.certified.erase(std::unique(rep.certified.begin(), rep.certified.end()), rep.certified.end());
  return rep;
}

}  // namespace afflim
