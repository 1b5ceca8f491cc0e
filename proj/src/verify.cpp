#include "afflim/verify.hpp"

#include "afflim/coxnode.hpp"
#include "afflim/errors.hpp"
#include "afflim/fixtures.hpp"
#include "afflim/fullcomm.hpp"
#include "afflim/limitword.hpp"
#include "afflim/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

namespace afflim {

const char* verdict_label(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Skipped: return "SKIPPED";
  }
  return "?";
}

TypeFilter TypeFilter::parse(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::InvalidArgument, "empty type");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (std::string("ABCDEFG").find(f) == std::string::npos) throw Error(ErrorCode::InvalidArgument, "bad type '" + text + "'");
  TypeFilter out{static_cast<Family>(f), std::nullopt};
  if (text.size() > 1) out.rank = DynkinType::parse(text).rank;
  return out;
}

bool TypeFilter::admits(const DynkinType& t) const { return t.family == family && (!rank || *rank == t.rank); }

const char* criterion_id(int c) {
  static const char* ids[] = {"", "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9"};
  return c >= 1 && c <= kCriteria ? ids[c] : "";
}

const char* criterion_title(int c) {
  switch (c) {
    case 1: return "heavy node exponents";
    case 2: return "Coxeter node equals heavy node";
    case 3: return "minimal word fixtures";
    case 4: return "lambda-walk correctness";
    case 5: return "fully commutative node classification";
    case 6: return "fully commutative word fixtures";
    case 7: return "branch densities";
    case 8: return "type A equivalence";
    case 9: return "oracle agreement and group properties";
  }
  return "";
}

Verdict CriterionSummary::verdict() const {
  if (failed) return Verdict::Fail;
  if (skipped || !passed) return Verdict::Skipped;
  return Verdict::Pass;
}

namespace {

using Clock = std::chrono::steady_clock;

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "}";
  return os.str();
}

/// Types of the given families with rank in [lo, hi], after the filters.
std::vector<DynkinType> select(const VerifyOptions& opts, const std::string& families, int hi,
                               std::map<Family, int> lo = {}) {
  if (opts.max_rank) hi = std::min(hi, *opts.max_rank);
  std::vector<DynkinType> out;
  for (char f : families) {
    const auto fam = static_cast<Family>(f);
    const int from = lo.count(fam) ? lo[fam] : 1;
    for (int r = from; r <= hi; ++r) {
      if (!valid_rank(fam, r)) continue;
      const auto t = DynkinType::make(fam, r);
      if (opts.type && !opts.type->admits(t)) continue;
      out.push_back(t);
    }
  }
  return out;
}

struct Recorder {
  int criterion;
  std::vector<CheckRecord>& out;

  /// Runs `body`, which fills verdict and detail; domain errors become FAIL.
  void check(const DynkinType& t, const std::string& subject, const std::function<void(CheckRecord&)>& body) {
    CheckRecord r;
    r.criterion = criterion;
    r.id = criterion_id(criterion);
    r.type = t.name();
    r.subject = subject;
    const auto start = Clock::now();
    try {
      body(r);
    } catch (const std::exception& e) {
      r.verdict = Verdict::Fail;
      r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    out.push_back(std::move(r));
  }
};

void fail_unless(CheckRecord& r, bool ok) { r.verdict = ok ? Verdict::Pass : Verdict::Fail; }

std::mt19937_64 rng_for(const VerifyOptions& opts, const DynkinType& t, int salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                    static_cast<std::uint32_t>(t.family), static_cast<std::uint32_t>(t.rank), static_cast<std::uint32_t>(salt)};
  return std::mt19937_64(seq);
}

// 1
void heavy_exponents(const VerifyOptions& opts, Recorder& rec) {
  for (const auto& t : select(opts, "BCDEFG", 12, {{Family::B, 2}, {Family::C, 2}, {Family::D, 4}})) {
    rec.check(t, "heavy node", [&](CheckRecord& r) {
      RootSystem rs(t);
      const auto orbit = heavy_node_bipartite(rs);
      const auto want = table2_expectation(rs);
      const int graph = heavy_node_graph(rs);
      bool terminals_agree = true;
      for (bool first : {true, false})
        if (auto node = bipartite_terminal(rs, first); node && *node != orbit.node) terminals_agree = false;
      std::ostringstream os;
      os << "node " << orbit.node << " (listed as " << table2_label(rs, orbit.node) << "), graph " << graph << ", exponent "
         << orbit.exponent << " expected " << want.exponent;
      if (!terminals_agree) os << ", starting parts disagree";
      r.detail = os.str();
      fail_unless(r, orbit.node == want.node && graph == orbit.node && orbit.exponent == want.exponent && terminals_agree);
    });
  }
}

// 2
void coxeter_nodes(const VerifyOptions& opts, Recorder& rec) {
  for (const auto& t : select(opts, "BCDEFG", 8, {{Family::B, 2}, {Family::C, 2}, {Family::D, 4}})) {
    rec.check(t, "25 random Coxeter orders", [&](CheckRecord& r) {
      RootSystem rs(t);
      const int heavy = heavy_node_graph(rs);
      auto rng = rng_for(opts, t, 2);
      std::vector<int> order(static_cast<std::size_t>(rs.rank() + 1));
      std::iota(order.begin(), order.end(), 0);
      Word first;
      int mismatches = 0;
      for (int trial = 0; trial < 25; ++trial) {
        std::shuffle(order.begin(), order.end(), rng);
        const Word c = coxeter_word(rs, order);
        const auto cert = coxeter_node_certify(rs, c);
        if (cert.node != heavy) ++mismatches;
        if (first.empty()) first = c;
        const Word v = conjugation_path(rs, first, c);
        if (std::find(v.begin(), v.end(), 0) != v.end()) throw Error(ErrorCode::Internal, "conjugator uses letter 0");
      }
      r.detail = "heavy node " + std::to_string(heavy) + ", " + std::to_string(mismatches) + " of 25 orders certify another node";
      fail_unless(r, mismatches == 0);
    });
  }
}

// 3
void minimal_fixtures(const VerifyOptions& opts, Recorder& rec) {
  for (const auto& t : select(opts, "BCDEFG", 8, {{Family::B, 2}, {Family::C, 2}, {Family::D, 4}})) {
    RootSystem rs(t);
    for (const auto& row : table1_fixture(rs)) {
      rec.check(t, "omega_" + std::to_string(*row.coweight), [&](CheckRecord& r) {
        const bool reduced = is_reduced(rs, row.word.truncation(5));
        std::optional<int> got;
        if (reduced) got = translation_direction(rs, row.word).coweight_index;
        r.detail = "period " + format_word(row.word.period) + (reduced ? "" : ", not reduced") + ", certifies " +
                   (got ? std::to_string(*got) : std::string("no coweight"));
        fail_unless(r, reduced && got == row.coweight);
      });
    }
  }
}

/// Positive multiple of v with first nonzero coordinate of absolute value 1.
RatVec ray_key(const RatVec& v) {
  Rational scale(0);
  for (const auto& x : v)
    if (x.numerator() != 0) {
      scale = x < 0 ? -x : x;
      break;
    }
  RatVec out = v;
  for (auto& x : out) x /= scale;
  return out;
}

// 4
void walk_correctness(const VerifyOptions& opts, Recorder& rec) {
  constexpr std::int64_t kLevel = 4;
  constexpr std::int64_t kDepth = 30;
  for (const auto& t : select(opts, "ABCDEFG", 6, {{Family::B, 2}, {Family::C, 2}, {Family::D, 4}})) {
    RootSystem rs(t);
    for (int i = 1; i <= rs.rank(); ++i) {
      rec.check(t, "node " + std::to_string(i), [&](CheckRecord& r) {
        const RatVec lambda = to_rat(scaled_coweight(rs, i));
        const PeriodicWord pw = lambda_walk(rs, lambda);
        std::int64_t depth = kDepth;
        while (saturated_level(rs, pw, depth) < kLevel) depth *= 2;
        const Word w = pw.truncation(pw.reps_for_depth(depth));
        if (!is_reduced(rs, w)) {
          r.verdict = Verdict::Fail;
          r.detail = "truncation not reduced";
          return;
        }
        std::set<AffineRoot> low, all;
        std::int64_t top = 0;
        for (const auto& b : inversion_set(rs, w).items) {
          all.insert(b);
          top = std::max(top, b.level);
          if (b.level <= kLevel) low.insert(b);
        }
        const auto ray = translation_ray_hyperplanes(rs, lambda, kLevel);
        const bool ray_match = low == std::set<AffineRoot>(ray.begin(), ray.end());
        const auto wide = translation_ray_hyperplanes(rs, lambda, top);
        const bool inside = std::includes(wide.begin(), wide.end(), all.begin(), all.end());

        const auto dir = translation_direction(rs, pw);
        int disagree = 0;
        for (int s = 0; s < 20; ++s) {
          const auto other = lambda_walk(rs, lambda, WalkStrategy::seeded(opts.seed + static_cast<std::uint64_t>(s)));
          if (!limit_equal(rs, pw, other, kDepth) || ray_key(translation_direction(rs, other).direction) != ray_key(dir.direction)) ++disagree;
        }
        std::ostringstream os;
        os << "depth " << w.size() << ", ray match to level " << kLevel << (ray_match ? "" : " FAILED")
           << (inside ? "" : ", inversion off the ray") << ", " << disagree << " of 20 seeded walks differ";
        r.detail = os.str();
        fail_unless(r, ray_match && inside && disagree == 0);
      });
    }
  }
}

// 5
void fc_classification(const VerifyOptions& opts, Recorder& rec) {
  for (const auto& t : select(opts, "ABCDEFG", 8, {{Family::B, 2}, {Family::C, 2}, {Family::D, 4}})) {
    rec.check(t, "node classification", [&](CheckRecord& r) {
      RootSystem rs(t);
      const auto rows = classification_check(rs);
      std::vector<int> walk, quotient, mark, split;
      for (const auto& row : rows) {
        if (row.fc_walk) walk.push_back(row.node);
        if (row.fc_quotient) quotient.push_back(row.node);
        if (row.minuscule || row.cominuscule) mark.push_back(row.node);
        if (!row.consistent()) split.push_back(row.node);
      }
      const auto expected = expected_fc_nodes(rs);
      std::ostringstream os;
      os << "walk " << join(walk) << ", quotient " << join(quotient) << ", (co)minuscule " << join(mark) << ", diagram "
         << join(expected);
      if (!split.empty()) os << "; predicates disagree at " << join(split);
      r.detail = os.str();
      fail_unless(r, split.empty() && walk == expected);
    });
  }
}

// 6
void fc_fixtures(const VerifyOptions& opts, Recorder& rec) {
  for (const auto& t : select(opts, "ABCDEFG", 7, {{Family::B, 3}, {Family::C, 2}, {Family::D, 4}})) {
    RootSystem rs(t);
    std::vector<int> fc_set;
    for (const auto& row : classification_check(rs))
      if (row.fc_walk) fc_set.push_back(row.node);
    for (const auto& row : table3_fixture(rs)) {
      const std::string subject = row.coweight ? "omega_" + std::to_string(*row.coweight) : "Coxeter word";
      rec.check(t, subject, [&](CheckRecord& r) {
        const Word w = row.word.truncation(std::max<std::int64_t>(kDefaultFcPeriods, row.word.reps_for_depth(kMinFcLetters)));
        const bool reduced = is_reduced(rs, w);
        const bool fc = reduced && fc_infinite(rs, row.word, kDefaultFcPeriods);
        std::optional<int> got;
        if (reduced) got = translation_direction(rs, row.word).coweight_index;
        const bool in_set = got && std::binary_search(fc_set.begin(), fc_set.end(), *got);
        std::ostringstream os;
        os << "period " << format_word(row.word.period) << (reduced ? "" : ", not reduced") << (fc ? "" : ", not fully commutative")
           << ", certifies " << (got ? std::to_string(*got) : std::string("no coweight"));
        if (row.coweight && got && *got != *row.coweight) os << " (listed " << *row.coweight << ")";
        os << ", fully commutative nodes " << join(fc_set);
        r.detail = os.str();
        fail_unless(r, reduced && fc && in_set);
      });
    }
    if (t.family == Family::A) continue;
    rec.check(t, "heavy node walk", [&](CheckRecord& r) {
      const int heavy = heavy_node_graph(rs);
      const bool fc = fc_node(rs, heavy);
      r.detail = "node " + std::to_string(heavy) + (fc ? " is" : " is not") + " fully commutative";
      fail_unless(r, !fc);
    });
  }
}

// 7
void densities(const VerifyOptions& opts, Recorder& rec) {
  for (const auto& t : select(opts, "BCDE", 7, {{Family::B, 4}, {Family::C, 4}, {Family::D, 5}, {Family::E, 6}})) {
    const bool listed = (t.family == Family::B && t.rank == 4) || (t.family == Family::C && t.rank == 4) ||
                        (t.family == Family::D && t.rank == 5) || t.family == Family::E;
    if (!listed || t.rank > 7) continue;
    RootSystem rs(t);
    for (const auto& row : table3_fixture(rs)) {
      rec.check(t, "omega_" + std::to_string(*row.coweight), [&](CheckRecord& r) {
        const auto bd = branch_decomposition(rs, default_branch_node(rs));
        std::int64_t reps = 2;
        BlockFactorization bf = block_factorization(rs, bd, row.word.truncation(reps));
        while (bf.separators.size() < 13) bf = block_factorization(rs, bd, row.word.truncation(++reps));
        std::vector<std::string> problems;
        bool budget_hit = false;
        std::size_t blocks = 0;
        for (std::size_t p = 1; p < bf.separators.size(); ++p) {
          int sum = 0;
          ++blocks;
          for (std::size_t b = 0; b < bd.branches.size(); ++b) {
            const auto d = density(rs, bf, bd, b, p, opts.budget);
            if (!d.value) {
              budget_hit = true;
              continue;
            }
            const auto exact = density_exact(rs, bf, bd, b, p);
            const std::string at = "block " + std::to_string(p) + " branch " + join(bd.branches[b].nodes);
            if (*exact.value != *d.value) problems.push_back(at + ": search and heap values differ");
            sum += *d.value;
            if (bd.branches[b].kind == BranchKind::A && *d.value == 2) problems.push_back(at + ": type A branch scores 2");
            if (*d.value != 1) {
              const Word moved = replay_swaps(rs, bf.word, d.window_begin, d.swaps);
              const auto parts = block_of(bd, moved, p);
              bool ok = true;
              for (std::size_t o = 0; o < parts.size(); ++o)
                if ((*d.value == 0) == (o == b) && !parts[o].empty()) ok = false;
              if (!ok) problems.push_back(at + ": witness does not clear the block");
            }
          }
          if (!budget_hit && sum < 2) problems.push_back("block " + std::to_string(p) + ": density sum " + std::to_string(sum));
        }
        std::string schedule;
        if (t.family == Family::E && t.rank == 7) {
          const auto off = schedule_offset(bf, bd, e7_block_schedule(), 1, bf.separators.size());
          schedule = off ? ", block schedule matches at offset " + std::to_string(*off) : ", block schedule differs";
          if (!off) problems.push_back("block schedule differs");
        }
        r.detail = "branch node " + std::to_string(bd.branch_node) + ", " + std::to_string(blocks) + " blocks" + schedule;
        for (const auto& p : problems) r.detail += "; " + p;
        if (budget_hit) {
          r.verdict = problems.empty() ? Verdict::Skipped : Verdict::Fail;
          r.detail += "; search budget exhausted";
          return;
        }
        fail_unless(r, problems.empty());
      });
    }
  }
}

// 8
void type_a(const VerifyOptions& opts, Recorder& rec) {
  for (const auto& t : select(opts, "A", 4)) {
    rec.check(t, "Coxeter, fully commutative and minimal classes", [&](CheckRecord& r) {
      RootSystem rs(t);
      const int n = rs.rank();
      std::vector<int> order(static_cast<std::size_t>(n + 1));
      std::iota(order.begin(), order.end(), 0);
      std::set<RatVec> coxeter_rays;
      int coxeter_not_fc = 0;
      do {
        PeriodicWord c{{}, coxeter_word(rs, order)};
        if (!fc_infinite(rs, c)) ++coxeter_not_fc;
        coxeter_rays.insert(ray_key(translation_direction(rs, c).direction));
      } while (std::next_permutation(order.begin(), order.end()));

      const auto classes = enumerate_minimal(rs);
      const auto counts = minimal_counts(rs);
      std::size_t expected_total = 0;
      bool counts_ok = true;
      for (int i = 1; i <= n; ++i) {
        std::size_t binom = 1;
        for (int j = 1; j <= i; ++j) binom = binom * static_cast<std::size_t>(n + 2 - j) / static_cast<std::size_t>(j);
        expected_total += binom;
        if (counts[static_cast<std::size_t>(i - 1)] != binom) counts_ok = false;
      }
      int not_fc = 0, not_coxeter = 0;
      for (const auto& m : classes) {
        if (!fc_infinite(rs, m.word)) ++not_fc;
        if (!coxeter_rays.count(ray_key(translation_direction(rs, m.word).direction))) ++not_coxeter;
      }
      std::ostringstream os;
      os << classes.size() << " minimal classes (expected " << expected_total << "), " << coxeter_rays.size()
         << " Coxeter directions, " << coxeter_not_fc << " Coxeter classes not fully commutative, " << not_fc
         << " minimal classes not fully commutative, " << not_coxeter << " not Coxeter";
      r.detail = os.str();
      fail_unless(r, counts_ok && classes.size() == expected_total && coxeter_not_fc == 0 && not_fc == 0 && not_coxeter == 0);
    });
  }
}

/// Reduced words of every element of the finite group, one per element.
std::vector<Word> finite_elements(const RootSystem& rs) {
  IntVec regular(static_cast<std::size_t>(rs.rank()), 0);
  for (int i = 1; i <= rs.rank(); ++i) regular = regular + scaled_coweight(rs, i);
  std::unordered_map<IntVec, Word, IntVecHash> seen{{regular, {}}};
  std::deque<IntVec> queue{regular};
  std::vector<Word> out{{}};
  while (!queue.empty()) {
    const IntVec v = queue.front();
    queue.pop_front();
    const Word w = seen.at(v);
    for (int i = 1; i <= rs.rank(); ++i) {
      // Left multiplication by s_i; the word stays reduced along a shortest path.
      IntVec next = rs.reflect(i, v);
      if (seen.count(next)) continue;
      Word nw{i};
      nw.insert(nw.end(), w.begin(), w.end());
      seen.emplace(next, nw);
      out.push_back(nw);
      queue.push_back(std::move(next));
    }
  }
  return out;
}

Word random_reduced(const RootSystem& rs, std::mt19937_64& rng, std::size_t len) {
  std::uniform_int_distribution<int> letter(0, rs.rank());
  AffineElement w = identity_element(rs);
  Word out;
  while (out.size() < len) {
    const int i = letter(rng);
    if (is_right_descent(rs, w, i)) continue;
    w = multiply_simple(rs, w, i);
    out.push_back(i);
  }
  return out;
}

Word random_word(const RootSystem& rs, std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<int> letter(0, rs.rank());
  std::uniform_int_distribution<std::size_t> length(0, max_len);
  Word out(length(rng));
  for (auto& x : out) x = letter(rng);
  return out;
}

// 9
void oracle_suite(const VerifyOptions& opts, Recorder& rec) {
  const std::set<std::string> exhaustive{"A3", "B2", "B3", "G2"};
  for (const auto& t : select(opts, "ABCDEFG", 4, {{Family::B, 2}, {Family::C, 2}, {Family::D, 4}})) {
    RootSystem rs(t);
    if (exhaustive.count(t.name()))
      rec.check(t, "finite fc agreement", [&](CheckRecord& r) {
        const auto elements = finite_elements(rs);
        int fc = 0, disagree = 0;
        for (const auto& w : elements) {
          const auto a = fc_by_commutation_class(rs, w, opts.budget);
          if (a.verdict == FcVerdict::BudgetExceeded) throw Error(ErrorCode::BudgetExceeded, format_word(w));
          const bool b = fc_by_rank2_inversions(rs, w).fully_commutative;
          fc += b ? 1 : 0;
          if ((a.verdict == FcVerdict::FC) != b) ++disagree;
        }
        r.detail = std::to_string(elements.size()) + " elements, " + std::to_string(fc) + " fully commutative, " +
                   std::to_string(disagree) + " disagreements";
        fail_unless(r, disagree == 0);
      });

    rec.check(t, "affine fc agreement", [&](CheckRecord& r) {
      auto rng = rng_for(opts, t, 90);
      std::uniform_int_distribution<std::size_t> length(0, 12);
      int disagree = 0, fc = 0;
      for (int k = 0; k < 500; ++k) {
        const Word w = random_reduced(rs, rng, length(rng));
        const auto a = fc_by_commutation_class(rs, w, opts.budget);
        if (a.verdict == FcVerdict::BudgetExceeded) throw Error(ErrorCode::BudgetExceeded, format_word(w));
        const bool b = fc_by_rank2_inversions(rs, w).fully_commutative;
        fc += b ? 1 : 0;
        if ((a.verdict == FcVerdict::FC) != b) ++disagree;
      }
      r.detail = "500 words, " + std::to_string(fc) + " fully commutative, " + std::to_string(disagree) + " disagreements";
      fail_unless(r, disagree == 0);
    });

    rec.check(t, "group axioms", [&](CheckRecord& r) {
      auto rng = rng_for(opts, t, 91);
      std::uniform_int_distribution<int> coord(-6, 6), level(-3, 3);
      std::uniform_int_distribution<std::size_t> pick(0, rs.roots().size() - 1);
      int bad = 0;
      for (int k = 0; k < 1000; ++k) {
        const auto a = word_to_element(rs, random_word(rs, rng, 10));
        const auto b = word_to_element(rs, random_word(rs, rng, 10));
        const auto c = word_to_element(rs, random_word(rs, rng, 10));
        if (!(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)))) ++bad;
        if (!multiply(a, inverse(rs, a)).is_identity() || !(multiply(identity_element(rs), a) == a)) ++bad;
        RatVec x(static_cast<std::size_t>(rs.rank()));
        for (auto& v : x) v = Rational(coord(rng), 5);
        const AffineRoot beta{rs.roots()[pick(rng)], level(rng)};
        if (evaluate(rs, act_affine_root(rs, a, beta), act_point(a, x)) != evaluate(rs, beta, x)) ++bad;
      }
      r.detail = "1000 cases, " + std::to_string(bad) + " violations";
      fail_unless(r, bad == 0);
    });

    rec.check(t, "inversion sets and weak order", [&](CheckRecord& r) {
      auto rng = rng_for(opts, t, 92);
      std::uniform_int_distribution<std::size_t> size(1, 16);
      int bad = 0;
      for (int k = 0; k < 1000; ++k) {
        const Word w = random_reduced(rs, rng, size(rng));
        const auto inv = inversion_set(rs, w);
        if (inv.items.size() != w.size() || !std::all_of(inv.items.begin(), inv.items.end(), [](auto& b) { return b.positive(); }))
          ++bad;
        if (length(rs, word_to_element(rs, w)) != static_cast<std::int64_t>(w.size())) ++bad;
        const Word prefix(w.begin(), w.end() - 1);
        const auto small = inversion_set(rs, prefix);
        const std::set<AffineRoot> big(inv.items.begin(), inv.items.end());
        std::size_t missing = 0;
        for (const auto& b : small.items) missing += big.count(b) ? 0 : 1;
        if (missing != 0 || big.size() != small.items.size() + 1) ++bad;
      }
      r.detail = "1000 cases, " + std::to_string(bad) + " violations";
      fail_unless(r, bad == 0);
    });
  }
}

int type_order(const std::string& name) {
  return static_cast<int>(name.empty() ? 0 : name[0]) * 100 + (name.size() > 1 ? std::stoi(name.substr(1)) : 0);
}

}  // namespace

std::vector<CheckRecord> run_criterion(int c, const VerifyOptions& opts) {
  std::vector<CheckRecord> out;
  Recorder rec{c, out};
  switch (c) {
    case 1: heavy_exponents(opts, rec); break;
    case 2: coxeter_nodes(opts, rec); break;
    case 3: minimal_fixtures(opts, rec); break;
    case 4: walk_correctness(opts, rec); break;
    case 5: fc_classification(opts, rec); break;
    case 6: fc_fixtures(opts, rec); break;
    case 7: densities(opts, rec); break;
    case 8: type_a(opts, rec); break;
    case 9: oracle_suite(opts, rec); break;
    default: throw Error(ErrorCode::InvalidArgument, "criterion " + std::to_string(c));
  }
  return out;
}

std::vector<CheckRecord> run_verify(const VerifyOptions& opts) {
  std::vector<CheckRecord> out;
  for (int c = 1; c <= kCriteria; ++c) {
    if (opts.criterion && opts.criterion != c) continue;
    auto part = run_criterion(c, opts);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  std::stable_sort(out.begin(), out.end(), [](const CheckRecord& a, const CheckRecord& b) {
    if (a.criterion != b.criterion) return a.criterion < b.criterion;
    if (a.type != b.type) return type_order(a.type) < type_order(b.type);
    return a.subject < b.subject;
  });
  return out;
}

std::vector<CriterionSummary> summarize(const std::vector<CheckRecord>& records) {
  std::vector<CriterionSummary> out;
  for (int c = 1; c <= kCriteria; ++c) {
    CriterionSummary s{c};
    bool any = false;
    for (const auto& r : records) {
      if (r.criterion != c) continue;
      any = true;
      s.seconds += r.seconds;
      (r.verdict == Verdict::Pass ? s.passed : r.verdict == Verdict::Fail ? s.failed : s.skipped) += 1;
    }
    if (any) out.push_back(s);
  }
  return out;
}

}  // namespace afflim
