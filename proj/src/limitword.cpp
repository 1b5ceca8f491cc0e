#include "afflim/limitword.hpp"

#include "afflim/errors.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <unordered_map>

namespace afflim {

Word PeriodicWord::truncation(std::int64_t reps) const {
  Word out = prefix;
  out.reserve(prefix.size() + period.size() * static_cast<std::size_t>(std::max<std::int64_t>(reps, 0)));
  for (std::int64_t r = 0; r < reps; ++r) out.insert(out.end(), period.begin(), period.end());
  return out;
}

std::int64_t PeriodicWord::reps_for_depth(std::int64_t depth) const {
  const auto base = static_cast<std::int64_t>(prefix.size());
  if (depth <= base) return 0;
  if (period.empty()) throw Error(ErrorCode::InvalidArgument, "empty period");
  const auto p = static_cast<std::int64_t>(period.size());
  return (depth - base + p - 1) / p;
}

PeriodicWord lambda_walk(const RootSystem& rs, const RatVec& lambda, WalkStrategy strategy, std::int64_t max_steps) {
  if (lambda.size() != static_cast<std::size_t>(rs.rank())) throw Error(ErrorCode::DimensionMismatch, "walk vector");
  if (is_zero(lambda)) throw Error(ErrorCode::ZeroVector, "walk from zero");
  if (!rs.in_coroot_lattice(lambda)) throw Error(ErrorCode::NotInCorootLattice, to_string(lambda));
  IntVec state = *to_int(lambda);

  std::mt19937_64 rng(strategy.seed);
  std::unordered_map<IntVec, std::size_t, IntVecHash> seen;
  Word emitted;
  std::vector<int> admissible;
  seen.emplace(state, 0);
  for (std::int64_t step = 0; step < max_steps; ++step) {
    admissible.clear();
    for (int i = 0; i <= rs.rank(); ++i)
      if (rs.coroot_pairing(i, state) < 0) admissible.push_back(i);
    if (admissible.empty()) throw Error(ErrorCode::Internal, "walk reached a vector with no admissible index");
    int pick = admissible.front();
    if (strategy.kind == WalkStrategy::Kind::Seeded) {
      std::uniform_int_distribution<std::size_t> dist(0, admissible.size() - 1);
      pick = admissible[dist(rng)];
    }
    state = rs.reflect(pick, state);
    emitted.push_back(pick);
    auto [it, inserted] = seen.emplace(state, emitted.size());
    if (!inserted) {
      const auto j = static_cast<std::ptrdiff_t>(it->second);
      return {Word(emitted.begin(), emitted.begin() + j), Word(emitted.begin() + j, emitted.end())};
    }
  }
  throw Error(ErrorCode::PeriodNotFound, "no repeated state within " + std::to_string(max_steps) + " steps");
}

InversionSet truncated_inversion_set(const RootSystem& rs, const PeriodicWord& pw, std::int64_t depth) {
  if (depth < 0) throw Error(ErrorCode::InvalidArgument, "negative depth");
  return inversion_set(rs, pw.truncation(pw.reps_for_depth(depth)));
}

std::vector<AffineRoot> translation_ray_hyperplanes(const RootSystem& rs, const RatVec& lambda, std::int64_t level_bound) {
  if (is_zero(lambda)) throw Error(ErrorCode::ZeroVector, "ray direction");
  std::vector<AffineRoot> out;
  for (const auto& a : rs.positive_roots()) {
    const Rational p = rs.pairing(to_rat(a), lambda);
    if (p > 0) {
      for (std::int64_t k = 1; k <= level_bound; ++k) out.push_back({-a, k});
    } else if (p < 0) {
      for (std::int64_t k = 0; k <= level_bound; ++k) out.push_back({a, k});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t translation_power(const RootSystem& rs, const PeriodicWord& pw) {
  if (pw.period.empty()) throw Error(ErrorCode::InvalidArgument, "empty period");
  const AffineElement p = word_to_element(rs, pw.period);
  IntMatrix acc = p.linear;
  for (std::int64_t m = 1; m <= rs.exponent_bound(); ++m) {
    if (acc.is_identity()) return m;
    acc = acc * p.linear;
  }
  throw Error(ErrorCode::NoTranslationPower, "no power of the period is a translation");
}

std::int64_t saturated_level(const RootSystem& rs, const PeriodicWord& pw, std::int64_t depth) {
  const std::int64_t d = pw.reps_for_depth(depth);
  const std::int64_t a = translation_power(rs, pw);
  const auto head = pw.truncation(d).size();
  const InversionSet inv = inversion_set(rs, pw.truncation(d + a));
  std::int64_t low = std::numeric_limits<std::int64_t>::max();
  for (std::size_t k = head; k < inv.items.size(); ++k) low = std::min(low, inv.items[k].level);
  return low - 1;
}

bool limit_equal(const RootSystem& rs, const PeriodicWord& a, const PeriodicWord& b, std::int64_t depth) {
  const std::int64_t level = std::min(saturated_level(rs, a, depth), saturated_level(rs, b, depth));
  auto cut = [&](const PeriodicWord& pw) {
    std::set<AffineRoot> s;
    for (auto& r : truncated_inversion_set(rs, pw, depth).items)
      if (r.level <= level) s.insert(r);
    return s;
  };
  return cut(a) == cut(b);
}

TranslationDirection translation_direction(const RootSystem& rs, const PeriodicWord& pw) {
  const std::int64_t m = translation_power(rs, pw);
  const AffineElement q = word_to_element(rs, pw.prefix);
  const AffineElement pm = power(word_to_element(rs, pw.period), m);
  const AffineElement conj = multiply(multiply(q, pm), inverse(rs, q));
  if (!conj.is_translation()) throw Error(ErrorCode::Internal, "conjugated power is not a translation");
  if (is_zero(conj.trans)) throw Error(ErrorCode::NoTranslationPower, "period power is trivial");
  TranslationDirection out;
  out.power = m;
  out.direction = Rational(1, m) * to_rat(conj.trans);
  auto dom = dominant_rep(rs, out.direction);
  out.dominant = dom.vector;
  out.conjugator = dom.word;
  int positive = 0, index = 0;
  for (int i = 1; i <= rs.rank(); ++i)
    if (rs.coroot_pairing(i, dom.vector) > 0) {
      ++positive;
      index = i;
    }
  if (positive == 1) out.coweight_index = index;
  return out;
}

IntVec scaled_coweight(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank()) throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(i));
  return *to_int(Rational(rs.k(i)) * rs.coweight(i));
}

std::vector<MinimalClass> enumerate_minimal(const RootSystem& rs) {
  std::vector<MinimalClass> out;
  for (int i = 1; i <= rs.rank(); ++i)
    for (const auto& v : orbit(rs, to_rat(scaled_coweight(rs, i)))) out.push_back({i, *to_int(v), lambda_walk(rs, v)});
  return out;
}

std::vector<std::size_t> minimal_counts(const RootSystem& rs) {
  std::vector<std::size_t> out;
  for (int i = 1; i <= rs.rank(); ++i) out.push_back(orbit_size(rs, scaled_coweight(rs, i)));
  return out;
}

}  // namespace afflim
