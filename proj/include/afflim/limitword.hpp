#pragma once

// Eventually periodic infinite reduced words for translation classes.

#include "afflim/linalg.hpp"
#include "afflim/rootsys.hpp"
#include "afflim/weyl.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace afflim {

struct PeriodicWord {
  Word prefix;
  Word period;

  /// prefix followed by `reps` copies of the period.
  Word truncation(std::int64_t reps) const;
  /// Smallest repetition count whose truncation has at least `depth` letters.
  std::int64_t reps_for_depth(std::int64_t depth) const;
  friend bool operator==(const PeriodicWord&, const PeriodicWord&) = default;
};

struct WalkStrategy {
  enum class Kind { Smallest, Seeded };
  Kind kind = Kind::Smallest;
  std::uint64_t seed = 0;

  static WalkStrategy smallest() { return {}; }
  static WalkStrategy seeded(std::uint64_t s) { return {Kind::Seeded, s}; }
};

inline constexpr std::int64_t kDefaultWalkSteps = 1'000'000;

/// Emits an index with negative pairing and reflects until the state
/// repeats.  Throws ZeroVector, NotInCorootLattice, PeriodNotFound.
PeriodicWord lambda_walk(const RootSystem& rs, const RatVec& lambda, WalkStrategy strategy = {},
                         std::int64_t max_steps = kDefaultWalkSteps);

/// Same as truncated inversion set of `prefix period^d` for the smallest d
/// reaching `depth` letters.
InversionSet truncated_inversion_set(const RootSystem& rs, const PeriodicWord& pw, std::int64_t depth);

/// Positive affine roots of level at most `level_bound` whose hyperplane is
/// crossed by a ray from the fundamental alcove in direction lambda.
std::vector<AffineRoot> translation_ray_hyperplanes(const RootSystem& rs, const RatVec& lambda,
                                                    std::int64_t level_bound);

/// Smallest m with linear(period^m) trivial; throws NoTranslationPower.
std::int64_t translation_power(const RootSystem& rs, const PeriodicWord& pw);

/// Largest level L such that every inversion of the infinite word with
/// level <= L already occurs in the truncation to `depth` letters.
std::int64_t saturated_level(const RootSystem& rs, const PeriodicWord& pw, std::int64_t depth);

bool limit_equal(const RootSystem& rs, const PeriodicWord& a, const PeriodicWord& b, std::int64_t depth);

struct TranslationDirection {
  RatVec direction;
  std::optional<int> coweight_index;
  /// u with u * direction dominant.
  Word conjugator;
  RatVec dominant;
  std::int64_t power = 0;
};

TranslationDirection translation_direction(const RootSystem& rs, const PeriodicWord& pw);

/// k_i omega_i^vee as an integer vector.
IntVec scaled_coweight(const RootSystem& rs, int i);

struct MinimalClass {
  int coweight_index = 0;
  IntVec orbit_member;
  PeriodicWord word;
};

std::vector<MinimalClass> enumerate_minimal(const RootSystem& rs);
/// Orbit sizes per node without running the walks.
std::vector<std::size_t> minimal_counts(const RootSystem& rs);

}  // namespace afflim
