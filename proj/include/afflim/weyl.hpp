#pragma once

// Elements of the affine Weyl group as (linear part, translation) pairs,
// acting on V by x -> L x + mu, together with affine roots and the usual
// word machinery.

#include "afflim/linalg.hpp"
#include "afflim/rootsys.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace afflim {

struct AffineElement {
  IntMatrix linear;
  IntVec trans;

  bool is_identity() const { return linear.is_identity() && is_zero(trans); }
  bool is_translation() const { return linear.is_identity(); }
  friend bool operator==(const AffineElement&, const AffineElement&) = default;
};

/// The affine function x -> <root, x> + level.
struct AffineRoot {
  IntVec root;
  std::int64_t level = 0;

  bool positive() const;
  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
  friend bool operator<(const AffineRoot& a, const AffineRoot& b) {
    return a.level != b.level ? a.level < b.level : a.root < b.root;
  }
};

struct AffineRootHash {
  std::size_t operator()(const AffineRoot& r) const noexcept;
};

std::string to_string(const AffineRoot& r);

/// Positive affine roots in discovery order.
struct InversionSet {
  std::vector<AffineRoot> items;

  std::size_t size() const { return items.size(); }
};

AffineElement identity_element(const RootSystem& rs);
AffineElement translation(const RootSystem& rs, const IntVec& mu);
AffineElement simple(const RootSystem& rs, int i);
AffineRoot simple_affine_root(const RootSystem& rs, int i);

AffineElement multiply(const AffineElement& a, const AffineElement& b);
/// a * s_i without forming s_i.
AffineElement multiply_simple(const RootSystem& rs, const AffineElement& a, int i);
AffineElement inverse(const RootSystem& rs, const AffineElement& a);
AffineElement power(const AffineElement& a, std::int64_t m);

IntVec act_point(const AffineElement& a, const IntVec& x);
RatVec act_point(const AffineElement& a, const RatVec& x);
AffineRoot act_affine_root(const RootSystem& rs, const AffineElement& a, const AffineRoot& beta);
/// Value of the affine function at a point.
Rational evaluate(const RootSystem& rs, const AffineRoot& beta, const RatVec& x);

bool is_right_descent(const RootSystem& rs, const AffineElement& w, int i);
std::int64_t length(const RootSystem& rs, const AffineElement& w);
/// Reduced word built from the smallest right descent at every step.
Word reduce(const RootSystem& rs, const AffineElement& w);

AffineElement word_to_element(const RootSystem& rs, const Word& word);
bool is_reduced(const RootSystem& rs, const Word& word);
/// Items alpha_{i_1}, s_{i_1} alpha_{i_2}, ... as affine roots; throws
/// NotReduced at the first non-positive or repeated item.
InversionSet inversion_set(const RootSystem& rs, const Word& word);

/// Finite inversions {alpha > 0 : w alpha < 0} of the linear part.
std::vector<IntVec> finite_right_inversions(const RootSystem& rs, const AffineElement& w);

struct QuotientElement {
  AffineElement element;
  /// Reduced word of `element`.
  Word word;
};

/// Minimal-length element sending the i-th fundamental coweight to the
/// antidominant chamber.
QuotientElement longest_quotient_element(const RootSystem& rs, int i);

void check_letters(const RootSystem& rs, const Word& word);

/// Parses "0 1 2", "0,1,2", or compact "012[10]".
Word parse_word(std::string_view text);
std::string format_word(const Word& word);

}  // namespace afflim
