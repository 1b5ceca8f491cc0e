#pragma once

// Exact scalar, vector and small-matrix types shared by every module.
//
// Coordinates are always taken in the simple-root basis alpha_1..alpha_n.
// Anything living in the root lattice (roots, coroots, walk states,
// translation parts) is an IntVec; coweights and directions are RatVec.

#include <boost/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace afflim {

using Rational = boost::rational<std::int64_t>;
using IntVec = std::vector<std::int64_t>;
using RatVec = std::vector<Rational>;

/// Letters of a word over the affine generators 0..n.
using Word = std::vector<int>;

RatVec to_rat(const IntVec& v);

/// Returns the integer vector if every coordinate has denominator 1.
std::optional<IntVec> to_int(const RatVec& v);

/// Least common multiple of the denominators.
std::int64_t common_denominator(const RatVec& v);

bool is_zero(const IntVec& v);
bool is_zero(const RatVec& v);

std::int64_t dot(const IntVec& a, const IntVec& b);

IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a);
IntVec operator*(std::int64_t c, const IntVec& v);
RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator*(const Rational& c, const RatVec& v);

std::string to_string(const Rational& r);
std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);

struct IntVecHash {
  std::size_t operator()(const IntVec& v) const noexcept;
};

/// Dense square integer matrix acting on column vectors.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}

  static IntMatrix identity(int n);

  int dim() const { return n_; }
  std::int64_t& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  std::int64_t operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  bool is_identity() const;
  IntMatrix transposed() const;

  IntVec apply(const IntVec& x) const;
  RatVec apply(const RatVec& x) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  const std::vector<std::int64_t>& data() const { return a_; }

 private:
  int n_ = 0;
  std::vector<std::int64_t> a_;
};

/// Dense square rational matrix; only used for inverting the Gram matrix.
class RatMatrix {
 public:
  RatMatrix() = default;
  explicit RatMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, Rational(0)) {}

  int dim() const { return n_; }
  Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  /// Gauss-Jordan inverse; nullopt when singular.
  std::optional<RatMatrix> inverse() const;

  RatVec column(int j) const;

 private:
  int n_ = 0;
  std::vector<Rational> a_;
};

}  // namespace afflim
