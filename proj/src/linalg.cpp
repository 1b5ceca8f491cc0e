#include "afflim/linalg.hpp"

#include <boost/container_hash/hash.hpp>

#include <numeric>
#include <sstream>
#include <utility>

namespace afflim {

RatVec to_rat(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(x);
  return out;
}

std::optional<IntVec> to_int(const RatVec& v) {
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (x.denominator() != 1) return std::nullopt;
    out.push_back(x.numerator());
  }
  return out;
}

std::int64_t common_denominator(const RatVec& v) {
  std::int64_t d = 1;
  for (const auto& x : v) d = std::lcm(d, x.denominator());
  return d;
}

bool is_zero(const IntVec& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(const RatVec& v) {
  for (const auto& x : v)
    if (x.numerator() != 0) return false;
  return true;
}

std::int64_t dot(const IntVec& a, const IntVec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec operator+(const IntVec& a, const IntVec& b) {
  IntVec out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

IntVec operator-(const IntVec& a, const IntVec& b) {
  IntVec out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

IntVec operator-(const IntVec& a) {
  IntVec out(a);
  for (auto& x : out) x = -x;
  return out;
}

IntVec operator*(std::int64_t c, const IntVec& v) {
  IntVec out(v);
  for (auto& x : out) x *= c;
  return out;
}

RatVec operator+(const RatVec& a, const RatVec& b) {
  RatVec out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

RatVec operator*(const Rational& c, const RatVec& v) {
  RatVec out(v);
  for (auto& x : out) x *= c;
  return out;
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string to_string(const RatVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v[i]);
  os << ')';
  return os.str();
}

std::size_t IntVecHash::operator()(const IntVec& v) const noexcept {
  return boost::hash_range(v.begin(), v.end());
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_identity() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVec IntMatrix::apply(const IntVec& x) const {
  IntVec y(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < n_; ++j) s += (*this)(i, j) * x[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = s;
  }
  return y;
}

RatVec IntMatrix::apply(const RatVec& x) const {
  RatVec y(static_cast<std::size_t>(n_), Rational(0));
  for (int i = 0; i < n_; ++i) {
    Rational s(0);
    for (int j = 0; j < n_; ++j) {
      auto c = (*this)(i, j);
      if (c != 0) s += c * x[static_cast<std::size_t>(j)];
    }
    y[static_cast<std::size_t>(i)] = s;
  }
  return y;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  const int n = a.n_;
  IntMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      auto aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

std::optional<RatMatrix> RatMatrix::inverse() const {
  const int n = n_;
  RatMatrix a(*this);
  RatMatrix inv(n);
  for (int i = 0; i < n; ++i) inv(i, i) = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a(r, col).numerator() != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    const Rational p = a(col, col);
    for (int j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a(r, col).numerator() == 0) continue;
      const Rational f = a(r, col);
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

RatVec RatMatrix::column(int j) const {
  RatVec c(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) c[static_cast<std::size_t>(i)] = (*this)(i, j);
  return c;
}

}  // namespace afflim
