#include "afflim/weyl.hpp"

#include "afflim/errors.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <unordered_set>

namespace afflim {

bool AffineRoot::positive() const {
  if (level != 0) return level > 0;
  for (auto x : root)
    if (x != 0) return x > 0;
  return false;
}

std::size_t AffineRootHash::operator()(const AffineRoot& r) const noexcept {
  std::size_t h = IntVecHash{}(r.root);
  boost::hash_combine(h, r.level);
  return h;
}

std::string to_string(const AffineRoot& r) { return "(" + to_string(r.root) + "," + std::to_string(r.level) + ")"; }

AffineElement identity_element(const RootSystem& rs) {
  return {IntMatrix::identity(rs.rank()), IntVec(static_cast<std::size_t>(rs.rank()), 0)};
}

AffineElement translation(const RootSystem& rs, const IntVec& mu) {
  if (mu.size() != static_cast<std::size_t>(rs.rank())) throw Error(ErrorCode::DimensionMismatch, "translation");
  if (!rs.in_coroot_lattice(mu)) throw Error(ErrorCode::NotInCorootLattice, to_string(mu));
  return {IntMatrix::identity(rs.rank()), mu};
}

AffineElement simple(const RootSystem& rs, int i) {
  if (i < 0 || i > rs.rank()) throw Error(ErrorCode::IndexOutOfRange, "generator " + std::to_string(i));
  return multiply_simple(rs, identity_element(rs), i);
}

AffineRoot simple_affine_root(const RootSystem& rs, int i) {
  if (i < 0 || i > rs.rank()) throw Error(ErrorCode::IndexOutOfRange, "generator " + std::to_string(i));
  return {rs.node_root(i), i == 0 ? 1 : 0};
}

AffineElement multiply(const AffineElement& a, const AffineElement& b) {
  return {a.linear * b.linear, a.linear.apply(b.trans) + a.trans};
}

AffineElement multiply_simple(const RootSystem& rs, const AffineElement& a, int i) {
  if (i < 0 || i > rs.rank()) throw Error(ErrorCode::IndexOutOfRange, "generator " + std::to_string(i));
  const int n = rs.rank();
  const IntVec la = a.linear.apply(rs.node_root(i));
  const IntVec& row = rs.coroot_row(i);
  AffineElement out = a;
  for (int j = 0; j < n; ++j) {
    const auto c = row[static_cast<std::size_t>(j)];
    if (c == 0) continue;
    for (int r = 0; r < n; ++r) out.linear(r, j) -= c * la[static_cast<std::size_t>(r)];
  }
  // s_0 translates by xi = -alpha_0.
  if (i == 0) out.trans = out.trans - la;
  return out;
}

AffineElement inverse(const RootSystem& rs, const AffineElement& a) {
  const int n = rs.rank();
  // L^{-1} = B^{-1} L^T B since L preserves the form.
  RatMatrix lt_b(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational s(0);
      for (int k = 0; k < n; ++k)
        if (a.linear(k, i) != 0) s += a.linear(k, i) * rs.form(k + 1, j + 1);
      lt_b(i, j) = s;
    }
  const RatMatrix& binv = rs.form_inverse();
  IntMatrix inv(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational s(0);
      for (int k = 0; k < n; ++k)
        if (binv(i, k).numerator() != 0) s += binv(i, k) * lt_b(k, j);
      if (s.denominator() != 1) throw Error(ErrorCode::Internal, "non-integral inverse");
      inv(i, j) = s.numerator();
    }
  return {inv, -inv.apply(a.trans)};
}

AffineElement power(const AffineElement& a, std::int64_t m) {
  const int n = a.linear.dim();
  AffineElement result{IntMatrix::identity(n), IntVec(static_cast<std::size_t>(n), 0)};
  AffineElement base = a;
  while (m > 0) {
    if (m & 1) result = multiply(result, base);
    m >>= 1;
    if (m) base = multiply(base, base);
  }
  return result;
}

IntVec act_point(const AffineElement& a, const IntVec& x) { return a.linear.apply(x) + a.trans; }

RatVec act_point(const AffineElement& a, const RatVec& x) { return a.linear.apply(x) + to_rat(a.trans); }

AffineRoot act_affine_root(const RootSystem& rs, const AffineElement& a, const AffineRoot& beta) {
  IntVec g = a.linear.apply(beta.root);
  const std::int64_t shift = rs.pair_int(g, a.trans);
  return {std::move(g), beta.level - shift};
}

Rational evaluate(const RootSystem& rs, const AffineRoot& beta, const RatVec& x) {
  return rs.pairing(to_rat(beta.root), x) + beta.level;
}

bool is_right_descent(const RootSystem& rs, const AffineElement& w, int i) {
  return !act_affine_root(rs, w, simple_affine_root(rs, i)).positive();
}

namespace {

std::int64_t length_cap(const RootSystem& rs, const AffineElement& w) {
  std::int64_t cap = 0;
  for (const auto& a : rs.positive_roots()) cap += std::llabs(rs.pair_int(a, w.trans)) + 1;
  return cap;
}

int smallest_descent(const RootSystem& rs, const AffineElement& w) {
  for (int i = 0; i <= rs.rank(); ++i)
    if (is_right_descent(rs, w, i)) return i;
  return -1;
}

}  // namespace

std::int64_t length(const RootSystem& rs, const AffineElement& w) { return static_cast<std::int64_t>(reduce(rs, w).size()); }

Word reduce(const RootSystem& rs, const AffineElement& w) {
  const std::int64_t cap = length_cap(rs, w);
  Word letters;
  AffineElement cur = w;
  for (;;) {
    const int i = smallest_descent(rs, cur);
    if (i < 0) break;
    if (static_cast<std::int64_t>(letters.size()) >= cap) throw Error(ErrorCode::Internal, "descent loop exceeded length bound");
    letters.push_back(i);
    cur = multiply_simple(rs, cur, i);
  }
  if (!cur.is_identity()) throw Error(ErrorCode::Internal, "descent stopped away from identity");
  std::reverse(letters.begin(), letters.end());
  return letters;
}

void check_letters(const RootSystem& rs, const Word& word) {
  for (int i : word)
    if (i < 0 || i > rs.rank()) throw Error(ErrorCode::IndexOutOfRange, "letter " + std::to_string(i));
}

AffineElement word_to_element(const RootSystem& rs, const Word& word) {
  check_letters(rs, word);
  AffineElement w = identity_element(rs);
  for (int i : word) w = multiply_simple(rs, w, i);
  return w;
}

bool is_reduced(const RootSystem& rs, const Word& word) {
  check_letters(rs, word);
  AffineElement w = identity_element(rs);
  for (int i : word) {
    if (is_right_descent(rs, w, i)) return false;
    w = multiply_simple(rs, w, i);
  }
  return true;
}

InversionSet inversion_set(const RootSystem& rs, const Word& word) {
  check_letters(rs, word);
  InversionSet out;
  out.items.reserve(word.size());
  std::unordered_set<AffineRoot, AffineRootHash> seen;
  AffineElement w = identity_element(rs);
  for (std::size_t k = 0; k < word.size(); ++k) {
    AffineRoot beta = act_affine_root(rs, w, simple_affine_root(rs, word[k]));
    if (!beta.positive() || !seen.insert(beta).second)
      throw Error(ErrorCode::NotReduced, "word is not reduced at position " + std::to_string(k));
    out.items.push_back(std::move(beta));
    w = multiply_simple(rs, w, word[k]);
  }
  return out;
}

std::vector<IntVec> finite_right_inversions(const RootSystem& rs, const AffineElement& w) {
  std::vector<IntVec> out;
  for (const auto& a : rs.positive_roots()) {
    const IntVec img = w.linear.apply(a);
    if (!rs.is_positive_root_vector(img)) out.push_back(a);
  }
  return out;
}

QuotientElement longest_quotient_element(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank()) throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(i));
  RatVec v = rs.coweight(i);
  Word applied;
  for (;;) {
    int pick = 0;
    for (int j = 1; j <= rs.rank(); ++j)
      if (rs.coroot_pairing(j, v) > 0) {
        pick = j;
        break;
      }
    if (pick == 0) break;
    v = rs.reflect(pick, v);
    applied.push_back(pick);
  }
  std::reverse(applied.begin(), applied.end());
  return {word_to_element(rs, applied), applied};
}

Word parse_word(std::string_view text) {
  Word out;
  const bool separated = text.find_first_of(" ,\t\n") != std::string_view::npos;
  auto fail = [&] { throw Error(ErrorCode::InvalidArgument, "bad word '" + std::string(text) + "'"); };
  auto number = [&](std::string_view tok) {
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size() || tok.empty()) fail();
    return v;
  };
  if (separated) {
    std::size_t pos = 0;
    while (pos < text.size()) {
      const auto end = text.find_first_of(" ,\t\n", pos);
      const auto tok = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
      if (!tok.empty()) out.push_back(number(tok));
      if (end == std::string_view::npos) break;
      pos = end + 1;
    }
    return out;
  }
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    if (text[pos] == '[') {
      const auto close = text.find(']', pos);
      if (close == std::string_view::npos) fail();
      out.push_back(number(text.substr(pos + 1, close - pos - 1)));
      pos = close;
    } else if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
      out.push_back(text[pos] - '0');
    } else {
      fail();
    }
  }
  return out;
}

std::string format_word(const Word& word) {
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size(); ++i) os << (i ? " " : "") << word[i];
  return os.str();
}

}  // namespace afflim
