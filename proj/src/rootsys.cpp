#include "afflim/rootsys.hpp"

#include "afflim/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>
#include <utility>

namespace afflim {

namespace {

struct FiniteDiagram {
  std::vector<Rational> lengths;          // index 0 is node 1
  std::vector<std::pair<int, int>> edges;  // 1-based
};

void chain(FiniteDiagram& d, int from, int to) {
  for (int i = from; i < to; ++i) d.edges.emplace_back(i, i + 1);
}

FiniteDiagram diagram(const DynkinType& t) {
  const int n = t.rank;
  FiniteDiagram d;
  d.lengths.assign(static_cast<std::size_t>(n), Rational(2));
  switch (t.family) {
    case Family::A:
      chain(d, 1, n);
      break;
    case Family::B:
      chain(d, 1, n);
      d.lengths[static_cast<std::size_t>(n - 1)] = 1;
      break;
    case Family::C:
      chain(d, 1, n);
      for (int i = 0; i < n - 1; ++i) d.lengths[static_cast<std::size_t>(i)] = 1;
      break;
    case Family::D:
      chain(d, 1, n - 1);
      d.edges.emplace_back(n - 2, n);
      break;
    case Family::E:
      if (n == 6) {
        chain(d, 1, 5);
        d.edges.emplace_back(3, 6);
      } else if (n == 7) {
        chain(d, 1, 6);
        d.edges.emplace_back(3, 7);
      } else {
        chain(d, 1, 7);
        d.edges.emplace_back(5, 8);
      }
      break;
    case Family::F:
      chain(d, 1, 4);
      d.lengths[2] = 1;
      d.lengths[3] = 1;
      break;
    case Family::G:
      chain(d, 1, 2);
      d.lengths[1] = Rational(2, 3);
      break;
  }
  return d;
}

std::int64_t lcm_upto(std::int64_t m) {
  std::int64_t r = 1;
  for (std::int64_t i = 2; i <= m; ++i) r = std::lcm(r, i);
  return r;
}

std::int64_t exponent_of(const DynkinType& t) {
  switch (t.family) {
    case Family::A: return lcm_upto(t.rank + 1);
    case Family::B:
    case Family::C:
    case Family::D: return 2 * lcm_upto(t.rank);
    case Family::E: return t.rank == 6 ? 360 : 2520;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 1;
}

int bond_from_product(std::int64_t p) {
  switch (p) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return kInfiniteBond;
  }
}

}  // namespace

bool valid_rank(Family family, int rank) {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B:
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

DynkinType DynkinType::make(Family family, int rank) {
  if (!valid_rank(family, rank))
    throw Error(ErrorCode::InvalidRank,
                std::string(1, static_cast<char>(family)) + std::to_string(rank));
  return DynkinType{family, rank};
}

DynkinType DynkinType::parse(std::string_view text) {
  if (text.size() < 2) throw Error(ErrorCode::InvalidArgument, "bad type '" + std::string(text) + "'");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (std::string_view("ABCDEFG").find(f) == std::string_view::npos)
    throw Error(ErrorCode::InvalidArgument, "unknown family in '" + std::string(text) + "'");
  int rank = 0;
  const auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw Error(ErrorCode::InvalidArgument, "bad rank in '" + std::string(text) + "'");
  return make(static_cast<Family>(f), rank);
}

std::string DynkinType::name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

RootSystem::RootSystem(DynkinType type) : type_(DynkinType::make(type.family, type.rank)), n_(type.rank) {
  const auto n = static_cast<std::size_t>(n_);
  const auto d = diagram(type_);
  lengths_ = d.lengths;

  RatMatrix form(n_);
  for (std::size_t i = 0; i < n; ++i) form(static_cast<int>(i), static_cast<int>(i)) = lengths_[i];
  for (auto [a, b] : d.edges) {
    const Rational v = -std::max(lengths_[static_cast<std::size_t>(a - 1)], lengths_[static_cast<std::size_t>(b - 1)]) / 2;
    form(a - 1, b - 1) = v;
    form(b - 1, a - 1) = v;
  }
  form6_.assign(n * n, 0);
  cartan_ = IntMatrix(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      const Rational s = form(i, j) * 6;
      form6_[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] = s.numerator();
      const Rational c = form(i, j) * 2 / form(i, i);
      cartan_(i, j) = c.numerator();
    }
  form_inverse_ = *form.inverse();

  // Extended coroot rows for the finite nodes; node 0 follows once xi is known.
  coroot_rows_.assign(n + 1, IntVec(n, 0));
  node_root_.assign(n + 1, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    node_root_[i + 1][i] = 1;
    for (std::size_t j = 0; j < n; ++j) coroot_rows_[i + 1][j] = cartan_(static_cast<int>(i), static_cast<int>(j));
  }

  // Positive roots by reflection closure.
  std::set<IntVec> seen;
  std::deque<IntVec> queue;
  for (std::size_t i = 0; i < n; ++i) {
    seen.insert(node_root_[i + 1]);
    queue.push_back(node_root_[i + 1]);
  }
  while (!queue.empty()) {
    IntVec r = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n_; ++i) {
      IntVec s = reflect(i, r);
      if (std::all_of(s.begin(), s.end(), [](auto x) { return x >= 0; }) && seen.insert(s).second)
        queue.push_back(std::move(s));
    }
  }
  positive_.assign(seen.begin(), seen.end());
  std::stable_sort(positive_.begin(), positive_.end(),
                   [this](const IntVec& a, const IntVec& b) { return height(a) < height(b); });
  all_roots_ = positive_;
  for (const auto& r : positive_) all_roots_.push_back(-r);
  for (std::size_t i = 0; i < all_roots_.size(); ++i) root_lookup_.emplace(all_roots_[i], i);

  highest_ = positive_.back();
  node_root_[0] = -highest_;
  const IntVec g = gram6(highest_);
  for (std::size_t j = 0; j < n; ++j) coroot_rows_[0][j] = -g[j] / 6;

  for (std::size_t j = 0; j < n; ++j) {
    coweights_.push_back(form_inverse_.column(static_cast<int>(j)));
    IntVec c(n, 0);
    const Rational scale = Rational(2) / lengths_[j];
    c[j] = scale.numerator();
    coroots_.push_back(std::move(c));
    std::int64_t kk = 1;
    for (std::size_t m = 0; m < n; ++m) kk = std::lcm(kk, (coweights_[j][m] * lengths_[m] / 2).denominator());
    k_.push_back(kk);
  }

  // Highest coroot: coroot of maximal height in the simple-coroot basis.
  std::int64_t best = -1;
  for (const auto& r : positive_) {
    const Rational len = pairing(r, r);
    IntVec c(n, 0);
    std::int64_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Rational ci = Rational(r[i]) * lengths_[i] / len;
      c[i] = ci.numerator();
      h += c[i];
    }
    if (h > best) {
      best = h;
      highest_coroot_ = c;
    }
  }

  bonds_.assign(n + 1, std::vector<int>(n + 1, 2));
  neighbors_.assign(n + 1, {});
  for (int i = 0; i <= n_; ++i)
    for (int j = 0; j <= n_; ++j) {
      if (i == j) continue;
      const std::int64_t aij = coroot_pairing(i, node_root_[static_cast<std::size_t>(j)]);
      const std::int64_t aji = coroot_pairing(j, node_root_[static_cast<std::size_t>(i)]);
      const int m = bond_from_product(aij * aji);
      bonds_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m;
      if (m != 2) neighbors_[static_cast<std::size_t>(i)].push_back(j);
    }

  exponent_bound_ = exponent_of(type_);
}

std::int64_t RootSystem::cartan(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) throw Error(ErrorCode::IndexOutOfRange, "cartan index");
  return cartan_(i - 1, j - 1);
}

Rational RootSystem::form(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) throw Error(ErrorCode::IndexOutOfRange, "form index");
  return Rational(form6_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j - 1)], 6);
}

std::optional<std::size_t> RootSystem::root_index(const IntVec& v) const {
  auto it = root_lookup_.find(v);
  if (it == root_lookup_.end()) return std::nullopt;
  return it->second;
}

int RootSystem::bond(int i, int j) const {
  if (i < 0 || i > n_ || j < 0 || j > n_ || i == j) throw Error(ErrorCode::IndexOutOfRange, "bond index");
  return bonds_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

std::vector<int> RootSystem::finite_neighbors(int i) const {
  std::vector<int> out;
  for (int j : neighbors(i))
    if (j != 0) out.push_back(j);
  return out;
}

std::int64_t RootSystem::coroot_pairing(int i, const IntVec& x) const {
  return dot(coroot_rows_.at(static_cast<std::size_t>(i)), x);
}

Rational RootSystem::coroot_pairing(int i, const RatVec& x) const {
  const auto& row = coroot_rows_.at(static_cast<std::size_t>(i));
  Rational s(0);
  for (std::size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0) s += row[j] * x[j];
  return s;
}

IntVec RootSystem::reflect(int i, const IntVec& x) const {
  const std::int64_t c = coroot_pairing(i, x);
  if (c == 0) return x;
  IntVec out(x);
  const auto& a = node_root_[static_cast<std::size_t>(i)];
  for (std::size_t j = 0; j < out.size(); ++j) out[j] -= c * a[j];
  return out;
}

RatVec RootSystem::reflect(int i, const RatVec& x) const {
  const Rational c = coroot_pairing(i, x);
  if (c.numerator() == 0) return x;
  RatVec out(x);
  const auto& a = node_root_[static_cast<std::size_t>(i)];
  for (std::size_t j = 0; j < out.size(); ++j)
    if (a[j] != 0) out[j] -= c * a[j];
  return out;
}

Rational RootSystem::node_length(int i) const {
  if (i < 0 || i > n_) throw Error(ErrorCode::IndexOutOfRange, "node index");
  return i == 0 ? Rational(2) : lengths_[static_cast<std::size_t>(i - 1)];
}

IntVec RootSystem::gram6(const IntVec& x) const {
  const auto n = static_cast<std::size_t>(n_);
  IntVec out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n; ++j) s += form6_[i * n + j] * x[j];
    out[i] = s;
  }
  return out;
}

std::int64_t RootSystem::pair6(const IntVec& x, const IntVec& y) const { return dot(x, gram6(y)); }

std::int64_t RootSystem::pair_int(const IntVec& x, const IntVec& y) const {
  const std::int64_t p = pair6(x, y);
  if (p % 6 != 0) throw Error(ErrorCode::Internal, "non-integral pairing");
  return p / 6;
}

Rational RootSystem::pairing(const RatVec& x, const RatVec& y) const {
  const auto n = static_cast<std::size_t>(n_);
  if (x.size() != n || y.size() != n) throw Error(ErrorCode::DimensionMismatch, "pairing");
  Rational s(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].numerator() == 0) continue;
    Rational row(0);
    for (std::size_t j = 0; j < n; ++j)
      if (form6_[i * n + j] != 0 && y[j].numerator() != 0) row += form6_[i * n + j] * y[j];
    s += x[i] * row;
  }
  return s / 6;
}

Rational RootSystem::pairing(const IntVec& x, const IntVec& y) const {
  const auto n = static_cast<std::size_t>(n_);
  if (x.size() != n || y.size() != n) throw Error(ErrorCode::DimensionMismatch, "pairing");
  return Rational(pair6(x, y), 6);
}

bool RootSystem::in_coroot_lattice(const RatVec& v) const {
  if (v.size() != static_cast<std::size_t>(n_)) throw Error(ErrorCode::DimensionMismatch, "coroot lattice test");
  for (std::size_t i = 0; i < v.size(); ++i)
    if ((v[i] * lengths_[i] / 2).denominator() != 1) return false;
  return true;
}

bool RootSystem::in_coroot_lattice(const IntVec& v) const { return in_coroot_lattice(to_rat(v)); }

bool RootSystem::is_positive_root_vector(const IntVec& v) const {
  auto idx = root_index(v);
  return idx && *idx < positive_.size();
}

std::int64_t RootSystem::height(const IntVec& v) const { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

bool operator==(const RootSystem& a, const RootSystem& b) {
  return a.type_ == b.type_ && a.form6_ == b.form6_ && a.positive_ == b.positive_ && a.coweights_ == b.coweights_ &&
         a.bonds_ == b.bonds_;
}

std::vector<RatVec> orbit(const RootSystem& rs, const RatVec& v) {
  if (is_zero(v)) throw Error(ErrorCode::ZeroVector, "orbit of zero");
  const std::int64_t d = common_denominator(v);
  IntVec scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) scaled[i] = (v[i] * d).numerator();
  std::vector<IntVec> order{scaled};
  std::unordered_set<IntVec, IntVecHash> seen{scaled};
  for (std::size_t head = 0; head < order.size(); ++head)
    for (int i = 1; i <= rs.rank(); ++i) {
      IntVec s = rs.reflect(i, order[head]);
      if (seen.insert(s).second) order.push_back(std::move(s));
    }
  std::vector<RatVec> out;
  out.reserve(order.size());
  for (const auto& x : order) out.push_back(Rational(1, d) * to_rat(x));
  return out;
}

std::size_t orbit_size(const RootSystem& rs, const IntVec& v) {
  std::vector<IntVec> order{v};
  std::unordered_set<IntVec, IntVecHash> seen{v};
  for (std::size_t head = 0; head < order.size(); ++head)
    for (int i = 1; i <= rs.rank(); ++i) {
      IntVec s = rs.reflect(i, order[head]);
      if (seen.insert(s).second) order.push_back(std::move(s));
    }
  return order.size();
}

DominantRep dominant_rep(const RootSystem& rs, const RatVec& v) {
  if (is_zero(v)) throw Error(ErrorCode::ZeroVector, "dominant representative of zero");
  DominantRep out{v, {}};
  for (;;) {
    int pick = 0;
    for (int i = 1; i <= rs.rank(); ++i)
      if (rs.coroot_pairing(i, out.vector) < 0) {
        pick = i;
        break;
      }
    if (pick == 0) break;
    out.vector = rs.reflect(pick, out.vector);
    out.word.push_back(pick);
  }
  std::reverse(out.word.begin(), out.word.end());
  return out;
}

bool cominuscule(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank()) throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(i));
  return rs.marks()[static_cast<std::size_t>(i - 1)] == 1;
}

bool minuscule(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank()) throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(i));
  return rs.highest_coroot()[static_cast<std::size_t>(i - 1)] == 1;
}

std::vector<DynkinType> all_types(int max_rank) {
  std::vector<DynkinType> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({Family::A, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Family::B, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Family::C, n});
  for (int n = 4; n <= max_rank; ++n) out.push_back({Family::D, n});
  for (int n = 6; n <= std::min(8, max_rank); ++n) out.push_back({Family::E, n});
  if (max_rank >= 4) out.push_back({Family::F, 4});
  if (max_rank >= 2) out.push_back({Family::G, 2});
  return out;
}

}  // namespace afflim
