#include "afflim/coxnode.hpp"

#include "afflim/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace afflim {

namespace {

std::vector<std::pair<int, int>> diagram_edges(const RootSystem& rs) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i <= rs.rank(); ++i)
    for (int j : rs.neighbors(i))
      if (i < j) out.emplace_back(i, j);
  return out;
}

void require_coxeter(const RootSystem& rs, const Word& w) {
  std::vector<int> seen(static_cast<std::size_t>(rs.rank() + 1), 0);
  if (w.size() != seen.size()) throw Error(ErrorCode::NotPermutation, "expected " + std::to_string(seen.size()) + " letters");
  for (int i : w) {
    if (i < 0 || i > rs.rank() || seen[static_cast<std::size_t>(i)]++)
      throw Error(ErrorCode::NotPermutation, "'" + format_word(w) + "' is not a permutation of 0.." + std::to_string(rs.rank()));
  }
}

void require_not_a(const RootSystem& rs, const char* what) {
  if (rs.type().family == Family::A) throw Error(ErrorCode::UnsupportedType, std::string(what) + " is undefined in type A");
}

}  // namespace

Word coxeter_word(const RootSystem& rs, const std::vector<int>& order) {
  require_coxeter(rs, order);
  return order;
}

Orientation orientation_of(const RootSystem& rs, const Word& coxeter) {
  require_coxeter(rs, coxeter);
  std::vector<std::size_t> pos(coxeter.size());
  for (std::size_t k = 0; k < coxeter.size(); ++k) pos[static_cast<std::size_t>(coxeter[k])] = k;
  Orientation o;
  for (auto [i, j] : diagram_edges(rs))
    o.arcs.push_back(pos[static_cast<std::size_t>(i)] < pos[static_cast<std::size_t>(j)] ? std::pair{i, j} : std::pair{j, i});
  return o;
}

bool is_acyclic(const RootSystem& rs, const Orientation& o) {
  const auto n = static_cast<std::size_t>(rs.rank() + 1);
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> out(n);
  for (auto [a, b] : o.arcs) {
    out[static_cast<std::size_t>(a)].push_back(b);
    ++indeg[static_cast<std::size_t>(b)];
  }
  std::deque<int> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push_back(static_cast<int>(i));
  std::size_t removed = 0;
  while (!ready.empty()) {
    const int v = ready.front();
    ready.pop_front();
    ++removed;
    for (int w : out[static_cast<std::size_t>(v)])
      if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push_back(w);
  }
  return removed == n;
}

Word conjugation_path(const RootSystem& rs, const Word& c1, const Word& c2) {
  require_not_a(rs, "conjugation by orientation flips");
  const Orientation start = orientation_of(rs, c1);
  const Orientation goal = orientation_of(rs, c2);
  const auto edges = diagram_edges(rs);

  // Encode an orientation as one bit per edge: set when the arc points from the larger index.
  auto encode = [&](const Orientation& o) {
    std::vector<bool> bits(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) bits[e] = o.arcs[e].first > o.arcs[e].second;
    return bits;
  };
  auto points_out = [&](const std::vector<bool>& bits, std::size_t e, int v) {
    const auto [a, b] = edges[e];
    const int from = bits[e] ? b : a;
    return from == v;
  };

  const auto target = encode(goal);
  std::map<std::vector<bool>, std::pair<std::vector<bool>, int>> parent;
  std::deque<std::vector<bool>> queue{encode(start)};
  parent.emplace(queue.front(), std::pair{queue.front(), -1});
  while (!queue.empty() && !parent.count(target)) {
    auto cur = queue.front();
    queue.pop_front();
    for (int v = 1; v <= rs.rank(); ++v) {
      bool all_out = true, all_in = true;
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (edges[e].first != v && edges[e].second != v) continue;
        if (points_out(cur, e, v)) all_in = false;
        else all_out = false;
      }
      if (!all_out && !all_in) continue;
      auto next = cur;
      for (std::size_t e = 0; e < edges.size(); ++e)
        if (edges[e].first == v || edges[e].second == v) next[e] = !next[e];
      if (parent.emplace(next, std::pair{cur, v}).second) queue.push_back(next);
    }
  }
  if (!parent.count(target)) throw Error(ErrorCode::PathNotFound, format_word(c1) + " -> " + format_word(c2));

  Word flips;  // in reverse order of application, which is the product order of v
  for (auto cur = target; parent.at(cur).second >= 0; cur = parent.at(cur).first) flips.push_back(parent.at(cur).second);

  const AffineElement v = word_to_element(rs, flips);
  const AffineElement lhs = multiply(multiply(v, word_to_element(rs, c1)), inverse(rs, v));
  if (!(lhs == word_to_element(rs, c2))) throw Error(ErrorCode::Internal, "conjugation identity failed");
  return flips;
}

int heavy_node_graph(const RootSystem& rs) {
  require_not_a(rs, "heavy node");
  for (int i = 1; i <= rs.rank(); ++i)
    if (rs.finite_neighbors(i).size() == 3) return i;
  for (int i = 1; i <= rs.rank(); ++i)
    for (int j = i + 1; j <= rs.rank(); ++j)
      if (rs.bond(i, j) >= 4) return rs.node_length(i) > rs.node_length(j) ? i : j;
  throw Error(ErrorCode::Internal, "no heavy node found");
}

std::pair<std::vector<int>, std::vector<int>> bipartition(const RootSystem& rs) {
  std::vector<int> colour(static_cast<std::size_t>(rs.rank() + 1), -1);
  colour[1] = 0;
  std::deque<int> queue{1};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : rs.finite_neighbors(v))
      if (colour[static_cast<std::size_t>(w)] < 0) {
        colour[static_cast<std::size_t>(w)] = 1 - colour[static_cast<std::size_t>(v)];
        queue.push_back(w);
      }
  }
  std::pair<std::vector<int>, std::vector<int>> out;
  for (int i = 1; i <= rs.rank(); ++i) (colour[static_cast<std::size_t>(i)] == 0 ? out.first : out.second).push_back(i);
  return out;
}

IntVec reflect_part(const RootSystem& rs, const std::vector<int>& part, const IntVec& x) {
  IntVec y = x;
  for (int i : part) y = rs.reflect(i, y);
  return y;
}

BipartiteOrbit heavy_node_bipartite(const RootSystem& rs) {
  require_not_a(rs, "heavy node");
  auto [p0, p1] = bipartition(rs);
  const IntVec& xi = rs.highest_root();
  const bool p0_moves = reflect_part(rs, p0, xi) != xi;
  const bool p1_moves = reflect_part(rs, p1, xi) != xi;
  if (p0_moves == p1_moves) throw Error(ErrorCode::NoConvergence, "expected exactly one part to fix the highest root");
  const auto& first = p0_moves ? p0 : p1;
  const auto& second = p0_moves ? p1 : p0;

  BipartiteOrbit out;
  out.trace.push_back(xi);
  IntVec beta = xi;
  while (rs.height(beta) > 1) {
    const auto& part = out.applications % 2 == 0 ? first : second;
    IntVec next = reflect_part(rs, part, beta);
    if (rs.height(next) >= rs.height(beta) || !rs.is_positive_root_vector(next))
      throw Error(ErrorCode::NoConvergence, "height did not decrease at " + to_string(beta));
    beta = std::move(next);
    out.trace.push_back(beta);
    ++out.applications;
  }
  out.exponent = (out.applications + 1) / 2;
  for (int i = 1; i <= rs.rank(); ++i)
    if (beta[static_cast<std::size_t>(i - 1)] == 1) out.node = i;
  const bool node_in_p0 = std::find(p0.begin(), p0.end(), out.node) != p0.end();
  out.f_part = node_in_p0 ? p0 : p1;
  out.u_part = node_in_p0 ? p1 : p0;
  out.f_fixes_xi = out.f_part != first;
  return out;
}

std::optional<int> bipartite_terminal(const RootSystem& rs, bool start_with_first_colour) {
  auto [p0, p1] = bipartition(rs);
  IntVec beta = rs.highest_root();
  const int cap = 4 * static_cast<int>(rs.positive_roots().size());
  for (int step = 0; step < cap && rs.height(beta) > 1; ++step) {
    const bool first = (step % 2 == 0) == start_with_first_colour;
    IntVec next = reflect_part(rs, first ? p0 : p1, beta);
    if (rs.height(next) > rs.height(beta) || !rs.is_positive_root_vector(next)) return std::nullopt;
    beta = std::move(next);
  }
  if (rs.height(beta) != 1) return std::nullopt;
  for (int i = 1; i <= rs.rank(); ++i)
    if (beta[static_cast<std::size_t>(i - 1)] == 1) return i;
  return std::nullopt;
}

CoxeterCertificate coxeter_node_certify(const RootSystem& rs, const Word& coxeter) {
  require_coxeter(rs, coxeter);
  const AffineElement c = word_to_element(rs, coxeter);
  AffineElement acc = c;
  CoxeterCertificate out;
  for (std::int64_t m = 1; m <= rs.exponent_bound(); ++m) {
    if (acc.is_translation()) {
      out.power = m;
      out.translation = acc.trans;
      break;
    }
    acc = multiply(acc, c);
  }
  if (out.power == 0) throw Error(ErrorCode::NoTranslationPower, format_word(coxeter));
  const auto dom = dominant_rep(rs, to_rat(out.translation));
  out.conjugator = dom.word;
  int positive = 0, index = 0;
  for (int i = 1; i <= rs.rank(); ++i)
    if (rs.coroot_pairing(i, dom.vector) > 0) {
      ++positive;
      index = i;
    }
  if (positive == 1) out.node = index;
  return out;
}

}  // namespace afflim
