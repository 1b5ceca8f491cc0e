#include "afflim/afflim.h"

#include "afflim/coxnode.hpp"
#include "afflim/errors.hpp"
#include "afflim/fixtures.hpp"
#include "afflim/fullcomm.hpp"
#include "afflim/limitword.hpp"
#include "afflim/rootsys.hpp"
#include "afflim/verify.hpp"
#include "afflim/weyl.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <cstring>
#include <new>
#include <numeric>
#include <optional>
#include <string>

struct afflim_rootsys {
  afflim::RootSystem rs;
};

namespace {

using afflim::Error;
using afflim::ErrorCode;
using nlohmann::json;

thread_local std::string last_error;

json rational_json(const afflim::Rational& r) { return afflim::to_string(r); }

json ratvec_json(const afflim::RatVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rational_json(x));
  return out;
}

json affine_root_json(const afflim::AffineRoot& r) { return {{"root", r.root}, {"level", r.level}}; }

json periodic_json(const afflim::PeriodicWord& pw) {
  return {{"prefix", afflim::format_word(pw.prefix)}, {"period", afflim::format_word(pw.period)}};
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

afflim_status status_of(ErrorCode c) { return static_cast<afflim_status>(static_cast<int>(c) + 1); }

/// Runs `body`, which returns the JSON document; maps exceptions to status codes.
template <class F>
afflim_status guarded(char** out, F&& body) {
  if (!out) {
    last_error = "InvalidArgument: null output pointer";
    return AFFLIM_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  try {
    const json doc = body();
    *out = dup_string(doc.dump());
    last_error.clear();
    return AFFLIM_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = std::string("Internal: ") + e.what();
    return AFFLIM_ERR_UNKNOWN;
  }
}

const afflim::RootSystem& system_of(const afflim_rootsys* h) {
  if (!h) throw Error(ErrorCode::InvalidArgument, "null root system handle");
  return h->rs;
}

void check_node(const afflim::RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank())
    throw Error(ErrorCode::IndexOutOfRange, "coweight index " + std::to_string(i) + " outside 1.." + std::to_string(rs.rank()));
}

afflim::WalkStrategy parse_strategy(const char* text) {
  if (!text || std::string_view(text) == "min" || !*text) return afflim::WalkStrategy::smallest();
  const std::string s(text);
  if (s.rfind("seeded:", 0) == 0) {
    const std::string digits = s.substr(7);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
      return afflim::WalkStrategy::seeded(std::stoull(digits));
  }
  throw Error(ErrorCode::InvalidArgument, "strategy must be 'min' or 'seeded:<n>', got '" + s + "'");
}

afflim::RatVec to_rational(const afflim::IntVec& v) { return afflim::RatVec(v.begin(), v.end()); }

/// Ranks up to 8 unless the filter names a rank.
std::vector<afflim::DynkinType> covered_types(const char* filter) {
  std::vector<afflim::DynkinType> out;
  std::optional<afflim::TypeFilter> tf;
  if (filter && *filter) tf = afflim::TypeFilter::parse(filter);
  for (const auto& t : afflim::all_types(8))
    if (!tf || tf->admits(t)) out.push_back(t);
  if (tf && tf->rank && out.empty()) out.push_back(afflim::DynkinType::make(tf->family, *tf->rank));
  return out;
}

/// "0 1 2" is finite; "0 1 (2 3 4)" is a prefix followed by a repeated period.
struct WordInput {
  afflim::Word word;
  std::optional<afflim::PeriodicWord> periodic;
};

WordInput parse_word_input(const char* text) {
  if (!text) throw Error(ErrorCode::InvalidArgument, "null word");
  const std::string s(text);
  const auto open = s.find('(');
  if (open == std::string::npos) return {afflim::parse_word(s), std::nullopt};
  const auto close = s.find(')', open);
  if (close == std::string::npos || s.find_first_not_of(" \t", close + 1) != std::string::npos)
    throw Error(ErrorCode::InvalidArgument, "periodic word must end with '(period)'");
  afflim::PeriodicWord pw{afflim::parse_word(s.substr(0, open)), afflim::parse_word(s.substr(open + 1, close - open - 1))};
  if (pw.period.empty()) throw Error(ErrorCode::InvalidArgument, "empty period");
  return {{}, pw};
}

json node_rows(const afflim::RootSystem& rs) {
  json rows = json::array();
  for (const auto& c : afflim::classification_check(rs))
    rows.push_back({{"node", c.node},
                    {"minuscule", c.minuscule},
                    {"cominuscule", c.cominuscule},
                    {"fc_walk", c.fc_walk},
                    {"fc_quotient", c.fc_quotient},
                    {"consistent", c.consistent()}});
  return rows;
}

json table1(const afflim::DynkinType& t) {
  afflim::RootSystem rs(t);
  json rows = json::array();
  for (const auto& fr : afflim::table1_fixture(rs)) {
    json row = {{"coweight", *fr.coweight}, {"word", periodic_json(fr.word)}};
    const auto w = fr.word.truncation(5);
    row["reduced"] = afflim::is_reduced(rs, w);
    if (row["reduced"].get<bool>()) {
      const auto d = afflim::translation_direction(rs, fr.word);
      row["certified"] = d.coweight_index ? json(*d.coweight_index) : json(nullptr);
    } else {
      row["certified"] = nullptr;
    }
    rows.push_back(row);
  }
  return {{"type", t.name()}, {"rows", rows}};
}

json table2(const afflim::DynkinType& t) {
  afflim::RootSystem rs(t);
  const auto h = afflim::table2_expectation(rs);
  const auto b = afflim::heavy_node_bipartite(rs);
  return {{"type", t.name()},       {"expected_exponent", h.exponent}, {"expected_node", h.node},
          {"listed_node", h.printed_node}, {"exponent", b.exponent},         {"node", b.node},
          {"graph_node", afflim::heavy_node_graph(rs)}};
}

json table3(const afflim::DynkinType& t) {
  afflim::RootSystem rs(t);
  const auto rep = afflim::table3_verify(rs);
  json rows = json::array();
  for (const auto& c : rep.rows)
    rows.push_back({{"listed", c.listed ? json(*c.listed) : json(nullptr)},
                    {"word", periodic_json(c.word)},
                    {"reduced", c.reduced},
                    {"fully_commutative", c.fully_commutative},
                    {"certified", c.certified ? json(*c.certified) : json(nullptr)},
                    {"note", c.note}});
  json doc = {{"type", t.name()},
              {"rows", rows},
              {"certified", rep.certified},
              {"fc_nodes", rep.fc_nodes},
              {"complete", rep.complete()}};
  if (t.family == afflim::Family::D) {
    const auto literal = afflim::table3_fixture(rs, afflim::DnReading::Literal).front().word;
    doc["literal_reading"] = {{"word", periodic_json(literal)},
                              {"reduced", afflim::is_reduced(rs, literal.truncation(3))}};
  }
  return doc;
}

}  // namespace

extern "C" {

const char* afflim_version(void) { return "0.1.0"; }

const char* afflim_status_name(afflim_status status) {
  if (status == AFFLIM_OK) return "OK";
  if (status > AFFLIM_OK && status < AFFLIM_ERR_UNKNOWN)
    return afflim::error_name(static_cast<ErrorCode>(static_cast<int>(status) - 1)).data();
  return "Unknown";
}

const char* afflim_last_error(void) { return last_error.c_str(); }

void afflim_string_free(char* s) { std::free(s); }

afflim_status afflim_rootsys_new(const char* type, afflim_rootsys** out) {
  if (!out || !type) {
    last_error = "InvalidArgument: null argument";
    return AFFLIM_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  try {
    *out = new afflim_rootsys{afflim::RootSystem(afflim::DynkinType::parse(type))};
    last_error.clear();
    return AFFLIM_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = std::string("Internal: ") + e.what();
    return AFFLIM_ERR_UNKNOWN;
  }
}

void afflim_rootsys_free(afflim_rootsys* rs) { delete rs; }

int afflim_rootsys_rank(const afflim_rootsys* rs) { return rs ? rs->rs.rank() : -1; }

afflim_status afflim_info_json(const afflim_rootsys* h, char** out) {
  return guarded(out, [&] {
    const auto& rs = system_of(h);
    const int n = rs.rank();
    json cartan = json::array(), form = json::array(), bonds = json::array();
    for (int i = 1; i <= n; ++i) {
      json crow = json::array(), frow = json::array();
      for (int j = 1; j <= n; ++j) {
        crow.push_back(rs.cartan(i, j));
        const auto f = rs.form(i, j);
        frow.push_back({f.numerator(), f.denominator()});
      }
      cartan.push_back(crow);
      form.push_back(frow);
    }
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (rs.bond(i, j) != 2) bonds.push_back({i, j, rs.bond(i, j)});
    json coweights = json::array();
    for (const auto& c : rs.coweights()) coweights.push_back(ratvec_json(c));
    json minu = json::array(), comin = json::array();
    for (int i = 1; i <= n; ++i) {
      if (afflim::minuscule(rs, i)) minu.push_back(i);
      if (afflim::cominuscule(rs, i)) comin.push_back(i);
    }
    return json{{"type", rs.type().name()},
                {"rank", n},
                {"cartan", cartan},
                {"form", form},
                {"positive_roots", rs.positive_roots()},
                {"highest_root", rs.highest_root()},
                {"marks", rs.marks()},
                {"coweights", coweights},
                {"k", rs.k()},
                {"bonds", bonds},
                {"minuscule", minu},
                {"cominuscule", comin}};
  });
}

afflim_status afflim_word_json(const afflim_rootsys* h, int coweight, int periods, const char* strategy, char** out) {
  return guarded(out, [&] {
    const auto& rs = system_of(h);
    check_node(rs, coweight);
    if (periods < 1) throw Error(ErrorCode::InvalidArgument, "periods must be positive");
    const auto pw = afflim::lambda_walk(rs, to_rational(afflim::scaled_coweight(rs, coweight)), parse_strategy(strategy));
    const auto d = afflim::translation_direction(rs, pw);
    return json{{"type", rs.type().name()},
                {"coweight", coweight},
                {"prefix", afflim::format_word(pw.prefix)},
                {"period", afflim::format_word(pw.period)},
                {"truncation", afflim::format_word(pw.truncation(periods))},
                {"certified", d.coweight_index ? json(*d.coweight_index) : json(nullptr)},
                {"direction", ratvec_json(d.direction)},
                {"dominant", ratvec_json(d.dominant)},
                {"power", d.power}};
  });
}

afflim_status afflim_minimal_json(const afflim_rootsys* h, int count_only, char** out) {
  return guarded(out, [&] {
    const auto& rs = system_of(h);
    const auto counts = afflim::minimal_counts(rs);
    json doc = {{"type", rs.type().name()},
                {"counts", counts},
                {"total", std::accumulate(counts.begin(), counts.end(), std::size_t{0})}};
    if (!count_only) {
      json classes = json::array();
      for (const auto& c : afflim::enumerate_minimal(rs))
        classes.push_back({{"coweight", c.coweight_index},
                           {"orbit_member", c.orbit_member},
                           {"prefix", afflim::format_word(c.word.prefix)},
                           {"period", afflim::format_word(c.word.period)}});
      doc["classes"] = classes;
    }
    return doc;
  });
}

afflim_status afflim_heavy_json(const afflim_rootsys* h, char** out) {
  return guarded(out, [&] {
    const auto& rs = system_of(h);
    if (rs.type().family == afflim::Family::A)
      throw Error(ErrorCode::UnsupportedType, "type A has no heavy node");
    const auto b = afflim::heavy_node_bipartite(rs);
    return json{{"type", rs.type().name()},
                {"graph_node", afflim::heavy_node_graph(rs)},
                {"bipartite_node", b.node},
                {"listed_node", afflim::table2_label(rs, b.node)},
                {"exponent", b.exponent},
                {"applications", b.applications},
                {"f_part", b.f_part},
                {"u_part", b.u_part},
                {"f_fixes_xi", b.f_fixes_xi},
                {"trace", b.trace}};
  });
}

afflim_status afflim_coxeter_json(const afflim_rootsys* h, const char* order, char** out) {
  return guarded(out, [&] {
    const auto& rs = system_of(h);
    std::vector<int> ord;
    if (order && *order) {
      ord = afflim::parse_word(order);
    } else {
      ord.resize(static_cast<std::size_t>(rs.rank() + 1));
      std::iota(ord.begin(), ord.end(), 0);
    }
    const auto word = afflim::coxeter_word(rs, ord);
    const auto cert = afflim::coxeter_node_certify(rs, word);
    json doc = {{"type", rs.type().name()},
                {"word", afflim::format_word(word)},
                {"node", cert.node ? json(*cert.node) : json(nullptr)},
                {"power", cert.power},
                {"translation", cert.translation},
                {"conjugator", afflim::format_word(cert.conjugator)}};
    doc["heavy_node"] = rs.type().family == afflim::Family::A ? json(nullptr) : json(afflim::heavy_node_graph(rs));
    return doc;
  });
}

afflim_status afflim_fc_json(const afflim_rootsys* h, char** out) {
  return guarded(out, [&] {
    const auto& rs = system_of(h);
    const json rows = node_rows(rs);
    return json{{"type", rs.type().name()},
                {"nodes", rows},
                {"fc_nodes", afflim::fc_nodes(afflim::classification_check(rs))},
                {"expected", afflim::expected_fc_nodes(rs)}};
  });
}

afflim_status afflim_fc_word_json(const afflim_rootsys* h, const char* word, int64_t budget, char** out) {
  return guarded(out, [&] {
    const auto& rs = system_of(h);
    const auto in = parse_word_input(word);
    // Periodic input: the rank-2 test sees enough letters to cover every
    // plane, the commutation search a few periods.
    const afflim::Word w = in.periodic ? in.periodic->truncation(std::max<std::int64_t>(
                                             afflim::kDefaultFcPeriods, in.periodic->reps_for_depth(afflim::kMinFcLetters)))
                                       : in.word;
    const afflim::Word short_w = in.periodic ? in.periodic->truncation(afflim::kDefaultFcPeriods) : in.word;
    afflim::check_letters(rs, w);
    const auto r2 = afflim::fc_by_rank2_inversions(rs, w);
    const auto bfs = afflim::fc_by_commutation_class(rs, short_w, budget > 0 ? budget : afflim::budget_from_env());
    json doc = {{"type", rs.type().name()},
                {"word", afflim::format_word(w)},
                {"rank2", {{"fully_commutative", r2.fully_commutative}, {"planes", r2.planes}, {"letters", w.size()}}},
                {"commutation",
                 {{"verdict", afflim::verdict_name(bfs.verdict)}, {"explored", bfs.explored}, {"letters", short_w.size()}}}};
    if (r2.witness) {
      json members = json::array();
      for (const auto& m : r2.witness->positive_members) members.push_back(affine_root_json(m));
      doc["rank2"]["witness"] = {{"kind", afflim::kind_name(r2.witness->kind)}, {"members", members}};
    }
    if (!bfs.witness.empty()) doc["commutation"]["witness"] = afflim::format_word(bfs.witness);
    return doc;
  });
}

afflim_status afflim_density_json(const afflim_rootsys* h, const char* word, int branch_node, int64_t budget,
                                  char** out) {
  return guarded(out, [&] {
    const auto& rs = system_of(h);
    const auto in = parse_word_input(word);
    const int v = branch_node < 0 ? afflim::default_branch_node(rs) : branch_node;
    const auto bd = afflim::branch_decomposition(rs, v);
    afflim::BlockFactorization bf;
    if (in.periodic) {
      // Expand until there are 12 interior blocks to report.
      std::int64_t reps = 2;
      bf = afflim::block_factorization(rs, bd, in.periodic->truncation(reps));
      while (bf.separators.size() < 13 && reps < 64) bf = afflim::block_factorization(rs, bd, in.periodic->truncation(++reps));
    } else {
      bf = afflim::block_factorization(rs, bd, in.word);
    }
    afflim::check_letters(rs, bf.word);
    if (!afflim::is_reduced(rs, bf.word)) throw Error(ErrorCode::NotReducedInput, "word is not reduced");
    const std::int64_t b = budget > 0 ? budget : afflim::budget_from_env();
    json branches = json::array();
    for (const auto& br : bd.branches)
      branches.push_back({{"nodes", br.nodes}, {"kind", afflim::branch_kind_name(br.kind)}, {"size", br.size}, {"labels", br.labels}});
    json blocks = json::array(), matrix = json::array();
    bool exceeded = false;
    for (std::size_t p = 1; p < bf.separators.size(); ++p) {
      json parts = json::array(), row = json::array();
      for (std::size_t k = 0; k < bd.branches.size(); ++k) {
        parts.push_back(afflim::format_word(bf.blocks[p][k]));
        const auto d = afflim::density(rs, bf, bd, k, p, b);
        if (!d.value) exceeded = true;
        row.push_back(d.value ? json(*d.value) : json(nullptr));
      }
      blocks.push_back(parts);
      matrix.push_back(row);
    }
    return json{{"type", rs.type().name()},
                {"word", afflim::format_word(bf.word)},
                {"branch_node", v},
                {"branches", branches},
                {"blocks", blocks},
                {"density", matrix},
                {"budget_exceeded", exceeded}};
  });
}

afflim_status afflim_tables_json(int table, const char* type, char** out) {
  return guarded(out, [&] {
    if (table < 1 || table > 3) throw Error(ErrorCode::InvalidArgument, "table must be 1, 2 or 3");
    json entries = json::array();
    for (const auto& t : covered_types(type)) {
      if (t.family == afflim::Family::A && table != 3) continue;
      if (table == 3 && t.family == afflim::Family::B && t.rank < 3) continue;
      if (table == 1) entries.push_back(table1(t));
      else if (table == 2) entries.push_back(table2(t));
      else entries.push_back(table3(t));
    }
    return json{{"table", table}, {"types", entries}};
  });
}

void afflim_verify_options_init(afflim_verify_options* opts) {
  if (!opts) return;
  *opts = afflim_verify_options{nullptr, 0, 0, 0, 0, 0};
}

afflim_status afflim_verify_json(const afflim_verify_options* opts, int* all_passed, char** out) {
  return guarded(out, [&] {
    afflim_verify_options o;
    afflim_verify_options_init(&o);
    if (opts) o = *opts;
    afflim::VerifyOptions vo;
    if (o.type && *o.type) vo.type = afflim::TypeFilter::parse(o.type);
    if (o.max_rank > 0) vo.max_rank = o.max_rank;
    if (o.criterion < 0 || o.criterion > afflim::kCriteria)
      throw Error(ErrorCode::InvalidArgument, "criterion must be 0..9");
    vo.criterion = o.criterion;
    vo.budget = o.budget > 0 ? o.budget : afflim::budget_from_env();
    vo.seed = o.seed;
    const auto records = afflim::run_verify(vo);
    json recs = json::array();
    for (const auto& r : records) {
      json j = {{"criterion", r.id},       {"type", r.type},     {"subject", r.subject},
                {"verdict", afflim::verdict_label(r.verdict)}, {"detail", r.detail}};
      if (o.timing) j["seconds"] = r.seconds;
      recs.push_back(j);
    }
    json summary = json::array();
    bool passed = true;
    for (const auto& s : afflim::summarize(records)) {
      json j = {{"criterion", afflim::criterion_id(s.criterion)},
                {"title", afflim::criterion_title(s.criterion)},
                {"passed", s.passed},
                {"failed", s.failed},
                {"skipped", s.skipped},
                {"verdict", afflim::verdict_label(s.verdict())}};
      if (o.timing) j["seconds"] = s.seconds;
      if (s.failed) passed = false;
      summary.push_back(j);
    }
    if (all_passed) *all_passed = passed ? 1 : 0;
    return json{{"records", recs}, {"summary", summary}, {"verdict", passed ? "PASS" : "FAIL"}};
  });
}

}  // extern "C"
