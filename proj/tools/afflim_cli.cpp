// Command-line front end over the C interface.

#include "afflim/afflim.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Call {
  afflim_status status = AFFLIM_OK;
  json doc;
};

template <class F>
Call call(F&& f) {
  char* out = nullptr;
  Call c;
  c.status = f(&out);
  if (c.status == AFFLIM_OK) {
    c.doc = json::parse(out);
    afflim_string_free(out);
  }
  return c;
}

int report_error(afflim_status s) {
  std::cerr << "afflim: " << afflim_last_error() << "\n";
  return s == AFFLIM_ERR_INVALID_ARGUMENT || s == AFFLIM_ERR_INVALID_RANK || s == AFFLIM_ERR_INDEX_OUT_OF_RANGE ||
                 s == AFFLIM_ERR_NOT_PERMUTATION || s == AFFLIM_ERR_UNSUPPORTED_TYPE
             ? kExitUsage
             : kExitFail;
}

std::string join(const json& arr, const char* sep = " ") {
  std::string out;
  for (const auto& x : arr) {
    if (!out.empty()) out += sep;
    out += x.is_string() ? x.get<std::string>() : x.dump();
  }
  return out;
}

std::string vec(const json& arr) { return "(" + join(arr, ", ") + ")"; }

std::string opt(const json& v) { return v.is_null() ? "-" : v.dump(); }

std::string periodic(const json& w) {
  const std::string prefix = w["prefix"];
  return (prefix.empty() ? "" : prefix + " ") + "(" + w["period"].get<std::string>() + ")^inf";
}

void text_info(const json& d) {
  std::cout << d["type"].get<std::string>() << ", rank " << d["rank"] << "\n";
  std::cout << "Cartan matrix:\n";
  for (const auto& row : d["cartan"]) std::cout << "  " << join(row) << "\n";
  std::cout << "positive roots: " << d["positive_roots"].size() << "\n";
  std::cout << "highest root: " << vec(d["highest_root"]) << "\n";
  std::cout << "k: " << join(d["k"]) << "\n";
  for (std::size_t i = 0; i < d["coweights"].size(); ++i)
    std::cout << "coweight " << i + 1 << ": " << vec(d["coweights"][i]) << "\n";
  std::cout << "affine diagram edges:";
  for (const auto& b : d["bonds"]) {
    std::cout << " " << b[0] << "-" << b[1];
    if (b[2] != 3) std::cout << "[" << (b[2] == 0 ? std::string("inf") : b[2].dump()) << "]";
  }
  std::cout << "\nminuscule: " << join(d["minuscule"]) << "\ncominuscule: " << join(d["cominuscule"]) << "\n";
}

void text_word(const json& d) {
  std::cout << d["type"].get<std::string>() << " coweight " << d["coweight"] << "\n";
  std::cout << "prefix: " << d["prefix"].get<std::string>() << "\nperiod: " << d["period"].get<std::string>() << "\n";
  std::cout << "truncation: " << d["truncation"].get<std::string>() << "\n";
  std::cout << "direction: " << vec(d["direction"]) << "  dominant: " << vec(d["dominant"]) << "  power " << d["power"]
            << "\ncertified coweight: " << opt(d["certified"]) << "\n";
}

void text_minimal(const json& d) {
  std::cout << d["type"].get<std::string>() << " minimal classes per coweight: " << join(d["counts"]) << " (total "
            << d["total"] << ")\n";
  if (!d.contains("classes")) return;
  for (const auto& c : d["classes"])
    std::cout << "  " << c["coweight"] << "  " << vec(c["orbit_member"]) << "  "
              << periodic(json{{"prefix", c["prefix"]}, {"period", c["period"]}}) << "\n";
}

void text_heavy(const json& d) {
  std::cout << d["type"].get<std::string>() << " heavy node " << d["graph_node"] << " (bipartite walk: node "
            << d["bipartite_node"] << ", exponent " << d["exponent"] << ", " << d["applications"]
            << " reflections)\n";
  std::cout << "parts: f = {" << join(d["f_part"]) << "}, u = {" << join(d["u_part"]) << "}"
            << (d["f_fixes_xi"].get<bool>() ? ", f fixes the highest root" : "") << "\n";
  for (const auto& r : d["trace"]) std::cout << "  " << vec(r) << "\n";
}

void text_coxeter(const json& d) {
  std::cout << d["type"].get<std::string>() << " Coxeter word " << d["word"].get<std::string>() << "\n";
  std::cout << "node: " << opt(d["node"]) << "  heavy node: " << opt(d["heavy_node"]) << "\n";
  std::cout << "power " << d["power"] << ", translation " << vec(d["translation"]) << ", conjugator "
            << (d["conjugator"].get<std::string>().empty() ? "e" : d["conjugator"].get<std::string>()) << "\n";
}

void text_fc(const json& d) {
  std::cout << d["type"].get<std::string>() << "\n";
  std::cout << "node  minuscule  cominuscule  walk  quotient\n";
  auto yn = [](const json& b) { return b.get<bool>() ? "yes" : "no"; };
  for (const auto& r : d["nodes"])
    std::cout << std::setw(4) << r["node"].get<int>() << std::setw(11) << yn(r["minuscule"]) << std::setw(13)
              << yn(r["cominuscule"]) << std::setw(6) << yn(r["fc_walk"]) << std::setw(10) << yn(r["fc_quotient"])
              << (r["consistent"].get<bool>() ? "" : "  inconsistent") << "\n";
  std::cout << "fully commutative nodes: {" << join(d["fc_nodes"]) << "}, unfilled nodes: {" << join(d["expected"])
            << "}\n";
}

void text_fc_word(const json& d) {
  std::cout << d["type"].get<std::string>() << " " << d["word"].get<std::string>() << "\n";
  std::cout << "rank-2 test: " << (d["rank2"]["fully_commutative"].get<bool>() ? "FC" : "NotFC") << " ("
            << d["rank2"]["planes"] << " planes, " << d["rank2"]["letters"] << " letters)";
  if (d["rank2"].contains("witness")) std::cout << ", " << d["rank2"]["witness"]["kind"].get<std::string>() << " plane";
  std::cout << "\ncommutation class: " << d["commutation"]["verdict"].get<std::string>() << " ("
            << d["commutation"]["explored"] << " words, " << d["commutation"]["letters"] << " letters)";
  if (d["commutation"].contains("witness")) std::cout << ", witness " << d["commutation"]["witness"].get<std::string>();
  std::cout << "\n";
}

void text_density(const json& d) {
  std::cout << d["type"].get<std::string>() << " branch node " << d["branch_node"] << "\n";
  for (std::size_t b = 0; b < d["branches"].size(); ++b)
    std::cout << "branch " << b << ": {" << join(d["branches"][b]["nodes"]) << "} type "
              << d["branches"][b]["kind"].get<std::string>() << d["branches"][b]["size"] << "\n";
  for (std::size_t p = 0; p < d["density"].size(); ++p) {
    std::cout << "block " << std::setw(2) << p + 1 << ":";
    for (std::size_t b = 0; b < d["density"][p].size(); ++b) {
      const std::string part = d["blocks"][p][b];
      std::cout << "  [" << part << "]=" << opt(d["density"][p][b]);
    }
    std::cout << "\n";
  }
  if (d["budget_exceeded"].get<bool>()) std::cout << "search budget exceeded for some blocks\n";
}

void text_tables(const json& d) {
  const int table = d["table"];
  for (const auto& t : d["types"]) {
    const std::string type = t["type"];
    if (table == 2) {
      std::cout << type << ": exponent " << t["exponent"] << " (listed " << t["expected_exponent"] << "), node "
                << t["node"] << " (listed " << t["listed_node"] << ", graph " << t["graph_node"] << ")\n";
      continue;
    }
    std::cout << type << "\n";
    for (const auto& r : t["rows"]) {
      if (table == 1) {
        std::cout << "  " << r["coweight"] << ": " << periodic(r["word"]) << "  reduced "
                  << (r["reduced"].get<bool>() ? "yes" : "no") << ", certifies " << opt(r["certified"]) << "\n";
      } else {
        std::cout << "  " << opt(r["listed"]) << ": " << periodic(r["word"]) << "  reduced "
                  << (r["reduced"].get<bool>() ? "yes" : "no") << ", FC "
                  << (r["fully_commutative"].get<bool>() ? "yes" : "no") << ", certifies " << opt(r["certified"]);
        if (!r["note"].get<std::string>().empty()) std::cout << "  (" << r["note"].get<std::string>() << ")";
        std::cout << "\n";
      }
    }
    if (table == 3) {
      std::cout << "  certified {" << join(t["certified"]) << "}, fully commutative nodes {" << join(t["fc_nodes"])
                << "}" << (t["complete"].get<bool>() ? "" : "  incomplete") << "\n";
      if (t.contains("literal_reading"))
        std::cout << "  literal reading " << periodic(t["literal_reading"]["word"]) << " is "
                  << (t["literal_reading"]["reduced"].get<bool>() ? "reduced" : "not reduced") << "\n";
    }
  }
}

void text_verify(const json& d, bool timing) {
  for (const auto& r : d["records"]) {
    std::cout << r["criterion"].get<std::string>() << " " << std::left << std::setw(5) << r["type"].get<std::string>()
              << std::right << " " << r["verdict"].get<std::string>() << "  " << r["subject"].get<std::string>();
    if (!r["detail"].get<std::string>().empty()) std::cout << ": " << r["detail"].get<std::string>();
    if (timing) std::cout << " [" << std::fixed << std::setprecision(3) << r["seconds"].get<double>() << "s]";
    std::cout << "\n";
  }
  std::cout << "\n";
  for (const auto& s : d["summary"]) {
    std::cout << s["criterion"].get<std::string>() << " " << s["verdict"].get<std::string>() << "  "
              << s["title"].get<std::string>() << " (" << s["passed"] << " passed, " << s["failed"] << " failed, "
              << s["skipped"] << " skipped";
    if (timing) std::cout << ", " << std::fixed << std::setprecision(2) << s["seconds"].get<double>() << "s";
    std::cout << ")\n";
  }
  std::cout << "overall: " << d["verdict"].get<std::string>() << "\n";
}

struct RootsysHandle {
  afflim_rootsys* ptr = nullptr;
  ~RootsysHandle() { afflim_rootsys_free(ptr); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine Weyl group limit words, heavy nodes and fully commutative elements"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  std::uint64_t seed = 0;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed, "Seed for randomized checks and seeded walks");

  std::string type;
  auto add_type = [&](CLI::App* sub) { sub->add_option("type", type, "Root system type, e.g. B4 or E7")->required(); };

  auto* info = app.add_subcommand("info", "Root system data");
  add_type(info);

  auto* word = app.add_subcommand("word", "Infinite reduced word of a coweight");
  add_type(word);
  int coweight = 0, periods = 3;
  std::string strategy = "min";
  word->add_option("--coweight", coweight, "Coweight index")->required();
  word->add_option("--periods", periods, "Periods shown in the truncation")->check(CLI::PositiveNumber);
  word->add_option("--strategy", strategy, "min or seeded:<n>");

  auto* minimal = app.add_subcommand("minimal", "Minimal translation classes");
  add_type(minimal);
  bool count_only = false;
  minimal->add_flag("--count-only", count_only, "Only the counts");

  auto* heavy = app.add_subcommand("heavy", "Heavy node of the finite diagram");
  add_type(heavy);

  auto* coxeter = app.add_subcommand("coxeter", "Node of a Coxeter element");
  add_type(coxeter);
  std::string order;
  coxeter->add_option("--order", order, "Permutation of 0..n, e.g. \"2 0 1\"");

  auto* fc = app.add_subcommand("fc", "Fully commutative nodes, or one word with --word");
  add_type(fc);
  std::string fc_word;
  fc->add_option("--word", fc_word, "Finite word, or prefix followed by (period)");

  auto* density = app.add_subcommand("density", "Branch densities of a word");
  add_type(density);
  std::string density_word;
  int branch = -1;
  density->add_option("--word", density_word, "Finite word, or prefix followed by (period)")->required();
  density->add_option("--branch", branch, "Branch node (default: a trivalent node)");

  std::int64_t budget = 0;
  fc->add_option("--budget", budget, "Commutation search budget");
  density->add_option("--budget", budget, "Commutation search budget");

  auto* tables = app.add_subcommand("tables", "Reference tables checked against the library");
  int table = 0;
  std::string table_type;
  tables->add_option("table", table, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
  tables->add_option("--type", table_type, "Family (B) or type (B5)");

  auto* verify = app.add_subcommand("verify", "Run the verification checks");
  bool all = false, timing = false;
  std::string verify_type;
  int max_rank = 0, criterion = 0;
  verify->add_flag("--all", all, "Every type (default)");
  verify->add_option("--type", verify_type, "Family (B) or type (B5)");
  verify->add_option("--max-rank", max_rank, "Cap on the rank of every check")->check(CLI::PositiveNumber);
  verify->add_option("--criterion", criterion, "Run a single check 1..9")->check(CLI::Range(1, 9));
  verify->add_option("--budget", budget, "Commutation search budget")->check(CLI::PositiveNumber);
  verify->add_flag("--timing", timing, "Report running times");
  verify->get_option("--all")->excludes("--type");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  if (const char* env = std::getenv("AFFLIM_BUDGET"); env && budget == 0) budget = std::strtoll(env, nullptr, 10);
  if (budget < 0) budget = 0;

  const bool json_out = format == "json";
  Call result;
  std::function<void(const json&)> render;
  bool verify_passed = true;

  if (tables->parsed()) {
    result = call([&](char** out) { return afflim_tables_json(table, table_type.empty() ? nullptr : table_type.c_str(), out); });
    render = text_tables;
  } else if (verify->parsed()) {
    afflim_verify_options o;
    afflim_verify_options_init(&o);
    o.type = verify_type.empty() ? nullptr : verify_type.c_str();
    o.max_rank = max_rank;
    o.criterion = criterion;
    o.budget = budget;
    o.seed = seed;
    o.timing = timing ? 1 : 0;
    int passed = 0;
    result = call([&](char** out) { return afflim_verify_json(&o, &passed, out); });
    verify_passed = passed != 0;
    render = [&](const json& d) { text_verify(d, timing); };
  } else {
    RootsysHandle rs;
    if (const auto s = afflim_rootsys_new(type.c_str(), &rs.ptr); s != AFFLIM_OK) return report_error(s);
    const std::string seeded = "seeded:" + std::to_string(seed);
    if (info->parsed()) {
      result = call([&](char** out) { return afflim_info_json(rs.ptr, out); });
      render = text_info;
    } else if (word->parsed()) {
      const char* strat = strategy == "seeded" ? seeded.c_str() : strategy.c_str();
      result = call([&](char** out) { return afflim_word_json(rs.ptr, coweight, periods, strat, out); });
      render = text_word;
    } else if (minimal->parsed()) {
      result = call([&](char** out) { return afflim_minimal_json(rs.ptr, count_only ? 1 : 0, out); });
      render = text_minimal;
    } else if (heavy->parsed()) {
      result = call([&](char** out) { return afflim_heavy_json(rs.ptr, out); });
      render = text_heavy;
    } else if (coxeter->parsed()) {
      result = call([&](char** out) { return afflim_coxeter_json(rs.ptr, order.empty() ? nullptr : order.c_str(), out); });
      render = text_coxeter;
    } else if (fc->parsed()) {
      if (fc_word.empty()) {
        result = call([&](char** out) { return afflim_fc_json(rs.ptr, out); });
        render = text_fc;
      } else {
        result = call([&](char** out) { return afflim_fc_word_json(rs.ptr, fc_word.c_str(), budget, out); });
        render = text_fc_word;
      }
    } else if (density->parsed()) {
      result = call([&](char** out) {
        return afflim_density_json(rs.ptr, density_word.c_str(), branch, budget, out);
      });
      render = text_density;
    }
  }

  if (result.status != AFFLIM_OK) return report_error(result.status);
  if (json_out)
    std::cout << result.doc.dump(2) << "\n";
  else
    render(result.doc);
  return verify_passed ? kExitOk : kExitFail;
}
