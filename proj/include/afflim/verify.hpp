#pragma once

// The verification harness: nine numbered checks, each producing one
// record per type (or per table row) it covers.

#include "afflim/rootsys.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace afflim {

enum class Verdict { Pass, Fail, Skipped };
const char* verdict_label(Verdict v);

struct CheckRecord {
  int criterion = 0;
  std::string id;
  std::string type;
  std::string subject;
  Verdict verdict = Verdict::Pass;
  std::string detail;
  double seconds = 0;
};

struct TypeFilter {
  Family family = Family::A;
  /// Absent: every rank of the family.
  std::optional<int> rank;

  /// "A", "e7", "B5"; throws InvalidArgument.
  static TypeFilter parse(const std::string& text);
  bool admits(const DynkinType& t) const;
};

struct VerifyOptions {
  std::optional<TypeFilter> type;
  /// Caps the rank range of every check; absent keeps each check's own range.
  std::optional<int> max_rank;
  std::int64_t budget = 100'000;
  std::uint64_t seed = 0;
  /// 1..9, or 0 for all.
  int criterion = 0;
};

inline constexpr int kCriteria = 9;
const char* criterion_id(int c);
const char* criterion_title(int c);

std::vector<CheckRecord> run_criterion(int c, const VerifyOptions& opts);
/// All selected checks, sorted by criterion, type, subject.
std::vector<CheckRecord> run_verify(const VerifyOptions& opts);

struct CriterionSummary {
  int criterion = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  double seconds = 0;

  /// Fail if anything failed, Skipped if anything was skipped or nothing ran.
  Verdict verdict() const;
};

std::vector<CriterionSummary> summarize(const std::vector<CheckRecord>& records);

}  // namespace afflim
