// Acceptance report: one line per numbered check, failing records indented
// on stderr.  Exits 1 when any check fails.

#include "afflim/verify.hpp"

#include <chrono>
#include <cstdio>
#include <string>

int main() {
  using namespace afflim;
  // Wall-clock limit per check, seconds.
  constexpr double limits[kCriteria + 1] = {0, 5, 60, 120, 120, 300, 120, 300, 60, 120};
  bool any_failed = false;
  for (int c = 1; c <= kCriteria; ++c) {
    VerifyOptions opts;
    opts.criterion = c;
    const auto start = std::chrono::steady_clock::now();
    const auto records = run_criterion(c, opts);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const auto summary = summarize(records);
    CriterionSummary s{c};
    if (!summary.empty()) s = summary.front();
    Verdict v = s.verdict();
    const bool slow = seconds > limits[c];
    if (slow) v = Verdict::Fail;
    if (v == Verdict::Fail) any_failed = true;
    std::printf("%s %s  %s (%zu passed, %zu failed, %zu skipped; %.2fs of %.0fs%s)\n", criterion_id(c), verdict_label(v),
                criterion_title(c), s.passed, s.failed, s.skipped, seconds, limits[c], slow ? ", too slow" : "");
    std::fflush(stdout);
    for (const auto& r : records)
      if (r.verdict == Verdict::Fail)
        std::fprintf(stderr, "    %s %s: %s\n", r.type.c_str(), r.subject.c_str(), r.detail.c_str());
  }
  return any_failed ? 1 : 0;
}
