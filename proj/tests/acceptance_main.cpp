// Acceptance runner: one line per criterion, exit 0 only when all pass.
// FRAME_LAB_SEED overrides the default seed.

#include <algorithm>
#include <cstdio>
#include <cstdlib>

#include "framelab/acceptance.hpp"

int main() {
  framelab::AcceptanceOptions options;
  if (const char* env = std::getenv("FRAME_LAB_SEED")) {
    char* end = nullptr;
    const unsigned long long seed = std::strtoull(env, &end, 10);
    if (end && *end == '\0') options.seed = seed;
  }

  const framelab::AcceptanceReport report = framelab::run_acceptance(options);
  for (const auto& c : report.criteria) {
    std::printf("[%s] criterion %d: %s (%.2f s) %s\n", c.pass ? "PASS" : "FAIL",
                c.id, c.name.c_str(), c.seconds, c.detail.c_str());
  }
  std::printf("%s: %zu/%zu criteria passed\n",
              report.pass ? "ACCEPTED" : "REJECTED",
              report.criteria.size() -
                  static_cast<std::size_t>(
                      std::count_if(report.criteria.begin(), report.criteria.end(),
                                    [](const auto& c) { return !c.pass; })),
              report.criteria.size());
  return report.pass ? 0 : 1;
}
