// One line per acceptance criterion; a criterion passes when every case
// passes and the suite finishes inside its time limit.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "qaffine/suites.hpp"

using namespace qaffine;

int main(int argc, char** argv) {
  RunMode mode = RunMode::Parallel;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--serial") == 0) mode = RunMode::Serial;
    if (std::strcmp(argv[i], "-v") == 0) verbose = true;
  }
  int failed = 0;
  for (const Suite& suite : acceptanceSuites()) {
    const auto t0 = std::chrono::steady_clock::now();
    const Report report = runSuite(suite, mode);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool inTime = secs < suite.limitSeconds;
    const bool ok = report.pass() && inTime;
    std::size_t counted = 0;
    for (const auto& c : report.cases) counted += c.informational ? 0 : 1;
    std::printf("%s %s  %s  (%zu/%zu cases, %.2f s, limit %.0f s%s)\n", suite.id.c_str(), ok ? "PASS" : "FAIL",
                suite.title.c_str(), counted - report.failures(), counted, secs, suite.limitSeconds,
                inTime ? "" : ", time limit exceeded");
    if (!ok) ++failed;
    int shown = 0;
    for (const auto& c : report.cases) {
      if (c.pass && !(verbose && c.informational)) continue;
      if (!verbose && shown == 5) {
        std::printf("    ...\n");
        break;
      }
      std::printf("    %s%s %s: %s\n", c.pass ? "pass" : "fail", c.informational ? " [info]" : "", c.id.c_str(),
                  c.residual ? c.residual->substr(0, 160).c_str() : "");
      ++shown;
    }
  }
  std::printf("%d of %zu criteria failed\n", failed, acceptanceSuites().size());
  return failed == 0 ? 0 : 1;
}
