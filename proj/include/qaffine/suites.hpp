#pragma once

// The acceptance suites AC1..AC9 as lists of independent cases.

#include <functional>
#include <string>
#include <vector>

#include "qaffine/report.hpp"

namespace qaffine {

struct Suite {
  std::string id;     // "AC1"
  std::string area;   // module name used by `verify`
  std::string title;
  double limitSeconds = 0;
  std::function<std::vector<Case>()> build;
};

const std::vector<Suite>& acceptanceSuites();
/// Suites belonging to a module name, or all of them for "all".
/// Throws PreconditionError on an unknown name.
std::vector<Suite> suitesFor(const std::string& area);

enum class RunMode { Parallel, Serial };
Report runSuite(const Suite& suite, RunMode mode = RunMode::Parallel);

/// Sweep bounds for the sphere basis X(m) B0^n.
struct SphereSweep {
  int mMax = 3;
  int nMax = 3;
};
std::vector<Case> relRvfCases(const SphereSweep& sweep);

}  // namespace qaffine
