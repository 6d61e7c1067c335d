#pragma once

// Verification reports: one entry per case with its residual and timing.

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qaffine {

struct CaseResult {
  std::string id;
  bool pass = false;
  /// Printed residual (or error text) of a failing case.
  std::optional<std::string> residual;
  /// Informational cases are reported but do not affect the verdict.
  bool informational = false;
  double millis = 0;
};

struct Report {
  std::string suite;
  std::vector<CaseResult> cases;
  double millis = 0;

  bool pass() const;
  std::size_t failures() const;
  void sortCases();
  void append(const Report& other);

  std::string toText(bool verbose = false) const;
  std::string toJson(int indent = 2) const;
  static Report fromJson(const std::string& text);
};

/// Outcome of a single case body: empty residual means pass.
struct CaseOutcome {
  bool pass = true;
  std::optional<std::string> residual;

  static CaseOutcome ok() { return {}; }
  static CaseOutcome fail(std::string why) { return {false, std::move(why)}; }
  static CaseOutcome check(bool cond, const std::function<std::string()>& why);
};

struct Case {
  std::string id;
  std::function<CaseOutcome()> body;
  bool informational = false;
};

/// Runs every case; exceptions become failures carrying the message.
/// The parallel runner distributes cases over OpenMP threads; both return
/// cases sorted by id.
Report runSerial(const std::string& suite, const std::vector<Case>& cases);
Report runParallel(const std::string& suite, const std::vector<Case>& cases);

}  // namespace qaffine
