#include "qaffine/report.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include <omp.h>

#include "qaffine/errors.hpp"

namespace qaffine {

namespace {

using Clock = std::chrono::steady_clock;

double msSince(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

CaseResult runOne(const Case& c) {
  CaseResult r;
  r.id = c.id;
  r.informational = c.informational;
  const auto t0 = Clock::now();
  try {
    CaseOutcome o = c.body();
    r.pass = o.pass;
    r.residual = std::move(o.residual);
  } catch (const std::exception& e) {
    r.pass = false;
    r.residual = std::string("exception: ") + e.what();
  }
  r.millis = msSince(t0);
  return r;
}

}  // namespace

CaseOutcome CaseOutcome::check(bool cond, const std::function<std::string()>& why) {
  if (cond) return ok();
  return fail(why());
}

bool Report::pass() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.pass && !c.informational; }));
}

void Report::sortCases() {
  std::stable_sort(cases.begin(), cases.end(), [](const CaseResult& x, const CaseResult& y) { return x.id < y.id; });
}

void Report::append(const Report& other) {
  cases.insert(cases.end(), other.cases.begin(), other.cases.end());
  millis += other.millis;
}

std::string Report::toText(bool verbose) const {
  std::ostringstream out;
  std::size_t counted = 0;
  for (const auto& c : cases) counted += c.informational ? 0 : 1;
  out << suite << ": " << (pass() ? "pass" : "FAIL") << " (" << counted - failures() << "/" << counted
      << " cases, " << std::fixed << std::setprecision(1) << millis << " ms)\n";
  for (const auto& c : cases) {
    if (!verbose && c.pass) continue;
    out << "  " << (c.pass ? "pass" : "FAIL") << (c.informational ? " [info]" : "") << "  " << c.id;
    if (c.residual) out << "\n      residual: " << *c.residual;
    out << "\n";
  }
  return out.str();
}

std::string Report::toJson(int indent) const {
  nlohmann::json j;
  j["schema"] = 1;
  j["suite"] = suite;
  j["pass"] = pass();
  j["millis"] = millis;
  j["cases"] = nlohmann::json::array();
  for (const auto& c : cases) {
    nlohmann::json jc;
    jc["id"] = c.id;
    jc["status"] = c.pass ? "pass" : "fail";
    jc["residual"] = c.residual ? nlohmann::json(*c.residual) : nlohmann::json(nullptr);
    jc["millis"] = c.millis;
    if (c.informational) jc["informational"] = true;
    j["cases"].push_back(jc);
  }
  return j.dump(indent);
}

Report Report::fromJson(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, "invalid report JSON");
  }
  if (j.value("schema", 0) != 1) throw PreconditionError("unsupported report schema");
  Report r;
  r.suite = j.at("suite").get<std::string>();
  r.millis = j.value("millis", 0.0);
  for (const auto& jc : j.at("cases")) {
    CaseResult c;
    c.id = jc.at("id").get<std::string>();
    c.pass = jc.at("status").get<std::string>() == "pass";
    if (!jc.at("residual").is_null()) c.residual = jc.at("residual").get<std::string>();
    c.millis = jc.value("millis", 0.0);
    c.informational = jc.value("informational", false);
    r.cases.push_back(std::move(c));
  }
  return r;
}

Report runSerial(const std::string& suite, const std::vector<Case>& cases) {
  Report r;
  r.suite = suite;
  const auto t0 = Clock::now();
  for (const auto& c : cases) r.cases.push_back(runOne(c));
  r.millis = msSince(t0);
  r.sortCases();
  return r;
}

Report runParallel(const std::string& suite, const std::vector<Case>& cases) {
  Report r;
  r.suite = suite;
  r.cases.resize(cases.size());
  const auto t0 = Clock::now();
  const long n = static_cast<long>(cases.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) r.cases[static_cast<std::size_t>(i)] = runOne(cases[static_cast<std::size_t>(i)]);
  r.millis = msSince(t0);
  r.sortCases();
  return r;
}

}  // namespace qaffine
