// qaffine: evaluate actions and differentials, build Levi-Civita connections
// and run the verification suites.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "qaffine/errors.hpp"
#include "qaffine/expr.hpp"
#include "qaffine/podles.hpp"
#include "qaffine/suites.hpp"

using namespace qaffine;
using nlohmann::json;

namespace {

int emitReports(const std::vector<Report>& reports, bool asJson) {
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.pass();
  if (asJson) {
    json out;
    out["schema"] = 1;
    out["pass"] = ok;
    out["suites"] = json::array();
    for (const auto& r : reports) out["suites"].push_back(json::parse(r.toJson()));
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : reports) std::cout << r.toText();
  }
  return ok ? 0 : 1;
}

json readJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte, path + ": " + e.what());
  }
}

AlgMatrix readMatrix(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw PreconditionError(std::string("missing matrix '") + key + "'");
  AlgMatrix m;
  for (const auto& row : j[key]) {
    std::vector<AlgebraElement> r;
    for (const auto& e : row) r.push_back(parseAlgebra(e.is_string() ? e.get<std::string>() : e.dump()));
    m.push_back(std::move(r));
  }
  return m;
}

json matrixJson(const AlgMatrix& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& e : row) r.push_back(e.toString());
    out.push_back(r);
  }
  return out;
}

void requireSchema(const json& j) {
  if (j.value("schema", 0) != 1) throw PreconditionError("expected \"schema\": 1");
}

int runLc(const std::string& metricPath, const std::string& paramsPath, bool asJson) {
  const json mj = readJsonFile(metricPath);
  requireSchema(mj);
  const HermitianForm h(readMatrix(mj, "h"), readMatrix(mj, "hinv"));
  LcFreeParams fp;
  if (!paramsPath.empty()) {
    const json pj = readJsonFile(paramsPath);
    requireSchema(pj);
    auto field = [&pj](const char* key, AlgebraElement& out) {
      if (pj.contains(key)) out = parseAlgebra(pj[key].get<std::string>());
    };
    field("gammaPM", fp.gammaPM);
    field("gammaMP", fp.gammaMP);
    field("gammaZZ", fp.gammaZZ);
    field("rhoPM", fp.rhoPM);
    field("rhoMM", fp.rhoMM);
    field("rhoZZ", fp.rhoZZ);
  }
  const Connection conn = lcSolve(h, fp);
  const bool torsionFree = checkTorsionFree(conn).ok;
  const bool compatible = checkCompatBasis(conn, h).ok;
  const bool ok = torsionFree && compatible;
  if (asJson) {
    json out;
    out["schema"] = 1;
    out["gamma"] = {{"+", matrixJson(conn[Tangent::Plus])},
                    {"-", matrixJson(conn[Tangent::Minus])},
                    {"z", matrixJson(conn[Tangent::Z])}};
    out["torsionFree"] = torsionFree;
    out["compatible"] = compatible;
    out["pass"] = ok;
    std::cout << out.dump(2) << "\n";
  } else {
    for (Tangent t : kTangents) {
      const AlgMatrix& g = conn[t];
      for (std::size_t j = 0; j < g.size(); ++j) {
        for (std::size_t i = 0; i < g.size(); ++i) {
          if (!g[j][i].isZero()) std::cout << "Gamma^" << j << "_{" << name(t) << " " << i << "} = " << g[j][i].toString() << "\n";
        }
      }
    }
    std::cout << "torsion free: " << (torsionFree ? "yes" : "no") << "\ncompatible: " << (compatible ? "yes" : "no")
              << "\n" << (ok ? "pass" : "FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

int runProjector(int n, bool asJson) {
  const Projector p(n);
  const bool ok = p.idempotent() && p.selfAdjoint() && p.entriesInvariant() && p.weightRule();
  if (!asJson) {
    std::cout << p.toString() << (ok ? "pass" : "FAIL") << "\n";
    return ok ? 0 : 1;
  }
  json entries = json::array();
  for (std::size_t mu = 0; mu < p.size(); ++mu) {
    json row = json::array();
    for (std::size_t nu = 0; nu < p.size(); ++nu) {
      const RadicalScalar k = p.coefficient(mu, nu);
      if (k.value()) {
        row.push_back((*k.value() * p.words()[mu][nu]).toString());
      } else {
        row.push_back(k.toString() + " * (" + p.words()[mu][nu].toString() + ")");
      }
    }
    entries.push_back(row);
  }
  json weights = json::array();
  for (const auto& w : p.weights()) weights.push_back(w.toString());
  json out;
  out["schema"] = 1;
  out["n"] = n;
  out["entries"] = entries;
  out["weights"] = weights;
  out["words"] = matrixJson(p.words());
  out["pass"] = ok;
  std::cout << out.dump(2) << "\n";
  return ok ? 0 : 1;
}

Value evaluateText(const std::string& text) { return evaluate(*parseExpr(text)); }

void printValue(const std::string& result, bool asJson) {
  if (asJson) {
    std::cout << json{{"schema", 1}, {"result", result}}.dump(2) << "\n";
  } else {
    std::cout << result << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symbolic checks on the quantum 3-sphere and the Podles sphere"};
  app.require_subcommand(1);
  bool asJson = false;
  bool serial = false;
  app.add_flag("--json", asJson, "Machine-readable output");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::string area = "all";
  verify->add_option("suite", area, "all|algebra|hopf|calculus|connection|podles|framework or AC1..AC9")
      ->check(CLI::IsMember({"all", "algebra", "hopf", "calculus", "connection", "podles", "framework", "AC1", "AC2",
                             "AC3", "AC4", "AC5", "AC6", "AC7", "AC8", "AC9"}));
  verify->add_flag("--serial", serial, "Run cases on one thread");
  verify->add_flag("--json", asJson, "Machine-readable output");

  auto* actCmd = app.add_subcommand("act", "Apply an action or a twisted derivation");
  std::string sideName = "l", op, text;
  actCmd->add_option("--side", sideName, "l (left, h |> f) or r (right, f <| h)")->check(CLI::IsMember({"l", "r"}));
  actCmd->add_option("--op", op, "E|F|K|Kinv|X+|X-|Xz")
      ->required()
      ->check(CLI::IsMember({"E", "F", "K", "Kinv", "X+", "X-", "Xz"}));
  actCmd->add_option("--expr", text, "Element of S^3_q")->required();
  actCmd->add_flag("--json", asJson, "Machine-readable output");

  auto* dcmd = app.add_subcommand("d", "Differential of an element");
  dcmd->add_option("--expr", text, "Element of S^3_q")->required();
  dcmd->add_flag("--json", asJson, "Machine-readable output");

  auto* eval = app.add_subcommand("eval", "Normalize an expression");
  eval->add_option("--expr", text, "Element or one-form")->required();
  eval->add_flag("--json", asJson, "Machine-readable output");

  auto* lc = app.add_subcommand("lc", "Levi-Civita connection of a metric file");
  std::string metricPath, paramsPath;
  lc->add_option("--metric", metricPath, "{\"schema\":1, \"h\": [[...]], \"hinv\": [[...]]}")->required();
  lc->add_option("--params", paramsPath, "Free parameters {\"schema\":1, \"gammaPM\": expr, ...}");
  lc->add_flag("--json", asJson, "Machine-readable output");

  auto* podles = app.add_subcommand("podles", "Podles sphere utilities");
  podles->require_subcommand(1);
  auto* projector = podles->add_subcommand("projector", "Projector p_n and its checks");
  int n = 1;
  projector->add_option("-n", n, "Degree")->required()->check(CLI::Range(-12, 12));
  projector->add_flag("--json", asJson, "Machine-readable output");
  auto* relrvf = podles->add_subcommand("verify-relrvf", "Relation between the right vector fields on X(m) B0^n");
  SphereSweep sweep;
  relrvf->add_option("--mmax", sweep.mMax, "Bound on |m|")->check(CLI::Range(0, 8));
  relrvf->add_option("--nmax", sweep.nMax, "Bound on n")->check(CLI::Range(0, 8));
  relrvf->add_flag("--json", asJson, "Machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      std::vector<Report> reports;
      for (const Suite& s : suitesFor(area)) reports.push_back(runSuite(s, serial ? RunMode::Serial : RunMode::Parallel));
      return emitReports(reports, asJson);
    }
    if (actCmd->parsed()) {
      const Side side = sideName == "l" ? Side::Left : Side::Right;
      const AlgebraElement f = parseAlgebra(text);
      AlgebraElement r;
      if (op == "X+") r = X(Tangent::Plus, f, side);
      else if (op == "X-") r = X(Tangent::Minus, f, side);
      else if (op == "Xz") r = X(Tangent::Z, f, side);
      else if (op == "E") r = act(side, HopfGen::E, f);
      else if (op == "F") r = act(side, HopfGen::F, f);
      else if (op == "K") r = act(side, HopfGen::K, f);
      else r = act(side, HopfGen::Kinv, f);
      printValue(r.toString(), asJson);
      return 0;
    }
    if (dcmd->parsed()) {
      printValue(d(parseAlgebra(text)).toString(), asJson);
      return 0;
    }
    if (eval->parsed()) {
      printValue(toString(evaluateText(text)), asJson);
      return 0;
    }
    if (lc->parsed()) return runLc(metricPath, paramsPath, asJson);
    if (projector->parsed()) return runProjector(n, asJson);
    if (relrvf->parsed()) {
      Report r = runParallel("rel-rvf", relRvfCases(sweep));
      return emitReports({r}, asJson);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
