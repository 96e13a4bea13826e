// Command-line front end: validate, inspect, analyze and compare conflict
// models.
//
// Exit codes: 0 success, 1 parse or validation error, 2 usage error,
// 3 oracle discrepancy.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gmcr/cases.hpp"
#include "gmcr/error.hpp"
#include "gmcr/model_file.hpp"
#include "gmcr/oracle.hpp"
#include "gmcr/reachability.hpp"
#include "gmcr/report_format.hpp"
#include "gmcr/stability.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;
constexpr int kDiscrepancy = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

gmcr::ConflictModel load(const std::string& path, const std::string& policy = {}) {
  auto model = gmcr::parseModel(readFile(path));
  if (!policy.empty()) model.policy.kind = *gmcr::parsePolicyKind(policy);
  return model;
}

gmcr::ReportFormat format(const std::string& name) {
  return *gmcr::parseReportFormat(name);
}

std::optional<gmcr::DmId> optionalDm(int dm) {
  return dm > 0 ? std::optional<gmcr::DmId>(dm) : std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stability analysis for graph-model conflicts over binary and four-valued states"};
  app.require_subcommand(1);

  const auto formats = CLI::IsMember({"table", "csv"});
  const auto policies = CLI::IsMember({"fixed", "drift", "explicit"});

  std::string file, fileB, mapFile, formatName = "table", policy, caseName, outputDir = ".";
  int dm = 0;
  unsigned threads = 1;
  bool dot = false, emitFile = false;
  std::size_t bound = gmcr::kDefaultOracleBound;

  auto* validate = app.add_subcommand("validate", "Check a model file and list diagnostics");
  validate->add_option("file", file, "Model file")->required();

  auto* states = app.add_subcommand("states", "List the state space");
  states->add_option("file", file, "Model file")->required();

  auto* reach = app.add_subcommand("reach", "List reachable states per DM");
  reach->add_option("file", file, "Model file")->required();
  reach->add_option("--dm", dm, "Only this decision maker")->check(CLI::PositiveNumber);
  reach->add_option("--policy", policy, "Override the file's move policy")->check(policies);

  auto* analyzeCmd = app.add_subcommand("analyze", "Run the stability analysis");
  analyzeCmd->add_option("file", file, "Model file")->required();
  analyzeCmd->add_option("--format", formatName, "table or csv")->check(formats);
  analyzeCmd->add_option("--policy", policy, "Override the file's move policy")->check(policies);
  analyzeCmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* compare = app.add_subcommand("compare", "Compare equilibria of two models");
  compare->add_option("fileA", file, "First model file")->required();
  compare->add_option("fileB", fileB, "Second model file")->required();
  compare->add_option("--map", mapFile, "State mapping file (s<a> -> s<b> per line)")->required();
  compare->add_option("--format", formatName, "table or csv")->check(formats);

  auto* exportCmd = app.add_subcommand("export", "Write the move graph");
  exportCmd->add_option("file", file, "Model file")->required();
  exportCmd->add_flag("--dot", dot, "Graphviz DOT output")->required();
  exportCmd->add_option("--dm", dm, "Only this decision maker")->check(CLI::PositiveNumber);

  auto* caseCmd = app.add_subcommand("case", "Print or write a built-in case");
  caseCmd->add_option("id", caseName, "Case id")->required();
  caseCmd->add_flag("--emit-file", emitFile, "Write <id>.gmcr instead of printing");
  caseCmd->add_option("--output-dir", outputDir, "Directory for --emit-file");

  auto* oracleCmd = app.add_subcommand("oracle", "Cross-check analysis against brute force");
  oracleCmd->add_option("file", file, "Model file")->required();
  oracleCmd->add_option("--bound", bound, "Largest state space to check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (validate->parsed()) {
      const auto model = load(file);
      const auto diagnostics = gmcr::validateModel(model);
      for (const auto& d : diagnostics) std::cerr << gmcr::toString(d) << "\n";
      if (!diagnostics.empty()) return kInvalid;
      std::cout << "ok: " << model.dms.size() << " decision makers, " << model.options.size()
                << " options, " << model.space.size() << " states\n";
    } else if (states->parsed()) {
      std::cout << gmcr::renderStates(load(file));
    } else if (reach->parsed()) {
      const auto model = load(file, policy);
      if (dm && !model.hasDm(dm)) throw UsageError("unknown decision maker " + std::to_string(dm));
      std::cout << gmcr::renderReach(model, optionalDm(dm));
    } else if (analyzeCmd->parsed()) {
      const auto report = gmcr::analyze(load(file, policy), threads);
      std::cout << gmcr::renderReport(report, format(formatName));
    } else if (compare->parsed()) {
      const auto a = gmcr::analyze(load(file));
      const auto b = gmcr::analyze(load(fileB));
      const auto mapping = gmcr::parseStateMapping(readFile(mapFile));
      std::cout << gmcr::renderComparison(gmcr::compareReports(a, b, mapping), format(formatName));
    } else if (exportCmd->parsed()) {
      const auto model = load(file);
      if (dm && !model.hasDm(dm)) throw UsageError("unknown decision maker " + std::to_string(dm));
      std::cout << gmcr::exportGraph(model, optionalDm(dm));
    } else if (caseCmd->parsed()) {
      const auto id = gmcr::parseCaseId(caseName);
      if (!id) throw UsageError("unknown case '" + caseName + "'");
      const auto text = gmcr::serializeModel(gmcr::loadCase(*id));
      if (!emitFile) {
        std::cout << text;
      } else {
        const auto path = std::filesystem::path(outputDir) / (caseName + ".gmcr");
        std::ofstream out(path, std::ios::binary);
        if (!(out << text)) throw UsageError("cannot write " + path.string());
        std::cout << path.string() << "\n";
      }
    } else if (oracleCmd->parsed()) {
      const auto discrepancies = gmcr::oracleCheck(load(file), bound);
      for (const auto& d : discrepancies) std::cout << gmcr::toString(d) << "\n";
      std::cout << "oracle: " << discrepancies.size() << " discrepancies\n";
      if (!discrepancies.empty()) return kDiscrepancy;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const gmcr::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInvalid;
  } catch (const gmcr::ModelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kOk;
}
