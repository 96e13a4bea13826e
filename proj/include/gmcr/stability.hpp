#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gmcr/model.hpp"
#include "gmcr/reachability.hpp"

namespace gmcr {

enum class Concept { Nash, GMR, SMR, SEQ, CNash, CGMR, CSMR, CSEQ };

inline constexpr std::array<Concept, 8> kAllConcepts = {
    Concept::Nash,  Concept::GMR,  Concept::SMR,  Concept::SEQ,
    Concept::CNash, Concept::CGMR, Concept::CSMR, Concept::CSEQ};

std::string_view toString(Concept c);

// Individual stability of `s` for `dm`.
bool isNash(const MoveGraph& graph, DmId dm, StateId s);
bool isGMR(const MoveGraph& graph, DmId dm, StateId s);
bool isSMR(const MoveGraph& graph, DmId dm, StateId s);
bool isSEQ(const MoveGraph& graph, DmId dm, StateId s);

// Coalition stability of `s` for `dm`, quantified over every coalition that
// contains `dm`. A coalition move must strictly improve all its members;
// sanctions come from the complement of the coalition and are judged by
// `dm`'s own order.
bool isCNash(const MoveGraph& graph, DmId dm, StateId s);
bool isCGMR(const MoveGraph& graph, DmId dm, StateId s);
bool isCSMR(const MoveGraph& graph, DmId dm, StateId s);
bool isCSEQ(const MoveGraph& graph, DmId dm, StateId s);

bool isStable(const MoveGraph& graph, Concept c, DmId dm, StateId s);

bool isNash(const ConflictModel& model, DmId dm, StateId s);
bool isGMR(const ConflictModel& model, DmId dm, StateId s);
bool isSMR(const ConflictModel& model, DmId dm, StateId s);
bool isSEQ(const ConflictModel& model, DmId dm, StateId s);
bool isCNash(const ConflictModel& model, DmId dm, StateId s);
bool isCGMR(const ConflictModel& model, DmId dm, StateId s);
bool isCSMR(const ConflictModel& model, DmId dm, StateId s);
bool isCSEQ(const ConflictModel& model, DmId dm, StateId s);

/// No other state is weakly better for every DM and strictly better for one.
bool isParetoOptimal(const ConflictModel& model, StateId s);

/// Every subset of the model's DMs that contains `dm`, smallest first.
std::vector<DmSet> coalitionsContaining(const DmSet& all, DmId dm);

struct StabilityReport {
  std::vector<DmId> dms;
  std::size_t stateCount = 0;
  /// stableFor[c][s - 1]: the DMs for which state s is stable under c.
  std::map<Concept, std::vector<DmSet>> stableFor;
  /// States stable for every DM.
  std::map<Concept, StateSet> equilibria;
  StateSet pareto;

  bool stable(Concept c, DmId dm, StateId s) const;
  /// Grid rows in display order: the eight concepts, then "Pareto".
  std::vector<std::pair<std::string, StateSet>> rows() const;

  friend bool operator==(const StabilityReport&, const StabilityReport&) = default;
};

/// Evaluates every concept for every (DM, state) cell. Throws ModelError if
/// the model fails validation or carries no preferences. With threads > 1
/// the cells are split by state; the result does not depend on the count.
StabilityReport analyze(const ConflictModel& model, unsigned threads = 1);

enum class Mark { Both, OnlyA, OnlyB, Neither };

struct ComparisonColumn {
  std::optional<StateId> a;
  std::optional<StateId> b;
};

struct ReportComparison {
  /// One column per state of report B (in id order, paired with its
  /// preimage in A), followed by the unmapped states of A.
  std::vector<ComparisonColumn> columns;
  std::vector<std::string> rowNames;
  /// marks[row][column]
  std::vector<std::vector<Mark>> marks;

  /// Mark for the column holding B's state `b`.
  Mark markAtB(std::string_view row, StateId b) const;
  /// Mark for the column holding A's state `a`.
  Mark markAtA(std::string_view row, StateId a) const;
};

/// Lines up two reports through `mapping` (A state -> B state). Throws
/// ModelError if the mapping is not injective or names unknown states.
ReportComparison compareReports(const StabilityReport& a, const StabilityReport& b,
                                const std::map<StateId, StateId>& mapping);

}  // namespace gmcr
