#include "gmcr/stability.hpp"

#include <algorithm>
#include <thread>

#include "gmcr/error.hpp"

namespace gmcr {
namespace {

DmSet othersOf(const ConflictModel& model, const DmSet& coalition) {
  DmSet out;
  for (const auto& d : model.dms)
    if (!coalition.count(d.id)) out.insert(d.id);
  return out;
}

bool intersects(const StateSet& a, const StateSet& b) {
  return std::any_of(a.begin(), a.end(), [&b](StateId s) { return b.count(s) != 0; });
}

bool subsetOf(const StateSet& a, const StateSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// For every improvement from `s` by `coalition`, the complement must be able
// to answer with a state accepted by `sanctions`.
template <typename SanctionTest>
bool deterred(const MoveGraph& graph, const DmSet& coalition, StateId s, SanctionTest sanctions) {
  const auto improvements = graph.coalitionImprovements(coalition, s);
  if (improvements.empty()) return true;
  const DmSet others = othersOf(graph.model(), coalition);
  if (others.empty()) return false;
  return std::all_of(improvements.begin(), improvements.end(),
                     [&](StateId next) { return sanctions(others, next); });
}

template <typename SanctionTest>
bool deterredForAllCoalitions(const MoveGraph& graph, DmId dm, StateId s,
                              SanctionTest sanctions) {
  for (const auto& h : coalitionsContaining(graph.model().dmIds(), dm))
    if (!deterred(graph, h, s, [&](const DmSet& others, StateId next) {
          return sanctions(h, others, next);
        }))
      return false;
  return true;
}

}  // namespace

std::string_view toString(Concept c) {
  switch (c) {
    case Concept::Nash: return "Nash";
    case Concept::GMR: return "GMR";
    case Concept::SMR: return "SMR";
    case Concept::SEQ: return "SEQ";
    case Concept::CNash: return "CNash";
    case Concept::CGMR: return "CGMR";
    case Concept::CSMR: return "CSMR";
    case Concept::CSEQ: return "CSEQ";
  }
  return "?";
}

bool isNash(const MoveGraph& graph, DmId dm, StateId s) {
  return graph.unilateralImprovements(dm, s).empty();
}

bool isGMR(const MoveGraph& graph, DmId dm, StateId s) {
  const auto phi = phiLessOrEqual(graph.model().preferenceOf(dm), s);
  return deterred(graph, {dm}, s, [&](const DmSet& others, StateId next) {
    return intersects(graph.coalitionReachable(others, next), phi);
  });
}

bool isSMR(const MoveGraph& graph, DmId dm, StateId s) {
  const auto phi = phiLessOrEqual(graph.model().preferenceOf(dm), s);
  return deterred(graph, {dm}, s, [&](const DmSet& others, StateId next) {
    const auto& answers = graph.coalitionReachable(others, next);
    return std::any_of(answers.begin(), answers.end(), [&](StateId sanction) {
      return phi.count(sanction) && subsetOf(graph.reachable(dm, sanction), phi);
    });
  });
}

bool isSEQ(const MoveGraph& graph, DmId dm, StateId s) {
  const auto phi = phiLessOrEqual(graph.model().preferenceOf(dm), s);
  return deterred(graph, {dm}, s, [&](const DmSet& others, StateId next) {
    return intersects(graph.coalitionUIReachable(others, next), phi);
  });
}

bool isCNash(const MoveGraph& graph, DmId dm, StateId s) {
  for (const auto& h : coalitionsContaining(graph.model().dmIds(), dm))
    if (!graph.coalitionImprovements(h, s).empty()) return false;
  return true;
}

bool isCGMR(const MoveGraph& graph, DmId dm, StateId s) {
  const auto phi = phiLessOrEqual(graph.model().preferenceOf(dm), s);
  return deterredForAllCoalitions(graph, dm, s,
                                  [&](const DmSet&, const DmSet& others, StateId next) {
                                    return intersects(graph.coalitionReachable(others, next), phi);
                                  });
}

bool isCSMR(const MoveGraph& graph, DmId dm, StateId s) {
  const auto phi = phiLessOrEqual(graph.model().preferenceOf(dm), s);
  return deterredForAllCoalitions(
      graph, dm, s, [&](const DmSet& h, const DmSet& others, StateId next) {
        const auto& answers = graph.coalitionReachable(others, next);
        return std::any_of(answers.begin(), answers.end(), [&](StateId sanction) {
          return phi.count(sanction) && subsetOf(graph.coalitionReachable(h, sanction), phi);
        });
      });
}

bool isCSEQ(const MoveGraph& graph, DmId dm, StateId s) {
  const auto phi = phiLessOrEqual(graph.model().preferenceOf(dm), s);
  return deterredForAllCoalitions(
      graph, dm, s, [&](const DmSet&, const DmSet& others, StateId next) {
        return intersects(graph.coalitionUIReachable(others, next), phi);
      });
}

bool isStable(const MoveGraph& graph, Concept c, DmId dm, StateId s) {
  switch (c) {
    case Concept::Nash: return isNash(graph, dm, s);
    case Concept::GMR: return isGMR(graph, dm, s);
    case Concept::SMR: return isSMR(graph, dm, s);
    case Concept::SEQ: return isSEQ(graph, dm, s);
    case Concept::CNash: return isCNash(graph, dm, s);
    case Concept::CGMR: return isCGMR(graph, dm, s);
    case Concept::CSMR: return isCSMR(graph, dm, s);
    case Concept::CSEQ: return isCSEQ(graph, dm, s);
  }
  return false;
}

bool isNash(const ConflictModel& model, DmId dm, StateId s) { return isNash(MoveGraph(model), dm, s); }
bool isGMR(const ConflictModel& model, DmId dm, StateId s) { return isGMR(MoveGraph(model), dm, s); }
bool isSMR(const ConflictModel& model, DmId dm, StateId s) { return isSMR(MoveGraph(model), dm, s); }
bool isSEQ(const ConflictModel& model, DmId dm, StateId s) { return isSEQ(MoveGraph(model), dm, s); }
bool isCNash(const ConflictModel& model, DmId dm, StateId s) { return isCNash(MoveGraph(model), dm, s); }
bool isCGMR(const ConflictModel& model, DmId dm, StateId s) { return isCGMR(MoveGraph(model), dm, s); }
bool isCSMR(const ConflictModel& model, DmId dm, StateId s) { return isCSMR(MoveGraph(model), dm, s); }
bool isCSEQ(const ConflictModel& model, DmId dm, StateId s) { return isCSEQ(MoveGraph(model), dm, s); }

bool isParetoOptimal(const ConflictModel& model, StateId s) {
  if (!model.space.contains(s)) throw ModelError("unknown state s" + std::to_string(s));
  const auto n = static_cast<StateId>(model.space.size());
  for (StateId other = 1; other <= n; ++other) {
    if (other == s) continue;
    bool weaklyBetter = true;
    bool strictlyBetter = false;
    for (const auto& d : model.dms) {
      const auto p = comparePreference(model.preferenceOf(d.id), other, s);
      if (p == Preference::Dispreferred) weaklyBetter = false;
      if (p == Preference::Preferred) strictlyBetter = true;
    }
    if (weaklyBetter && strictlyBetter) return false;
  }
  return true;
}

std::vector<DmSet> coalitionsContaining(const DmSet& all, DmId dm) {
  std::vector<DmId> others;
  for (DmId d : all)
    if (d != dm) others.push_back(d);
  std::vector<DmSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << others.size()); ++mask) {
    DmSet h{dm};
    for (std::size_t k = 0; k < others.size(); ++k)
      if (mask & (std::size_t{1} << k)) h.insert(others[k]);
    out.push_back(std::move(h));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const DmSet& a, const DmSet& b) { return a.size() < b.size(); });
  return out;
}

bool StabilityReport::stable(Concept c, DmId dm, StateId s) const {
  const auto& cells = stableFor.at(c);
  if (s < 1 || static_cast<std::size_t>(s) > cells.size())
    throw ModelError("unknown state s" + std::to_string(s));
  return cells[static_cast<std::size_t>(s - 1)].count(dm) != 0;
}

std::vector<std::pair<std::string, StateSet>> StabilityReport::rows() const {
  std::vector<std::pair<std::string, StateSet>> out;
  for (auto c : kAllConcepts) {
    auto it = equilibria.find(c);
    out.emplace_back(std::string(toString(c)), it == equilibria.end() ? StateSet{} : it->second);
  }
  out.emplace_back("Pareto", pareto);
  return out;
}

StabilityReport analyze(const ConflictModel& model, unsigned threads) {
  if (auto diagnostics = validateModel(model); !diagnostics.empty()) {
    std::string what = "model is invalid:";
    for (const auto& d : diagnostics) what += "\n  " + toString(d);
    throw ModelError(what);
  }
  if (!model.hasPreferences())
    throw ModelError("model carries no preference information; add [pref] orders first");

  const MoveGraph graph(model);
  const std::size_t n = model.space.size();

  StabilityReport report;
  for (const auto& d : model.dms) report.dms.push_back(d.id);
  report.stateCount = n;
  for (auto c : kAllConcepts) report.stableFor[c].assign(n, {});
  std::vector<char> pareto(n, 0);

  // Each worker owns a disjoint stride of states, so cells never collide.
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t k = first; k < n; k += stride) {
      const auto s = static_cast<StateId>(k + 1);
      for (auto c : kAllConcepts)
        for (DmId dm : report.dms)
          if (isStable(graph, c, dm, s)) report.stableFor.at(c)[k].insert(dm);
      pareto[k] = isParetoOptimal(model, s) ? 1 : 0;
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }

  for (auto c : kAllConcepts) {
    auto& eq = report.equilibria[c];
    for (std::size_t k = 0; k < n; ++k)
      if (report.stableFor[c][k].size() == report.dms.size()) eq.insert(static_cast<StateId>(k + 1));
  }
  for (std::size_t k = 0; k < n; ++k)
    if (pareto[k]) report.pareto.insert(static_cast<StateId>(k + 1));
  return report;
}

Mark ReportComparison::markAtB(std::string_view row, StateId b) const {
  auto r = std::find(rowNames.begin(), rowNames.end(), row);
  if (r == rowNames.end()) throw ModelError("unknown row " + std::string(row));
  for (std::size_t k = 0; k < columns.size(); ++k)
    if (columns[k].b == b) return marks[static_cast<std::size_t>(r - rowNames.begin())][k];
  throw ModelError("no column for state s" + std::to_string(b) + " of report B");
}

Mark ReportComparison::markAtA(std::string_view row, StateId a) const {
  auto r = std::find(rowNames.begin(), rowNames.end(), row);
  if (r == rowNames.end()) throw ModelError("unknown row " + std::string(row));
  for (std::size_t k = 0; k < columns.size(); ++k)
    if (columns[k].a == a) return marks[static_cast<std::size_t>(r - rowNames.begin())][k];
  throw ModelError("no column for state s" + std::to_string(a) + " of report A");
}

ReportComparison compareReports(const StabilityReport& a, const StabilityReport& b,
                                const std::map<StateId, StateId>& mapping) {
  std::map<StateId, StateId> preimage;
  for (const auto& [from, to] : mapping) {
    if (from < 1 || static_cast<std::size_t>(from) > a.stateCount)
      throw ModelError("mapping names unknown state s" + std::to_string(from) + " of report A");
    if (to < 1 || static_cast<std::size_t>(to) > b.stateCount)
      throw ModelError("mapping names unknown state s" + std::to_string(to) + " of report B");
    if (!preimage.emplace(to, from).second)
      throw ModelError("mapping is not injective: s" + std::to_string(to) +
                       " of report B has several preimages");
  }

  ReportComparison out;
  for (StateId s = 1; s <= static_cast<StateId>(b.stateCount); ++s) {
    auto it = preimage.find(s);
    out.columns.push_back({it == preimage.end() ? std::nullopt : std::optional(it->second), s});
  }
  for (StateId s = 1; s <= static_cast<StateId>(a.stateCount); ++s)
    if (!mapping.count(s)) out.columns.push_back({s, std::nullopt});

  const auto rowsA = a.rows();
  const auto rowsB = b.rows();
  for (std::size_t r = 0; r < rowsA.size(); ++r) {
    out.rowNames.push_back(rowsA[r].first);
    std::vector<Mark> line;
    for (const auto& col : out.columns) {
      const bool inA = col.a && rowsA[r].second.count(*col.a);
      const bool inB = col.b && rowsB[r].second.count(*col.b);
      line.push_back(inA && inB ? Mark::Both
                     : inA      ? Mark::OnlyA
                     : inB      ? Mark::OnlyB
                                : Mark::Neither);
    }
    out.marks.push_back(std::move(line));
  }
  return out;
}

}  // namespace gmcr
