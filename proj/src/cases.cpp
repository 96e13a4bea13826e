#include "gmcr/cases.hpp"

#include <string>
#include <vector>

#include "gmcr/error.hpp"

namespace gmcr {
namespace {

using enum TruthValue;

std::vector<DecisionMaker> twoPrisoners() { return {{1, "DM1"}, {2, "DM2"}}; }

std::vector<OptionDef> notConfessOptions() {
  return {{"nc1", 1, "Not Confess", TransitionSet::all()},
          {"nc2", 2, "Not Confess", TransitionSet::all()}};
}

ConflictModel pdBinary() {
  ConflictModel m;
  m.dms = twoPrisoners();
  m.options = notConfessOptions();
  m.logic = LogicMode::Binary;
  // s1 = CC, s2 = CD, s3 = DC, s4 = DD (C: does not confess).
  m.space = StateSpace({{T, T}, {T, F}, {F, T}, {F, F}});
  m.policy.kind = PolicyKind::FixedOthers;
  m.preferences = std::vector<PreferenceOrder>{
      PreferenceOrder::strict(1, {3, 1, 4, 2}),
      PreferenceOrder::strict(2, {2, 1, 4, 3}),
  };
  return m;
}

ConflictModel pdB4Full() {
  ConflictModel m;
  m.dms = twoPrisoners();
  m.options = notConfessOptions();
  m.logic = LogicMode::B4;
  m.space = enumerateStates(m.options, m.logic);
  m.policy.kind = PolicyKind::EntailmentDrift;
  return m;
}

ConflictModel pdB4Reduced() {
  ConflictModel m;
  m.dms = twoPrisoners();
  m.options = notConfessOptions();
  m.logic = LogicMode::B4;
  m.space = StateSpace({{T, T}, {F, T}, {T, F}, {F, F}, {T, N}, {F, N}, {T, B}, {F, B}, {N, B}});
  m.policy.kind = PolicyKind::Explicit;
  m.policy.adjacency[1] = {
      {1, {2, 5, 6, 7, 8, 9}}, {2, {1, 5, 6, 7, 8, 9}}, {5, {3, 4, 6}},
      {6, {3, 4, 5}},          {7, {3, 4, 8, 9}},       {8, {3, 4, 7, 9}},
      {9, {3, 4, 7, 8}},
  };
  m.policy.adjacency[2] = {
      {1, {3, 5, 7}}, {3, {1, 5, 7}}, {5, {1, 3, 7}}, {7, {1, 3, 5}},
  };
  m.preferences = std::vector<PreferenceOrder>{
      PreferenceOrder::strict(1, {2, 1, 4, 3, 8, 6, 7, 5, 9}),
      PreferenceOrder::strict(2, {7, 8, 9, 5, 6, 3, 1, 4, 2}),
  };
  return m;
}

// Option rows: modify (M); delay, accept, abandon (U); insist (L).
constexpr std::array<std::string_view, 9> kElmiraColumns = {
    "NYNNN", "YYNNN", "NNYNN", "YNYNN", "NYNNY", "YYNNY", "NNYNY", "YNYNY", "---Y-"};

ConflictModel elmira(LogicMode logic) {
  ConflictModel m;
  m.dms = {{1, "M"}, {2, "U"}, {3, "L"}};
  m.options = {
      {"modify", 1, "Modify", TransitionSet::irreversibleSet()},
      {"delay", 2, "Delay", TransitionSet::all()},
      {"accept", 2, "Accept", TransitionSet::irreversibleSet()},
      {"abandon", 2, "Abandon", TransitionSet::irreversibleSet()},
      {"insist", 3, "Insist", TransitionSet::irreversibleSet()},
  };
  m.logic = logic;
  if (logic == LogicMode::Binary) {
    std::vector<Assignment> states;
    for (auto column : kElmiraColumns) states.push_back(binaryToB4(column));
    m.space = StateSpace(std::move(states));
  } else {
    // Only U's abandon is known in s9; every other option there is B.
    m.space = StateSpace({
        {F, T, F, F, F}, {T, T, F, F, F}, {F, F, T, F, F}, {T, F, T, F, F}, {F, T, F, F, T},
        {T, T, F, F, T}, {F, F, T, F, T}, {T, F, T, F, T}, {B, B, B, T, B},
    });
  }
  // Arcs of the published Elmira graph. L's insist is one-way (1->5, 2->6,
  // 3->7, 4->8); no return arcs are drawn for it.
  m.policy.kind = PolicyKind::Explicit;
  m.policy.adjacency[1] = {{1, {2}}, {3, {4}}, {5, {6}}, {7, {8}}};
  m.policy.adjacency[2] = {
      {1, {3, 9}}, {2, {4, 9}}, {3, {9}}, {4, {9}},
      {5, {7, 9}}, {6, {8, 9}}, {7, {9}}, {8, {9}},
  };
  m.policy.adjacency[3] = {{1, {5}}, {2, {6}}, {3, {7}}, {4, {8}}};
  return m;
}

ConflictModel russiaUkraine() {
  ConflictModel m;
  m.dms = {{1, "Russia"}, {2, "Ukraine"}};
  m.options = {{"attack_ru", 1, "Attack", TransitionSet::all()},
               {"attack_ua", 2, "Attack", TransitionSet::all()}};
  m.logic = LogicMode::B4;
  // The observed state (Russia T, Ukraine B) is s1; the other fifteen follow
  // in enumeration order.
  const Assignment observed{T, B};
  std::vector<Assignment> states{observed};
  const auto full = enumerateStates(m.options, m.logic);
  for (const auto& a : full.assignments())
    if (a != observed) states.push_back(a);
  m.space = StateSpace(std::move(states));
  m.policy.kind = PolicyKind::EntailmentDrift;
  return m;
}

}  // namespace

std::string_view toString(CaseId id) {
  switch (id) {
    case CaseId::PdBinary: return "pd-binary";
    case CaseId::PdB4Full: return "pd-b4-16";
    case CaseId::PdB4Reduced: return "pd-b4-9";
    case CaseId::ElmiraBinary: return "elmira-binary";
    case CaseId::ElmiraB4: return "elmira-b4";
    case CaseId::RussiaUkraineB4: return "russia-ukraine-b4";
  }
  return "?";
}

std::optional<CaseId> parseCaseId(std::string_view text) {
  for (auto id : kAllCases)
    if (toString(id) == text) return id;
  return std::nullopt;
}

ConflictModel loadCase(CaseId id) {
  switch (id) {
    case CaseId::PdBinary: return pdBinary();
    case CaseId::PdB4Full: return pdB4Full();
    case CaseId::PdB4Reduced: return pdB4Reduced();
    case CaseId::ElmiraBinary: return elmira(LogicMode::Binary);
    case CaseId::ElmiraB4: return elmira(LogicMode::B4);
    case CaseId::RussiaUkraineB4: return russiaUkraine();
  }
  throw ModelError("unknown case");
}

ConflictModel loadCase(std::string_view name) {
  auto id = parseCaseId(name);
  if (!id) throw ModelError("unknown case '" + std::string(name) + "'");
  return loadCase(*id);
}

}  // namespace gmcr
