#include "gmcr/stability.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "gmcr/cases.hpp"
#include "gmcr/error.hpp"
#include "random_models.hpp"

namespace {

using namespace gmcr;

const ConflictModel& reduced() {
  static const ConflictModel m = loadCase(CaseId::PdB4Reduced);
  return m;
}

const ConflictModel& binaryPd() {
  static const ConflictModel m = loadCase(CaseId::PdBinary);
  return m;
}

TEST(NashTest, Examples) {
  EXPECT_TRUE(isNash(reduced(), 1, 4));
  EXPECT_TRUE(isNash(reduced(), 2, 4));
  EXPECT_TRUE(isNash(reduced(), 1, 2));
  EXPECT_TRUE(isNash(reduced(), 2, 2));
  EXPECT_FALSE(isNash(reduced(), 1, 1));
  EXPECT_THROW(isNash(reduced(), 3, 1), ModelError);
  EXPECT_THROW(isNash(reduced(), 1, 0), ModelError);
}

TEST(GmrTest, Examples) {
  EXPECT_TRUE(isGMR(reduced(), 1, 3));
  EXPECT_TRUE(isGMR(reduced(), 2, 3));
  EXPECT_FALSE(isGMR(reduced(), 1, 1));
}

TEST(SmrTest, Examples) {
  EXPECT_TRUE(isSMR(reduced(), 1, 3));
  EXPECT_TRUE(isSMR(reduced(), 2, 3));
  EXPECT_TRUE(isSMR(reduced(), 1, 4));
  EXPECT_TRUE(isSMR(reduced(), 2, 4));
}

TEST(SeqTest, Examples) {
  EXPECT_TRUE(isSEQ(reduced(), 2, 3));
  EXPECT_TRUE(isSEQ(reduced(), 1, 3));
  EXPECT_FALSE(isSEQ(reduced(), 1, 1));
}

TEST(SeqTest, RequiresACredibleSanctionToExist) {
  // DM1 can improve from s1 to s2; DM2 can move back from s2 to s1 but that
  // hurts DM2, so the sanction is not credible.
  ConflictModel m;
  m.dms = {{1, "A"}, {2, "B"}};
  m.options = {{"a", 1, "a"}, {"b", 2, "b"}};
  m.logic = LogicMode::Binary;
  m.space = enumerateStates(2, LogicMode::Binary);
  m.policy.kind = PolicyKind::Explicit;
  m.policy.adjacency[1][1] = {2};
  m.policy.adjacency[2][2] = {1};
  m.preferences = std::vector{PreferenceOrder::strict(1, {2, 1, 3, 4}),
                              PreferenceOrder::strict(2, {2, 1, 3, 4})};
  EXPECT_TRUE(isGMR(m, 1, 1));
  EXPECT_FALSE(isSEQ(m, 1, 1));
  // DM1 can escape the sanction again, so it is not strong either.
  EXPECT_FALSE(isSMR(m, 1, 1));
}

TEST(CoalitionStabilityTest, Examples) {
  EXPECT_TRUE(isCNash(reduced(), 1, 4));
  EXPECT_TRUE(isCNash(reduced(), 2, 4));
  EXPECT_FALSE(isCGMR(reduced(), 1, 1));
  EXPECT_FALSE(isCNash(binaryPd(), 1, 4));
  EXPECT_FALSE(isCNash(binaryPd(), 2, 4));
  EXPECT_TRUE(isNash(binaryPd(), 1, 4));
}

TEST(CoalitionStabilityTest, GrandCoalitionHasNoSanction) {
  // Joint move from DD to CC cannot be sanctioned: nobody is left outside.
  EXPECT_FALSE(isCGMR(binaryPd(), 1, 4));
  EXPECT_FALSE(isCSMR(binaryPd(), 1, 4));
  EXPECT_FALSE(isCSEQ(binaryPd(), 1, 4));
}

TEST(CoalitionsContainingTest, EnumeratesSupersetsOfTheDm) {
  const auto list = coalitionsContaining({1, 2, 3}, 2);
  ASSERT_EQ(list.size(), 4u);
  EXPECT_EQ(list.front(), (DmSet{2}));
  EXPECT_EQ(list.back(), (DmSet{1, 2, 3}));
  for (const auto& h : list) EXPECT_TRUE(h.count(2));
}

TEST(ParetoTest, Examples) {
  StateSet pareto;
  for (StateId s = 1; s <= 9; ++s)
    if (isParetoOptimal(reduced(), s)) pareto.insert(s);
  EXPECT_EQ(pareto, (StateSet{1, 2, 3, 7, 8}));
  EXPECT_FALSE(isParetoOptimal(reduced(), 9));
  EXPECT_THROW(isParetoOptimal(reduced(), 10), ModelError);
}

TEST(ParetoTest, SingleStateIsOptimal) {
  ConflictModel m;
  m.dms = {{1, "A"}, {2, "B"}};
  m.options = {{"a", 1, "a"}};
  m.logic = LogicMode::Binary;
  m.space = StateSpace(std::vector<Assignment>{{TruthValue::T}});
  m.preferences = std::vector{PreferenceOrder::strict(1, {1}), PreferenceOrder::strict(2, {1})};
  EXPECT_TRUE(isParetoOptimal(m, 1));
}

TEST(ParetoTest, IndifferenceDoesNotDominate) {
  ConflictModel m;
  m.dms = {{1, "A"}, {2, "B"}};
  m.options = {{"a", 1, "a"}};
  m.logic = LogicMode::Binary;
  m.space = enumerateStates(1, LogicMode::Binary);
  m.preferences = std::vector{PreferenceOrder(1, {{1, 2}}), PreferenceOrder(2, {{1, 2}})};
  EXPECT_TRUE(isParetoOptimal(m, 1));
  EXPECT_TRUE(isParetoOptimal(m, 2));
}

TEST(AnalyzeTest, ReducedDilemma) {
  const auto r = analyze(reduced());
  using enum Concept;
  EXPECT_EQ(r.equilibria.at(Nash), (StateSet{2, 4}));
  for (Concept c : {GMR, SMR, SEQ, CGMR, CSMR, CSEQ}) EXPECT_EQ(r.equilibria.at(c), (StateSet{2, 3, 4}));
  EXPECT_EQ(r.equilibria.at(CNash), (StateSet{2, 4}));
  EXPECT_EQ(r.pareto, (StateSet{1, 2, 3, 7, 8}));
  EXPECT_EQ(r.stateCount, 9u);
  EXPECT_EQ(r.dms, (std::vector<DmId>{1, 2}));
}

TEST(AnalyzeTest, BinaryDilemma) {
  const auto r = analyze(binaryPd());
  using enum Concept;
  EXPECT_EQ(r.equilibria.at(Nash), (StateSet{4}));
  for (Concept c : {GMR, SMR, SEQ}) EXPECT_EQ(r.equilibria.at(c), (StateSet{1, 4}));
  EXPECT_EQ(r.equilibria.at(CNash), StateSet{});
  EXPECT_EQ(r.pareto, (StateSet{1, 2, 3}));
}

TEST(AnalyzeTest, EquilibriaAreStatesStableForEveryDm) {
  const auto r = analyze(reduced());
  for (Concept c : kAllConcepts)
    for (StateId s = 1; s <= 9; ++s) {
      const bool all = r.stableFor.at(c)[s - 1] == DmSet{1, 2};
      EXPECT_EQ(r.equilibria.at(c).count(s) == 1, all);
      EXPECT_EQ(r.stable(c, 1, s), r.stableFor.at(c)[s - 1].count(1) == 1);
    }
  const auto rows = r.rows();
  ASSERT_EQ(rows.size(), 9u);
  EXPECT_EQ(rows.front().first, "Nash");
  EXPECT_EQ(rows.back().first, "Pareto");
}

TEST(AnalyzeTest, SinkTopStateIsInEveryEquilibrium) {
  ConflictModel m;
  m.dms = {{1, "A"}, {2, "B"}};
  m.options = {{"a", 1, "a"}, {"b", 2, "b"}};
  m.logic = LogicMode::Binary;
  m.space = enumerateStates(2, LogicMode::Binary);
  m.policy.kind = PolicyKind::Explicit;
  m.policy.adjacency[1][2] = {1, 3};
  m.policy.adjacency[1][4] = {3};
  m.policy.adjacency[2][3] = {1, 4};
  m.preferences = std::vector{PreferenceOrder::strict(1, {1, 2, 3, 4}),
                              PreferenceOrder::strict(2, {1, 4, 2, 3})};
  const auto r = analyze(m);
  for (Concept c : kAllConcepts) EXPECT_TRUE(r.equilibria.at(c).count(1)) << toString(c);
}

TEST(AnalyzeTest, RejectsModelsWithoutPreferencesOrFailingValidation) {
  EXPECT_THROW(analyze(loadCase(CaseId::PdB4Full)), ModelError);
  auto bad = reduced();
  bad.policy.adjacency[1][1].insert(1);
  EXPECT_THROW(analyze(bad), ModelError);
}

TEST(AnalyzeTest, ThreadCountDoesNotChangeTheReport) {
  std::mt19937 rng(17);
  for (int round = 0; round < 10; ++round) {
    gmcr::testing::RandomModelOptions opt;
    opt.policy = static_cast<PolicyKind>(round % 3);
    const auto m = gmcr::testing::randomModel(rng, opt);
    const auto one = analyze(m, 1);
    EXPECT_EQ(analyze(m, 4), one);
    EXPECT_EQ(analyze(m, 64), one);
  }
}

TEST(StabilityPropertiesTest, InclusionsAndCoalitionImplication) {
  std::mt19937 rng(21);
  for (int round = 0; round < 120; ++round) {
    gmcr::testing::RandomModelOptions opt;
    opt.policy = static_cast<PolicyKind>(round % 3);
    const auto m = gmcr::testing::randomModel(rng, opt);
    const auto r = analyze(m);
    using enum Concept;
    for (DmId dm : r.dms)
      for (StateId s = 1; s <= static_cast<StateId>(r.stateCount); ++s) {
        if (r.stable(Nash, dm, s)) {
          EXPECT_TRUE(r.stable(SMR, dm, s));
          EXPECT_TRUE(r.stable(SEQ, dm, s));
        }
        if (r.stable(SMR, dm, s) || r.stable(SEQ, dm, s)) EXPECT_TRUE(r.stable(GMR, dm, s));
        if (r.stable(CNash, dm, s)) EXPECT_TRUE(r.stable(Nash, dm, s));
      }
    EXPECT_FALSE(r.pareto.empty());
  }
}

TEST(StabilityPropertiesTest, RelabelingInvariance) {
  std::mt19937 rng(23);
  for (int round = 0; round < 60; ++round) {
    gmcr::testing::RandomModelOptions opt;
    opt.policy = static_cast<PolicyKind>(round % 3);
    const auto m = gmcr::testing::randomModel(rng, opt);
    std::vector<StateId> newId(m.space.size());
    std::iota(newId.begin(), newId.end(), 1);
    std::shuffle(newId.begin(), newId.end(), rng);
    const auto p = gmcr::testing::permuteStates(m, newId);

    const auto a = analyze(m);
    const auto b = analyze(p);
    auto back = [&](const StateSet& in) {
      StateSet out;
      for (StateId s : in) out.insert(newId[s - 1]);
      return out;
    };
    for (Concept c : kAllConcepts) EXPECT_EQ(back(a.equilibria.at(c)), b.equilibria.at(c));
    EXPECT_EQ(back(a.pareto), b.pareto);
  }
}

TEST(StabilityPropertiesTest, MonotoneRetieringInvariance) {
  std::mt19937 rng(29);
  for (int round = 0; round < 60; ++round) {
    gmcr::testing::RandomModelOptions opt;
    opt.policy = static_cast<PolicyKind>(round % 3);
    const auto m = gmcr::testing::randomModel(rng, opt);
    EXPECT_EQ(analyze(gmcr::testing::retier(m, rng)), analyze(m));
  }
}

TEST(CompareReportsTest, BinaryAgainstFourValued) {
  const auto a = analyze(binaryPd());
  const auto b = analyze(reduced());
  const std::map<StateId, StateId> map = {{1, 1}, {3, 2}, {2, 3}, {4, 4}};
  const auto cmp = compareReports(a, b, map);
  EXPECT_EQ(cmp.markAtB("Nash", 4), Mark::Both);
  EXPECT_EQ(cmp.markAtB("Nash", 2), Mark::OnlyB);
  EXPECT_EQ(cmp.markAtB("GMR", 1), Mark::OnlyA);
  EXPECT_EQ(cmp.markAtB("GMR", 3), Mark::OnlyB);
  EXPECT_EQ(cmp.markAtB("GMR", 4), Mark::Both);
  EXPECT_EQ(cmp.markAtA("GMR", 1), Mark::OnlyA);
  EXPECT_EQ(cmp.markAtB("Nash", 9), Mark::Neither);
  EXPECT_EQ(cmp.columns.size(), 9u);
  EXPECT_EQ(cmp.rowNames.size(), 9u);
}

TEST(CompareReportsTest, IdenticalReportsHaveNoOneSidedMarks) {
  const auto r = analyze(reduced());
  std::map<StateId, StateId> identity;
  for (StateId s = 1; s <= 9; ++s) identity[s] = s;
  const auto cmp = compareReports(r, r, identity);
  for (const auto& row : cmp.marks)
    for (Mark m : row) EXPECT_TRUE(m == Mark::Both || m == Mark::Neither);
}

TEST(CompareReportsTest, EmptyMappingLeavesEverythingOneSided) {
  const auto a = analyze(binaryPd());
  const auto b = analyze(reduced());
  const auto cmp = compareReports(a, b, {});
  EXPECT_EQ(cmp.columns.size(), 13u);
  for (const auto& row : cmp.marks)
    for (Mark m : row) EXPECT_NE(m, Mark::Both);
  EXPECT_EQ(cmp.markAtA("Nash", 4), Mark::OnlyA);
  EXPECT_EQ(cmp.markAtB("Nash", 4), Mark::OnlyB);
}

TEST(CompareReportsTest, RejectsBadMappings) {
  const auto a = analyze(binaryPd());
  const auto b = analyze(reduced());
  EXPECT_THROW(compareReports(a, b, {{1, 1}, {2, 1}}), ModelError);
  EXPECT_THROW(compareReports(a, b, {{5, 1}}), ModelError);
  EXPECT_THROW(compareReports(a, b, {{1, 10}}), ModelError);
}

}  // namespace
