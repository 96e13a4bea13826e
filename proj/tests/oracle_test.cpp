#include "gmcr/oracle.hpp"

#include <gtest/gtest.h>

#include <random>

#include "gmcr/cases.hpp"
#include "gmcr/error.hpp"
#include "random_models.hpp"

namespace {

using namespace gmcr;

std::string describe(const std::vector<Discrepancy>& list) {
  std::string out;
  for (const auto& d : list) out += toString(d) + "\n";
  return out;
}

TEST(OracleTest, BuiltInCasesWithPreferences) {
  for (CaseId id : kAllCases) {
    const auto m = loadCase(id);
    if (!m.hasPreferences()) continue;
    const auto found = oracleCheck(m);
    EXPECT_TRUE(found.empty()) << toString(id) << "\n" << describe(found);
  }
}

class OracleRandomTest : public ::testing::TestWithParam<PolicyKind> {};

TEST_P(OracleRandomTest, HundredSeeds) {
  for (unsigned seed = 0; seed < 100; ++seed) {
    std::mt19937 rng(seed * 7919u + static_cast<unsigned>(GetParam()));
    gmcr::testing::RandomModelOptions opt;
    opt.policy = GetParam();
    const auto m = gmcr::testing::randomModel(rng, opt);
    const auto found = oracleCheck(m);
    EXPECT_TRUE(found.empty()) << "seed " << seed << "\n" << describe(found);
  }
}

INSTANTIATE_TEST_SUITE_P(Policies, OracleRandomTest,
                         ::testing::Values(PolicyKind::FixedOthers, PolicyKind::EntailmentDrift,
                                           PolicyKind::Explicit));

TEST(OracleTest, DiscrepancyText) {
  EXPECT_EQ(toString(Discrepancy{"Nash", 1, 4, true, false}),
            "Nash dm=1 s4: oracle stable, analysis unstable");
  EXPECT_EQ(toString(Discrepancy{"Pareto", 0, 2, false, true}),
            "Pareto s2: oracle unstable, analysis stable");
}

TEST(OracleTest, BoundIsEnforced) {
  ConflictModel m = loadCase(CaseId::PdB4Reduced);
  EXPECT_THROW(oracleCheck(m, 8), ModelError);
  EXPECT_NO_THROW(oracleCheck(m, 9));
}

}  // namespace
