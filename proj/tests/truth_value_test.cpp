#include "gmcr/truth_value.hpp"

#include <gtest/gtest.h>

#include <array>
#include <set>
#include <utility>

namespace {

using gmcr::TruthValue;
using enum gmcr::TruthValue;

// The published four-valued tables, columns and rows in the order N, F, T, B.
constexpr std::array<TruthValue, 4> kOrder = {N, F, T, B};
constexpr std::array<TruthValue, 4> kNegRow = {N, T, F, B};
constexpr std::array<std::array<TruthValue, 4>, 4> kAndTable = {{
    {N, F, N, F},
    {F, F, F, F},
    {N, F, T, B},
    {F, F, B, B},
}};
constexpr std::array<std::array<TruthValue, 4>, 4> kOrTable = {{
    {N, N, T, T},
    {N, F, T, B},
    {T, T, T, T},
    {T, B, T, B},
}};

TEST(TruthValueTest, NegationMatchesTable) {
  for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(gmcr::negate(kOrder[k]), kNegRow[k]);
  EXPECT_EQ(gmcr::negate(N), N);
  EXPECT_EQ(gmcr::negate(T), F);
  EXPECT_EQ(gmcr::negate(gmcr::negate(B)), B);
}

TEST(TruthValueTest, ConjunctionMatchesTable) {
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      EXPECT_EQ(gmcr::conj(kOrder[r], kOrder[c]), kAndTable[r][c])
          << gmcr::toChar(kOrder[r]) << " and " << gmcr::toChar(kOrder[c]);
  EXPECT_EQ(gmcr::conj(N, B), F);
  EXPECT_EQ(gmcr::conj(T, N), N);
  for (auto x : gmcr::kAllTruthValues) EXPECT_EQ(gmcr::conj(F, x), F);
}

TEST(TruthValueTest, DisjunctionMatchesTable) {
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      EXPECT_EQ(gmcr::disj(kOrder[r], kOrder[c]), kOrTable[r][c])
          << gmcr::toChar(kOrder[r]) << " or " << gmcr::toChar(kOrder[c]);
  EXPECT_EQ(gmcr::disj(N, B), T);
  EXPECT_EQ(gmcr::disj(F, N), N);
  for (auto x : gmcr::kAllTruthValues) EXPECT_EQ(gmcr::disj(T, x), T);
}

TEST(TruthValueTest, LatticeLaws) {
  for (auto a : gmcr::kAllTruthValues) {
    EXPECT_EQ(gmcr::negate(gmcr::negate(a)), a);
    EXPECT_EQ(gmcr::conj(a, a), a);
    EXPECT_EQ(gmcr::disj(a, a), a);
    for (auto b : gmcr::kAllTruthValues) {
      EXPECT_EQ(gmcr::conj(a, b), gmcr::conj(b, a));
      EXPECT_EQ(gmcr::disj(a, b), gmcr::disj(b, a));
      EXPECT_EQ(gmcr::negate(gmcr::conj(a, b)), gmcr::disj(gmcr::negate(a), gmcr::negate(b)));
      EXPECT_EQ(gmcr::negate(gmcr::disj(a, b)), gmcr::conj(gmcr::negate(a), gmcr::negate(b)));
      EXPECT_EQ(gmcr::conj(a, gmcr::disj(a, b)), a);
      EXPECT_EQ(gmcr::disj(a, gmcr::conj(a, b)), a);
      for (auto c : gmcr::kAllTruthValues) {
        EXPECT_EQ(gmcr::conj(gmcr::conj(a, b), c), gmcr::conj(a, gmcr::conj(b, c)));
        EXPECT_EQ(gmcr::disj(gmcr::disj(a, b), c), gmcr::disj(a, gmcr::disj(b, c)));
      }
    }
  }
}

// Reflexive-transitive closure of the four generating pairs, by Warshall.
std::array<std::array<bool, 4>, 4> entailmentClosure() {
  std::array<std::array<bool, 4>, 4> r{};
  for (auto v : gmcr::kAllTruthValues) r[gmcr::index(v)][gmcr::index(v)] = true;
  for (auto [a, b] : {std::pair{F, B}, std::pair{F, N}, std::pair{B, T}, std::pair{N, T}})
    r[gmcr::index(a)][gmcr::index(b)] = true;
  for (std::size_t k = 0; k < 4; ++k)
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r;
}

TEST(TruthValueTest, EntailsIsClosureOfGeneratingPairs) {
  const auto closure = entailmentClosure();
  for (auto a : gmcr::kAllTruthValues)
    for (auto b : gmcr::kAllTruthValues)
      EXPECT_EQ(gmcr::entails(a, b), closure[gmcr::index(a)][gmcr::index(b)]);
  EXPECT_TRUE(gmcr::entails(F, B));
  EXPECT_FALSE(gmcr::entails(B, N));
  EXPECT_FALSE(gmcr::entails(N, B));
  EXPECT_TRUE(gmcr::entails(F, T));
}

TEST(TruthValueTest, EntailsIsPartialOrderWithBottomAndTop) {
  for (auto a : gmcr::kAllTruthValues) {
    EXPECT_TRUE(gmcr::entails(a, a));
    EXPECT_TRUE(gmcr::entails(F, a));
    EXPECT_TRUE(gmcr::entails(a, T));
    for (auto b : gmcr::kAllTruthValues) {
      if (gmcr::entails(a, b) && gmcr::entails(b, a)) EXPECT_EQ(a, b);
      for (auto c : gmcr::kAllTruthValues)
        if (gmcr::entails(a, b) && gmcr::entails(b, c)) EXPECT_TRUE(gmcr::entails(a, c));
    }
  }
}

TEST(TruthValueTest, MoveAllowedIsTheSevenListedPairs) {
  const std::set<std::pair<TruthValue, TruthValue>> listed = {
      {B, B}, {B, F}, {N, N}, {N, F}, {T, T}, {T, B}, {T, N}};
  for (auto a : gmcr::kAllTruthValues)
    for (auto b : gmcr::kAllTruthValues)
      EXPECT_EQ(gmcr::moveAllowed(a, b), listed.count({a, b}) == 1);
  EXPECT_TRUE(gmcr::moveAllowed(T, N));
  EXPECT_FALSE(gmcr::moveAllowed(F, F));
  EXPECT_FALSE(gmcr::moveAllowed(T, F));
}

TEST(TruthValueTest, MoveAllowedRefinesReverseEntailment) {
  std::set<std::pair<TruthValue, TruthValue>> gaps;
  for (auto src : gmcr::kAllTruthValues)
    for (auto dst : gmcr::kAllTruthValues) {
      if (gmcr::moveAllowed(src, dst)) EXPECT_TRUE(gmcr::entails(dst, src));
      if (gmcr::entails(dst, src) && !gmcr::moveAllowed(src, dst)) gaps.insert({src, dst});
    }
  const std::set<std::pair<TruthValue, TruthValue>> expected = {{F, F}, {T, F}};
  EXPECT_EQ(gaps, expected);
}

TEST(TruthValueTest, TextEncoding) {
  for (auto v : gmcr::kAllTruthValues) EXPECT_EQ(gmcr::fromChar(gmcr::toChar(v)), v);
  EXPECT_FALSE(gmcr::fromChar('t'));
  EXPECT_FALSE(gmcr::fromChar('Y'));
  EXPECT_EQ(gmcr::fromBinaryChar('Y'), T);
  EXPECT_EQ(gmcr::fromBinaryChar('N'), F);
  EXPECT_EQ(gmcr::fromBinaryChar('-'), B);
  EXPECT_FALSE(gmcr::fromBinaryChar('T'));
  for (char c : {'Y', 'N', '-'}) EXPECT_EQ(gmcr::toBinaryChar(*gmcr::fromBinaryChar(c)), c);
}

TEST(TransitionSetTest, Presets) {
  EXPECT_EQ(gmcr::TransitionSet::all().size(), 16u);
  EXPECT_TRUE(gmcr::TransitionSet::identity().containsIdentity());
  EXPECT_EQ(gmcr::TransitionSet::identity().size(), 4u);

  const auto set = gmcr::TransitionSet::irreversibleSet();
  EXPECT_TRUE(set.containsIdentity());
  EXPECT_TRUE(set.contains(F, T));
  EXPECT_FALSE(set.contains(T, F));

  const auto clear = gmcr::TransitionSet::irreversibleClear();
  EXPECT_TRUE(clear.contains(T, F));
  EXPECT_FALSE(clear.contains(F, T));

  EXPECT_FALSE(gmcr::TransitionSet().containsIdentity());
}

}  // namespace
