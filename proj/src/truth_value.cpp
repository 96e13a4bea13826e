#include "gmcr/truth_value.hpp"

namespace gmcr {
namespace {

using enum TruthValue;

// Rows and columns follow the enum order T, F, B, N.
constexpr std::array<TruthValue, 4> kNegation = {F, T, B, N};

constexpr std::array<std::array<TruthValue, 4>, 4> kConjunction = {{
    //  T  F  B  N
    {T, F, B, N},  // T
    {F, F, F, F},  // F
    {B, F, B, F},  // B
    {N, F, F, N},  // N
}};

constexpr std::array<std::array<TruthValue, 4>, 4> kDisjunction = {{
    //  T  F  B  N
    {T, T, T, T},  // T
    {T, F, B, N},  // F
    {T, B, B, T},  // B
    {T, N, T, N},  // N
}};

// Reflexive-transitive closure of F<=B, F<=N, B<=T, N<=T.
constexpr std::array<std::array<bool, 4>, 4> kEntails = {{
    //    T      F      B      N
    {true, false, false, false},  // T
    {true, true, true, true},     // F
    {true, false, true, false},   // B
    {true, false, false, true},   // N
}};

constexpr std::array<std::array<bool, 4>, 4> kMoveAllowed = {{
    //    T      F      B      N
    {true, false, true, true},     // T
    {false, false, false, false},  // F
    {false, true, true, false},    // B
    {false, true, false, true},    // N
}};

}  // namespace

TruthValue negate(TruthValue v) { return kNegation[index(v)]; }

TruthValue conj(TruthValue a, TruthValue b) { return kConjunction[index(a)][index(b)]; }

TruthValue disj(TruthValue a, TruthValue b) { return kDisjunction[index(a)][index(b)]; }

bool entails(TruthValue a, TruthValue b) { return kEntails[index(a)][index(b)]; }

bool moveAllowed(TruthValue src, TruthValue dst) {
  return kMoveAllowed[index(src)][index(dst)];
}

char toChar(TruthValue v) {
  static constexpr char kChars[] = {'T', 'F', 'B', 'N'};
  return kChars[index(v)];
}

std::optional<TruthValue> fromChar(char c) {
  switch (c) {
    case 'T': return T;
    case 'F': return F;
    case 'B': return B;
    case 'N': return N;
    default: return std::nullopt;
  }
}

std::optional<TruthValue> fromBinaryChar(char c) {
  switch (c) {
    case 'Y': return T;
    case 'N': return F;
    case '-': return B;
    default: return std::nullopt;
  }
}

char toBinaryChar(TruthValue v) {
  switch (v) {
    case T: return 'Y';
    case F: return 'N';
    case B: return '-';
    case N: break;
  }
  return '?';
}

TransitionSet TransitionSet::all() {
  TransitionSet s;
  s.bits_.set();
  return s;
}

TransitionSet TransitionSet::identity() {
  TransitionSet s;
  for (auto v : kAllTruthValues) s.insert(v, v);
  return s;
}

TransitionSet TransitionSet::irreversibleSet() {
  auto s = identity();
  for (auto v : kAllTruthValues) s.insert(v, T);
  return s;
}

TransitionSet TransitionSet::irreversibleClear() {
  auto s = identity();
  for (auto v : kAllTruthValues) s.insert(v, F);
  return s;
}

bool TransitionSet::containsIdentity() const {
  for (auto v : kAllTruthValues)
    if (!contains(v, v)) return false;
  return true;
}

}  // namespace gmcr
