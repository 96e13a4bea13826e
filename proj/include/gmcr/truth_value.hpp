#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace gmcr {

/// Belnap's four truth values. T and F are the classical values, B marks a
/// contradiction (told both) and N marks missing information (told neither).
enum class TruthValue : std::uint8_t { T = 0, F = 1, B = 2, N = 3 };

inline constexpr std::array<TruthValue, 4> kAllTruthValues = {
    TruthValue::T, TruthValue::F, TruthValue::B, TruthValue::N};

constexpr std::size_t index(TruthValue v) { return static_cast<std::size_t>(v); }

TruthValue negate(TruthValue v);
TruthValue conj(TruthValue a, TruthValue b);
TruthValue disj(TruthValue a, TruthValue b);

/// Truth order: F is bottom, T is top, B and N are incomparable.
bool entails(TruthValue a, TruthValue b);

/// Whether an option held by another decision maker may drift from `src` to
/// `dst` while the mover acts. Exactly seven pairs qualify:
/// (B,B) (B,F) (N,N) (N,F) (T,T) (T,B) (T,N).
bool moveAllowed(TruthValue src, TruthValue dst);

char toChar(TruthValue v);
std::optional<TruthValue> fromChar(char c);

/// Option-form import: Y -> T, N -> F, '-' -> B.
std::optional<TruthValue> fromBinaryChar(char c);
/// Inverse of fromBinaryChar; N has no binary spelling and yields '?'.
char toBinaryChar(TruthValue v);

/// A relation over (src, dst) value pairs, used for per-option move rules.
class TransitionSet {
 public:
  TransitionSet() = default;

  static TransitionSet all();
  static TransitionSet identity();
  /// Identity plus every move that switches the option on.
  static TransitionSet irreversibleSet();
  /// Identity plus every move that switches the option off.
  static TransitionSet irreversibleClear();

  bool contains(TruthValue src, TruthValue dst) const {
    return bits_.test(slot(src, dst));
  }
  TransitionSet& insert(TruthValue src, TruthValue dst) {
    bits_.set(slot(src, dst));
    return *this;
  }
  bool containsIdentity() const;
  std::size_t size() const { return bits_.count(); }

  friend bool operator==(const TransitionSet&, const TransitionSet&) = default;

 private:
  static std::size_t slot(TruthValue src, TruthValue dst) {
    return index(src) * 4 + index(dst);
  }
  std::bitset<16> bits_;
};

}  // namespace gmcr
