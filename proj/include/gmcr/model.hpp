#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gmcr/truth_value.hpp"

namespace gmcr {

using DmId = int;
using StateId = int;
using StateSet = std::set<StateId>;
using DmSet = std::set<DmId>;

/// One value per option, in option order.
using Assignment = std::vector<TruthValue>;

enum class LogicMode { Binary, B4 };

struct DecisionMaker {
  DmId id = 0;
  std::string name;

  friend bool operator==(const DecisionMaker&, const DecisionMaker&) = default;
};

struct OptionDef {
  std::string key;
  DmId controller = 0;
  std::string label;
  TransitionSet ownTransitions = TransitionSet::all();

  friend bool operator==(const OptionDef&, const OptionDef&) = default;
};

/// States are numbered 1..size() in insertion order.
class StateSpace {
 public:
  StateSpace() = default;
  explicit StateSpace(std::vector<Assignment> assignments);

  std::size_t size() const { return states_.size(); }
  bool empty() const { return states_.empty(); }
  bool contains(StateId id) const {
    return id >= 1 && static_cast<std::size_t>(id) <= states_.size();
  }
  /// Throws ModelError for ids outside 1..size().
  const Assignment& at(StateId id) const;
  /// First state carrying `a`, if any.
  std::optional<StateId> find(const Assignment& a) const;
  const std::vector<Assignment>& assignments() const { return states_; }
  StateSet ids() const;

  friend bool operator==(const StateSpace& a, const StateSpace& b) {
    return a.states_ == b.states_;
  }

 private:
  std::vector<Assignment> states_;
  std::map<Assignment, StateId> index_;
};

/// Default cap on enumerated state spaces.
inline constexpr std::size_t kDefaultStateCap = std::size_t{1} << 20;

/// Full Cartesian product over the options. Digit order is T, F per position
/// in binary mode and T, F, N, B in b4 mode, with the last option varying
/// fastest.
StateSpace enumerateStates(std::size_t optionCount, LogicMode mode,
                           std::size_t cap = kDefaultStateCap);
StateSpace enumerateStates(const std::vector<OptionDef>& options, LogicMode mode,
                           std::size_t cap = kDefaultStateCap);

/// Sub-space in the order of `keep`, renumbered from 1.
StateSpace restrictStates(const StateSpace& space, const std::vector<Assignment>& keep);

/// Re-encodes an option-form column (Y, N, -) as a four-valued assignment.
Assignment binaryToB4(std::string_view column);

/// "(T,F,B)" in b4 mode; binary mode spells values Y, N and '-'.
std::string formatAssignment(const Assignment& a, LogicMode mode = LogicMode::B4);

enum class Preference { Preferred, Indifferent, Dispreferred };

/// A weak order stored as tiers; earlier tiers are strictly preferred and
/// states sharing a tier are indifferent.
class PreferenceOrder {
 public:
  PreferenceOrder() = default;
  PreferenceOrder(DmId dm, std::vector<std::vector<StateId>> tiers);

  /// Strict chain, most preferred first.
  static PreferenceOrder strict(DmId dm, const std::vector<StateId>& chain);
  /// Higher score is better; equal scores tie. scores[k] belongs to state k+1.
  static PreferenceOrder fromScores(DmId dm, const std::vector<double>& scores);

  DmId dm() const { return dm_; }
  const std::vector<std::vector<StateId>>& tiers() const { return tiers_; }
  /// Tier index of `s`; throws ModelError if `s` is not ranked.
  std::size_t tierOf(StateId s) const;
  bool ranks(StateId s) const { return rank_.count(s) != 0; }

  friend bool operator==(const PreferenceOrder& a, const PreferenceOrder& b) {
    return a.dm_ == b.dm_ && a.tiers_ == b.tiers_;
  }

 private:
  DmId dm_ = 0;
  std::vector<std::vector<StateId>> tiers_;
  std::map<StateId, std::size_t> rank_;
};

Preference comparePreference(const PreferenceOrder& order, StateId a, StateId b);

/// States the order's owner likes no more than `s`, including `s` itself.
StateSet phiLessOrEqual(const PreferenceOrder& order, StateId s);

enum class PolicyKind { FixedOthers, EntailmentDrift, Explicit };

using Adjacency = std::map<DmId, std::map<StateId, StateSet>>;

struct MovePolicy {
  PolicyKind kind = PolicyKind::FixedOthers;
  /// Only consulted for PolicyKind::Explicit. Missing rows are empty.
  Adjacency adjacency;

  /// Stored row, or an empty set.
  const StateSet& row(DmId dm, StateId s) const;

  /// Empty rows are ignored when comparing.
  friend bool operator==(const MovePolicy& a, const MovePolicy& b);
};

struct ConflictModel {
  std::vector<DecisionMaker> dms;
  std::vector<OptionDef> options;
  LogicMode logic = LogicMode::B4;
  StateSpace space;
  /// Absent when the conflict ships without preference information.
  std::optional<std::vector<PreferenceOrder>> preferences;
  MovePolicy policy;

  bool hasPreferences() const { return preferences.has_value(); }
  bool hasDm(DmId dm) const;
  /// Throws ModelError when preferences are absent or the DM has none.
  const PreferenceOrder& preferenceOf(DmId dm) const;
  DmSet dmIds() const;

  friend bool operator==(const ConflictModel&, const ConflictModel&) = default;
};

struct Diagnostic {
  std::string location;
  std::string message;
};

std::string toString(const Diagnostic& d);

/// One diagnostic per violated invariant; empty means the model is usable.
std::vector<Diagnostic> validateModel(const ConflictModel& model);

std::string_view toString(LogicMode mode);
std::string_view toString(PolicyKind kind);
std::optional<LogicMode> parseLogicMode(std::string_view text);
/// Accepts the file spellings fixed, drift and explicit.
std::optional<PolicyKind> parsePolicyKind(std::string_view text);

}  // namespace gmcr
