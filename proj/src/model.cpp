#include "gmcr/model.hpp"

#include <algorithm>
#include <functional>

#include "gmcr/error.hpp"

namespace gmcr {

StateSpace::StateSpace(std::vector<Assignment> assignments) : states_(std::move(assignments)) {
  for (std::size_t k = 0; k < states_.size(); ++k)
    index_.emplace(states_[k], static_cast<StateId>(k + 1));
}

const Assignment& StateSpace::at(StateId id) const {
  if (!contains(id)) throw ModelError("unknown state s" + std::to_string(id));
  return states_[static_cast<std::size_t>(id - 1)];
}

std::optional<StateId> StateSpace::find(const Assignment& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

StateSet StateSpace::ids() const {
  StateSet out;
  for (std::size_t k = 1; k <= states_.size(); ++k) out.insert(static_cast<StateId>(k));
  return out;
}

StateSpace enumerateStates(std::size_t optionCount, LogicMode mode, std::size_t cap) {
  if (optionCount == 0) throw ModelError("cannot enumerate states without options");
  static constexpr TruthValue kBinaryDigits[] = {TruthValue::T, TruthValue::F};
  static constexpr TruthValue kB4Digits[] = {TruthValue::T, TruthValue::F, TruthValue::N,
                                             TruthValue::B};
  const std::size_t base = mode == LogicMode::Binary ? 2 : 4;
  const TruthValue* digits = mode == LogicMode::Binary ? kBinaryDigits : kB4Digits;

  std::size_t total = 1;
  for (std::size_t k = 0; k < optionCount; ++k) {
    if (total > cap / base)
      throw ModelError(std::to_string(optionCount) + " options exceed the state cap of " +
                       std::to_string(cap));
    total *= base;
  }

  std::vector<Assignment> out;
  out.reserve(total);
  for (std::size_t n = 0; n < total; ++n) {
    Assignment a(optionCount);
    std::size_t rest = n;
    for (std::size_t pos = optionCount; pos-- > 0;) {
      a[pos] = digits[rest % base];
      rest /= base;
    }
    out.push_back(std::move(a));
  }
  return StateSpace(std::move(out));
}

StateSpace enumerateStates(const std::vector<OptionDef>& options, LogicMode mode,
                           std::size_t cap) {
  return enumerateStates(options.size(), mode, cap);
}

StateSpace restrictStates(const StateSpace& space, const std::vector<Assignment>& keep) {
  for (const auto& a : keep)
    if (!space.find(a))
      throw ModelError("assignment " + formatAssignment(a) + " is not in the state space");
  return StateSpace(keep);
}

Assignment binaryToB4(std::string_view column) {
  Assignment out;
  out.reserve(column.size());
  for (std::size_t k = 0; k < column.size(); ++k) {
    auto v = fromBinaryChar(column[k]);
    if (!v)
      throw ModelError("invalid option-form entry '" + std::string(1, column[k]) +
                       "' at position " + std::to_string(k + 1));
    out.push_back(*v);
  }
  return out;
}

std::string formatAssignment(const Assignment& a, LogicMode mode) {
  std::string out = "(";
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k) out += ',';
    out += mode == LogicMode::Binary ? toBinaryChar(a[k]) : toChar(a[k]);
  }
  return out + ")";
}

PreferenceOrder::PreferenceOrder(DmId dm, std::vector<std::vector<StateId>> tiers)
    : dm_(dm), tiers_(std::move(tiers)) {
  for (std::size_t t = 0; t < tiers_.size(); ++t)
    for (StateId s : tiers_[t]) rank_.emplace(s, t);
}

PreferenceOrder PreferenceOrder::strict(DmId dm, const std::vector<StateId>& chain) {
  std::vector<std::vector<StateId>> tiers;
  tiers.reserve(chain.size());
  for (StateId s : chain) tiers.push_back({s});
  return PreferenceOrder(dm, std::move(tiers));
}

PreferenceOrder PreferenceOrder::fromScores(DmId dm, const std::vector<double>& scores) {
  std::map<double, std::vector<StateId>, std::greater<>> byScore;
  for (std::size_t k = 0; k < scores.size(); ++k)
    byScore[scores[k]].push_back(static_cast<StateId>(k + 1));
  std::vector<std::vector<StateId>> tiers;
  for (auto& [score, states] : byScore) tiers.push_back(std::move(states));
  return PreferenceOrder(dm, std::move(tiers));
}

std::size_t PreferenceOrder::tierOf(StateId s) const {
  auto it = rank_.find(s);
  if (it == rank_.end())
    throw ModelError("state s" + std::to_string(s) + " is not ranked by DM " +
                     std::to_string(dm_));
  return it->second;
}

Preference comparePreference(const PreferenceOrder& order, StateId a, StateId b) {
  const auto ta = order.tierOf(a);
  const auto tb = order.tierOf(b);
  if (ta < tb) return Preference::Preferred;
  if (ta == tb) return Preference::Indifferent;
  return Preference::Dispreferred;
}

StateSet phiLessOrEqual(const PreferenceOrder& order, StateId s) {
  const auto& tiers = order.tiers();
  StateSet out;
  for (std::size_t t = order.tierOf(s); t < tiers.size(); ++t)
    out.insert(tiers[t].begin(), tiers[t].end());
  return out;
}

const StateSet& MovePolicy::row(DmId dm, StateId s) const {
  static const StateSet kEmpty;
  auto d = adjacency.find(dm);
  if (d == adjacency.end()) return kEmpty;
  auto r = d->second.find(s);
  return r == d->second.end() ? kEmpty : r->second;
}

namespace {

Adjacency withoutEmptyRows(const Adjacency& adj) {
  Adjacency out;
  for (const auto& [dm, rows] : adj)
    for (const auto& [s, targets] : rows)
      if (!targets.empty()) out[dm][s] = targets;
  return out;
}

std::string stateName(StateId s) { return "s" + std::to_string(s); }

}  // namespace

bool operator==(const MovePolicy& a, const MovePolicy& b) {
  return a.kind == b.kind && withoutEmptyRows(a.adjacency) == withoutEmptyRows(b.adjacency);
}

bool ConflictModel::hasDm(DmId dm) const {
  return std::any_of(dms.begin(), dms.end(), [dm](const auto& d) { return d.id == dm; });
}

const PreferenceOrder& ConflictModel::preferenceOf(DmId dm) const {
  if (!preferences) throw ModelError("model carries no preference information");
  for (const auto& p : *preferences)
    if (p.dm() == dm) return p;
  throw ModelError("no preference order for DM " + std::to_string(dm));
}

DmSet ConflictModel::dmIds() const {
  DmSet out;
  for (const auto& d : dms) out.insert(d.id);
  return out;
}

std::string toString(const Diagnostic& d) { return d.location + ": " + d.message; }

std::vector<Diagnostic> validateModel(const ConflictModel& model) {
  std::vector<Diagnostic> out;
  auto report = [&out](std::string where, std::string what) {
    out.push_back({std::move(where), std::move(what)});
  };

  if (model.dms.size() < 2) report("dm", "at least two decision makers are required");
  for (std::size_t k = 0; k < model.dms.size(); ++k)
    if (model.dms[k].id != static_cast<DmId>(k + 1))
      report("dm " + std::to_string(model.dms[k].id),
             "decision maker ids must be unique and numbered from 1 (expected " +
                 std::to_string(k + 1) + ")");

  if (model.options.empty()) report("option", "at least one option is required");
  std::set<std::string> keys;
  for (const auto& o : model.options) {
    const std::string where = "option " + o.key;
    if (!keys.insert(o.key).second) report(where, "duplicate option key");
    if (!model.hasDm(o.controller))
      report(where, "controller DM " + std::to_string(o.controller) + " does not exist");
    if (!o.ownTransitions.containsIdentity())
      report(where, "own transitions must contain every identity pair");
  }

  const auto& states = model.space.assignments();
  if (states.size() < 2) report("states", "at least two states are required");
  std::map<Assignment, StateId> seen;
  for (std::size_t k = 0; k < states.size(); ++k) {
    const StateId id = static_cast<StateId>(k + 1);
    const auto& a = states[k];
    if (a.size() != model.options.size()) {
      report(stateName(id), "has " + std::to_string(a.size()) + " values for " +
                                std::to_string(model.options.size()) + " options");
    }
    if (model.logic == LogicMode::Binary) {
      for (std::size_t pos = 0; pos < a.size(); ++pos) {
        const auto v = a[pos];
        const bool wildcardOk =
            v == TruthValue::B && model.policy.kind == PolicyKind::Explicit;
        if (v != TruthValue::T && v != TruthValue::F && !wildcardOk)
          report(stateName(id), std::string("value ") + toChar(v) + " at position " +
                                    std::to_string(pos + 1) +
                                    " is not allowed in binary mode");
      }
    }
    auto [it, fresh] = seen.emplace(a, id);
    if (!fresh)
      report(stateName(id), "duplicates the assignment of " + stateName(it->second));
  }

  if (model.preferences) {
    std::map<DmId, int> ordersPerDm;
    for (const auto& p : *model.preferences) {
      const std::string where = "pref dm=" + std::to_string(p.dm());
      ++ordersPerDm[p.dm()];
      if (!model.hasDm(p.dm())) report(where, "unknown decision maker");
      std::set<StateId> ranked;
      for (const auto& tier : p.tiers()) {
        if (tier.empty()) report(where, "empty tier");
        for (StateId s : tier) {
          if (!model.space.contains(s))
            report(where, "unknown state " + stateName(s));
          else if (!ranked.insert(s).second)
            report(where, stateName(s) + " is ranked more than once");
        }
      }
      for (StateId s = 1; s <= static_cast<StateId>(model.space.size()); ++s)
        if (!ranked.count(s)) report(where, stateName(s) + " is not ranked");
    }
    for (const auto& d : model.dms) {
      auto it = ordersPerDm.find(d.id);
      if (it == ordersPerDm.end())
        report("pref dm=" + std::to_string(d.id), "missing preference order");
      else if (it->second > 1)
        report("pref dm=" + std::to_string(d.id), "more than one preference order");
    }
  }

  if (model.policy.kind == PolicyKind::Explicit) {
    for (const auto& [dm, rows] : model.policy.adjacency) {
      const std::string where = "reach dm=" + std::to_string(dm);
      if (!model.hasDm(dm)) report(where, "unknown decision maker");
      for (const auto& [from, targets] : rows) {
        if (!model.space.contains(from)) report(where, "unknown state " + stateName(from));
        for (StateId to : targets) {
          if (!model.space.contains(to))
            report(where + " " + stateName(from), "unknown state " + stateName(to));
          else if (to == from)
            report(where + " " + stateName(from), "self-loop");
        }
      }
    }
  }
  return out;
}

std::string_view toString(LogicMode mode) {
  return mode == LogicMode::Binary ? "binary" : "b4";
}

std::string_view toString(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::FixedOthers: return "fixed";
    case PolicyKind::EntailmentDrift: return "drift";
    case PolicyKind::Explicit: return "explicit";
  }
  return "?";
}

std::optional<LogicMode> parseLogicMode(std::string_view text) {
  if (text == "binary") return LogicMode::Binary;
  if (text == "b4") return LogicMode::B4;
  return std::nullopt;
}

std::optional<PolicyKind> parsePolicyKind(std::string_view text) {
  if (text == "fixed") return PolicyKind::FixedOthers;
  if (text == "drift") return PolicyKind::EntailmentDrift;
  if (text == "explicit") return PolicyKind::Explicit;
  return std::nullopt;
}

}  // namespace gmcr
