#include "gmcr/reachability.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <sstream>
#include <utility>

#include "gmcr/error.hpp"

namespace gmcr {

MoveGraph::MoveGraph(const ConflictModel& model) : model_(model) {
  for (const auto& d : model_.dms) dmIds_.push_back(d.id);
  const std::size_t cells = dmIds_.size() * model_.space.size();
  reach_.resize(cells);
  improve_.resize(cells);
}

std::size_t MoveGraph::slot(DmId dm, StateId s) const {
  auto it = std::find(dmIds_.begin(), dmIds_.end(), dm);
  if (it == dmIds_.end()) throw ModelError("unknown decision maker " + std::to_string(dm));
  if (!model_.space.contains(s)) throw ModelError("unknown state s" + std::to_string(s));
  const auto d = static_cast<std::size_t>(it - dmIds_.begin());
  return d * model_.space.size() + static_cast<std::size_t>(s - 1);
}

void MoveGraph::checkCoalition(const DmSet& coalition, StateId s) const {
  if (coalition.empty()) throw ModelError("coalition must not be empty");
  for (DmId dm : coalition)
    if (!model_.hasDm(dm)) throw ModelError("unknown decision maker " + std::to_string(dm));
  if (!model_.space.contains(s)) throw ModelError("unknown state s" + std::to_string(s));
}

StateSet MoveGraph::computeReachable(DmId dm, StateId s) const {
  if (model_.policy.kind == PolicyKind::Explicit) {
    StateSet row = model_.policy.row(dm, s);
    row.erase(s);
    return row;
  }

  const bool drift = model_.policy.kind == PolicyKind::EntailmentDrift;
  const auto& from = model_.space.at(s);
  StateSet out;
  const auto& states = model_.space.assignments();
  for (std::size_t k = 0; k < states.size(); ++k) {
    const StateId target = static_cast<StateId>(k + 1);
    if (target == s) continue;
    const auto& to = states[k];
    if (to.size() != from.size()) continue;
    bool ok = true;
    for (std::size_t o = 0; ok && o < from.size(); ++o) {
      const auto& option = model_.options[o];
      if (option.controller == dm)
        ok = option.ownTransitions.contains(from[o], to[o]);
      else
        ok = drift ? moveAllowed(from[o], to[o]) : from[o] == to[o];
    }
    if (ok) out.insert(target);
  }
  return out;
}

const StateSet& MoveGraph::reachable(DmId dm, StateId s) const {
  const auto k = slot(dm, s);
  {
    std::shared_lock lock(mutex_);
    if (reach_[k]) return *reach_[k];
  }
  auto computed = std::make_unique<StateSet>(computeReachable(dm, s));
  std::unique_lock lock(mutex_);
  if (!reach_[k]) reach_[k] = std::move(computed);
  return *reach_[k];
}

const StateSet& MoveGraph::unilateralImprovements(DmId dm, StateId s) const {
  const auto k = slot(dm, s);
  {
    std::shared_lock lock(mutex_);
    if (improve_[k]) return *improve_[k];
  }
  const auto& order = model_.preferenceOf(dm);
  auto computed = std::make_unique<StateSet>();
  for (StateId t : reachable(dm, s))
    if (comparePreference(order, t, s) == Preference::Preferred) computed->insert(t);
  std::unique_lock lock(mutex_);
  if (!improve_[k]) improve_[k] = std::move(computed);
  return *improve_[k];
}

StateSet MoveGraph::computeSequences(const DmSet& coalition, StateId s, Step step) const {
  // Search over (state, last mover); 0 marks "nobody has moved yet".
  std::set<std::pair<StateId, DmId>> visited;
  std::deque<std::pair<StateId, DmId>> frontier{{s, 0}};
  visited.insert({s, 0});
  StateSet out;
  while (!frontier.empty()) {
    auto [at, last] = frontier.front();
    frontier.pop_front();
    for (DmId mover : coalition) {
      if (mover == last) continue;
      const auto& next = step == Step::Any ? reachable(mover, at)
                                           : unilateralImprovements(mover, at);
      for (StateId t : next) {
        out.insert(t);
        if (visited.insert({t, mover}).second) frontier.emplace_back(t, mover);
      }
    }
  }
  return out;
}

const StateSet& MoveGraph::coalitionReachable(const DmSet& coalition, StateId s) const {
  checkCoalition(coalition, s);
  auto key = std::make_tuple(coalition, s, Step::Any);
  {
    std::shared_lock lock(mutex_);
    if (auto it = sequences_.find(key); it != sequences_.end()) return it->second;
  }
  auto computed = computeSequences(coalition, s, Step::Any);
  std::unique_lock lock(mutex_);
  return sequences_.try_emplace(std::move(key), std::move(computed)).first->second;
}

const StateSet& MoveGraph::coalitionUIReachable(const DmSet& coalition, StateId s) const {
  checkCoalition(coalition, s);
  auto key = std::make_tuple(coalition, s, Step::Improving);
  {
    std::shared_lock lock(mutex_);
    if (auto it = sequences_.find(key); it != sequences_.end()) return it->second;
  }
  auto computed = computeSequences(coalition, s, Step::Improving);
  std::unique_lock lock(mutex_);
  return sequences_.try_emplace(std::move(key), std::move(computed)).first->second;
}

StateSet MoveGraph::coalitionImprovements(const DmSet& coalition, StateId s) const {
  StateSet out;
  for (StateId t : coalitionReachable(coalition, s)) {
    const bool all = std::all_of(coalition.begin(), coalition.end(), [&](DmId dm) {
      return comparePreference(model_.preferenceOf(dm), t, s) == Preference::Preferred;
    });
    if (all) out.insert(t);
  }
  return out;
}

StateSet reachable(const ConflictModel& model, DmId dm, StateId s) {
  return MoveGraph(model).reachable(dm, s);
}

StateSet unilateralImprovements(const ConflictModel& model, DmId dm, StateId s) {
  return MoveGraph(model).unilateralImprovements(dm, s);
}

StateSet coalitionReachable(const ConflictModel& model, const DmSet& coalition, StateId s) {
  return MoveGraph(model).coalitionReachable(coalition, s);
}

StateSet coalitionUIReachable(const ConflictModel& model, const DmSet& coalition, StateId s) {
  return MoveGraph(model).coalitionUIReachable(coalition, s);
}

StateSet coalitionImprovements(const ConflictModel& model, const DmSet& coalition, StateId s) {
  return MoveGraph(model).coalitionImprovements(coalition, s);
}

namespace {

std::string quoted(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string exportGraph(const ConflictModel& model, std::optional<DmId> dm) {
  if (dm && !model.hasDm(*dm)) throw ModelError("unknown decision maker " + std::to_string(*dm));
  MoveGraph graph(model);
  std::ostringstream out;
  out << "digraph gmcr {\n";
  const auto n = static_cast<StateId>(model.space.size());
  for (StateId s = 1; s <= n; ++s)
    out << "  s" << s << " [label="
        << quoted("s" + std::to_string(s) + "\\n" +
                  formatAssignment(model.space.at(s), model.logic))
        << "];\n";
  for (StateId s = 1; s <= n; ++s)
    for (const auto& d : model.dms) {
      if (dm && d.id != *dm) continue;
      for (StateId t : graph.reachable(d.id, s))
        out << "  s" << s << " -> s" << t << " [label=" << quoted(d.name) << "];\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace gmcr
