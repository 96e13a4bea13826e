#pragma once

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include "gmcr/model.hpp"

namespace gmcr {

/// Lazily evaluated move structure of one model. Results are cached per
/// (DM, state) and per (coalition, state); the cache is safe for concurrent
/// readers. The model must outlive the graph.
class MoveGraph {
 public:
  explicit MoveGraph(const ConflictModel& model);

  const ConflictModel& model() const { return model_; }

  /// R_i(s): one-step moves of `dm`, never containing `s`.
  const StateSet& reachable(DmId dm, StateId s) const;
  /// R_i^+(s): reachable states `dm` strictly prefers to `s`.
  const StateSet& unilateralImprovements(DmId dm, StateId s) const;

  /// States reachable through legal sequences of moves by coalition members,
  /// where no member moves twice in a row. Contains `s` only if some
  /// non-trivial sequence returns to it.
  const StateSet& coalitionReachable(const DmSet& coalition, StateId s) const;
  /// As coalitionReachable, but every step improves its mover's position.
  const StateSet& coalitionUIReachable(const DmSet& coalition, StateId s) const;
  /// Coalition-reachable states that every member strictly prefers to `s`.
  StateSet coalitionImprovements(const DmSet& coalition, StateId s) const;

 private:
  enum class Step { Any, Improving };

  StateSet computeReachable(DmId dm, StateId s) const;
  StateSet computeSequences(const DmSet& coalition, StateId s, Step step) const;
  std::size_t slot(DmId dm, StateId s) const;
  void checkCoalition(const DmSet& coalition, StateId s) const;

  const ConflictModel& model_;
  std::vector<DmId> dmIds_;

  mutable std::shared_mutex mutex_;
  mutable std::vector<std::unique_ptr<StateSet>> reach_;
  mutable std::vector<std::unique_ptr<StateSet>> improve_;
  mutable std::map<std::tuple<DmSet, StateId, Step>, StateSet> sequences_;
};

StateSet reachable(const ConflictModel& model, DmId dm, StateId s);
StateSet unilateralImprovements(const ConflictModel& model, DmId dm, StateId s);
StateSet coalitionReachable(const ConflictModel& model, const DmSet& coalition, StateId s);
StateSet coalitionUIReachable(const ConflictModel& model, const DmSet& coalition, StateId s);
StateSet coalitionImprovements(const ConflictModel& model, const DmSet& coalition, StateId s);

/// DOT digraph with one node per state and one arc per (DM, s -> s') move,
/// ordered by source state, then DM, then target. Restricts arcs to `dm`
/// when given.
std::string exportGraph(const ConflictModel& model, std::optional<DmId> dm = std::nullopt);

}  // namespace gmcr
