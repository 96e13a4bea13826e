#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gmcr/model.hpp"

namespace gmcr {

inline constexpr std::size_t kDefaultOracleBound = 64;

struct Discrepancy {
  /// Concept name, or "Pareto" (dm is 0 for Pareto rows).
  std::string row;
  DmId dm = 0;
  StateId state = 0;
  bool oracle = false;
  bool analyzed = false;
};

std::string toString(const Discrepancy& d);

/// Re-derives every stability verdict by exhaustive search that shares no
/// code with the analysis path (moves, sequences and preferences are all
/// recomputed from the raw model) and lists each cell where it disagrees
/// with analyze(). Throws ModelError above `bound` states.
std::vector<Discrepancy> oracleCheck(const ConflictModel& model,
                                     std::size_t bound = kDefaultOracleBound);

}  // namespace gmcr
