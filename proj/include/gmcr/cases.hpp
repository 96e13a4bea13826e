#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "gmcr/model.hpp"

namespace gmcr {

/// Built-in conflicts.
enum class CaseId {
  PdBinary,          ///< Prisoner's dilemma, classical option form.
  PdB4Full,          ///< Prisoner's dilemma, all sixteen four-valued states.
  PdB4Reduced,       ///< Nine-state four-valued dilemma with stated moves and orders.
  ElmiraBinary,      ///< Elmira option form, state 9 carrying wildcards.
  ElmiraB4,          ///< Elmira re-encoded in four values.
  RussiaUkraineB4,   ///< Two-DM, one-option-each four-valued frame.
};

inline constexpr std::array<CaseId, 6> kAllCases = {
    CaseId::PdBinary, CaseId::PdB4Full,   CaseId::PdB4Reduced,
    CaseId::ElmiraBinary, CaseId::ElmiraB4, CaseId::RussiaUkraineB4};

/// pd-binary, pd-b4-16, pd-b4-9, elmira-binary, elmira-b4, russia-ukraine-b4.
std::string_view toString(CaseId id);
std::optional<CaseId> parseCaseId(std::string_view text);

/// Cases without stated preferences (pd-b4-16, both Elmira cases and
/// russia-ukraine-b4) come back with `preferences` unset.
ConflictModel loadCase(CaseId id);
/// Throws ModelError for unknown names.
ConflictModel loadCase(std::string_view name);

}  // namespace gmcr
