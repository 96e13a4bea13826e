#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "gmcr/model.hpp"
#include "gmcr/stability.hpp"

namespace gmcr {

enum class ReportFormat { Table, Csv };

std::optional<ReportFormat> parseReportFormat(std::string_view text);

/// One row per concept plus Pareto, one column per state; an equilibrium
/// cell holds "x". Byte-identical for equal reports.
std::string renderReport(const StabilityReport& report, ReportFormat format);

/// Comparison marks: "=" both, "A" only in A, "B" only in B, blank neither.
std::string renderComparison(const ReportComparison& comparison, ReportFormat format);

char markSymbol(Mark mark);

/// "s<k> = v1 v2 ..." per state, in the file spelling of the model's logic.
std::string renderStates(const ConflictModel& model);

/// "[reach] dm=<id> s<k> -> ..." per DM and state under the model's policy.
std::string renderReach(const ConflictModel& model, std::optional<DmId> dm = std::nullopt);

}  // namespace gmcr
