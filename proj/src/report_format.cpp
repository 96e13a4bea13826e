#include "gmcr/report_format.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "gmcr/reachability.hpp"

namespace gmcr {
namespace {

using Grid = std::vector<std::vector<std::string>>;

std::string renderGrid(const Grid& grid, ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::Csv) {
    for (const auto& row : grid) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
      out << "\n";
    }
    return out.str();
  }
  std::vector<std::size_t> width;
  for (const auto& row : grid)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  for (const auto& row : grid) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  return out.str();
}

}  // namespace

std::optional<ReportFormat> parseReportFormat(std::string_view text) {
  if (text == "table") return ReportFormat::Table;
  if (text == "csv") return ReportFormat::Csv;
  return std::nullopt;
}

char markSymbol(Mark mark) {
  switch (mark) {
    case Mark::Both: return '=';
    case Mark::OnlyA: return 'A';
    case Mark::OnlyB: return 'B';
    case Mark::Neither: break;
  }
  return ' ';
}

std::string renderReport(const StabilityReport& report, ReportFormat format) {
  Grid grid;
  std::vector<std::string> header{"concept"};
  for (std::size_t s = 1; s <= report.stateCount; ++s) header.push_back("s" + std::to_string(s));
  grid.push_back(std::move(header));
  for (const auto& [name, states] : report.rows()) {
    std::vector<std::string> row{name};
    for (std::size_t s = 1; s <= report.stateCount; ++s)
      row.push_back(states.count(static_cast<StateId>(s)) ? "x" : "");
    grid.push_back(std::move(row));
  }
  return renderGrid(grid, format);
}

std::string renderComparison(const ReportComparison& comparison, ReportFormat format) {
  Grid grid;
  std::vector<std::string> headerB{"concept"};
  std::vector<std::string> headerA{"(A)"};
  for (const auto& col : comparison.columns) {
    headerB.push_back(col.b ? "s" + std::to_string(*col.b) : "-");
    headerA.push_back(col.a ? "s" + std::to_string(*col.a) : "-");
  }
  grid.push_back(std::move(headerB));
  grid.push_back(std::move(headerA));
  for (std::size_t r = 0; r < comparison.rowNames.size(); ++r) {
    std::vector<std::string> row{comparison.rowNames[r]};
    for (Mark m : comparison.marks[r])
      row.push_back(m == Mark::Neither ? "" : std::string(1, markSymbol(m)));
    grid.push_back(std::move(row));
  }
  return renderGrid(grid, format);
}

std::string renderStates(const ConflictModel& model) {
  std::ostringstream out;
  out << "#";
  for (const auto& o : model.options) out << ' ' << o.key;
  out << "\n";
  const auto n = static_cast<StateId>(model.space.size());
  for (StateId s = 1; s <= n; ++s) {
    out << "s" << s << " =";
    for (auto v : model.space.at(s))
      out << ' ' << (model.logic == LogicMode::Binary ? toBinaryChar(v) : toChar(v));
    out << "\n";
  }
  return out.str();
}

std::string renderReach(const ConflictModel& model, std::optional<DmId> dm) {
  MoveGraph graph(model);
  std::ostringstream out;
  const auto n = static_cast<StateId>(model.space.size());
  for (const auto& d : model.dms) {
    if (dm && d.id != *dm) continue;
    for (StateId s = 1; s <= n; ++s) {
      out << "[reach] dm=" << d.id << " s" << s << " ->";
      for (StateId t : graph.reachable(d.id, s)) out << " s" << t;
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace gmcr
