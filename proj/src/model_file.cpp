#include "gmcr/model_file.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "gmcr/error.hpp"

namespace gmcr {
namespace {

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based
};

// Cursor over one line; columns are reported relative to the original line.
class LineReader {
 public:
  LineReader(std::string_view line, std::size_t lineNo, std::size_t offset = 0)
      : line_(line), lineNo_(lineNo), offset_(offset) {}

  void skipSpace() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
  }
  bool atEnd() {
    skipSpace();
    return pos_ >= line_.size();
  }
  std::size_t column() const { return offset_ + pos_ + 1; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(lineNo_, column(), what);
  }
  [[noreturn]] void failAt(std::size_t column, const std::string& what) const {
    throw ParseError(lineNo_, column, what);
  }

  Token word() {
    skipSpace();
    Token t{{}, column()};
    while (pos_ < line_.size() && !std::isspace(static_cast<unsigned char>(line_[pos_])))
      t.text += line_[pos_++];
    if (t.text.empty()) fail("unexpected end of line");
    return t;
  }

  std::string quoted() {
    skipSpace();
    if (pos_ >= line_.size() || line_[pos_] != '"') fail("expected a quoted label");
    ++pos_;
    std::string out;
    while (pos_ < line_.size() && line_[pos_] != '"') {
      if (line_[pos_] == '\\' && pos_ + 1 < line_.size()) ++pos_;
      out += line_[pos_++];
    }
    if (pos_ >= line_.size()) fail("unterminated label");
    ++pos_;
    return out;
  }

  /// Text up to (and consuming) `close`.
  std::string until(char close) {
    const std::size_t start = pos_;
    while (pos_ < line_.size() && line_[pos_] != close) ++pos_;
    if (pos_ >= line_.size()) fail(std::string("missing '") + close + "'");
    std::string out(line_.substr(start, pos_ - start));
    ++pos_;
    return out;
  }

  std::string rest() {
    skipSpace();
    std::string out(line_.substr(pos_));
    pos_ = line_.size();
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
    return out;
  }

  void expect(char c) {
    skipSpace();
    if (pos_ >= line_.size() || line_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    skipSpace();
    if (pos_ < line_.size() && line_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool acceptWord(std::string_view w) {
    skipSpace();
    if (line_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  int integer() {
    skipSpace();
    const std::size_t start = pos_;
    while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) ++pos_;
    int value = 0;
    auto [ptr, ec] = std::from_chars(line_.data() + start, line_.data() + pos_, value);
    if (start == pos_ || ec != std::errc()) {
      pos_ = start;
      fail("expected a number");
    }
    return value;
  }

  StateId stateRef() {
    skipSpace();
    if (pos_ >= line_.size() || line_[pos_] != 's') fail("expected a state reference like s3");
    ++pos_;
    const StateId s = integer();
    if (s < 1) fail("state ids start at 1");
    return s;
  }

  DmId dmRef() {
    skipSpace();
    if (!acceptWord("dm=")) fail("expected dm=<id>");
    return integer();
  }

 private:
  std::string_view line_;
  std::size_t lineNo_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

std::string_view stripComment(std::string_view line) {
  bool inQuotes = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    if (line[k] == '"') inQuotes = !inQuotes;
    if (line[k] == '#' && !inQuotes) return line.substr(0, k);
  }
  return line;
}

enum class StatesMode { Enumerate, Explicit, B4Import };

struct RawState {
  std::size_t line = 0;
  std::vector<Token> values;
};

std::optional<TransitionSet> parseMoves(std::string_view spec) {
  TransitionSet out;
  std::size_t k = 0;
  while (k < spec.size()) {
    if (k + 2 > spec.size()) return std::nullopt;
    auto src = fromChar(spec[k]);
    auto dst = fromChar(spec[k + 1]);
    if (!src || !dst) return std::nullopt;
    out.insert(*src, *dst);
    k += 2;
    if (k < spec.size()) {
      if (spec[k] != ',') return std::nullopt;
      ++k;
    }
  }
  return out;
}

std::string formatMoves(const TransitionSet& moves) {
  std::string out;
  for (auto a : kAllTruthValues)
    for (auto b : kAllTruthValues)
      if (moves.contains(a, b)) {
        if (!out.empty()) out += ',';
        out += toChar(a);
        out += toChar(b);
      }
  return out;
}

class ModelParser {
 public:
  ConflictModel parse(std::string_view text) {
    std::size_t lineNo = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++lineNo;
      std::string_view line = stripComment(text.substr(start, end - start));
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      handleLine(line, lineNo);
      start = end + 1;
    }
    return finish();
  }

 private:
  void handleLine(std::string_view line, std::size_t lineNo) {
    LineReader r(line, lineNo);
    if (r.atEnd()) return;
    if (r.accept('[')) {
      const std::string tag = r.until(']');
      if (tag.empty()) r.fail("empty section tag");
      section_ = tag;
      sectionLine_ = lineNo;
      const std::size_t bodyStart = r.column() - 1;
      LineReader body(line.substr(bodyStart), lineNo, bodyStart);
      if (section_ == "states") {
        statesHeader(body);
      } else if (!body.atEnd()) {
        sectionBody(body, lineNo);
      }
      return;
    }
    if (section_.empty()) r.fail("content outside of any section");
    sectionBody(r, lineNo);
  }

  void statesHeader(LineReader& r) {
    if (statesMode_) r.fail("duplicate [states] section");
    const auto mode = r.word();
    if (mode.text == "enumerate") statesMode_ = StatesMode::Enumerate;
    else if (mode.text == "explicit") statesMode_ = StatesMode::Explicit;
    else if (mode.text == "b4-import") statesMode_ = StatesMode::B4Import;
    else r.failAt(mode.column, "expected enumerate, explicit or b4-import");
    if (!r.atEnd()) r.fail("unexpected text after [states] mode");
  }

  void sectionBody(LineReader& r, std::size_t lineNo) {
    if (section_ == "logic") {
      const auto w = r.word();
      auto mode = parseLogicMode(w.text);
      if (!mode) r.failAt(w.column, "expected binary or b4");
      if (logic_) r.failAt(w.column, "duplicate [logic] section");
      logic_ = *mode;
    } else if (section_ == "dm") {
      const DmId id = r.integer();
      std::string name = r.rest();
      if (name.empty()) name = "DM" + std::to_string(id);
      model_.dms.push_back({id, name});
    } else if (section_ == "option") {
      parseOption(r);
    } else if (section_ == "states") {
      parseStateRow(r, lineNo);
    } else if (section_ == "policy") {
      const auto w = r.word();
      auto kind = parsePolicyKind(w.text);
      if (!kind) r.failAt(w.column, "expected fixed, drift or explicit");
      if (policy_) r.failAt(w.column, "duplicate [policy] section");
      policy_ = *kind;
    } else if (section_ == "reach") {
      parseReach(r, lineNo);
    } else if (section_ == "pref") {
      parsePref(r);
    } else {
      throw ParseError(sectionLine_, 1, "unknown section [" + section_ + "]");
    }
    if (!r.atEnd()) r.fail("unexpected trailing text");
  }

  void parseOption(LineReader& r) {
    OptionDef o;
    o.key = r.word().text;
    o.controller = r.dmRef();
    o.label = r.quoted();
    if (!r.atEnd()) {
      const auto w = r.word();
      if (w.text == "reversible") o.ownTransitions = TransitionSet::all();
      else if (w.text == "irreversible-set") o.ownTransitions = TransitionSet::irreversibleSet();
      else if (w.text == "irreversible-clear") o.ownTransitions = TransitionSet::irreversibleClear();
      else if (w.text.rfind("moves=", 0) == 0) {
        auto moves = parseMoves(std::string_view(w.text).substr(6));
        if (!moves) r.failAt(w.column, "malformed moves= list");
        o.ownTransitions = *moves;
      } else {
        r.failAt(w.column, "expected reversible, irreversible-set, irreversible-clear or moves=");
      }
    }
    model_.options.push_back(std::move(o));
  }

  void parseStateRow(LineReader& r, std::size_t lineNo) {
    if (!statesMode_ || *statesMode_ == StatesMode::Enumerate)
      r.fail("state rows require [states] explicit or b4-import");
    const std::size_t column = r.column();
    const StateId id = r.stateRef();
    if (static_cast<std::size_t>(id) != rawStates_.size() + 1)
      r.failAt(column, "expected s" + std::to_string(rawStates_.size() + 1) +
                           "; state rows must be numbered in order");
    r.expect('=');
    RawState row{lineNo, {}};
    while (!r.atEnd()) {
      auto t = r.word();
      if (t.text.size() != 1) r.failAt(t.column, "state values are single characters");
      row.values.push_back(std::move(t));
    }
    rawStates_.push_back(std::move(row));
  }

  void parseReach(LineReader& r, std::size_t lineNo) {
    const DmId dm = r.dmRef();
    r.skipSpace();
    const std::size_t column = r.column();
    const StateId from = r.stateRef();
    r.expect('-');
    r.expect('>');
    auto& rows = model_.policy.adjacency[dm];
    if (rows.count(from)) throw ParseError(lineNo, column, "duplicate reach row");
    auto& targets = rows[from];
    while (!r.atEnd()) targets.insert(r.stateRef());
    sawReach_ = true;
  }

  void parsePref(LineReader& r) {
    const DmId dm = r.dmRef();
    r.expect(':');
    std::vector<std::vector<StateId>> tiers{{r.stateRef()}};
    while (!r.atEnd()) {
      if (r.accept('>')) tiers.push_back({r.stateRef()});
      else if (r.accept('=')) tiers.back().push_back(r.stateRef());
      else r.fail("expected '>' or '='");
    }
    if (!prefs_) prefs_.emplace();
    prefs_->emplace_back(dm, std::move(tiers));
  }

  ConflictModel finish() {
    if (!logic_) throw ParseError(1, 1, "missing [logic] section");
    if (!statesMode_) throw ParseError(1, 1, "missing [states] section");
    model_.logic = *logic_;
    model_.policy.kind = policy_.value_or(PolicyKind::FixedOthers);
    if (sawReach_ && model_.policy.kind != PolicyKind::Explicit)
      throw ParseError(1, 1, "[reach] rows require [policy] explicit");

    if (*statesMode_ == StatesMode::Enumerate) {
      try {
        model_.space = enumerateStates(model_.options, model_.logic);
      } catch (const ModelError& e) {
        throw ParseError(1, 1, e.what());
      }
    } else {
      if (*statesMode_ == StatesMode::B4Import && model_.logic != LogicMode::B4)
        throw ParseError(1, 1, "[states] b4-import requires [logic] b4");
      std::vector<Assignment> rows;
      for (const auto& raw : rawStates_) {
        Assignment a;
        for (const auto& t : raw.values) {
          const char c = t.text[0];
          std::optional<TruthValue> v;
          if (*statesMode_ == StatesMode::B4Import || model_.logic == LogicMode::Binary)
            v = fromBinaryChar(c);
          else
            v = fromChar(c);
          if (!v) {
            const char* allowed = *statesMode_ == StatesMode::B4Import ? "Y, N or -"
                                  : model_.logic == LogicMode::Binary  ? "Y, N or -"
                                                                       : "T, F, B or N";
            throw ParseError(raw.line, t.column,
                             "invalid state value '" + t.text + "' (expected " + allowed + ")");
          }
          a.push_back(*v);
        }
        rows.push_back(std::move(a));
      }
      model_.space = StateSpace(std::move(rows));
    }
    model_.preferences = std::move(prefs_);
    return std::move(model_);
  }

  ConflictModel model_;
  std::string section_;
  std::size_t sectionLine_ = 0;
  std::optional<LogicMode> logic_;
  std::optional<PolicyKind> policy_;
  std::optional<StatesMode> statesMode_;
  std::vector<RawState> rawStates_;
  std::optional<std::vector<PreferenceOrder>> prefs_;
  bool sawReach_ = false;
};

}  // namespace

ConflictModel parseModel(std::string_view text) { return ModelParser().parse(text); }

std::string serializeModel(const ConflictModel& model) {
  std::ostringstream out;
  out << "[logic] " << toString(model.logic) << "\n";
  for (const auto& d : model.dms) out << "[dm] " << d.id << " " << d.name << "\n";
  for (const auto& o : model.options) {
    out << "[option] " << o.key << " dm=" << o.controller << " \"";
    for (char c : o.label) {
      if (c == '"' || c == '\\') out << '\\';
      out << c;
    }
    out << "\" ";
    if (o.ownTransitions == TransitionSet::all()) out << "reversible";
    else if (o.ownTransitions == TransitionSet::irreversibleSet()) out << "irreversible-set";
    else if (o.ownTransitions == TransitionSet::irreversibleClear()) out << "irreversible-clear";
    else out << "moves=" << formatMoves(o.ownTransitions);
    out << "\n";
  }

  bool enumerable = false;
  if (!model.options.empty()) {
    try {
      enumerable = enumerateStates(model.options, model.logic) == model.space;
    } catch (const ModelError&) {
    }
  }
  if (enumerable) {
    out << "[states] enumerate\n";
  } else {
    out << "[states] explicit\n";
    const auto n = static_cast<StateId>(model.space.size());
    for (StateId s = 1; s <= n; ++s) {
      out << "s" << s << " =";
      for (auto v : model.space.at(s))
        out << ' ' << (model.logic == LogicMode::Binary ? toBinaryChar(v) : toChar(v));
      out << "\n";
    }
  }

  out << "[policy] " << toString(model.policy.kind) << "\n";
  if (model.policy.kind == PolicyKind::Explicit)
    for (const auto& [dm, rows] : model.policy.adjacency)
      for (const auto& [from, targets] : rows) {
        if (targets.empty()) continue;
        out << "[reach] dm=" << dm << " s" << from << " ->";
        for (StateId t : targets) out << " s" << t;
        out << "\n";
      }

  if (model.preferences)
    for (const auto& p : *model.preferences) {
      out << "[pref] dm=" << p.dm() << " :";
      bool firstTier = true;
      for (const auto& tier : p.tiers()) {
        bool firstInTier = true;
        for (StateId s : tier) {
          out << (firstInTier ? (firstTier ? " " : " > ") : " = ") << "s" << s;
          firstInTier = false;
        }
        firstTier = false;
      }
      out << "\n";
    }
  return out.str();
}

std::map<StateId, StateId> parseStateMapping(std::string_view text) {
  std::map<StateId, StateId> out;
  std::size_t lineNo = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++lineNo;
    std::string_view line = stripComment(text.substr(start, end - start));
    start = end + 1;
    LineReader r(line, lineNo);
    if (r.atEnd()) continue;
    const std::size_t column = r.column();
    const StateId a = r.stateRef();
    r.expect('-');
    r.expect('>');
    const StateId b = r.stateRef();
    if (!r.atEnd()) r.fail("unexpected trailing text");
    if (!out.emplace(a, b).second) throw ParseError(lineNo, column, "state mapped twice");
  }
  return out;
}

}  // namespace gmcr
