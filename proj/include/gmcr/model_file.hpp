#pragma once

#include <map>
#include <string>
#include <string_view>

#include "gmcr/model.hpp"

namespace gmcr {

/// Reads the line-oriented model format:
///
///   [logic]  binary | b4
///   [dm]     <id> <name>
///   [option] <key> dm=<id> "<label>" [reversible|irreversible-set|irreversible-clear|moves=TT,TF,...]
///   [states] enumerate | explicit | b4-import
///   s<k> = <v1> <v2> ...
///   [policy] fixed | drift | explicit
///   [reach]  dm=<id> s<k> -> s<a> s<b> ...
///   [pref]   dm=<id> : s2 > s1 = s4 > ...
///
/// A section tag may stand alone on its line, in which case the following
/// untagged lines belong to it. '#' starts a comment. State rows use T F B N
/// in b4 mode and Y N in binary mode ('-' marks a wildcard entry); under
/// `[states] b4-import` rows are written in Y/N/- and re-encoded as Y->T,
/// N->F, '-'->B. Syntax errors throw ParseError with line and column;
/// semantic problems are left to validateModel().
ConflictModel parseModel(std::string_view text);

/// Canonical text; parseModel(serializeModel(m)) == m.
std::string serializeModel(const ConflictModel& model);

/// Reads `s<a> -> s<b>` lines (A state to B state) used by compare.
std::map<StateId, StateId> parseStateMapping(std::string_view text);

}  // namespace gmcr
