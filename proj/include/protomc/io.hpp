#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "protomc/compose.hpp"
#include "protomc/formula.hpp"
#include "protomc/petri.hpp"

namespace protomc {

// File formats (UTF-8, '#' starts a line comment):
//
//   netfile   := "net" Ident "{" (placeDecl | transDecl)* "}"
//   placeDecl := "place" Ident ("init")? ";"
//   transDecl := "trans" Ident ("label" Ident)? "{" "in" ":" identList ";"
//                                                   "out" ":" identList ";" "}"
//   identList := (Ident ("," Ident)*)?
//
//   syncfile  := "sync" "{" event* "}"
//   event     := "event" Ident "{" (Ident ":" Ident ";")+ "}"   # Net : Trans
//
//   propsfile := ("prop" Ident ":" formula ";")*
//
// Identifiers may carry one '.' qualifier (Component.Local); raw nets must
// use unqualified names, composed net files qualify places and carried-over
// transitions.

/// Parses and validates a net file. Throws ParseError on syntax errors and
/// Error carrying the validation report on semantic ones.
PetriNet load_net(std::string_view text);

/// Parses a sync file and validates it against the given nets.
SyncSpec load_sync(std::string_view text, std::span<const PetriNet> nets);

/// Parses a property file into named formulas; names must be unique.
std::vector<std::pair<std::string, FormulaPtr>> load_props(std::string_view text);

/// Canonical (name-sorted) rendering; load_net(save_net(n)) == n.
std::string save_net(const PetriNet& net);

}  // namespace protomc
