#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "protomc/petri.hpp"

namespace protomc {

enum class FormulaKind {
  Atom,
  Deadlock,
  Not,
  And,
  Or,
  Implies,
  ExistsNext,       // EX
  ForallNext,       // AX
  ExistsFuture,     // EF
  ForallGlobally,   // AG
  ExistsUntil,      // E[f U g]
  ForallUntil,      // A[f U g]
  ExistsWeakUntil,  // E[f W g]
  ForallWeakUntil,  // A[f W g]
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable CTL formula tree. Atoms name component-qualified places;
/// resolution against a model happens at evaluation time.
struct Formula {
  FormulaKind kind;
  PlaceId atom;    // Atom only
  FormulaPtr lhs;  // unary operand / left operand
  FormulaPtr rhs;  // binary right operand
};

bool operator==(const Formula& a, const Formula& b);
inline bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

namespace ctl {
FormulaPtr atom(std::string component, std::string place);
FormulaPtr deadlock();
FormulaPtr neg(FormulaPtr f);
FormulaPtr conj(FormulaPtr f, FormulaPtr g);
FormulaPtr disj(FormulaPtr f, FormulaPtr g);
FormulaPtr implies(FormulaPtr f, FormulaPtr g);
FormulaPtr ex(FormulaPtr f);
FormulaPtr ax(FormulaPtr f);
FormulaPtr ef(FormulaPtr f);
FormulaPtr ag(FormulaPtr f);
FormulaPtr eu(FormulaPtr f, FormulaPtr g);
FormulaPtr au(FormulaPtr f, FormulaPtr g);
FormulaPtr ew(FormulaPtr f, FormulaPtr g);
FormulaPtr aw(FormulaPtr f, FormulaPtr g);
}  // namespace ctl

/// Parses one formula; the whole input must be consumed.
/// Precedence: ! and the temporal prefixes bind tightest, then &, then |,
/// then -> (right-associative). Throws ParseError with 1-based position.
FormulaPtr parse_formula(std::string_view text);

/// Minimal-parentheses rendering; parse_formula(render_formula(f)) == f.
std::string render_formula(const Formula& f);

/// All Atom leaves, deduplicated and sorted.
std::vector<PlaceId> atoms(const Formula& f);

}  // namespace protomc
