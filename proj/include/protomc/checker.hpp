#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "protomc/formula.hpp"
#include "protomc/state_model.hpp"

namespace protomc {

/// Set of model state indices.
using StateSet = boost::dynamic_bitset<>;

/// Iterates of one fixpoint computation, seed included. Least fixpoints grow
/// from the empty set, greatest fixpoints shrink from the full set; either
/// way iteration stops when the same set is produced twice.
struct FixpointRun {
  bool least;
  std::vector<StateSet> iterates;
};

struct EvalStats {
  std::vector<FixpointRun> runs;
};

/// { s : some successor of s is in Z }.
StateSet pre_exists(const StateModel& model, const StateSet& z);

/// { s : every successor of s is in Z }; vacuously includes dead-end states.
StateSet pre_forall(const StateModel& model, const StateSet& z);

/// Satisfying state set of `f`, by fixpoint iteration for the temporal
/// operators. Throws Error if an atom does not resolve to a place of the
/// model. Pass `stats` to record every fixpoint run.
StateSet sat(const StateModel& model, const Formula& f, EvalStats* stats = nullptr);

/// One step of an explanatory path. `fired` labels the edge to the next step
/// (or to path[loop_back] for the final step of a lasso).
struct TraceStep {
  std::size_t state;
  std::optional<std::string> fired;
};

/// Witness or counterexample path through the model. When loop_back is set
/// the trace is a lasso: the final step's edge returns to path[*loop_back].
struct Trace {
  enum class Kind { Witness, Counterexample };

  Kind kind;
  std::vector<TraceStep> path;
  std::optional<std::size_t> loop_back;
};

struct CheckResult {
  FormulaPtr formula;
  StateSet satisfying;
  bool holds_at_initial = false;
  std::optional<Trace> trace;
};

/// Evaluates `f` and explains the verdict at the initial state: a witness
/// path when an EX/EF/E-until-rooted formula holds, a counterexample when an
/// AX/AG/A-until-rooted formula fails. Reachability traces are shortest
/// paths; until violations are finite paths to a failure state or dead-end,
/// or lassos. Ties break by edge order, then state index.
CheckResult check(const StateModel& model, FormulaPtr f);

/// Reference semantics by direct enumeration of maximal paths (a maximal
/// path dead-ends or is infinite; infinite suffixes are represented by the
/// first revisit of a state on the enumeration stack). Exponential; refuses
/// models larger than `state_bound`.
StateSet oracle_sat(const StateModel& model, const Formula& f, std::size_t state_bound = 12);

}  // namespace protomc
