#include "protomc/checker.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>

#include "protomc/errors.hpp"

namespace protomc {

StateSet pre_exists(const StateModel& model, const StateSet& z) {
  StateSet r(model.num_states());
  for (std::size_t s = 0; s < model.num_states(); ++s) {
    for (const auto& e : model.out[s]) {
      if (z.test(e.target)) {
        r.set(s);
        break;
      }
    }
  }
  return r;
}

StateSet pre_forall(const StateModel& model, const StateSet& z) {
  StateSet r(model.num_states());
  r.set();
  for (std::size_t s = 0; s < model.num_states(); ++s) {
    for (const auto& e : model.out[s]) {
      if (!z.test(e.target)) {
        r.reset(s);
        break;
      }
    }
  }
  return r;
}

namespace {

StateSet atom_set(const StateModel& model, const PlaceId& atom) {
  auto idx = model.atom_index(atom);
  if (!idx)
    throw Error("formula atom '" + atom.str() + "' does not name a place of the model");
  StateSet r(model.num_states());
  for (std::size_t s = 0; s < model.num_states(); ++s)
    if (model.atom_marked(s, *idx)) r.set(s);
  return r;
}

StateSet dead_set(const StateModel& model) {
  StateSet r(model.num_states());
  for (std::size_t s : deadlock_states(model)) r.set(s);
  return r;
}

StateSet fixpoint(bool least, std::size_t n,
                  const std::function<StateSet(const StateSet&)>& step, EvalStats* stats) {
  StateSet z(n);
  if (!least) z.set();
  std::vector<StateSet> iterates{z};
  for (;;) {
    StateSet next = step(z);
    iterates.push_back(next);
    if (next == z) break;
    z = std::move(next);
  }
  if (stats) stats->runs.push_back({least, std::move(iterates)});
  return z;
}

}  // namespace

StateSet sat(const StateModel& model, const Formula& f, EvalStats* stats) {
  const std::size_t n = model.num_states();
  switch (f.kind) {
    case FormulaKind::Atom:
      return atom_set(model, f.atom);
    case FormulaKind::Deadlock:
      return dead_set(model);
    case FormulaKind::Not:
      return ~sat(model, *f.lhs, stats);
    case FormulaKind::And:
      return sat(model, *f.lhs, stats) & sat(model, *f.rhs, stats);
    case FormulaKind::Or:
      return sat(model, *f.lhs, stats) | sat(model, *f.rhs, stats);
    case FormulaKind::Implies:
      return ~sat(model, *f.lhs, stats) | sat(model, *f.rhs, stats);
    case FormulaKind::ExistsNext:
      return pre_exists(model, sat(model, *f.lhs, stats));
    case FormulaKind::ForallNext:
      return pre_forall(model, sat(model, *f.lhs, stats));
    case FormulaKind::ExistsFuture: {
      const StateSet fs = sat(model, *f.lhs, stats);
      return fixpoint(
          true, n, [&](const StateSet& z) { return fs | pre_exists(model, z); }, stats);
    }
    case FormulaKind::ForallGlobally: {
      const StateSet fs = sat(model, *f.lhs, stats);
      return fixpoint(
          false, n, [&](const StateSet& z) { return fs & pre_forall(model, z); }, stats);
    }
    case FormulaKind::ExistsUntil: {
      const StateSet fs = sat(model, *f.lhs, stats);
      const StateSet gs = sat(model, *f.rhs, stats);
      return fixpoint(
          true, n, [&](const StateSet& z) { return gs | (fs & pre_exists(model, z)); }, stats);
    }
    case FormulaKind::ForallUntil: {
      const StateSet fs = sat(model, *f.lhs, stats);
      const StateSet gs = sat(model, *f.rhs, stats);
      const StateSet live = ~dead_set(model);
      return fixpoint(
          true, n,
          [&](const StateSet& z) { return gs | (fs & live & pre_forall(model, z)); }, stats);
    }
    case FormulaKind::ExistsWeakUntil: {
      const StateSet fs = sat(model, *f.lhs, stats);
      const StateSet gs = sat(model, *f.rhs, stats);
      const StateSet dead = dead_set(model);
      return fixpoint(
          false, n,
          [&](const StateSet& z) { return gs | (fs & (pre_exists(model, z) | dead)); }, stats);
    }
    case FormulaKind::ForallWeakUntil: {
      const StateSet fs = sat(model, *f.lhs, stats);
      const StateSet gs = sat(model, *f.rhs, stats);
      return fixpoint(
          false, n, [&](const StateSet& z) { return gs | (fs & pre_forall(model, z)); }, stats);
    }
  }
  throw Error("unhandled formula kind");
}

namespace {

// Shortest path from `start` to any state of `targets`, moving only through
// `interior` states before the final hop. Ties break by BFS discovery order,
// which follows edge order. The start state may itself be a target.
std::optional<std::vector<TraceStep>> bfs_path(const StateModel& model, std::size_t start,
                                               const StateSet& interior,
                                               const StateSet& targets) {
  if (targets.test(start)) return std::vector<TraceStep>{{start, std::nullopt}};
  if (!interior.test(start)) return std::nullopt;

  const std::size_t n = model.num_states();
  std::vector<char> visited(n, 0);
  std::vector<std::size_t> parent(n, 0);
  std::vector<std::uint32_t> via(n, 0);
  std::deque<std::size_t> queue;
  visited[start] = 1;
  queue.push_back(start);

  auto reconstruct = [&](std::size_t last_interior, std::uint32_t edge, std::size_t target) {
    std::vector<std::size_t> chain{last_interior};
    while (chain.back() != start) chain.push_back(parent[chain.back()]);
    std::reverse(chain.begin(), chain.end());
    std::vector<TraceStep> steps;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      steps.push_back({chain[i], model.transition_names[via[chain[i + 1]]]});
    steps.push_back({last_interior, model.transition_names[edge]});
    steps.push_back({target, std::nullopt});
    return steps;
  };

  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop_front();
    for (const auto& e : model.out[s]) {
      if (visited[e.target]) continue;
      if (targets.test(e.target)) return reconstruct(s, e.transition, e.target);
      if (!interior.test(e.target)) continue;
      visited[e.target] = 1;
      parent[e.target] = s;
      via[e.target] = e.transition;
      queue.push_back(e.target);
    }
  }
  return std::nullopt;
}

// Greedy walk from `start` inside `within`, stopping at the first state in
// `stop_at`, at a dead-end, or at a revisit (which closes a lasso). At every
// step the first outgoing edge leading back into `within` is taken.
Trace walk(const StateModel& model, std::size_t start, const StateSet& within,
           const StateSet& stop_at, Trace::Kind kind) {
  Trace trace{kind, {}, std::nullopt};
  std::vector<int> index_of(model.num_states(), -1);
  std::size_t cur = start;
  for (;;) {
    if (index_of[cur] != -1) {
      trace.loop_back = static_cast<std::size_t>(index_of[cur]);
      break;
    }
    index_of[cur] = static_cast<int>(trace.path.size());
    if (stop_at.test(cur) || model.out[cur].empty()) {
      trace.path.push_back({cur, std::nullopt});
      break;
    }
    const StateModel::Edge* chosen = nullptr;
    for (const auto& e : model.out[cur]) {
      if (within.test(e.target)) {
        chosen = &e;
        break;
      }
    }
    assert(chosen && "walk invariant: some successor stays within the set");
    trace.path.push_back({cur, model.transition_names[chosen->transition]});
    cur = chosen->target;
  }
  return trace;
}

std::optional<Trace> single_step(const StateModel& model, std::size_t start,
                                 const StateSet& into, Trace::Kind kind) {
  for (const auto& e : model.out[start]) {
    if (into.test(e.target)) {
      Trace t{kind, {}, std::nullopt};
      t.path.push_back({start, model.transition_names[e.transition]});
      t.path.push_back({e.target, std::nullopt});
      return t;
    }
  }
  return std::nullopt;
}

std::optional<Trace> as_trace(std::optional<std::vector<TraceStep>> steps, Trace::Kind kind) {
  if (!steps) return std::nullopt;
  return Trace{kind, std::move(*steps), std::nullopt};
}

std::optional<Trace> build_trace(const StateModel& model, const Formula& f,
                                 const StateSet& satisfying, bool holds) {
  const std::size_t s0 = model.initial;
  const std::size_t n = model.num_states();
  StateSet all(n);
  all.set();
  const auto witness = Trace::Kind::Witness;
  const auto counter = Trace::Kind::Counterexample;

  switch (f.kind) {
    case FormulaKind::ExistsNext: {
      if (!holds) return std::nullopt;
      return single_step(model, s0, sat(model, *f.lhs), witness);
    }
    case FormulaKind::ForallNext: {
      if (holds) return std::nullopt;
      return single_step(model, s0, ~sat(model, *f.lhs), counter);
    }
    case FormulaKind::ExistsFuture: {
      if (!holds) return std::nullopt;
      return as_trace(bfs_path(model, s0, all, sat(model, *f.lhs)), witness);
    }
    case FormulaKind::ForallGlobally: {
      if (holds) return std::nullopt;
      return as_trace(bfs_path(model, s0, all, ~sat(model, *f.lhs)), counter);
    }
    case FormulaKind::ExistsUntil: {
      if (!holds) return std::nullopt;
      const StateSet fs = sat(model, *f.lhs);
      const StateSet gs = sat(model, *f.rhs);
      return as_trace(bfs_path(model, s0, fs & ~gs, gs), witness);
    }
    case FormulaKind::ExistsWeakUntil: {
      if (!holds) return std::nullopt;
      // Walk inside sat(E[f W g]): ends at g, at a dead-end reached through
      // f-states, or loops among f-states forever.
      const StateSet gs = sat(model, *f.rhs);
      return walk(model, s0, satisfying, gs, witness);
    }
    case FormulaKind::ForallUntil: {
      if (holds) return std::nullopt;
      const StateSet fs = sat(model, *f.lhs);
      const StateSet gs = sat(model, *f.rhs);
      const StateSet not_g = ~gs;
      // A finite violation stays in !g and hits !f or a dead-end.
      StateSet finite_targets = (~fs | dead_set(model)) & not_g;
      if (auto p = bfs_path(model, s0, not_g, finite_targets)) return as_trace(std::move(p), counter);

      // Otherwise some path avoids g forever: restrict to !g states reachable
      // from the initial state, strip states with no successor inside the
      // set, and walk the residue until it closes a lasso.
      StateSet k(n);
      {
        std::deque<std::size_t> queue;
        if (not_g.test(s0)) {
          k.set(s0);
          queue.push_back(s0);
        }
        while (!queue.empty()) {
          const std::size_t s = queue.front();
          queue.pop_front();
          for (const auto& e : model.out[s]) {
            if (not_g.test(e.target) && !k.test(e.target)) {
              k.set(e.target);
              queue.push_back(e.target);
            }
          }
        }
      }
      for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t s = k.find_first(); s != StateSet::npos; s = k.find_next(s)) {
          bool has = false;
          for (const auto& e : model.out[s])
            if (k.test(e.target)) {
              has = true;
              break;
            }
          if (!has) {
            k.reset(s);
            changed = true;
          }
        }
      }
      assert(k.test(s0) && "a failing A-until without finite violation loops from the start");
      StateSet never(n);
      return walk(model, s0, k, never, counter);
    }
    case FormulaKind::ForallWeakUntil: {
      if (holds) return std::nullopt;
      const StateSet fs = sat(model, *f.lhs);
      const StateSet gs = sat(model, *f.rhs);
      // Weak-until violations are always finite: f fails strictly before any g.
      return as_trace(bfs_path(model, s0, ~gs, ~fs & ~gs), counter);
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

CheckResult check(const StateModel& model, FormulaPtr f) {
  CheckResult result;
  result.formula = f;
  result.satisfying = sat(model, *f);
  result.holds_at_initial = result.satisfying.test(model.initial);
  result.trace = build_trace(model, *f, result.satisfying, result.holds_at_initial);
  return result;
}

namespace {

// Every maximal path from a state is represented by a repeat-free sequence
// that either ends at a dead-end or closes back onto one of its own states.
// `cb` sees each representation's state sequence; returning false aborts.
template <typename Cb>
bool enumerate_reprs(const StateModel& model, std::size_t start, std::vector<std::size_t>& seq,
                     std::vector<int>& on_stack, Cb&& cb) {
  on_stack[start] = static_cast<int>(seq.size());
  seq.push_back(start);
  bool keep = true;
  if (model.out[start].empty()) {
    keep = cb(seq);
  } else {
    for (const auto& e : model.out[start]) {
      if (on_stack[e.target] >= 0)
        keep = cb(seq);
      else
        keep = enumerate_reprs(model, e.target, seq, on_stack, cb);
      if (!keep) break;
    }
  }
  seq.pop_back();
  on_stack[start] = -1;
  return keep;
}

// f-until-g over one representation: g must occur, with f at every earlier
// position; the weak form also accepts f at every position and no g at all.
bool until_on_repr(const std::vector<std::size_t>& seq, bool weak, const StateSet& fs,
                   const StateSet& gs) {
  for (std::size_t j = 0; j < seq.size(); ++j) {
    if (gs.test(seq[j])) {
      for (std::size_t i = 0; i < j; ++i)
        if (!fs.test(seq[i])) return false;
      return true;
    }
  }
  if (!weak) return false;
  for (std::size_t s : seq)
    if (!fs.test(s)) return false;
  return true;
}

StateSet until_states(const StateModel& model, bool forall, bool weak, const StateSet& fs,
                      const StateSet& gs) {
  const std::size_t n = model.num_states();
  StateSet r(n);
  std::vector<std::size_t> seq;
  std::vector<int> on_stack(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    bool verdict;
    if (forall) {
      verdict = enumerate_reprs(model, s, seq, on_stack, [&](const std::vector<std::size_t>& p) {
        return until_on_repr(p, weak, fs, gs);
      });
    } else {
      bool found = false;
      enumerate_reprs(model, s, seq, on_stack, [&](const std::vector<std::size_t>& p) {
        if (until_on_repr(p, weak, fs, gs)) found = true;
        return !found;
      });
      verdict = found;
    }
    if (verdict) r.set(s);
  }
  return r;
}

StateSet reachable_from(const StateModel& model, std::size_t start) {
  StateSet r(model.num_states());
  std::deque<std::size_t> queue;
  r.set(start);
  queue.push_back(start);
  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop_front();
    for (const auto& e : model.out[s]) {
      if (!r.test(e.target)) {
        r.set(e.target);
        queue.push_back(e.target);
      }
    }
  }
  return r;
}

StateSet oeval(const StateModel& model, const Formula& f) {
  const std::size_t n = model.num_states();
  switch (f.kind) {
    case FormulaKind::Atom:
      return atom_set(model, f.atom);
    case FormulaKind::Deadlock:
      return dead_set(model);
    case FormulaKind::Not:
      return ~oeval(model, *f.lhs);
    case FormulaKind::And:
      return oeval(model, *f.lhs) & oeval(model, *f.rhs);
    case FormulaKind::Or:
      return oeval(model, *f.lhs) | oeval(model, *f.rhs);
    case FormulaKind::Implies:
      return ~oeval(model, *f.lhs) | oeval(model, *f.rhs);
    case FormulaKind::ExistsNext: {
      const StateSet fs = oeval(model, *f.lhs);
      StateSet r(n);
      for (std::size_t s = 0; s < n; ++s)
        for (const auto& e : model.out[s])
          if (fs.test(e.target)) {
            r.set(s);
            break;
          }
      return r;
    }
    case FormulaKind::ForallNext: {
      const StateSet fs = oeval(model, *f.lhs);
      StateSet r(n);
      r.set();
      for (std::size_t s = 0; s < n; ++s)
        for (const auto& e : model.out[s])
          if (!fs.test(e.target)) {
            r.reset(s);
            break;
          }
      return r;
    }
    case FormulaKind::ExistsFuture: {
      const StateSet fs = oeval(model, *f.lhs);
      StateSet r(n);
      for (std::size_t s = 0; s < n; ++s)
        if ((reachable_from(model, s) & fs).any()) r.set(s);
      return r;
    }
    case FormulaKind::ForallGlobally: {
      const StateSet fs = oeval(model, *f.lhs);
      StateSet r(n);
      for (std::size_t s = 0; s < n; ++s)
        if (reachable_from(model, s).is_subset_of(fs)) r.set(s);
      return r;
    }
    case FormulaKind::ExistsUntil:
      return until_states(model, false, false, oeval(model, *f.lhs), oeval(model, *f.rhs));
    case FormulaKind::ForallUntil:
      return until_states(model, true, false, oeval(model, *f.lhs), oeval(model, *f.rhs));
    case FormulaKind::ExistsWeakUntil:
      return until_states(model, false, true, oeval(model, *f.lhs), oeval(model, *f.rhs));
    case FormulaKind::ForallWeakUntil:
      return until_states(model, true, true, oeval(model, *f.lhs), oeval(model, *f.rhs));
  }
  throw Error("unhandled formula kind");
}

}  // namespace

StateSet oracle_sat(const StateModel& model, const Formula& f, std::size_t state_bound) {
  if (model.num_states() > state_bound)
    throw OracleBoundError(model.num_states(), state_bound);
  return oeval(model, f);
}

}  // namespace protomc
