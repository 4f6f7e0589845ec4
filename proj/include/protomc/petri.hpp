#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace protomc {

/// Component-qualified place name. Raw nets leave `component` empty; nets
/// produced by composition qualify every place with its component of origin.
struct PlaceId {
  std::string component;
  std::string local;

  auto operator<=>(const PlaceId&) const = default;

  /// "Component.Local", or just "Local" for raw nets.
  std::string str() const { return component.empty() ? local : component + "." + local; }
};

/// Component-qualified transition name. Synchronized transitions in a
/// composed net use the event name with an empty component.
struct TransitionId {
  std::string component;
  std::string local;

  auto operator<=>(const TransitionId&) const = default;

  std::string str() const { return component.empty() ? local : component + "." + local; }
};

/// A transition with its precondition and postcondition place sets.
/// pre and post may intersect (self-loop places). The optional label is the
/// hook the synchronization algebra attaches to.
struct Transition {
  TransitionId id;
  std::vector<PlaceId> pre;
  std::vector<PlaceId> post;
  std::optional<std::string> label;

  auto operator<=>(const Transition&) const = default;
};

/// The set of currently marked places of one net. 1-safe by construction:
/// a place is marked or it is not.
struct Marking {
  std::vector<PlaceId> marked;  // sorted, unique

  auto operator<=>(const Marking&) const = default;

  bool contains(const PlaceId& p) const;
};

/// A Petri net: places, transitions, and an initial marking. Arcs only ever
/// connect places and transitions because Transition holds place sets; the
/// bipartite constraint is structural, not checked.
struct PetriNet {
  std::string name;
  std::vector<PlaceId> places;          // sorted
  std::vector<Transition> transitions;  // sorted by id
  Marking initial;

  bool operator==(const PetriNet&) const = default;

  const Transition* find_transition(const TransitionId& id) const;
  bool has_place(const PlaceId& p) const;
};

/// One invariant violation found by validation. `subject` names the
/// offending identifier.
struct Violation {
  std::string subject;
  std::string message;
};

/// Sorts places, transitions, pre/post sets, and the initial marking into
/// name order. Does not deduplicate; duplicates are validation violations.
void canonicalize(PetriNet& net);

Marking make_marking(std::vector<PlaceId> places);

/// Checks every structural invariant. A valid net yields an empty report.
std::vector<Violation> validate_net(const PetriNet& net);

/// Transitions whose precondition set is contained in `m`, in name order.
/// Throws Error if `m` marks a place the net does not declare.
std::vector<TransitionId> enabled(const PetriNet& net, const Marking& m);

/// Fires `t`: preconditions are unmarked, postconditions become marked.
/// Throws Error unless `t` is enabled in `m`.
Marking fire(const PetriNet& net, const Marking& m, const TransitionId& t);

/// One entry per enabled transition, paired with the marking it yields.
std::vector<std::pair<TransitionId, Marking>> successors(const PetriNet& net, const Marking& m);

}  // namespace protomc
