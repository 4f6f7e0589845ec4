#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "protomc/petri.hpp"

namespace protomc {

/// Event-synchronization specification: a global event set plus, per
/// component net, a partial mapping event -> labeled transition of that net.
struct SyncSpec {
  std::vector<std::string> events;
  // component name -> (event name -> local transition name)
  std::map<std::string, std::map<std::string, std::string>> maps;
};

/// Provenance of one transition of a composed net.
struct TransitionOrigin {
  enum class Kind { CarriedOver, Synchronized };

  Kind kind;
  std::string event;  // empty for CarriedOver
  // (component, local transition) constituents; exactly one for CarriedOver
  std::vector<std::pair<std::string, std::string>> parts;
};

/// A composed net plus per-transition provenance. origins[i] explains
/// net.transitions[i].
struct Composition {
  PetriNet net;
  std::vector<TransitionOrigin> origins;
};

/// Reports unknown components, unknown or unlabeled mapped transitions,
/// events synchronizing fewer than two components, dangling mappings, and
/// duplicate event names.
std::vector<Violation> validate_sync(std::span<const PetriNet> nets, const SyncSpec& spec);

/// Merges the component nets into one net: places become component-qualified,
/// unmapped transitions are carried over, and each event fuses its mapped
/// transitions into one transition whose pre/post sets are the unions of the
/// constituents'. Throws Error (with the validation report) if the inputs
/// fail validate_sync, the net names are not pairwise distinct, or an input
/// net already contains qualified names.
Composition compose(std::span<const PetriNet> nets, const SyncSpec& spec);

}  // namespace protomc
