#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "protomc/petri.hpp"

namespace protomc {

/// Directed graph of reachable global markings. States are indexed in BFS
/// discovery order; atomic propositions are "place p is marked". Models may
/// also be built directly (see make_model) for hand-crafted Kripke graphs,
/// in which case distinct states may carry identical atom sets.
struct StateModel {
  struct Edge {
    std::uint32_t transition;  // index into transition_names
    std::uint32_t target;
  };

  std::vector<PlaceId> atoms;                    // sorted place universe
  std::vector<std::string> transition_names;     // edge label table
  std::vector<boost::dynamic_bitset<>> states;   // per state: atom bitset
  std::vector<std::vector<Edge>> out;            // per state, label-sorted
  std::size_t initial = 0;

  std::size_t num_states() const { return states.size(); }
  std::size_t num_edges() const;
  bool atom_marked(std::size_t state, std::size_t atom) const { return states[state][atom]; }
  std::optional<std::size_t> atom_index(const PlaceId& p) const;
  Marking marking_of(std::size_t state) const;
};

/// An edge for direct model construction.
struct RawEdge {
  std::size_t source;
  std::string transition;
  std::size_t target;
};

/// Builds a model directly from states (as atom-index sets), edges, and an
/// initial index. Reachability from `initial` is not required here; build_model
/// output always satisfies it.
StateModel make_model(std::vector<PlaceId> atoms,
                      const std::vector<std::vector<std::size_t>>& state_atoms,
                      const std::vector<RawEdge>& edges,
                      std::size_t initial);

/// Breadth-first reachability exploration from net.initial, one state per
/// distinct marking, edges per interleaved firing (exactly one transition per
/// step). Throws ExplosionError once more than max_states markings are found.
StateModel build_model(const PetriNet& net, std::size_t max_states = 1'000'000);

/// States with no outgoing edge, ascending.
std::vector<std::size_t> deadlock_states(const StateModel& model);

/// Graphviz DOT rendering: one node per state labeled with its sorted marked
/// places, edges labeled with transition names, initial state double-framed.
std::string export_dot(const StateModel& model);

}  // namespace protomc
