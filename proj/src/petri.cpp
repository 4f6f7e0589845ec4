#include "protomc/petri.hpp"

#include <algorithm>
#include <iterator>

#include "protomc/errors.hpp"

namespace protomc {

bool Marking::contains(const PlaceId& p) const {
  return std::binary_search(marked.begin(), marked.end(), p);
}

const Transition* PetriNet::find_transition(const TransitionId& id) const {
  auto it = std::lower_bound(transitions.begin(), transitions.end(), id,
                             [](const Transition& t, const TransitionId& key) { return t.id < key; });
  if (it != transitions.end() && it->id == id) return &*it;
  return nullptr;
}

bool PetriNet::has_place(const PlaceId& p) const {
  return std::binary_search(places.begin(), places.end(), p);
}

Marking make_marking(std::vector<PlaceId> places) {
  std::sort(places.begin(), places.end());
  places.erase(std::unique(places.begin(), places.end()), places.end());
  return Marking{std::move(places)};
}

void canonicalize(PetriNet& net) {
  std::sort(net.places.begin(), net.places.end());
  for (auto& t : net.transitions) {
    std::sort(t.pre.begin(), t.pre.end());
    t.pre.erase(std::unique(t.pre.begin(), t.pre.end()), t.pre.end());
    std::sort(t.post.begin(), t.post.end());
    t.post.erase(std::unique(t.post.begin(), t.post.end()), t.post.end());
  }
  std::sort(net.transitions.begin(), net.transitions.end(),
            [](const Transition& a, const Transition& b) { return a.id < b.id; });
  std::sort(net.initial.marked.begin(), net.initial.marked.end());
  net.initial.marked.erase(std::unique(net.initial.marked.begin(), net.initial.marked.end()),
                           net.initial.marked.end());
}

std::vector<Violation> validate_net(const PetriNet& net) {
  std::vector<Violation> report;

  for (const auto& p : net.places) {
    if (p.local.empty())
      report.push_back({p.str(), "place has an empty local name"});
  }
  for (std::size_t i = 1; i < net.places.size(); ++i) {
    if (net.places[i] == net.places[i - 1])
      report.push_back({net.places[i].str(), "duplicate place name"});
  }

  for (std::size_t i = 0; i < net.transitions.size(); ++i) {
    const auto& t = net.transitions[i];
    if (t.id.local.empty())
      report.push_back({t.id.str(), "transition has an empty local name"});
    if (i > 0 && t.id == net.transitions[i - 1].id)
      report.push_back({t.id.str(), "duplicate transition name"});
    for (const auto& p : t.pre) {
      if (!net.has_place(p))
        report.push_back({p.str(), "transition " + t.id.str() + " reads undeclared place"});
    }
    for (const auto& p : t.post) {
      if (!net.has_place(p))
        report.push_back({p.str(), "transition " + t.id.str() + " writes undeclared place"});
    }
  }

  for (const auto& p : net.initial.marked) {
    if (!net.has_place(p))
      report.push_back({p.str(), "initial marking references undeclared place"});
  }

  return report;
}

namespace {

void require_marking_in_net(const PetriNet& net, const Marking& m) {
  for (const auto& p : m.marked) {
    if (!net.has_place(p))
      throw Error("marking references place " + p.str() + " which net " + net.name +
                  " does not declare");
  }
}

bool transition_enabled(const Transition& t, const Marking& m) {
  return std::includes(m.marked.begin(), m.marked.end(), t.pre.begin(), t.pre.end());
}

}  // namespace

std::vector<TransitionId> enabled(const PetriNet& net, const Marking& m) {
  require_marking_in_net(net, m);
  std::vector<TransitionId> result;
  for (const auto& t : net.transitions) {
    if (transition_enabled(t, m)) result.push_back(t.id);
  }
  return result;
}

Marking fire(const PetriNet& net, const Marking& m, const TransitionId& t) {
  require_marking_in_net(net, m);
  const Transition* trans = net.find_transition(t);
  if (trans == nullptr) throw Error("no transition named " + t.str() + " in net " + net.name);
  if (!transition_enabled(*trans, m))
    throw Error("transition " + t.str() + " is not enabled in the given marking");

  std::vector<PlaceId> without_pre;
  std::set_difference(m.marked.begin(), m.marked.end(), trans->pre.begin(), trans->pre.end(),
                      std::back_inserter(without_pre));
  std::vector<PlaceId> result;
  std::set_union(without_pre.begin(), without_pre.end(), trans->post.begin(), trans->post.end(),
                 std::back_inserter(result));
  return Marking{std::move(result)};
}

std::vector<std::pair<TransitionId, Marking>> successors(const PetriNet& net, const Marking& m) {
  require_marking_in_net(net, m);
  std::vector<std::pair<TransitionId, Marking>> result;
  for (const auto& t : net.transitions) {
    if (transition_enabled(t, m)) result.emplace_back(t.id, fire(net, m, t.id));
  }
  return result;
}

}  // namespace protomc
