#include "protomc/compose.hpp"

#include <algorithm>
#include <set>

#include "protomc/errors.hpp"

namespace protomc {

namespace {

const PetriNet* find_net(std::span<const PetriNet> nets, const std::string& name) {
  for (const auto& n : nets)
    if (n.name == name) return &n;
  return nullptr;
}

PlaceId qualify(const std::string& component, const PlaceId& p) {
  return PlaceId{component, p.local};
}

}  // namespace

std::vector<Violation> validate_sync(std::span<const PetriNet> nets, const SyncSpec& spec) {
  std::vector<Violation> report;

  std::set<std::string> seen_events;
  for (const auto& e : spec.events) {
    if (!seen_events.insert(e).second) report.push_back({e, "duplicate event name"});
  }

  for (const auto& [component, mapping] : spec.maps) {
    const PetriNet* net = find_net(nets, component);
    if (net == nullptr) {
      report.push_back({component, "mapping names unknown component net"});
      continue;
    }
    for (const auto& [event, trans_name] : mapping) {
      if (!seen_events.count(event))
        report.push_back({event, "component " + component + " maps an undeclared event"});
      const Transition* t = net->find_transition(TransitionId{"", trans_name});
      if (t == nullptr) {
        report.push_back({trans_name, "event " + event + " maps to a transition absent from net " +
                                          component});
      } else if (!t->label.has_value()) {
        report.push_back({trans_name, "event " + event + " maps to unlabeled transition in net " +
                                          component});
      }
    }
  }

  for (const auto& e : spec.events) {
    std::size_t mapped_in = 0;
    for (const auto& [component, mapping] : spec.maps) mapped_in += mapping.count(e);
    if (mapped_in < 2)
      report.push_back({e, "unsynchronizable event: mapped in " + std::to_string(mapped_in) +
                               " component(s), need at least 2"});
  }

  return report;
}

Composition compose(std::span<const PetriNet> nets, const SyncSpec& spec) {
  if (nets.empty()) throw Error("composition requires at least one component net");

  std::set<std::string> names;
  for (const auto& n : nets) {
    if (!names.insert(n.name).second)
      throw Error("component nets must have pairwise distinct names; duplicate: " + n.name);
    for (const auto& p : n.places)
      if (!p.component.empty())
        throw Error("net " + n.name + " already contains qualified place " + p.str() +
                    "; composition inputs must be raw component nets");
    for (const auto& t : n.transitions)
      if (!t.id.component.empty())
        throw Error("net " + n.name + " already contains qualified transition " + t.id.str() +
                    "; composition inputs must be raw component nets");
  }

  if (auto report = validate_sync(nets, spec); !report.empty()) {
    std::string msg = "synchronization specification is invalid:";
    for (const auto& v : report) msg += "\n  " + v.subject + ": " + v.message;
    throw Error(msg);
  }

  Composition result;

  std::vector<std::string> sorted_names(names.begin(), names.end());
  std::string out_name;
  for (const auto& n : sorted_names) {
    if (!out_name.empty()) out_name += "_";
    out_name += n;
  }
  result.net.name = out_name;

  // component -> set of transition local names consumed by some event
  std::map<std::string, std::set<std::string>> synchronized;
  std::vector<std::string> events = spec.events;
  std::sort(events.begin(), events.end());
  for (const auto& e : events) {
    for (const auto& [component, mapping] : spec.maps) {
      auto it = mapping.find(e);
      if (it != mapping.end()) synchronized[component].insert(it->second);
    }
  }

  for (const auto& n : nets) {
    for (const auto& p : n.places) result.net.places.push_back(qualify(n.name, p));
    for (const auto& p : n.initial.marked)
      result.net.initial.marked.push_back(qualify(n.name, p));
    for (const auto& t : n.transitions) {
      if (synchronized[n.name].count(t.id.local)) continue;  // fused below
      Transition carried;
      carried.id = TransitionId{n.name, t.id.local};
      for (const auto& p : t.pre) carried.pre.push_back(qualify(n.name, p));
      for (const auto& p : t.post) carried.post.push_back(qualify(n.name, p));
      carried.label = t.label;
      result.net.transitions.push_back(std::move(carried));
      result.origins.push_back(
          {TransitionOrigin::Kind::CarriedOver, "", {{n.name, t.id.local}}});
    }
  }

  for (const auto& e : events) {
    Transition fused;
    fused.id = TransitionId{"", e};
    TransitionOrigin origin{TransitionOrigin::Kind::Synchronized, e, {}};
    for (const auto& [component, mapping] : spec.maps) {
      auto it = mapping.find(e);
      if (it == mapping.end()) continue;
      const PetriNet* net = find_net(nets, component);
      const Transition* part = net->find_transition(TransitionId{"", it->second});
      for (const auto& p : part->pre) fused.pre.push_back(qualify(component, p));
      for (const auto& p : part->post) fused.post.push_back(qualify(component, p));
      origin.parts.emplace_back(component, it->second);
    }
    result.net.transitions.push_back(std::move(fused));
    result.origins.push_back(std::move(origin));
  }

  // Sort transitions and provenance together, then canonicalize the rest.
  std::vector<std::size_t> order(result.net.transitions.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return result.net.transitions[a].id < result.net.transitions[b].id;
  });
  std::vector<Transition> ts;
  std::vector<TransitionOrigin> os;
  for (std::size_t i : order) {
    ts.push_back(std::move(result.net.transitions[i]));
    os.push_back(std::move(result.origins[i]));
  }
  result.net.transitions = std::move(ts);
  result.origins = std::move(os);
  canonicalize(result.net);

  return result;
}

}  // namespace protomc
