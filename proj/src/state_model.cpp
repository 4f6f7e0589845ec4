#include "protomc/state_model.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "protomc/errors.hpp"

namespace protomc {

std::size_t StateModel::num_edges() const {
  std::size_t n = 0;
  for (const auto& es : out) n += es.size();
  return n;
}

std::optional<std::size_t> StateModel::atom_index(const PlaceId& p) const {
  auto it = std::lower_bound(atoms.begin(), atoms.end(), p);
  if (it != atoms.end() && *it == p) return static_cast<std::size_t>(it - atoms.begin());
  return std::nullopt;
}

Marking StateModel::marking_of(std::size_t state) const {
  std::vector<PlaceId> marked;
  const auto& bits = states[state];
  for (auto i = bits.find_first(); i != boost::dynamic_bitset<>::npos; i = bits.find_next(i))
    marked.push_back(atoms[i]);
  return Marking{std::move(marked)};
}

StateModel make_model(std::vector<PlaceId> atoms,
                      const std::vector<std::vector<std::size_t>>& state_atoms,
                      const std::vector<RawEdge>& edges,
                      std::size_t initial) {
  StateModel model;

  // Sort the atom universe, remembering where each input index went.
  std::vector<std::size_t> order(atoms.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return atoms[a] < atoms[b]; });
  std::vector<std::size_t> remap(atoms.size());
  std::vector<PlaceId> sorted_atoms;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    remap[order[pos]] = pos;
    sorted_atoms.push_back(atoms[order[pos]]);
  }
  model.atoms = std::move(sorted_atoms);

  for (const auto& sa : state_atoms) {
    boost::dynamic_bitset<> bits(model.atoms.size());
    for (std::size_t a : sa) bits.set(remap.at(a));
    model.states.push_back(std::move(bits));
  }

  std::vector<std::string> names;
  for (const auto& e : edges) names.push_back(e.transition);
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  model.transition_names = names;

  model.out.resize(model.states.size());
  for (const auto& e : edges) {
    auto it = std::lower_bound(names.begin(), names.end(), e.transition);
    model.out.at(e.source).push_back(
        {static_cast<std::uint32_t>(it - names.begin()), static_cast<std::uint32_t>(e.target)});
  }
  for (auto& es : model.out) {
    std::sort(es.begin(), es.end(), [&](const StateModel::Edge& a, const StateModel::Edge& b) {
      return std::pair(names[a.transition], a.target) < std::pair(names[b.transition], b.target);
    });
  }

  model.initial = initial;
  return model;
}

StateModel build_model(const PetriNet& net, std::size_t max_states) {
  StateModel model;
  model.atoms = net.places;
  for (const auto& t : net.transitions) model.transition_names.push_back(t.id.str());

  const std::size_t nplaces = net.places.size();
  auto place_index = [&](const PlaceId& p) {
    return static_cast<std::size_t>(
        std::lower_bound(net.places.begin(), net.places.end(), p) - net.places.begin());
  };

  // Compiled token game: enabled iff pre <= m, firing is (m & ~pre) | post.
  struct CompiledTransition {
    boost::dynamic_bitset<> pre, post;
  };
  std::vector<CompiledTransition> compiled;
  for (const auto& t : net.transitions) {
    CompiledTransition c{boost::dynamic_bitset<>(nplaces), boost::dynamic_bitset<>(nplaces)};
    for (const auto& p : t.pre) c.pre.set(place_index(p));
    for (const auto& p : t.post) c.post.set(place_index(p));
    compiled.push_back(std::move(c));
  }

  boost::dynamic_bitset<> initial(nplaces);
  for (const auto& p : net.initial.marked) initial.set(place_index(p));

  std::map<boost::dynamic_bitset<>, std::size_t> index_of;
  std::deque<std::size_t> frontier;
  index_of.emplace(initial, 0);
  model.states.push_back(initial);
  model.out.emplace_back();
  frontier.push_back(0);

  while (!frontier.empty()) {
    const std::size_t s = frontier.front();
    frontier.pop_front();
    for (std::size_t ti = 0; ti < compiled.size(); ++ti) {
      const auto& c = compiled[ti];
      const auto& m = model.states[s];
      if (!c.pre.is_subset_of(m)) continue;
      boost::dynamic_bitset<> next = (m & ~c.pre) | c.post;
      auto [it, inserted] = index_of.emplace(std::move(next), model.states.size());
      if (inserted) {
        if (model.states.size() >= max_states)
          throw ExplosionError(max_states, frontier.size() + 1);
        model.states.push_back(it->first);
        model.out.emplace_back();
        frontier.push_back(it->second);
      }
      model.out[s].push_back(
          {static_cast<std::uint32_t>(ti), static_cast<std::uint32_t>(it->second)});
    }
  }

  model.initial = 0;
  return model;
}

std::vector<std::size_t> deadlock_states(const StateModel& model) {
  std::vector<std::size_t> result;
  for (std::size_t s = 0; s < model.out.size(); ++s)
    if (model.out[s].empty()) result.push_back(s);
  return result;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string export_dot(const StateModel& model) {
  std::ostringstream os;
  os << "digraph statemodel {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t s = 0; s < model.num_states(); ++s) {
    os << "  s" << s << " [label=\"s" << s;
    const Marking m = model.marking_of(s);
    std::string joined;
    for (const auto& p : m.marked) {
      if (!joined.empty()) joined += " ";
      joined += p.str();
    }
    if (!joined.empty()) os << ": " << dot_escape(joined);
    os << "\"";
    if (s == model.initial) os << ", peripheries=2";
    os << "];\n";
  }
  for (std::size_t s = 0; s < model.num_states(); ++s) {
    for (const auto& e : model.out[s]) {
      os << "  s" << s << " -> s" << e.target << " [label=\""
         << dot_escape(model.transition_names[e.transition]) << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace protomc
