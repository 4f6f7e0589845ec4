#pragma once

#include <string>
#include <utility>
#include <vector>

#include "protomc/state_model.hpp"

namespace protomc {

/// Expected pipeline results for a bundled scenario.
struct Manifest {
  std::size_t states = 0;
  std::size_t edges = 0;
  std::size_t deadlocks = 0;
  std::vector<std::pair<std::string, bool>> props;  // name -> holds at initial
};

/// A complete scenario in the on-disk file formats, plus its manifest.
/// The same texts are versioned under fixtures/.
struct Scenario {
  std::string name;
  std::vector<std::pair<std::string, std::string>> nets;  // filename -> content
  std::string sync;
  std::string props;
  Manifest manifest;
};

/// Two-party goods-phase trade protocol: the seller offers goods, the
/// purchaser requests and accepts them, availability is tracked by explicit
/// status places, and four events synchronize the two views. 6 reachable
/// states forming one deterministic cycle; all four properties hold.
Scenario seller_purchaser();

/// Hand-built 3-state model separating weak from strong until: A{q} steps to
/// B{q} or C{r}, B loops or steps to C, C is a dead-end.
StateModel until_triptych();

/// Two-phase extension of seller_purchaser: after the goods phase the roles
/// mirror for a funds phase (the purchaser supplies funds, the seller
/// requests and accepts payment), then the cycle restarts.
Scenario goods_and_funds();

}  // namespace protomc
