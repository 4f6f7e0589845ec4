#include "protomc/corpus.hpp"

#include <optional>

#include "protomc/io.hpp"

namespace protomc {

namespace {

PlaceId place_id(const std::string& local) { return PlaceId{"", local}; }

struct NetBuilder {
  PetriNet net;

  explicit NetBuilder(std::string name) { net.name = std::move(name); }

  NetBuilder& place(const std::string& local, bool init = false) {
    net.places.push_back(place_id(local));
    if (init) net.initial.marked.push_back(place_id(local));
    return *this;
  }

  NetBuilder& trans(const std::string& name, std::optional<std::string> label,
                    const std::vector<std::string>& pre, const std::vector<std::string>& post) {
    Transition t;
    t.id = TransitionId{"", name};
    for (const auto& p : pre) t.pre.push_back(place_id(p));
    for (const auto& p : post) t.post.push_back(place_id(p));
    t.label = std::move(label);
    net.transitions.push_back(std::move(t));
    return *this;
  }

  PetriNet build() {
    canonicalize(net);
    return net;
  }
};

PetriNet goods_seller() {
  NetBuilder b("Seller");
  b.place("S0", true).place("S1").place("S2").place("S3");
  b.place("GAV_F", true).place("GAV_T");
  b.trans("ready", std::nullopt, {"S0"}, {"S1"})
      .trans("RFG_T", "RFG_T", {"S1"}, {"S2"})
      .trans("GAV_T", "GAV_T", {"S2", "GAV_F"}, {"S2", "GAV_T"})
      .trans("GAC_T", "GAC_T", {"S2", "GAV_T"}, {"S3", "GAV_T"})
      .trans("GAV_F", "GAV_F", {"S3", "GAV_T"}, {"S3", "GAV_F"})
      .trans("end", std::nullopt, {"S3", "GAV_F"}, {"S0", "GAV_F"});
  return b.build();
}

PetriNet goods_purchaser() {
  NetBuilder b("Purchaser");
  b.place("P0", true).place("P1").place("P2").place("P3");
  b.trans("RFG_T", "RFG_T", {"P0"}, {"P1"})
      .trans("GAV_T", "GAV_T", {"P1"}, {"P2"})
      .trans("GAC_T", "GAC_T", {"P2"}, {"P3"})
      .trans("GAV_F", "GAV_F", {"P3"}, {"P0"});
  return b.build();
}

const char* kGoodsSync = R"(# One event per message of the goods phase.
sync {
  event RFG {
    Seller: RFG_T;
    Purchaser: RFG_T;
  }
  event P_GAV_T {
    Seller: GAV_T;
    Purchaser: GAV_T;
  }
  event GAC {
    Seller: GAC_T;
    Purchaser: GAC_T;
  }
  event P_GAV_F {
    Seller: GAV_F;
    Purchaser: GAV_F;
  }
}
)";

const char* kGoodsProps = R"(# Goods-phase obligations.
# The restart target below is the plain conjunction "both parties back at
# their start states"; an alternative reading prefixes the pair with AX.
prop liveness_cycle: AG EF (Seller.S0 & Purchaser.P0);
prop avail_needs_request: AG ((!Seller.GAV_T & EX Seller.GAV_T) -> Purchaser.P1);
prop avail_until_accept: AG (Seller.GAV_T -> A[Seller.GAV_T U Purchaser.P3]);
prop accept_needs_avail: AG ((!Purchaser.P3 & EX Purchaser.P3) -> Seller.GAV_T);
)";

}  // namespace

Scenario seller_purchaser() {
  Scenario sc;
  sc.name = "seller_purchaser";
  sc.nets = {{"seller.net", save_net(goods_seller())},
             {"purchaser.net", save_net(goods_purchaser())}};
  sc.sync = kGoodsSync;
  sc.props = kGoodsProps;
  sc.manifest.states = 6;
  sc.manifest.edges = 6;
  sc.manifest.deadlocks = 0;
  sc.manifest.props = {{"liveness_cycle", true},
                       {"avail_needs_request", true},
                       {"avail_until_accept", true},
                       {"accept_needs_avail", true}};
  return sc;
}

StateModel until_triptych() {
  std::vector<PlaceId> atoms{place_id("q"), place_id("r")};
  std::vector<std::vector<std::size_t>> state_atoms{{0}, {0}, {1}};
  std::vector<RawEdge> edges{{0, "ab", 1}, {0, "ac", 2}, {1, "bb", 1}, {1, "bc", 2}};
  return make_model(std::move(atoms), state_atoms, edges, 0);
}

namespace {

PetriNet funds_seller() {
  NetBuilder b("Seller");
  b.place("S0", true).place("S1").place("S2").place("S3");
  b.place("S4").place("S5").place("S6").place("S7");
  b.place("GAV_F", true).place("GAV_T");
  b.trans("ready", std::nullopt, {"S0"}, {"S1"})
      .trans("RFG_T", "RFG_T", {"S1"}, {"S2"})
      .trans("GAV_T", "GAV_T", {"S2", "GAV_F"}, {"S2", "GAV_T"})
      .trans("GAC_T", "GAC_T", {"S2", "GAV_T"}, {"S3", "GAV_T"})
      .trans("GAV_F", "GAV_F", {"S3", "GAV_T"}, {"S3", "GAV_F"})
      .trans("goods_done", std::nullopt, {"S3", "GAV_F"}, {"S4", "GAV_F"})
      .trans("RFF_T", "RFF_T", {"S4"}, {"S5"})
      .trans("FAV_T", "FAV_T", {"S5"}, {"S6"})
      .trans("FAC_T", "FAC_T", {"S6"}, {"S7"})
      .trans("FAV_F", "FAV_F", {"S7"}, {"S0"});
  return b.build();
}

PetriNet funds_purchaser() {
  NetBuilder b("Purchaser");
  b.place("P0", true).place("P1").place("P2").place("P3");
  b.place("P4").place("P5").place("P6").place("P7");
  b.place("FAV_F", true).place("FAV_T");
  b.trans("RFG_T", "RFG_T", {"P0"}, {"P1"})
      .trans("GAV_T", "GAV_T", {"P1"}, {"P2"})
      .trans("GAC_T", "GAC_T", {"P2"}, {"P3"})
      .trans("GAV_F", "GAV_F", {"P3"}, {"P4"})
      .trans("funds_ready", std::nullopt, {"P4"}, {"P5"})
      .trans("RFF_T", "RFF_T", {"P5"}, {"P6"})
      .trans("FAV_T", "FAV_T", {"P6", "FAV_F"}, {"P6", "FAV_T"})
      .trans("FAC_T", "FAC_T", {"P6", "FAV_T"}, {"P7", "FAV_T"})
      .trans("FAV_F", "FAV_F", {"P7", "FAV_T"}, {"P7", "FAV_F"})
      .trans("end", std::nullopt, {"P7", "FAV_F"}, {"P0", "FAV_F"});
  return b.build();
}

const char* kFundsSync = R"(# Goods-phase events plus their funds-phase mirrors.
sync {
  event RFG {
    Seller: RFG_T;
    Purchaser: RFG_T;
  }
  event P_GAV_T {
    Seller: GAV_T;
    Purchaser: GAV_T;
  }
  event GAC {
    Seller: GAC_T;
    Purchaser: GAC_T;
  }
  event P_GAV_F {
    Seller: GAV_F;
    Purchaser: GAV_F;
  }
  event RFF {
    Seller: RFF_T;
    Purchaser: RFF_T;
  }
  event S_FAV_T {
    Seller: FAV_T;
    Purchaser: FAV_T;
  }
  event FAC {
    Seller: FAC_T;
    Purchaser: FAC_T;
  }
  event S_FAV_F {
    Seller: FAV_F;
    Purchaser: FAV_F;
  }
}
)";

const char* kFundsProps = R"(# Goods-phase obligations and their funds-phase mirrors.
# The restart target below is the plain conjunction "both parties back at
# their start states"; an alternative reading prefixes the pair with AX.
prop liveness_cycle: AG EF (Seller.S0 & Purchaser.P0);
prop avail_needs_request: AG ((!Seller.GAV_T & EX Seller.GAV_T) -> Purchaser.P1);
prop avail_until_accept: AG (Seller.GAV_T -> A[Seller.GAV_T U Purchaser.P3]);
prop accept_needs_avail: AG ((!Purchaser.P3 & EX Purchaser.P3) -> Seller.GAV_T);
prop favail_needs_request: AG ((!Purchaser.FAV_T & EX Purchaser.FAV_T) -> Seller.S5);
prop favail_until_accept: AG (Purchaser.FAV_T -> A[Purchaser.FAV_T U Seller.S7]);
prop faccept_needs_avail: AG ((!Seller.S7 & EX Seller.S7) -> Purchaser.FAV_T);
)";

}  // namespace

Scenario goods_and_funds() {
  Scenario sc;
  sc.name = "goods_and_funds";
  sc.nets = {{"seller.net", save_net(funds_seller())},
             {"purchaser.net", save_net(funds_purchaser())}};
  sc.sync = kFundsSync;
  sc.props = kFundsProps;
  sc.manifest.states = 14;
  sc.manifest.edges = 16;
  sc.manifest.deadlocks = 0;
  sc.manifest.props = {{"liveness_cycle", true},
                       {"avail_needs_request", true},
                       {"avail_until_accept", true},
                       {"accept_needs_avail", true},
                       {"favail_needs_request", true},
                       {"favail_until_accept", true},
                       {"faccept_needs_avail", true}};
  return sc;
}

}  // namespace protomc
