#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "protomc/cli.hpp"

using namespace protomc;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kSellerDir = std::string(PROTOMC_FIXTURES_DIR) + "/seller_purchaser/";

fs::path temp_file(const std::string& name, const std::string& content = "") {
  const fs::path dir = fs::temp_directory_path() / "protomc_cli_tests";
  fs::create_directories(dir);
  const fs::path path = dir / name;
  if (!content.empty()) {
    std::ofstream file(path, std::ios::binary);
    file << content;
  }
  return path;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("compose writes the fused net to stdout or a file") {
  const std::vector<std::string> base = {"compose", "--net", kSellerDir + "seller.net",
                                         "--net",   kSellerDir + "purchaser.net",
                                         "--sync",  kSellerDir + "trade.sync"};
  const RunResult to_stdout = run_cli(base);
  CHECK(to_stdout.code == 0);
  CHECK(to_stdout.err.empty());
  CHECK(to_stdout.out == slurp(kSellerDir + "composed.net"));

  const fs::path out_path = temp_file("composed_out.net");
  auto args = base;
  args.insert(args.end(), {"-o", out_path.string()});
  const RunResult to_file = run_cli(args);
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  CHECK(slurp(out_path) == to_stdout.out);
}

TEST_CASE("reach summarizes the state model and can export DOT") {
  const RunResult plain = run_cli({"reach", kSellerDir + "composed.net"});
  CHECK(plain.code == 0);
  CHECK(plain.out == "states: 6, edges: 6, deadlocks: 0\n");

  const fs::path dot_path = temp_file("model.dot");
  const RunResult with_dot =
      run_cli({"reach", kSellerDir + "composed.net", "--dot", dot_path.string()});
  CHECK(with_dot.code == 0);
  const std::string dot = slurp(dot_path);
  CHECK(dot.find("digraph statemodel {") != std::string::npos);
  CHECK(dot.find("s0 [label=\"s0: Purchaser.P0 Seller.GAV_F Seller.S0\", peripheries=2]") !=
        std::string::npos);
}

TEST_CASE("reach honors --max-states with exit code 3") {
  const fs::path net_path = temp_file("wide.net", R"(net Wide {
    place p1 init;
    place p2 init;
    place p3 init;
    place p4 init;
    trans t1 { in: p1; out:; }
    trans t2 { in: p2; out:; }
    trans t3 { in: p3; out:; }
    trans t4 { in: p4; out:; }
  })");
  const RunResult r = run_cli({"reach", net_path.string(), "--max-states", "3"});
  CHECK(r.code == 3);
  CHECK(r.err.find("error: state explosion: more than 3") != std::string::npos);
}

TEST_CASE("check reports per-property verdicts and exit status") {
  const RunResult all_hold =
      run_cli({"check", kSellerDir + "composed.net", kSellerDir + "props.ctl"});
  CHECK(all_hold.code == 0);
  CHECK(all_hold.out ==
        "liveness_cycle: HOLDS\n"
        "avail_needs_request: HOLDS\n"
        "avail_until_accept: HOLDS\n"
        "accept_needs_avail: HOLDS\n");
}

TEST_CASE("check --witness prints traces for both verdict kinds") {
  const fs::path props = temp_file("probe.ctl",
                                   "prop avail_forever: AG !Seller.GAV_T;\n"
                                   "prop can_accept: EF Purchaser.P3;\n");
  const RunResult r =
      run_cli({"check", kSellerDir + "composed.net", props.string(), "--witness"});
  CHECK(r.code == 1);
  CHECK(r.out ==
        "avail_forever: FAILS\n"
        "  counterexample:\n"
        "    s0: Purchaser.P0 Seller.GAV_F Seller.S0\n"
        "    -[Seller.ready]->\n"
        "    s1: Purchaser.P0 Seller.GAV_F Seller.S1\n"
        "    -[RFG]->\n"
        "    s2: Purchaser.P1 Seller.GAV_F Seller.S2\n"
        "    -[P_GAV_T]->\n"
        "    s3: Purchaser.P2 Seller.GAV_T Seller.S2\n"
        "can_accept: HOLDS\n"
        "  witness:\n"
        "    s0: Purchaser.P0 Seller.GAV_F Seller.S0\n"
        "    -[Seller.ready]->\n"
        "    s1: Purchaser.P0 Seller.GAV_F Seller.S1\n"
        "    -[RFG]->\n"
        "    s2: Purchaser.P1 Seller.GAV_F Seller.S2\n"
        "    -[P_GAV_T]->\n"
        "    s3: Purchaser.P2 Seller.GAV_T Seller.S2\n"
        "    -[GAC]->\n"
        "    s4: Purchaser.P3 Seller.GAV_T Seller.S3\n");
}

TEST_CASE("check marks lasso traces") {
  const fs::path net_path = temp_file("loop.net", R"(net Loop {
    place p init;
    trans spin { in: p; out: p; }
  })");
  const fs::path props = temp_file("loop.ctl", "prop never_stops: A[p U deadlock];\n");
  const RunResult r = run_cli({"check", net_path.string(), props.string(), "--witness"});
  CHECK(r.code == 1);
  CHECK(r.out ==
        "never_stops: FAILS\n"
        "  counterexample:\n"
        "    s0: p\n"
        "    -[spin]-> back to s0\n");
}

TEST_CASE("simulate fires transitions read from stdin") {
  const RunResult r = run_cli({"simulate", kSellerDir + "composed.net"},
                              "bogus\nSeller.ready\nquit\n");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "marking: Purchaser.P0 Seller.GAV_F Seller.S0\n"
        "enabled: Seller.ready\n"
        "> marking: Purchaser.P0 Seller.GAV_F Seller.S0\n"
        "enabled: Seller.ready\n"
        "> marking: Purchaser.P0 Seller.GAV_F Seller.S1\n"
        "enabled: RFG\n"
        "> ");
  CHECK(r.err == "'bogus' is not an enabled transition; enter one of the listed names or 'quit'\n");
  // EOF ends the session like "quit".
  CHECK(run_cli({"simulate", kSellerDir + "composed.net"}, "").code == 0);
}

TEST_CASE("usage and input errors exit with code 2") {
  SUBCASE("no subcommand") { CHECK(run_cli({}).code == 2); }
  SUBCASE("unknown subcommand") { CHECK(run_cli({"explode"}).code == 2); }
  SUBCASE("missing required option") { CHECK(run_cli({"compose"}).code == 2); }
  SUBCASE("missing file") {
    const RunResult r = run_cli({"reach", "no_such.net"});
    CHECK(r.code == 2);
    CHECK(r.err.find("cannot open") != std::string::npos);
  }
  SUBCASE("syntax error with position") {
    const fs::path bad = temp_file("bad.net", "net N {\n  place ;\n}\n");
    const RunResult r = run_cli({"reach", bad.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("2:9") != std::string::npos);
  }
}

TEST_CASE("--help succeeds and lists the subcommands") {
  const RunResult r = run_cli({"--help"});
  CHECK(r.code == 0);
  for (const char* name : {"compose", "reach", "check", "simulate"})
    CHECK(r.out.find(name) != std::string::npos);
}
