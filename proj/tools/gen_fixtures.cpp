// Regenerates fixtures/ from the bundled scenarios. Run from the repository
// root (or pass the fixtures directory as the only argument).
#include <filesystem>
#include <fstream>
#include <iostream>

#include "protomc/compose.hpp"
#include "protomc/corpus.hpp"
#include "protomc/io.hpp"

namespace fs = std::filesystem;

namespace {

void write(const fs::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  file << content;
  if (!file) {
    std::cerr << "failed to write " << path << "\n";
    std::exit(1);
  }
}

void emit(const protomc::Scenario& scenario, const fs::path& root) {
  const fs::path dir = root / scenario.name;
  fs::create_directories(dir);
  std::vector<protomc::PetriNet> nets;
  for (const auto& [filename, text] : scenario.nets) {
    write(dir / filename, text);
    nets.push_back(protomc::load_net(text));
  }
  write(dir / "trade.sync", scenario.sync);
  write(dir / "props.ctl", scenario.props);
  const protomc::SyncSpec spec = protomc::load_sync(scenario.sync, nets);
  write(dir / "composed.net", protomc::save_net(protomc::compose(nets, spec).net));
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path root = argc > 1 ? argv[1] : "fixtures";
  emit(protomc::seller_purchaser(), root);
  emit(protomc::goods_and_funds(), root);
  std::cout << "fixtures written under " << root.string() << "\n";
  return 0;
}
