#include "support.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace c24::test {

std::filesystem::path fixture(const std::string& name) { return std::filesystem::path(C24_TEST_FIXTURES) / name; }

GammaFixture load_gamma(int k) {
  std::ifstream in(fixture("gamma" + std::to_string(k) + ".txt"));
  if (!in) throw std::runtime_error("missing gamma fixture " + std::to_string(k));
  GammaFixture out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "generator") {
      int g = 0;
      ls >> g;
      std::array<std::array<long long, 5>, 5> rows{};
      for (auto& row : rows) {
        std::getline(in, line);
        std::istringstream rs(line);
        for (auto& x : row) rs >> x;
      }
      out.generators[g - 1] = HalfMatrix5::from_doubled(rows);
    } else if (tag == "relator") {
      out.relators.push_back(parse_word(line.substr(line.find(' ') + 1)));
    } else {
      throw std::runtime_error("bad gamma fixture line: " + line);
    }
  }
  return out;
}

SidePairing with_row(SidePairing p, int side, int symmetry) {
  const Cell24Model& cell = standard_cell();
  const int j = p.partner[side];
  for (int q = 0; q < kVerticesPerSide; ++q) {
    const int v = cell.side_vertices[side][q];
    const int w = cell.symmetries[symmetry].vertex_perm[v];
    p.images[side][q] = static_cast<std::uint8_t>(w);
    p.images[j][cell.vertex_slot(j, w)] = static_cast<std::uint8_t>(v);
  }
  return p;
}

}  // namespace c24::test
