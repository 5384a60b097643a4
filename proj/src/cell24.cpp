#include "c24/cell24.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>
#include <string>

namespace c24 {

namespace {

std::uint64_t perm_key(const Permutation24& p) {
  // 24 entries of 5 bits do not fit in 64 bits; the first 12 entries already
  // determine a symmetry (they span R^5), so hash those.
  std::uint64_t k = 0;
  for (int i = 0; i < 12; ++i) k = k << 5 | p[i];
  return k;
}

std::uint64_t side_map_key(int side, const SideVertexImages& images) {
  std::uint64_t k = static_cast<std::uint64_t>(side);
  for (auto x : images) k = k << 5 | x;
  return k;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("24-cell model invariant failed: " + what);
}

}  // namespace

std::array<HalfVec5, kSides> standard_normals() {
  static const std::array<std::array<long long, 5>, kSides> rows = {{
      {1, 1, 0, 0, 1},  {-1, 1, 0, 0, 1},  {1, -1, 0, 0, 1},  {-1, -1, 0, 0, 1},
      {1, 0, 1, 0, 1},  {-1, 0, 1, 0, 1},  {1, 0, -1, 0, 1},  {-1, 0, -1, 0, 1},
      {0, 1, 1, 0, 1},  {0, -1, 1, 0, 1},  {0, 1, -1, 0, 1},  {0, -1, -1, 0, 1},
      {1, 0, 0, 1, 1},  {-1, 0, 0, 1, 1},  {1, 0, 0, -1, 1},  {-1, 0, 0, -1, 1},
      {0, 1, 0, 1, 1},  {0, -1, 0, 1, 1},  {0, 1, 0, -1, 1},  {0, -1, 0, -1, 1},
      {0, 0, 1, 1, 1},  {0, 0, -1, 1, 1},  {0, 0, 1, -1, 1},  {0, 0, -1, -1, 1},
  }};
  std::array<HalfVec5, kSides> out;
  for (int i = 0; i < kSides; ++i) out[i] = HalfVec5::from_integers(rows[i]);
  return out;
}

std::array<HalfVec5, kVertices> standard_vertices() {
  std::array<HalfVec5, kVertices> out;
  // v_1..v_16: (+-1/2, ..., 1) with signs in binary order, minus first.
  for (int k = 0; k < 16; ++k) {
    std::array<long long, 5> d{};
    for (int c = 0; c < 4; ++c) d[c] = (k >> (3 - c) & 1) ? 1 : -1;
    d[4] = 2;
    out[k] = HalfVec5::from_doubled(d);
  }
  // v_17..v_24: +-e_c + e_5.
  for (int c = 0; c < 4; ++c) {
    for (int s = 0; s < 2; ++s) {
      std::array<long long, 5> d{};
      d[c] = s == 0 ? 2 : -2;
      d[4] = 2;
      out[16 + 2 * c + s] = HalfVec5::from_doubled(d);
    }
  }
  return out;
}

std::array<HalfMatrix5, 4> symmetry_generators() {
  return {
      HalfMatrix5::from_doubled({{{1, 1, 1, 1, 0},
                                  {1, 1, -1, -1, 0},
                                  {1, -1, 1, -1, 0},
                                  {1, -1, -1, 1, 0},
                                  {0, 0, 0, 0, 2}}}),
      HalfMatrix5::from_doubled({{{2, 0, 0, 0, 0},
                                  {0, 2, 0, 0, 0},
                                  {0, 0, 2, 0, 0},
                                  {0, 0, 0, -2, 0},
                                  {0, 0, 0, 0, 2}}}),
      HalfMatrix5::from_doubled({{{2, 0, 0, 0, 0},
                                  {0, 2, 0, 0, 0},
                                  {0, 0, 0, 2, 0},
                                  {0, 0, 2, 0, 0},
                                  {0, 0, 0, 0, 2}}}),
      HalfMatrix5::from_doubled({{{2, 0, 0, 0, 0},
                                  {0, 0, 2, 0, 0},
                                  {0, 2, 0, 0, 0},
                                  {0, 0, 0, 2, 0},
                                  {0, 0, 0, 0, 2}}}),
  };
}

std::vector<LorentzMatrix> generate_symmetry_group() {
  std::vector<LorentzMatrix> gens;
  for (const auto& g : symmetry_generators()) gens.push_back(LorentzMatrix::from(g));

  std::vector<LorentzMatrix> group{LorentzMatrix::identity()};
  std::unordered_map<std::size_t, std::vector<std::size_t>> seen;
  seen[group[0].hash()].push_back(0);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t at = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      LorentzMatrix next = g * group[at];
      auto& bucket = seen[next.hash()];
      bool known = std::any_of(bucket.begin(), bucket.end(), [&](std::size_t k) { return group[k] == next; });
      if (known) continue;
      if (group.size() >= static_cast<std::size_t>(kSymmetries))
        throw std::logic_error("symmetry closure exceeded 1152 elements");
      bucket.push_back(group.size());
      queue.push_back(group.size());
      group.push_back(std::move(next));
    }
  }
  if (group.size() != static_cast<std::size_t>(kSymmetries))
    throw std::logic_error("symmetry closure has " + std::to_string(group.size()) + " elements, expected 1152");
  return group;
}

std::array<std::vector<int>, kSides> printed_side_vertex_lists() {
  return {{
      {13, 14, 15, 16, 19},     {5, 6, 7, 8, 18, 19},     {9, 10, 11, 12, 17, 20},  {1, 2, 3, 4, 18, 20},
      {11, 12, 15, 16, 17, 21}, {3, 4, 7, 8, 18, 21},     {9, 10, 13, 14, 17, 22},  {1, 2, 5, 6, 18, 22},
      {7, 8, 15, 16, 19, 21},   {3, 4, 11, 12, 20, 21},   {5, 6, 13, 14, 19, 22},   {1, 2, 9, 10, 20, 22},
      {10, 12, 14, 16, 17, 23}, {2, 4, 6, 8, 18, 23},     {9, 11, 13, 15, 17, 24},  {1, 3, 5, 7, 18, 24},
      {6, 8, 14, 16, 19, 23},   {2, 4, 10, 12, 20, 23},   {5, 7, 13, 15, 19, 24},   {1, 3, 9, 11, 20, 24},
      {4, 8, 12, 16, 21, 23},   {2, 6, 10, 14, 22, 23},   {3, 7, 11, 15, 21, 24},   {1, 5, 9, 13, 22, 24},
  }};
}

Cell24Model build_standard_cell() {
  Cell24Model m;
  m.normals = standard_normals();
  m.vertices = standard_vertices();

  for (int s = 0; s < kSides; ++s) {
    require(lorentz_product(m.normals[s], m.normals[s]) == 1, "unit normal");
    m.slot_[s].fill(-1);
    int n = 0;
    for (int a = 0; a < kVertices; ++a) {
      if (lorentz_product(m.vertices[a], m.normals[s]) != 0) continue;
      require(n < kVerticesPerSide, "side has more than six vertices");
      m.side_mask_[s] |= 1u << a;
      m.slot_[s][a] = n;
      m.side_vertices[s][n++] = a;
    }
    require(n == kVerticesPerSide, "side has fewer than six vertices");
  }
  for (int a = 0; a < kVertices; ++a) {
    require(lorentz_product(m.vertices[a], m.vertices[a]) == 0, "vertex is lightlike");
    int n = 0;
    for (int s = 0; s < kSides; ++s) n += m.incident(s, a);
    require(n == 6, "vertex lies on six sides");
  }

  m.ridge_by_sides_.fill(-1);
  for (int s = 0; s < kSides; ++s) {
    for (int t = s + 1; t < kSides; ++t) {
      const std::uint32_t common = m.side_mask_[s] & m.side_mask_[t];
      if (std::popcount(common) != 3) continue;
      Ridge r{{s, t}, {}};
      int n = 0;
      for (int a = 0; a < kVertices; ++a)
        if (common >> a & 1u) r.vertices[n++] = a;
      m.ridge_by_sides_[s * kSides + t] = m.ridge_by_sides_[t * kSides + s] = static_cast<int>(m.ridges.size());
      m.ridges.push_back(r);
    }
  }
  require(m.ridges.size() == kRidges, "96 ridges");

  m.edge_by_vertices_.fill(-1);
  for (int a = 0; a < kVertices; ++a) {
    for (int b = a + 1; b < kVertices; ++b) {
      Edge e{{a, b}, {}};
      int n = 0;
      for (int s = 0; s < kSides; ++s) {
        if (m.incident(s, a) && m.incident(s, b)) {
          if (n < 3) e.sides[n] = s;
          ++n;
        }
      }
      if (n != 3) continue;
      m.edge_by_vertices_[a * kVertices + b] = m.edge_by_vertices_[b * kVertices + a] =
          static_cast<int>(m.edges.size());
      m.edges.push_back(e);
    }
  }
  require(m.edges.size() == kEdges, "96 edges");

  std::array<int, kSides> nr{}, ne{};
  std::array<int, kVertices> vr{}, ve{};
  for (int r = 0; r < kRidges; ++r) {
    for (int s : m.ridges[r].sides) m.side_ridges_[s][nr[s]++] = r;
    for (int a : m.ridges[r].vertices) m.vertex_ridges_[a][vr[a]++] = r;
  }
  for (int e = 0; e < kEdges; ++e) {
    for (int s : m.edges[e].sides) m.side_edges_[s][ne[s]++] = e;
    for (int a : m.edges[e].vertices) m.vertex_edges_[a][ve[a]++] = e;
    int ridges_through = 0;
    for (const auto& r : m.ridges) {
      const auto& v = r.vertices;
      const bool has_a = std::find(v.begin(), v.end(), m.edges[e].vertices[0]) != v.end();
      const bool has_b = std::find(v.begin(), v.end(), m.edges[e].vertices[1]) != v.end();
      ridges_through += has_a && has_b;
    }
    require(ridges_through == 3, "edge lies in three ridges");
  }
  for (int s = 0; s < kSides; ++s) require(nr[s] == 8 && ne[s] == 12, "side has 8 ridges and 12 edges");
  for (int a = 0; a < kVertices; ++a) require(vr[a] == 12 && ve[a] == 8, "vertex has 12 ridges and 8 edges");

  for (int s = 0; s < kSides; ++s) m.reflections_[s] = reflect_in_hyperplane(m.normals[s]);

  const std::vector<LorentzMatrix> group = generate_symmetry_group();
  m.symmetries.reserve(group.size());
  for (const auto& g : group) {
    Symmetry sym{g, {}, {}};
    for (int s = 0; s < kSides; ++s) {
      const HalfVec5 image = g * m.normals[s];
      auto it = std::find(m.normals.begin(), m.normals.end(), image);
      require(it != m.normals.end(), "symmetry permutes the normals");
      sym.side_perm[s] = static_cast<std::uint8_t>(it - m.normals.begin());
    }
    for (int a = 0; a < kVertices; ++a) {
      const HalfVec5 image = g * m.vertices[a];
      auto it = std::find(m.vertices.begin(), m.vertices.end(), image);
      require(it != m.vertices.end(), "symmetry permutes the vertices");
      sym.vertex_perm[a] = static_cast<std::uint8_t>(it - m.vertices.begin());
    }
    m.symmetries.push_back(std::move(sym));
  }

  const int n = static_cast<int>(m.symmetries.size());
  m.between_.assign(kSides * kSides, {});
  for (int k = 0; k < n; ++k) {
    const Symmetry& sym = m.symmetries[k];
    m.matrix_index_[sym.matrix.hash()].push_back(k);
    auto [it, fresh] = m.perm_index_.emplace(perm_key(sym.vertex_perm), k);
    require(fresh, "vertex permutation determines the symmetry");
    for (int s = 0; s < kSides; ++s) {
      const int t = sym.side_perm[s];
      m.between_[s * kSides + t].push_back(k);
      SideVertexImages images{};
      for (int q = 0; q < kVerticesPerSide; ++q) images[q] = sym.vertex_perm[m.side_vertices[s][q]];
      auto [it2, fresh2] = m.side_map_index_.emplace(side_map_key(s, images), k);
      require(fresh2, "side stabilizer acts faithfully on the side's vertices");
    }
  }
  for (const auto& list : m.between_) require(list.size() == 48, "48 symmetries between two sides");

  m.inverse_.assign(n, -1);
  m.compose_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Permutation24 p{};
      for (int x = 0; x < kVertices; ++x) p[x] = m.symmetries[a].vertex_perm[m.symmetries[b].vertex_perm[x]];
      const int c = m.perm_index_.at(perm_key(p));
      m.compose_[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(c);
      if (c == 0) m.inverse_[a] = b;
    }
  }
  return m;
}

const Cell24Model& standard_cell() {
  static const Cell24Model model = build_standard_cell();
  return model;
}

int Cell24Model::ridge_of_vertices(int a, int b, int c) const {
  const std::uint32_t mask = (1u << a) | (1u << b) | (1u << c);
  for (int r : vertex_ridges_[a]) {
    const auto& v = ridges[r].vertices;
    if (((1u << v[0]) | (1u << v[1]) | (1u << v[2])) == mask) return r;
  }
  return -1;
}

int Cell24Model::ridge_of_sides(int s, int t) const { return ridge_by_sides_[s * kSides + t]; }

int Cell24Model::edge_of_vertices(int a, int b) const { return edge_by_vertices_[a * kVertices + b]; }

int Cell24Model::compose(int a, int b) const {
  return compose_[static_cast<std::size_t>(a) * symmetries.size() + b];
}

std::optional<int> Cell24Model::side_symmetry_index(int i, int j, const SideVertexImages& images) const {
  for (auto x : images)
    if (x >= kVertices) return std::nullopt;
  auto it = side_map_index_.find(side_map_key(i, images));
  if (it == side_map_index_.end() || symmetries[it->second].side_perm[i] != j) return std::nullopt;
  return it->second;
}

int Cell24Model::symmetry_index(const LorentzMatrix& m) const {
  auto it = matrix_index_.find(m.hash());
  if (it == matrix_index_.end()) return -1;
  for (int k : it->second)
    if (symmetries[k].matrix == m) return k;
  return -1;
}

int Cell24Model::symmetry_index(const Permutation24& vertex_perm) const {
  auto it = perm_index_.find(perm_key(vertex_perm));
  if (it == perm_index_.end() || symmetries[it->second].vertex_perm != vertex_perm) return -1;
  return it->second;
}

LorentzMatrix side_reflection(int side) { return standard_cell().side_reflection(side); }

LorentzMatrix find_side_symmetry(int i, int j, const SideVertexImages& images) {
  const Cell24Model& cell = standard_cell();
  auto k = cell.side_symmetry_index(i, j, images);
  if (!k) {
    throw NotASymmetry("no symmetry of the 24-cell carries side " + std::to_string(i + 1) + " onto side " +
                       std::to_string(j + 1) + " with the requested vertex map");
  }
  return cell.symmetries[*k].matrix;
}

}  // namespace c24
