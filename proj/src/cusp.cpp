#include "c24/cusp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "c24/poincare_check.hpp"

namespace c24 {

namespace {

int other_end(const Edge& e, int v) { return e.vertices[0] == v ? e.vertices[1] : e.vertices[0]; }

std::shared_ptr<const CellTemplate> build_cube() {
  std::vector<std::vector<long long>> coords;
  for (int b = 0; b < 8; ++b) coords.push_back({b & 1, b >> 1 & 1, b >> 2 & 1});
  std::vector<std::vector<std::vector<int>>> cells(4);
  for (int b = 0; b < 8; ++b)
    for (int axis = 0; axis < 3; ++axis)
      if (!(b >> axis & 1)) cells[1].push_back({b, b | 1 << axis});
  for (int axis = 0; axis < 3; ++axis)
    for (int side = 0; side < 2; ++side) {
      std::vector<int> f;
      for (int b = 0; b < 8; ++b)
        if ((b >> axis & 1) == side) f.push_back(b);
      cells[2].push_back(f);
    }
  cells[3].push_back({0, 1, 2, 3, 4, 5, 6, 7});
  return std::make_shared<const CellTemplate>(std::move(coords), std::move(cells));
}

int incidence_sign(const CellTemplate& t, int face) {
  for (auto [f, s] : t.facets(3, 0))
    if (f == face) return s;
  throw std::logic_error("face is not a facet of the cube");
}

}  // namespace

const std::shared_ptr<const CellTemplate>& cube_template() {
  static const std::shared_ptr<const CellTemplate> t = build_cube();
  return t;
}

int cube_face_cell(int axis, int side) { return 2 * axis + side; }

std::array<int, 8> cube_corner_labels(int v) {
  const Cell24Model& cell = standard_cell();
  std::vector<int> nbrs;
  for (int e : cell.edges_at_vertex(v)) nbrs.push_back(other_end(cell.edges[e], v));
  std::sort(nbrs.begin(), nbrs.end());
  auto adjacent = [&](int w, int x) { return w != x && cell.ridge_of_vertices(v, w, x) >= 0; };
  auto common = [&](int x, int y, int exclude) {
    for (int w : nbrs)
      if (w != exclude && adjacent(w, x) && adjacent(w, y)) return w;
    throw std::logic_error("vertex link is not a cube");
  };
  std::array<int, 8> label{};
  label[0] = nbrs[0];
  std::vector<int> first;
  for (int w : nbrs)
    if (adjacent(nbrs[0], w)) first.push_back(w);
  if (first.size() != 3) throw std::logic_error("vertex link is not a cube");
  label[1] = first[0];
  label[2] = first[1];
  label[4] = first[2];
  label[3] = common(label[1], label[2], label[0]);
  label[5] = common(label[1], label[4], label[0]);
  label[6] = common(label[2], label[4], label[0]);
  label[7] = common(label[3], label[5], label[1]);
  std::array<int, 8> sorted = label;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::logic_error("vertex link is not a cube");
  return label;
}

bool CubeComplex::closed() const {
  for (int c = 0; c < glued->pieces(); ++c)
    for (int f = 0; f < 6; ++f)
      if (glued->class_size(2, c, f) != 2) return false;
  return true;
}

std::vector<std::vector<std::pair<int, int>>> sheeted_cusp_classes(const SheetedPairing& sp) {
  const Cell24Model& cell = standard_cell();
  const int n = sp.sheets * kVertices;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int t = 0; t < sp.sheets; ++t)
    for (int a = 0; a < kSides; ++a)
      for (int q = 0; q < kVerticesPerSide; ++q) {
        const int x = t * kVertices + cell.side_vertices[a][q];
        const int y = sp.target_sheet(t, a) * kVertices + sp.base.images[a][q];
        parent[find(x)] = find(y);
      }
  std::map<int, std::vector<std::pair<int, int>>> groups;
  for (int x = 0; x < n; ++x) groups[find(x)].emplace_back(x / kVertices, x % kVertices);
  std::vector<std::vector<std::pair<int, int>>> out;
  for (auto& [r, g] : groups) out.push_back(g);
  std::sort(out.begin(), out.end());
  return out;
}

CubeComplex glue_cubes(int cube_count, const std::vector<std::pair<FaceGluing, std::array<int, 8>>>& gluings) {
  CubeComplex c;
  c.glued = std::make_shared<GluedComplex>(cube_template(), cube_count);
  const CellTemplate& t = *cube_template();
  for (const auto& [g, corner_map] : gluings) {
    std::vector<int> vmap(corner_map.begin(), corner_map.end());
    c.glued->glue(2, g.cube, g.face, g.other_cube, g.other_face, vmap);
    FaceGluing rec = g;
    rec.sign = t.transport_sign(2, g.face, g.other_face, vmap);
    c.gluings.push_back(rec);
  }
  c.chain = c.glued->quotient();
  return c;
}

CubeComplex build_cusp_link(const SheetedPairing& sp, int cusp_class) {
  const Cell24Model& cell = standard_cell();
  const SidePairing& p = sp.base;
  const auto classes = sheeted_cusp_classes(sp);
  if (cusp_class < 0 || cusp_class >= static_cast<int>(classes.size()))
    throw std::out_of_range("no such cusp class");
  const auto& cubes = classes[cusp_class];
  std::map<std::pair<int, int>, int> index;
  for (const auto& c : cubes) index.emplace(c, static_cast<int>(index.size()));

  const CellTemplate& t = *cube_template();
  std::vector<std::pair<FaceGluing, std::array<int, 8>>> gluings;
  for (const auto& [sheet, v] : cubes) {
    const auto label = cube_corner_labels(v);
    for (int a = 0; a < kSides; ++a) {
      if (!cell.incident(a, v)) continue;
      const int v2 = p.vertex_image(a, v);
      const int sheet2 = sp.target_sheet(sheet, a);
      const auto label2 = cube_corner_labels(v2);
      std::array<int, 8> corner_map;
      corner_map.fill(-1);
      std::vector<int> face, image;
      for (int b = 0; b < 8; ++b) {
        if (!cell.incident(a, label[b])) continue;
        const int w2 = p.vertex_image(a, label[b]);
        const int b2 = static_cast<int>(std::find(label2.begin(), label2.end(), w2) - label2.begin());
        if (b2 == 8) throw std::logic_error("vertex map does not preserve vertex links");
        corner_map[b] = b2;
        face.push_back(b);
        image.push_back(b2);
      }
      FaceGluing g{index.at({sheet, v}), t.find(2, face), index.at({sheet2, v2}), t.find(2, image), 0};
      if (g.face < 0 || g.other_face < 0) throw std::logic_error("side does not meet the vertex link in a square");
      gluings.emplace_back(g, corner_map);
    }
  }
  CubeComplex c = glue_cubes(static_cast<int>(cubes.size()), gluings);
  c.cubes = cubes;
  return c;
}

CubeComplex build_cusp_link(const SidePairing& p, int cusp_class) { return build_cusp_link(single_sheet(p), cusp_class); }

FlatLinkClass classify_flat_link(const CubeComplex& c) {
  const CellTemplate& t = *cube_template();
  FlatLinkClass out;
  const auto h = homology(c.chain);
  out.h1 = h[1];

  // Two-colour the cubes so that glued faces receive opposite induced orientations.
  const int n = c.glued->pieces();
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (other cube, relative orientation)
  bool consistent = true;
  for (const auto& g : c.gluings) {
    const int rel = -g.sign * incidence_sign(t, g.face) * incidence_sign(t, g.other_face);
    if (g.cube == g.other_cube) {
      if (rel != 1) consistent = false;
      continue;
    }
    adj[g.cube].emplace_back(g.other_cube, rel);
    adj[g.other_cube].emplace_back(g.cube, rel);
  }
  std::vector<int> colour(n, 0);
  for (int s = 0; s < n && consistent; ++s) {
    if (colour[s]) continue;
    colour[s] = 1;
    std::vector<int> stack{s};
    while (!stack.empty() && consistent) {
      const int x = stack.back();
      stack.pop_back();
      for (auto [y, rel] : adj[x]) {
        if (!colour[y]) {
          colour[y] = rel * colour[x];
          stack.push_back(y);
        } else if (colour[y] != rel * colour[x]) {
          consistent = false;
        }
      }
    }
  }
  out.orientable = consistent;
  out.orientation_cross_check = (h[3].free_rank == 1) == out.orientable;

  if (!out.orientable && out.h1 == AbelianGroup{2, {}}) out.label = "N3_2";
  if (out.orientable && out.h1 == AbelianGroup{3, {}}) out.label = "T3";
  return out;
}

CuspVolume max_cusp_volume(const SidePairing& p) {
  if (cusp_count(p) != 1) throw MultipleCusps("maximal cusp volume is only defined here for one-cusped pairings");
  const Cell24Model& cell = standard_cell();
  const auto d = derive_transformations(p);

  // Tangency: horoballs {-x o (lambda v) <= 1} at u, w touch when
  // lambda^2 (-u o w) = 2, so the closest pair of ideal points decides lambda.
  Rational closest = -1;
  for (int i = 0; i < kVertices; ++i)
    for (int j = i + 1; j < kVertices; ++j) {
      const Rational x = -lorentz_product(cell.vertices[i], cell.vertices[j]);
      if (closest < 0 || x < closest) closest = x;
    }
  CuspVolume out;
  out.neighbours_clear = true;
  for (int a = 0; a < kSides; ++a)
    for (int i = 0; i < kVertices; ++i) {
      const HalfVec5 x = d.g[a] * cell.vertices[i];
      for (int j = 0; j < kVertices; ++j) {
        const Rational y = -lorentz_product(x, cell.vertices[j]);
        if (y != 0 && y < closest) out.neighbours_clear = false;
      }
    }
  const double lambda = std::sqrt(2.0 / closest.convert_to<double>());
  out.horoball_scale = lambda;

  auto to_double = [](const HalfVec5& v) {
    std::array<double, 5> x{};
    for (std::size_t i = 0; i < 5; ++i) x[i] = v.doubled(i).convert_to<double>() / 2.0;
    return x;
  };
  auto form = [](const std::array<double, 5>& x, const std::array<double, 5>& y) {
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3] - x[4] * y[4];
  };

  for (int v = 0; v < kVertices; ++v) {
    const auto label = cube_corner_labels(v);
    const auto vv = to_double(cell.vertices[v]);
    std::array<std::array<double, 5>, 4> corner{};
    const int picks[4] = {0, 1, 2, 4};
    for (int k = 0; k < 4; ++k) {
      const auto w = to_double(cell.vertices[label[picks[k]]]);
      // Where the geodesic from v to w meets the horosphere -x o (lambda v) = 1.
      const double beta = -1.0 / (lambda * form(vv, w));
      for (int i = 0; i < 5; ++i) corner[k][i] = lambda / 2.0 * vv[i] + beta * w[i];
    }
    std::array<std::array<double, 5>, 3> chord{};
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 5; ++i) chord[k][i] = corner[k + 1][i] - corner[0][i];
    double g[3][3];
    for (int r = 0; r < 3; ++r)
      for (int s = 0; s < 3; ++s) g[r][s] = form(chord[r], chord[s]);
    const double det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                       g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                       g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
    // Volume above a horosphere over a flat region of volume A is A / 3.
    out.per_vertex.push_back(std::sqrt(det) / 3.0);
  }
  out.total = std::accumulate(out.per_vertex.begin(), out.per_vertex.end(), 0.0);
  return out;
}

}  // namespace c24
