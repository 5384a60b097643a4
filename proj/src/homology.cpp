#include "c24/homology.hpp"

#include <boost/math/constants/constants.hpp>

namespace c24 {

namespace {

int other_end(const Edge& e, int v) { return e.vertices[0] == v ? e.vertices[1] : e.vertices[0]; }

bool edge_on_side(const Cell24Model& cell, int e, int side) {
  return cell.incident(side, cell.edges[e].vertices[0]) && cell.incident(side, cell.edges[e].vertices[1]);
}

TruncatedCell build_truncated_cell() {
  const Cell24Model& cell = standard_cell();
  TruncatedCell t;
  t.corner.assign(kVertices, std::vector<int>(kEdges, -1));

  std::vector<std::vector<long long>> coords;
  for (int v = 0; v < kVertices; ++v) {
    for (int e : cell.edges_at_vertex(v)) {
      const int w = other_end(cell.edges[e], v);
      std::vector<long long> x(4);
      for (int i = 0; i < 4; ++i) {
        x[i] = 3 * static_cast<long long>(cell.vertices[v].doubled(i)) + static_cast<long long>(cell.vertices[w].doubled(i));
      }
      t.corner[v][e] = static_cast<int>(coords.size());
      coords.push_back(x);
    }
  }

  std::vector<std::vector<std::vector<int>>> cells(5);
  // Truncated edges, then cube edges.
  for (int e = 0; e < kEdges; ++e) {
    const auto& ev = cell.edges[e].vertices;
    cells[1].push_back({t.corner[ev[0]][e], t.corner[ev[1]][e]});
  }
  for (int v = 0; v < kVertices; ++v) {
    for (int r : cell.ridges_at_vertex(v)) {
      std::vector<int> c;
      for (int e : cell.edges_at_vertex(v)) {
        const auto& rv = cell.ridges[r].vertices;
        if (std::find(rv.begin(), rv.end(), other_end(cell.edges[e], v)) != rv.end()) c.push_back(t.corner[v][e]);
      }
      cells[1].push_back(c);
    }
  }
  // Hexagons, then squares.
  for (int r = 0; r < kRidges; ++r) {
    std::vector<int> c;
    const auto& rv = cell.ridges[r].vertices;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) c.push_back(t.corner[rv[i]][cell.edge_of_vertices(rv[i], rv[j])]);
    cells[2].push_back(c);
  }
  for (int v = 0; v < kVertices; ++v) {
    for (int s = 0; s < kSides; ++s) {
      if (!cell.incident(s, v)) continue;
      std::vector<int> c;
      for (int e : cell.edges_at_vertex(v))
        if (edge_on_side(cell, e, s)) c.push_back(t.corner[v][e]);
      cells[2].push_back(c);
    }
  }
  // Truncated octahedra, then cubes.
  for (int s = 0; s < kSides; ++s) {
    std::vector<int> c;
    for (int v : cell.side_vertices[s])
      for (int e : cell.edges_at_vertex(v))
        if (edge_on_side(cell, e, s)) c.push_back(t.corner[v][e]);
    t.side_cell.push_back(static_cast<int>(cells[3].size()));
    cells[3].push_back(c);
  }
  for (int v = 0; v < kVertices; ++v) {
    std::vector<int> c;
    for (int e : cell.edges_at_vertex(v)) c.push_back(t.corner[v][e]);
    cells[3].push_back(c);
  }
  std::vector<int> all(coords.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  cells[4].push_back(all);

  t.cells = std::make_shared<const CellTemplate>(std::move(coords), std::move(cells));
  return t;
}

}  // namespace

const TruncatedCell& truncated_cell() {
  static const TruncatedCell t = build_truncated_cell();
  return t;
}

GluedComplex truncated_glued(const SheetedPairing& sp) {
  const Cell24Model& cell = standard_cell();
  const TruncatedCell& t = truncated_cell();
  const SidePairing& p = sp.base;
  GluedComplex g(t.cells, sp.sheets);
  for (int a = 0; a < kSides; ++a) {
    std::vector<int> vmap(t.cells->count(0), -1);
    for (int v : cell.side_vertices[a]) {
      const int v2 = p.vertex_image(a, v);
      for (int e : cell.edges_at_vertex(v)) {
        if (!edge_on_side(cell, e, a)) continue;
        const int w2 = p.vertex_image(a, other_end(cell.edges[e], v));
        vmap[t.corner[v][e]] = t.corner[v2][cell.edge_of_vertices(v2, w2)];
      }
    }
    for (int sheet = 0; sheet < sp.sheets; ++sheet) {
      g.glue(3, sheet, t.side_cell[a], sp.target_sheet(sheet, a), t.side_cell[p.partner[a]], vmap);
    }
  }
  return g;
}

QuotientComplex truncated_complex(const SheetedPairing& p) { return truncated_glued(p).quotient(); }

QuotientComplex truncated_complex(const SidePairing& p) { return truncated_complex(single_sheet(p)); }

std::vector<AbelianGroup> homology_groups(const SheetedPairing& p) { return homology(truncated_complex(p)); }

std::vector<AbelianGroup> homology_groups(const SidePairing& p) { return homology_groups(single_sheet(p)); }

AbelianGroup abelianization(const Presentation& pr) {
  IntMatrix m(pr.generators.size(), pr.relators.size());
  for (std::size_t j = 0; j < pr.relators.size(); ++j) {
    for (const Letter& l : pr.relators[j]) {
      const auto it = std::find(pr.generators.begin(), pr.generators.end(), l.generator);
      if (it == pr.generators.end()) throw std::invalid_argument("relator uses an unknown generator");
      m.at(it - pr.generators.begin(), j) += l.power;
    }
  }
  return cokernel(m);
}

double volume_from_euler(long long chi) {
  return 4.0 / 3.0 * boost::math::constants::pi<double>() * boost::math::constants::pi<double>() *
         static_cast<double>(chi);
}

}  // namespace c24
