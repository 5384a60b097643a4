#include "c24/poincare_check.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>

namespace c24 {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

int map_ridge(const SidePairing& p, int side, int ridge) {
  const auto& r = standard_cell().ridges[ridge];
  return standard_cell().ridge_of_vertices(p.vertex_image(side, r.vertices[0]), p.vertex_image(side, r.vertices[1]),
                                           p.vertex_image(side, r.vertices[2]));
}

int map_edge(const SidePairing& p, int side, int edge) {
  const auto& e = standard_cell().edges[edge];
  return standard_cell().edge_of_vertices(p.vertex_image(side, e.vertices[0]), p.vertex_image(side, e.vertices[1]));
}

int other_side(const Ridge& r, int side) { return r.sides[0] == side ? r.sides[1] : r.sides[0]; }

bool contains(const std::array<int, 3>& xs, int x) { return std::find(xs.begin(), xs.end(), x) != xs.end(); }

}  // namespace

bool operator<(const Letter& a, const Letter& b) {
  return std::pair(a.generator, -a.power) < std::pair(b.generator, -b.power);
}

Letter letter_for_side(const SidePairing& p, int side) {
  const int j = p.partner[side];
  return side < j ? Letter{side, 1} : Letter{j, -1};
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l.power = -l.power;
  return out;
}

Word canonical_relator(const Word& w) {
  Word best = w;
  for (const Word& base : {w, inverse_word(w)}) {
    Word r = base;
    for (std::size_t k = 0; k < base.size(); ++k) {
      std::rotate(r.begin(), r.begin() + 1, r.end());
      if (r < best) best = r;
    }
  }
  return best;
}

std::string word_to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const int e = static_cast<int>(j - i) * w[i].power;
    if (!out.empty()) out += ' ';
    out += "g" + std::to_string(w[i].generator + 1);
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

Word parse_word(const std::string& text) {
  static const std::regex tok(R"(g(\d+)(?:\^(-?\d+))?)");
  Word w;
  std::istringstream in(text);
  std::string t;
  while (in >> t) {
    std::smatch m;
    if (!std::regex_match(t, m, tok)) throw std::invalid_argument("bad word token '" + t + "'");
    const int g = std::stoi(m[1]) - 1;
    const int e = m[2].matched ? std::stoi(m[2]) : 1;
    if (e == 0) throw std::invalid_argument("zero exponent in word");
    for (int k = 0; k < std::abs(e); ++k) w.push_back({g, e > 0 ? 1 : -1});
  }
  return w;
}

LorentzMatrix evaluate_word(const Word& w, const DerivedTransformations& d, const SidePairing& p) {
  LorentzMatrix m;
  for (const Letter& l : w) m = m * (l.power > 0 ? d.g[l.generator] : d.g[p.partner[l.generator]]);
  return m;
}

RidgeCycleReport ridge_cycles(const SidePairing& p, const DerivedTransformations* d) {
  const Cell24Model& cell = standard_cell();
  RidgeCycleReport report;

  // State (R, slot): ridge R left through R.sides[slot].
  auto state = [](int ridge, int slot) { return 2 * ridge + slot; };
  std::vector<int> next(2 * kRidges, -1);
  for (int r = 0; r < kRidges; ++r) {
    for (int slot = 0; slot < 2; ++slot) {
      const int a = cell.ridges[r].sides[slot];
      const int r2 = map_ridge(p, a, r);
      if (r2 < 0) continue;
      const int b = other_side(cell.ridges[r2], p.partner[a]);
      next[state(r, slot)] = state(r2, cell.ridges[r2].sides[0] == b ? 0 : 1);
    }
  }

  std::vector<int> prev(2 * kRidges, -1);
  for (int st = 0; st < 2 * kRidges; ++st)
    if (next[st] >= 0) prev[next[st]] = st;

  // Broken chains first (walked from their first state), then cycles.
  std::vector<bool> seen(2 * kRidges, false);
  std::vector<std::vector<int>> orbits;
  std::vector<std::vector<int>> chains;
  for (int s0 = 0; s0 < 2 * kRidges; ++s0) {
    if (prev[s0] >= 0) continue;
    std::vector<int> chain;
    for (int s = s0; s >= 0 && !seen[s]; s = next[s]) {
      seen[s] = true;
      chain.push_back(s);
    }
    chains.push_back(chain);
  }
  for (int s0 = 0; s0 < 2 * kRidges; ++s0) {
    if (seen[s0]) continue;
    std::vector<int> orbit;
    for (int s = s0; !seen[s]; s = next[s]) {
      seen[s] = true;
      orbit.push_back(s);
    }
    orbits.push_back(orbit);
  }
  if (!chains.empty()) {
    report.partition_ok = false;
    report.all_pass = false;
    for (const auto& chain : chains) {
      RidgeCycle cyc;
      cyc.closed = false;
      for (int st : chain) {
        cyc.ridges.push_back(st / 2);
        cyc.exit_sides.push_back(cell.ridges[st / 2].sides[st % 2]);
        cyc.word.insert(cyc.word.begin(), letter_for_side(p, cell.ridges[st / 2].sides[st % 2]));
      }
      report.cycles.push_back(cyc);
    }
    return report;
  }

  // Group the state cycles by ridge class; keep the smaller canonical word.
  std::vector<int> class_of_ridge(kRidges, -1);
  std::vector<RidgeCycle> best;
  std::vector<int> ridge_hits(kRidges, 0);
  for (const auto& orbit : orbits) {
    const int n = static_cast<int>(orbit.size());
    RidgeCycle cyc;
    Word best_word;
    for (int start = 0; start < n; ++start) {
      Word w;
      for (int k = n - 1; k >= 0; --k) {
        const int st = orbit[(start + k) % n];
        w.push_back(letter_for_side(p, cell.ridges[st / 2].sides[st % 2]));
      }
      if (start == 0 || w < best_word) {
        best_word = w;
        cyc.ridges.clear();
        cyc.exit_sides.clear();
        for (int k = 0; k < n; ++k) {
          const int st = orbit[(start + k) % n];
          cyc.ridges.push_back(st / 2);
          cyc.exit_sides.push_back(cell.ridges[st / 2].sides[st % 2]);
        }
      }
    }
    cyc.word = best_word;
    const int r0 = *std::min_element(cyc.ridges.begin(), cyc.ridges.end());
    int cls = class_of_ridge[r0];
    if (cls < 0) {
      cls = static_cast<int>(best.size());
      for (int r : cyc.ridges) {
        class_of_ridge[r] = cls;
        ++ridge_hits[r];
      }
      best.push_back(cyc);
    } else if (cyc.word < best[cls].word) {
      best[cls] = cyc;
    }
  }

  report.partition_ok = std::all_of(ridge_hits.begin(), ridge_hits.end(), [](int h) { return h == 1; });
  report.all_pass = report.partition_ok;
  for (auto& cyc : best) {
    if (d) {
      cyc.holonomy = evaluate_word(cyc.word, *d, p);
      cyc.has_holonomy = true;
    }
    cyc.passes = d && cyc.ridges.size() == 4 && cyc.holonomy.is_identity();
    report.all_pass = report.all_pass && cyc.passes;
  }
  std::sort(best.begin(), best.end(), [](const RidgeCycle& a, const RidgeCycle& b) { return a.word < b.word; });
  report.cycles = std::move(best);
  return report;
}

RidgeCycleReport ridge_cycles(const SidePairing& p, const DerivedTransformations& d) { return ridge_cycles(p, &d); }

RidgeCycleReport ridge_cycles(const SidePairing& p) {
  try {
    const auto d = derive_transformations(p);
    return ridge_cycles(p, &d);
  } catch (const NotASymmetry&) {
    return ridge_cycles(p, nullptr);
  }
}

EdgeLinkReport edge_link_check(const SidePairing& p, const DerivedTransformations& d) {
  const Cell24Model& cell = standard_cell();
  EdgeLinkReport report;

  // Directed edges: 2e is vertices[0] -> vertices[1], 2e+1 the reverse.
  UnionFind directed(2 * kEdges);
  for (int a = 0; a < kSides; ++a) {
    for (int e : cell.edges_of_side(a)) {
      const auto& ev = cell.edges[e].vertices;
      const int e2 = map_edge(p, a, e);
      const int u = p.vertex_image(a, ev[0]);
      const int dir = cell.edges[e2].vertices[0] == u ? 0 : 1;
      directed.unite(2 * e, 2 * e2 + dir);
      directed.unite(2 * e + 1, 2 * e2 + 1 - dir);
    }
  }

  std::map<int, std::vector<int>> groups;  // root of the undirected class -> edges
  UnionFind undirected(kEdges);
  for (int e = 0; e < kEdges; ++e)
    for (int f = 0; f < e; ++f)
      if (directed.find(2 * e) == directed.find(2 * f) || directed.find(2 * e) == directed.find(2 * f + 1))
        undirected.unite(e, f);
  for (int e = 0; e < kEdges; ++e) groups[undirected.find(e)].push_back(e);

  report.all_pass = true;
  for (auto& [root, edges] : groups) {
    EdgeClass ec;
    ec.edges = edges;
    std::sort(ec.edges.begin(), ec.edges.end());
    ec.orientation_consistent = std::none_of(edges.begin(), edges.end(), [&](int e) {
      return directed.find(2 * e) == directed.find(2 * e + 1);
    });

    // Link surface: triangle per edge, sides <-> (edge, side), corners <-> (edge, ridge).
    std::map<std::pair<int, int>, int> corner_id, side_id;
    for (int e : edges) {
      const auto& s = cell.edges[e].sides;
      for (int i = 0; i < 3; ++i) {
        side_id.emplace(std::pair(e, s[i]), static_cast<int>(side_id.size()));
        for (int j = i + 1; j < 3; ++j)
          corner_id.emplace(std::pair(e, cell.ridge_of_sides(s[i], s[j])), static_cast<int>(corner_id.size()));
      }
    }
    UnionFind corners(static_cast<int>(corner_id.size()));
    UnionFind sides(static_cast<int>(side_id.size()));
    std::map<int, int> tri_index;
    for (int e : edges) tri_index.emplace(e, static_cast<int>(tri_index.size()));
    UnionFind faces(static_cast<int>(edges.size()));
    for (int e : edges) {
      for (int a : cell.edges[e].sides) {
        const int e2 = map_edge(p, a, e);
        const int a2 = p.partner[a];
        auto it = side_id.find({e2, a2});
        if (it == side_id.end()) continue;  // cannot happen for a closed class
        sides.unite(side_id.at({e, a}), it->second);
        faces.unite(tri_index.at(e), tri_index.at(e2));
        for (int r : cell.ridges_of_side(a)) {
          if (!contains(cell.ridges[r].vertices, cell.edges[e].vertices[0]) ||
              !contains(cell.ridges[r].vertices, cell.edges[e].vertices[1]))
            continue;
          corners.unite(corner_id.at({e, r}), corner_id.at({e2, map_ridge(p, a, r)}));
        }
      }
    }
    auto count_roots = [](UnionFind& uf) {
      int n = 0;
      for (int i = 0; i < static_cast<int>(uf.parent.size()); ++i) n += uf.find(i) == i;
      return n;
    };
    ec.link_vertices = count_roots(corners);
    ec.link_edges = count_roots(sides);
    ec.link_faces = static_cast<int>(edges.size());
    ec.euler_characteristic = ec.link_vertices - ec.link_edges + ec.link_faces;
    ec.connected = count_roots(faces) == 1;

    // Develop copies of Q around the first edge of the class.
    const int e0 = ec.edges[0];
    std::map<int, LorentzMatrix> placed{{e0, LorentzMatrix::identity()}};
    std::vector<int> queue{e0};
    bool ok = true;
    for (std::size_t qi = 0; qi < queue.size() && ok; ++qi) {
      const int e = queue[qi];
      const LorentzMatrix gamma = placed.at(e);
      for (int a : cell.edges[e].sides) {
        const int e2 = map_edge(p, a, e);
        const LorentzMatrix g2 = gamma * d.g[p.partner[a]];
        auto it = placed.find(e2);
        if (it == placed.end()) {
          placed.emplace(e2, g2);
          queue.push_back(e2);
          if (placed.size() > edges.size()) ok = false;
        } else if (!(it->second == g2)) {
          ok = false;
        }
      }
    }
    if (ok) {
      const auto& v0 = cell.edges[e0].vertices;
      for (const auto& [e, gamma] : placed) {
        const auto& ve = cell.edges[e].vertices;
        const HalfVec5 x = gamma * cell.vertices[ve[0]];
        const HalfVec5 y = gamma * cell.vertices[ve[1]];
        const bool same = (same_ray(x, cell.vertices[v0[0]]) && same_ray(y, cell.vertices[v0[1]])) ||
                          (same_ray(x, cell.vertices[v0[1]]) && same_ray(y, cell.vertices[v0[0]]));
        if (!same) ok = false;
      }
    }
    ec.develops = ok && placed.size() == edges.size();

    ec.passes = ec.orientation_consistent && edges.size() == 8 && ec.connected && ec.euler_characteristic == 2 &&
                ec.develops;
    report.all_pass = report.all_pass && ec.passes;
    report.classes.push_back(std::move(ec));
  }
  std::sort(report.classes.begin(), report.classes.end(),
            [](const EdgeClass& a, const EdgeClass& b) { return a.edges < b.edges; });
  return report;
}

EdgeLinkReport edge_link_check(const SidePairing& p) { return edge_link_check(p, derive_transformations(p)); }

std::vector<std::vector<int>> cusp_classes(const SidePairing& p) {
  const Cell24Model& cell = standard_cell();
  UnionFind uf(kVertices);
  for (int a = 0; a < kSides; ++a)
    for (int q = 0; q < kVerticesPerSide; ++q) uf.unite(cell.side_vertices[a][q], p.images[a][q]);
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < kVertices; ++v) groups[uf.find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [r, vs] : groups) out.push_back(vs);
  std::sort(out.begin(), out.end());
  return out;
}

int cusp_count(const SidePairing& p) { return static_cast<int>(cusp_classes(p).size()); }

bool completeness_check(const SidePairing& p, const DerivedTransformations& d) {
  const Cell24Model& cell = standard_cell();
  for (int a = 0; a < kSides; ++a)
    for (int q = 0; q < kVerticesPerSide; ++q)
      if (!(d.g[a] * cell.vertices[cell.side_vertices[a][q]] == cell.vertices[p.images[a][q]])) return false;
  return true;
}

ManifoldReport check_manifold(const SidePairing& p) {
  ManifoldReport r;
  r.cusps = cusp_classes(p);
  try {
    r.transformations = derive_transformations(p);
    r.derivation_ok = true;
  } catch (const NotASymmetry& e) {
    r.derivation_error = e.what();
    r.ridges = ridge_cycles(p, nullptr);
    return r;
  }
  const auto& d = *r.transformations;
  r.ridges = ridge_cycles(p, d);
  r.edges = edge_link_check(p, d);
  r.complete = completeness_check(p, d);
  r.is_manifold = r.ridges.all_pass && r.edges.all_pass && r.complete;
  return r;
}

bool is_manifold(const SidePairing& p) { return check_manifold(p).is_manifold; }

Presentation presentation(const SidePairing& p) {
  const auto report = ridge_cycles(p);
  if (!report.all_pass) throw std::invalid_argument("presentation requires passing ridge cycles");
  Presentation pr;
  for (int i = 0; i < kSides; ++i)
    if (i < p.partner[i]) pr.generators.push_back(i);
  for (const auto& c : report.cycles) pr.relators.push_back(c.word);
  return pr;
}

}  // namespace c24
