#include "oracle_search.hpp"

#include <algorithm>
#include <array>

#include "c24/cell24.hpp"
#include "c24/poincare_check.hpp"

namespace c24::oracle {

namespace {

using Triple = std::array<int, 3>;
using Mat = std::array<double, 25>;  // entries are halves of small integers, so doubles are exact

int triple_code(Triple t) {
  std::sort(t.begin(), t.end());
  return (t[0] * 24 + t[1]) * 24 + t[2];
}

struct Geometry {
  std::vector<Triple> ridges;
  std::vector<std::array<int, 2>> ridge_sides;
  std::vector<int> ridge_of_code = std::vector<int>(24 * 24 * 24, -1);
  std::vector<std::array<int, 2>> edges;
  std::vector<std::vector<int>> edge_sides;
  std::array<std::array<int, 24>, 24> edge_of{};
  std::array<std::vector<int>, kSides> side_ridges, side_edges;
};

const Geometry& geometry() {
  static const Geometry g = [] {
    const Cell24Model& cell = standard_cell();
    Geometry g;
    for (auto& row : g.edge_of) row.fill(-1);
    for (int s = 0; s < kSides; ++s) {
      const auto& v = cell.side_vertices[s];
      for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) {
          std::vector<int> on;
          for (int t = 0; t < kSides; ++t)
            if (cell.incident(t, v[a]) && cell.incident(t, v[b])) on.push_back(t);
          if (on.size() == 3 && g.edge_of[v[a]][v[b]] < 0) {
            g.edge_of[v[a]][v[b]] = g.edge_of[v[b]][v[a]] = static_cast<int>(g.edges.size());
            g.edges.push_back({v[a], v[b]});
            g.edge_sides.push_back(on);
          }
          for (int c = b + 1; c < 6; ++c) {
            std::vector<int> sides;
            for (int t = 0; t < kSides; ++t)
              if (cell.incident(t, v[a]) && cell.incident(t, v[b]) && cell.incident(t, v[c])) sides.push_back(t);
            const int code = triple_code({v[a], v[b], v[c]});
            if (sides.size() == 2 && g.ridge_of_code[code] < 0) {
              g.ridge_of_code[code] = static_cast<int>(g.ridges.size());
              g.ridges.push_back({v[a], v[b], v[c]});
              g.ridge_sides.push_back({sides[0], sides[1]});
            }
          }
        }
    }
    for (std::size_t r = 0; r < g.ridges.size(); ++r)
      for (int s : g.ridge_sides[r]) g.side_ridges[s].push_back(static_cast<int>(r));
    for (std::size_t e = 0; e < g.edges.size(); ++e)
      for (int s : g.edge_sides[e]) g.side_edges[s].push_back(static_cast<int>(e));
    return g;
  }();
  return g;
}

Mat to_double(const LorentzMatrix& m) {
  Mat out{};
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) out[5 * r + c] = m.doubled(r, c).convert_to<double>() / 2;
  return out;
}

Mat mul(const Mat& a, const Mat& b) {
  Mat c{};
  for (int r = 0; r < 5; ++r)
    for (int k = 0; k < 5; ++k)
      for (int col = 0; col < 5; ++col) c[5 * r + col] += a[5 * r + k] * b[5 * k + col];
  return c;
}

class Oracle {
 public:
  OracleResult result;

  Oracle() : g_(geometry()), cell_(standard_cell()) {
    partner_.fill(-1);
    for (auto& m : vmap_) m.fill(-1);
  }

  bool assign(int x, int y, int symmetry) {
    const Symmetry& f = cell_.symmetries[symmetry];
    const Symmetry& finv = cell_.symmetries[cell_.inverse_symmetry(symmetry)];
    partner_[x] = y;
    partner_[y] = x;
    for (int v : cell_.side_vertices[x]) vmap_[x][v] = f.vertex_perm[v];
    for (int v : cell_.side_vertices[y]) vmap_[y][v] = finv.vertex_perm[v];
    mats_[x] = to_double(cell_.side_reflection(y) * f.matrix);
    mats_[y] = to_double(cell_.side_reflection(x) * finv.matrix);
    if (ridges_ok(x) && ridges_ok(y) && edges_ok(x) && edges_ok(y)) return true;
    unassign(x);
    return false;
  }

  void unassign(int x) {
    const int y = partner_[x];
    partner_[x] = partner_[y] = -1;
    vmap_[x].fill(-1);
    vmap_[y].fill(-1);
  }

  void run() {
    ++result.nodes;
    int x = -1, forced_partner = -1, from = -1, to = -1;
    pick(x, forced_partner, from, to);
    if (x < 0) {
      leaf();
      return;
    }
    for (int y = 0; y < kSides; ++y) {
      if (y == x || partner_[y] >= 0) continue;
      if (forced_partner >= 0 && y != forced_partner) continue;
      for (int f : cell_.symmetries_between(x, y)) {
        if (forced_partner >= 0) {
          const auto& vp = cell_.symmetries[f].vertex_perm;
          const Triple& t = g_.ridges[from];
          if (triple_code({vp[t[0]], vp[t[1]], vp[t[2]]}) != triple_code(g_.ridges[to])) continue;
        }
        if (!assign(x, y, f)) continue;
        run();
        unassign(x);
      }
    }
  }

 private:
  struct State {
    int ridge, exit;
  };

  int other_side(int ridge, int side) const {
    const auto& s = g_.ridge_sides[ridge];
    return s[0] == side ? s[1] : s[0];
  }

  bool forward(State& s) const {
    const int a = s.exit;
    if (partner_[a] < 0) return false;
    const Triple& t = g_.ridges[s.ridge];
    const int r2 = g_.ridge_of_code[triple_code({vmap_[a][t[0]], vmap_[a][t[1]], vmap_[a][t[2]]})];
    s = {r2, other_side(r2, partner_[a])};
    return true;
  }

  bool backward(State& s) const {
    const int c = other_side(s.ridge, s.exit);
    if (partner_[c] < 0) return false;
    const Triple& t = g_.ridges[s.ridge];
    const int r = g_.ridge_of_code[triple_code({vmap_[c][t[0]], vmap_[c][t[1]], vmap_[c][t[2]]})];
    s = {r, partner_[c]};
    return true;
  }

  // Highest-numbered side closing a four-state chain; otherwise the side
  // whose ridges carry the most known predecessors.
  void pick(int& x, int& forced_partner, int& from, int& to) const {
    x = -1;
    int best = -1;
    for (int side = kSides - 1; side >= 0; --side) {
      if (partner_[side] >= 0) continue;
      int score = 0;
      for (int r : g_.side_ridges[side]) {
        State s{r, side};
        int back = 0;
        while (back < 3 && backward(s)) ++back;
        if (back == 3) {
          x = side;
          forced_partner = other_side(s.ridge, s.exit);
          from = r;
          to = s.ridge;
          return;
        }
        score += back;
      }
      if (score >= best) {
        best = score;
        x = side;
      }
    }
  }

  bool ridges_ok(int side) const {
    for (int r : g_.side_ridges[side]) {
      const State start{r, side};
      State s = start;
      std::vector<int> exits;
      bool closed = false;
      while (exits.size() < 5) {
        const int a = s.exit;
        if (!forward(s)) break;
        exits.push_back(a);
        if (s.ridge == start.ridge && s.exit == start.exit) {
          closed = true;
          break;
        }
      }
      if (closed) {
        if (exits.size() != 4) return false;
        Mat h = mats_[exits[0]];
        for (std::size_t k = 1; k < exits.size(); ++k) h = mul(mats_[exits[k]], h);
        for (int i = 0; i < 5; ++i)
          for (int j = 0; j < 5; ++j)
            if (h[5 * i + j] != (i == j ? 1.0 : 0.0)) return false;
        continue;
      }
      int length = static_cast<int>(exits.size()) + 1;
      s = start;
      while (length <= 4 && backward(s)) ++length;
      if (length > 4) return false;
    }
    return true;
  }

  bool edges_ok(int side) const {
    for (int e0 : g_.side_edges[side]) {
      std::vector<std::array<int, 2>> seen{g_.edges[e0]};
      bool closed = true;
      for (std::size_t k = 0; k < seen.size(); ++k) {
        const auto [u, v] = seen[k];
        for (int a : g_.edge_sides[g_.edge_of[u][v]]) {
          if (partner_[a] < 0) {
            closed = false;
            continue;
          }
          const std::array<int, 2> img{vmap_[a][u], vmap_[a][v]};
          if (std::find(seen.begin(), seen.end(), std::array<int, 2>{img[1], img[0]}) != seen.end()) return false;
          if (std::find(seen.begin(), seen.end(), img) != seen.end()) continue;
          seen.push_back(img);
          if (seen.size() > 8) return false;
        }
      }
      if (closed && seen.size() != 8) return false;
    }
    return true;
  }

  void leaf() {
    SidePairing p;
    for (int s = 0; s < kSides; ++s) {
      p.partner[s] = partner_[s];
      for (int q = 0; q < kVerticesPerSide; ++q)
        p.images[s][q] = static_cast<std::uint8_t>(vmap_[s][cell_.side_vertices[s][q]]);
    }
    if (!leaves_.insert(pairing_key(p)).second) return;
    ++result.completions;
    if (is_manifold(p)) result.canonical.insert(canonical_key_exhaustive(p));
  }

  const Geometry& g_;
  const Cell24Model& cell_;
  std::array<int, kSides> partner_{};
  std::array<std::array<int, kVertices>, kSides> vmap_{};
  std::array<Mat, kSides> mats_{};
  std::set<PairingKey> leaves_;
};

}  // namespace

OracleResult enumerate_completions(const std::vector<PairingRow>& prefix) {
  Oracle o;
  for (const auto& row : prefix)
    if (!o.assign(row.side, row.partner, row.symmetry)) return o.result;
  o.run();
  return o.result;
}

}  // namespace c24::oracle
