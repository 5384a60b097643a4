#include "c24/search.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <regex>
#include <set>
#include <sstream>
#include <thread>

#include "c24/poincare_check.hpp"

namespace c24 {

namespace {

using Mat = std::array<std::int64_t, 25>;  // doubled entries

Mat mat_mul(const Mat& a, const Mat& b) {
  Mat c{};
  for (int r = 0; r < 5; ++r)
    for (int k = 0; k < 5; ++k) {
      const std::int64_t x = a[5 * r + k];
      if (!x) continue;
      for (int col = 0; col < 5; ++col) c[5 * r + col] += x * b[5 * k + col];
    }
  for (auto& x : c) x /= 2;
  return c;
}

bool is_identity(const Mat& m) {
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c)
      if (m[5 * r + c] != (r == c ? 2 : 0)) return false;
  return true;
}

Mat to_mat(const LorentzMatrix& m) {
  Mat out{};
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) out[5 * r + c] = m.doubled(r, c).convert_to<std::int64_t>();
  return out;
}

// Precomputed actions of the symmetry group used by the search.
struct Tables {
  std::vector<std::array<std::uint8_t, kRidges>> ridge_perm;  // [symmetry][ridge]
  std::vector<std::array<std::uint8_t, kEdges>> edge_perm;    // [symmetry][edge], image edge
  std::vector<std::array<std::uint8_t, kEdges>> edge_flip;    // 1 if vertices[0] goes to the image's vertices[1]
  std::vector<Mat> sym_mat;
  std::array<Mat, kSides> reflection{};
  std::array<std::array<int, 8>, kSides> neighbours{};  // sides sharing a ridge
  // Ranks of rows at side 0 by (partner, images); -1 for symmetries fixing side 0.
  std::vector<int> rank0;
  // For a row (s, f): least rank of the row transported to side 0, and the
  // transporting symmetries attaining it.
  std::vector<int> row_min;                      // [s * 1152 + f], -1 if f fixes s
  std::vector<std::vector<std::uint16_t>> row_argmin;
};

const Tables& tables() {
  static const Tables t = [] {
    const Cell24Model& cell = standard_cell();
    Tables t;
    t.ridge_perm.resize(kSymmetries);
    t.edge_perm.resize(kSymmetries);
    t.edge_flip.resize(kSymmetries);
    for (int k = 0; k < kSymmetries; ++k) {
      const auto& vp = cell.symmetries[k].vertex_perm;
      for (int r = 0; r < kRidges; ++r) {
        const auto& v = cell.ridges[r].vertices;
        t.ridge_perm[k][r] = static_cast<std::uint8_t>(cell.ridge_of_vertices(vp[v[0]], vp[v[1]], vp[v[2]]));
      }
      for (int e = 0; e < kEdges; ++e) {
        const auto& v = cell.edges[e].vertices;
        const int e2 = cell.edge_of_vertices(vp[v[0]], vp[v[1]]);
        t.edge_perm[k][e] = static_cast<std::uint8_t>(e2);
        t.edge_flip[k][e] = cell.edges[e2].vertices[0] == vp[v[0]] ? 0 : 1;
      }
      t.sym_mat.push_back(to_mat(cell.symmetries[k].matrix));
    }
    for (int s = 0; s < kSides; ++s) {
      t.reflection[s] = to_mat(cell.side_reflection(s));
      int n = 0;
      for (int r : cell.ridges_of_side(s)) {
        const auto& rs = cell.ridges[r].sides;
        t.neighbours[s][n++] = rs[0] == s ? rs[1] : rs[0];
      }
    }

    auto row_less = [&](int f, int g) {
      const auto& a = cell.symmetries[f];
      const auto& b = cell.symmetries[g];
      if (a.side_perm[0] != b.side_perm[0]) return a.side_perm[0] < b.side_perm[0];
      for (int v : cell.side_vertices[0])
        if (a.vertex_perm[v] != b.vertex_perm[v]) return a.vertex_perm[v] < b.vertex_perm[v];
      return false;
    };
    std::vector<int> rows;
    for (int f = 0; f < kSymmetries; ++f)
      if (cell.symmetries[f].side_perm[0] != 0) rows.push_back(f);
    std::sort(rows.begin(), rows.end(), row_less);
    t.rank0.assign(kSymmetries, -1);
    for (std::size_t i = 0; i < rows.size(); ++i) t.rank0[rows[i]] = static_cast<int>(i);

    t.row_min.assign(kSides * kSymmetries, -1);
    t.row_argmin.resize(kSides * kSymmetries);
    for (int s = 0; s < kSides; ++s) {
      const auto& to_zero = cell.symmetries_between(s, 0);
      for (int f = 0; f < kSymmetries; ++f) {
        if (cell.symmetries[f].side_perm[s] == s) continue;
        int best = -1;
        std::vector<std::uint16_t> arg;
        for (int phi : to_zero) {
          const int c = cell.compose(cell.compose(phi, f), cell.inverse_symmetry(phi));
          const int rk = t.rank0[c];
          if (best < 0 || rk < best) {
            best = rk;
            arg.clear();
          }
          if (rk == best) arg.push_back(static_cast<std::uint16_t>(phi));
        }
        t.row_min[s * kSymmetries + f] = best;
        t.row_argmin[s * kSymmetries + f] = std::move(arg);
      }
    }
    return t;
  }();
  return t;
}

// Compares row k of two pairings given as (partner, symmetry) arrays.
int compare_row(int k, int pa, int fa, int pb, int fb) {
  if (pa != pb) return pa < pb ? -1 : 1;
  const Cell24Model& cell = standard_cell();
  const auto& va = cell.symmetries[fa].vertex_perm;
  const auto& vb = cell.symmetries[fb].vertex_perm;
  for (int v : cell.side_vertices[k])
    if (va[v] != vb[v]) return va[v] < vb[v] ? -1 : 1;
  return 0;
}

// Sign of key(phi p phi^{-1}) - key(p) for a complete pairing.
int compare_conjugate(const std::array<int, kSides>& partner, const std::array<int, kSides>& sym, int phi) {
  const Cell24Model& cell = standard_cell();
  const Symmetry& g = cell.symmetries[phi];
  const int inv = cell.inverse_symmetry(phi);
  const auto& back = cell.symmetries[inv].side_perm;
  for (int k = 0; k < kSides; ++k) {
    const int src = back[k];
    const int cp = g.side_perm[partner[src]];
    const int cf = cell.compose(cell.compose(phi, sym[src]), inv);
    const int c = compare_row(k, cp, cf, partner[k], sym[k]);
    if (c) return c;
  }
  return 0;
}

SidePairing pairing_from_rows(const std::array<int, kSides>& partner, const std::array<int, kSides>& sym) {
  const Cell24Model& cell = standard_cell();
  SidePairing p;
  for (int i = 0; i < kSides; ++i) {
    p.partner[i] = partner[i];
    for (int q = 0; q < kVerticesPerSide; ++q)
      p.images[i][q] = cell.symmetries[sym[i]].vertex_perm[cell.side_vertices[i][q]];
  }
  return p;
}

struct Candidate {
  int partner;
  int symmetry;
};

// Partial pairing with incremental ridge-cycle and edge-class checks.
class Searcher {
 public:
  enum class Mode { Census, Prefix };

  Searcher(Mode mode, int min_rank) : mode_(mode), min_rank_(min_rank), t_(tables()), cell_(standard_cell()) {
    partner_.fill(-1);
    sym_.fill(-1);
  }

  SearchCounters counters;
  std::vector<PairingKey> found;

  bool complete() const { return assigned_ == kSides; }

  // Assigns side i -> j by symmetry f and runs the local checks.  On failure
  // the assignment is undone and false returned.
  bool assign(int i, int j, int f) {
    const int finv = cell_.inverse_symmetry(f);
    if (mode_ == Mode::Census &&
        (t_.row_min[i * kSymmetries + f] < min_rank_ || t_.row_min[j * kSymmetries + finv] < min_rank_)) {
      ++counters.prune_canonicity;
      return false;
    }
    partner_[i] = j;
    partner_[j] = i;
    sym_[i] = f;
    sym_[j] = finv;
    g_[i] = mat_mul(t_.reflection[j], t_.sym_mat[f]);
    g_[j] = mat_mul(t_.reflection[i], t_.sym_mat[finv]);
    assigned_ += 2;
    if (ridges_ok(i) && ridges_ok(j) && edges_ok(i, j)) return true;
    unassign(i);
    return false;
  }

  void unassign(int i) {
    const int j = partner_[i];
    partner_[i] = partner_[j] = -1;
    sym_[i] = sym_[j] = -1;
    assigned_ -= 2;
  }

  // The side to branch on.  An open ridge chain of four states can only
  // close one way, which fixes the partner of its last exit side and the
  // image of its last ridge; such sides are taken first.
  struct Branch {
    int side = -1;
    int partner = -1;  // forced partner, or -1
    int ridge_from = -1, ridge_to = -1;
    bool dead = false;  // a chain can no longer close
  };

  Branch choose_branch() const {
    for (int st = 0; st < 2 * kRidges; ++st) {
      if (has_next(st) || !has_prev(st)) continue;
      int first = st, back = 0;
      while (has_prev(first) && back < 3) {
        first = prev_state(first);
        ++back;
      }
      if (back < 3) continue;
      Branch b;
      b.side = cell_.ridges[st >> 1].sides[st & 1];
      b.partner = cell_.ridges[first >> 1].sides[1 - (first & 1)];
      b.ridge_from = st >> 1;
      b.ridge_to = first >> 1;
      b.dead = b.partner == b.side;
      return b;
    }
    // Otherwise the side whose ridges already have the longest chains behind them.
    Branch b;
    int best_score = -1;
    for (int s = 0; s < kSides; ++s) {
      if (partner_[s] >= 0) continue;
      int score = 0;
      for (int r : cell_.ridges_of_side(s)) {
        int st = 2 * r + (cell_.ridges[r].sides[0] == s ? 0 : 1);
        for (int back = 0; back < 3 && has_prev(st); ++back) {
          st = prev_state(st);
          ++score;
        }
      }
      if (score > best_score) {
        b.side = s;
        best_score = score;
      }
    }
    return b;
  }

  std::vector<Candidate> candidates(const Branch& b) const {
    std::vector<Candidate> out;
    if (b.dead) return out;
    if (b.partner >= 0) {
      for (int f : cell_.symmetries_between(b.side, b.partner))
        if (t_.ridge_perm[f][b.ridge_from] == b.ridge_to) out.push_back({b.partner, f});
      return out;
    }
    for (int y = 0; y < kSides; ++y) {
      if (y == b.side || partner_[y] >= 0) continue;
      for (int f : cell_.symmetries_between(b.side, y)) out.push_back({y, f});
    }
    return out;
  }

  void run() {
    ++counters.nodes;
    if (complete()) {
      leaf();
      return;
    }
    const Branch b = choose_branch();
    for (const Candidate& c : candidates(b)) {
      if (!assign(b.side, c.partner, c.symmetry)) continue;
      run();
      unassign(b.side);
    }
  }

 private:
  int next_state(int st) const {
    const int r = st >> 1;
    const int a = cell_.ridges[r].sides[st & 1];
    const int r2 = t_.ridge_perm[sym_[a]][r];
    return 2 * r2 + (cell_.ridges[r2].sides[0] == partner_[a] ? 1 : 0);
  }
  bool has_next(int st) const { return sym_[cell_.ridges[st >> 1].sides[st & 1]] >= 0; }

  int prev_state(int st) const {
    const int r2 = st >> 1;
    const int c = cell_.ridges[r2].sides[1 - (st & 1)];
    const int r = t_.ridge_perm[sym_[c]][r2];
    return 2 * r + (cell_.ridges[r].sides[0] == partner_[c] ? 0 : 1);
  }
  bool has_prev(int st) const { return sym_[cell_.ridges[st >> 1].sides[1 - (st & 1)]] >= 0; }

  bool ridges_ok(int side) {
    for (int r : cell_.ridges_of_side(side)) {
      const int s0 = 2 * r + (cell_.ridges[r].sides[0] == side ? 0 : 1);
      int forward[5];
      int n = 0;
      int cur = s0;
      bool closed = false;
      while (has_next(cur)) {
        forward[n] = cur;
        cur = next_state(cur);
        ++n;
        if (cur == s0) {
          closed = true;
          break;
        }
        if (n == 4) break;
      }
      if (closed) {
        if (n < 4) {
          ++counters.prune_ridge_short;
          return false;
        }
        Mat h = g_[cell_.ridges[forward[0] >> 1].sides[forward[0] & 1]];
        for (int k = 1; k < 4; ++k) h = mat_mul(g_[cell_.ridges[forward[k] >> 1].sides[forward[k] & 1]], h);
        if (!is_identity(h)) {
          ++counters.prune_ridge_holonomy;
          return false;
        }
        continue;
      }
      if (n == 4) {
        ++counters.prune_ridge_length;
        return false;
      }
      // Open chain: n transitions ahead of s0; count those behind it.
      int back = 0;
      cur = s0;
      while (has_prev(cur) && n + back < 4) {
        cur = prev_state(cur);
        ++back;
      }
      if (n + back >= 4) {
        ++counters.prune_ridge_length;
        return false;
      }
    }
    return true;
  }

  bool edges_ok(int i, int j) {
    ++epoch_;
    for (int side : {i, j}) {
      for (int e0 : cell_.edges_of_side(side)) {
        if (edge_epoch_[e0] == epoch_) continue;
        // Orientation of each visited edge relative to e0.
        int stack[16];
        int top = 0;
        int size = 0;
        bool closed = true;
        edge_epoch_[e0] = epoch_;
        edge_dir_[e0] = 0;
        stack[top++] = e0;
        ++size;
        while (top) {
          const int e = stack[--top];
          for (int a : cell_.edges[e].sides) {
            if (sym_[a] < 0) {
              closed = false;
              continue;
            }
            const int e2 = t_.edge_perm[sym_[a]][e];
            const int d2 = edge_dir_[e] ^ t_.edge_flip[sym_[a]][e];
            if (edge_epoch_[e2] == epoch_) {
              if (edge_dir_[e2] != d2) {
                ++counters.prune_edge_flip;
                return false;
              }
              continue;
            }
            if (size == 8) {
              ++counters.prune_edge_size;
              return false;
            }
            edge_epoch_[e2] = epoch_;
            edge_dir_[e2] = static_cast<std::uint8_t>(d2);
            ++size;
            stack[top++] = e2;
          }
        }
        if (closed && size != 8) {
          ++counters.prune_edge_closed;
          return false;
        }
      }
    }
    return true;
  }

  void leaf() {
    ++counters.leaves;
    std::array<int, kSides> partner{}, sym{};
    for (int s = 0; s < kSides; ++s) {
      partner[s] = partner_[s];
      sym[s] = sym_[s];
    }
    if (mode_ == Mode::Census) {
      for (int s = 0; s < kSides; ++s) {
        if (t_.row_min[s * kSymmetries + sym[s]] != min_rank_) continue;
        for (int phi : t_.row_argmin[s * kSymmetries + sym[s]]) {
          if (compare_conjugate(partner, sym, phi) < 0) {
            ++counters.rejected_noncanonical;
            return;
          }
        }
      }
      found.push_back(pairing_key(pairing_from_rows(partner, sym)));
    } else {
      found.push_back(canonical_key(pairing_from_rows(partner, sym)));
    }
  }

  Mode mode_;
  int min_rank_;
  const Tables& t_;
  const Cell24Model& cell_;
  std::array<int, kSides> partner_{};
  std::array<int, kSides> sym_{};
  std::array<Mat, kSides> g_{};
  int assigned_ = 0;
  std::uint32_t epoch_ = 0;
  std::array<std::uint32_t, kEdges> edge_epoch_{};
  std::array<std::uint8_t, kEdges> edge_dir_{};

};

struct Unit {
  std::vector<PairingRow> rows;  // rows fixed for this unit
  int min_rank = -1;             // census mode: rank of the first row
};

std::string counters_to_string(const SearchCounters& c) {
  std::ostringstream out;
  out << c.nodes << ',' << c.leaves << ',' << c.prune_ridge_length << ',' << c.prune_ridge_short << ','
      << c.prune_ridge_holonomy << ',' << c.prune_edge_size << ',' << c.prune_edge_flip << ',' << c.prune_edge_closed
      << ',' << c.prune_canonicity << ',' << c.rejected_noncanonical;
  return out.str();
}

SearchCounters counters_from_string(const std::string& s) {
  SearchCounters c;
  std::uint64_t* fields[] = {&c.nodes,           &c.leaves,          &c.prune_ridge_length, &c.prune_ridge_short,
                             &c.prune_ridge_holonomy, &c.prune_edge_size, &c.prune_edge_flip,
                             &c.prune_edge_closed, &c.prune_canonicity, &c.rejected_noncanonical};
  std::istringstream in(s);
  std::string item;
  std::size_t k = 0;
  while (std::getline(in, item, ',')) {
    if (k >= std::size(fields)) throw std::runtime_error("checkpoint counters malformed");
    *fields[k++] = std::stoull(item);
  }
  if (k != std::size(fields)) throw std::runtime_error("checkpoint counters malformed");
  return c;
}

std::string keys_digest(const std::vector<PairingKey>& keys) {
  std::string bytes;
  for (const auto& k : keys) bytes.append(k.begin(), k.end());
  return fnv1a_hex(bytes);
}

std::string options_digest(const SearchOptions& o) {
  std::ostringstream out;
  out << "shards=" << o.shards << ";index=" << o.shard_index << ";prefix=";
  for (const auto& r : o.prefix) out << r.side << '>' << r.partner << ':' << r.symmetry << ';';
  return fnv1a_hex(out.str());
}

// Splits the search into units: the fixed rows plus one assignment of the
// next side chosen by the search heuristic.
std::vector<Unit> plan_units(const SearchOptions& o) {
  std::vector<Unit> units;
  auto expand = [&](const std::vector<PairingRow>& base, Searcher::Mode mode, int min_rank) {
    Searcher s(mode, min_rank);
    for (const auto& r : base)
      if (!s.assign(r.side, r.partner, r.symmetry)) return;
    if (s.complete()) {
      units.push_back({base, min_rank});
      return;
    }
    const auto branch = s.choose_branch();
    const int side = branch.side;
    for (const Candidate& c : s.candidates(branch)) {
      if (!s.assign(side, c.partner, c.symmetry)) continue;
      s.unassign(side);
      auto rows = base;
      rows.push_back({side, c.partner, c.symmetry});
      units.push_back({rows, min_rank});
    }
  };
  if (o.prefix.empty()) {
    for (const auto& r : first_row_representatives())
      expand({r}, Searcher::Mode::Census, tables().rank0[r.symmetry]);
  } else {
    expand(o.prefix, Searcher::Mode::Prefix, -1);
  }
  return units;
}

struct UnitResult {
  bool done = false;
  SearchCounters counters;
  std::vector<PairingKey> keys;
};

UnitResult run_unit(const Unit& u) {
  Searcher s(u.min_rank >= 0 ? Searcher::Mode::Census : Searcher::Mode::Prefix, u.min_rank);
  UnitResult r;
  bool ok = true;
  for (const auto& row : u.rows) ok = ok && s.assign(row.side, row.partner, row.symmetry);
  if (ok) s.run();
  std::sort(s.found.begin(), s.found.end());
  s.found.erase(std::unique(s.found.begin(), s.found.end()), s.found.end());
  r.done = true;
  r.counters = s.counters;
  r.keys = std::move(s.found);
  return r;
}

}  // namespace

void SearchCounters::add(const SearchCounters& o) {
  nodes += o.nodes;
  leaves += o.leaves;
  prune_ridge_length += o.prune_ridge_length;
  prune_ridge_short += o.prune_ridge_short;
  prune_ridge_holonomy += o.prune_ridge_holonomy;
  prune_edge_size += o.prune_edge_size;
  prune_edge_flip += o.prune_edge_flip;
  prune_edge_closed += o.prune_edge_closed;
  prune_canonicity += o.prune_canonicity;
  rejected_noncanonical += o.rejected_noncanonical;
  recheck_failures += o.recheck_failures;
}

PairingKey canonical_key_exhaustive(const SidePairing& p) {
  PairingKey best = pairing_key(p);
  for (int k = 1; k < kSymmetries; ++k) best = std::min(best, pairing_key(conjugate_pairing(p, k)));
  return best;
}

PairingKey canonical_key(const SidePairing& p) {
  std::array<int, kSides> sym{};
  try {
    sym = side_symmetries(p);
  } catch (const NotASymmetry&) {
    return canonical_key_exhaustive(p);
  }
  // The least key starts with the least row that any symmetry can move to
  // side 0; only the symmetries achieving it need a full comparison.
  const Tables& t = tables();
  int best = -1;
  for (int s = 0; s < kSides; ++s) {
    const int m = t.row_min[s * kSymmetries + sym[s]];
    if (best < 0 || m < best) best = m;
  }
  PairingKey out{};
  bool have = false;
  for (int s = 0; s < kSides; ++s) {
    if (t.row_min[s * kSymmetries + sym[s]] != best) continue;
    for (int phi : t.row_argmin[s * kSymmetries + sym[s]]) {
      const PairingKey k = pairing_key(conjugate_pairing(p, phi));
      if (!have || k < out) {
        out = k;
        have = true;
      }
    }
  }
  return out;
}

SidePairing canonicalize(const SidePairing& p) { return pairing_from_key(canonical_key(p)); }

std::vector<PairingRow> parse_prefix(std::string_view text) {
  static const std::regex row_re(R"(^\s*(\d+)\s*->\s*(\d+)\s*:\s*(.*?)\s*$)");
  static const std::regex pair_re(R"((\d+)\s*>\s*(\d+))");
  const Cell24Model& cell = standard_cell();
  std::vector<PairingRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  std::set<int> used;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto fail = [&](PairingErrorKind kind, const std::string& why) {
      throw PairingError(kind, lineno, "line " + std::to_string(lineno) + ": " + why);
    };
    std::smatch m;
    if (!std::regex_match(line, m, row_re)) fail(PairingErrorKind::MalformedLine, "expected 'i -> j : a>b, ...'");
    const int i = std::stoi(m[1]) - 1, j = std::stoi(m[2]) - 1;
    if (i < 0 || j < 0 || i >= kSides || j >= kSides) fail(PairingErrorKind::MalformedLine, "side index out of range");
    if (i == j) fail(PairingErrorKind::NotAnInvolution, "side paired with itself");
    if (used.count(i) || used.count(j)) fail(PairingErrorKind::NotAnInvolution, "a side appears in more than one row");
    used.insert(i);
    used.insert(j);
    SideVertexImages images{};
    std::string body = m[3];
    int n = 0;
    for (std::sregex_iterator it(body.begin(), body.end(), pair_re), end; it != end; ++it, ++n) {
      const int a = std::stoi((*it)[1]) - 1, b = std::stoi((*it)[2]) - 1;
      if (n >= kVerticesPerSide) fail(PairingErrorKind::MalformedLine, "expected six vertex pairs");
      if (a < 0 || a >= kVertices || cell.vertex_slot(i, a) < 0) fail(PairingErrorKind::VertexNotOnSide, "source vertex not on side");
      if (b < 0 || b >= kVertices || !cell.incident(j, b)) fail(PairingErrorKind::VertexNotOnSide, "target vertex not on side");
      images[cell.vertex_slot(i, a)] = static_cast<std::uint8_t>(b);
    }
    if (n != kVerticesPerSide) fail(PairingErrorKind::MalformedLine, "expected six vertex pairs");
    const auto f = cell.side_symmetry_index(i, j, images);
    if (!f) throw NotASymmetry("line " + std::to_string(lineno) + ": vertex map is not induced by a symmetry");
    rows.push_back({i, j, *f});
  }
  return rows;
}

std::vector<PairingRow> first_row_representatives() {
  const Tables& t = tables();
  std::vector<std::pair<int, int>> reps;  // (rank, symmetry)
  for (int f = 0; f < kSymmetries; ++f) {
    if (t.rank0[f] < 0) continue;
    if (t.row_min[f] == t.rank0[f]) reps.emplace_back(t.rank0[f], f);
  }
  std::sort(reps.begin(), reps.end());
  std::vector<PairingRow> out;
  for (auto [rank, f] : reps) out.push_back({0, standard_cell().symmetries[f].side_perm[0], f});
  return out;
}

CensusResult enumerate(const SearchOptions& o) {
  if (o.shards < 1 || o.shard_index < 0 || o.shard_index >= o.shards)
    throw std::invalid_argument("shard index out of range");
  const std::vector<Unit> all = plan_units(o);
  std::vector<std::size_t> mine;
  for (std::size_t u = 0; u < all.size(); ++u)
    if (static_cast<int>(u % o.shards) == o.shard_index) mine.push_back(u);

  CensusResult result;
  result.units_total = mine.size();
  std::map<std::size_t, UnitResult> results;

  std::string plan_text;
  for (const Unit& u : all)
    for (const auto& row : u.rows)
      plan_text += std::to_string(row.side) + '>' + std::to_string(row.partner) + ':' + std::to_string(row.symmetry) + ';';
  const std::string header = std::string(kCheckpointVersion) + " options=" + options_digest(o) +
                             " plan=" + fnv1a_hex(plan_text) + " units=" + std::to_string(all.size());
  if (o.checkpoint && std::filesystem::exists(*o.checkpoint)) {
    std::ifstream in(*o.checkpoint);
    std::string line;
    std::getline(in, line);
    if (line != header) throw std::runtime_error("checkpoint " + o.checkpoint->string() + " belongs to different search options");
    static const std::regex unit_re(R"(^unit (\d+) counters=([0-9,]+) found=(\d+) digest=([0-9a-f]{16}) keys=([0-9a-f,]*)$)");
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::smatch m;
      if (!std::regex_match(line, m, unit_re)) throw std::runtime_error("malformed checkpoint line: " + line);
      UnitResult r;
      r.done = true;
      r.counters = counters_from_string(m[2]);
      std::istringstream keys(m[5]);
      std::string hex;
      while (std::getline(keys, hex, ','))
        if (!hex.empty()) r.keys.push_back(key_from_hex(hex));
      if (r.keys.size() != std::stoull(m[3]) || keys_digest(r.keys) != m[4].str())
        throw std::runtime_error("checkpoint digest mismatch for unit " + m[1].str());
      results[std::stoull(m[1])] = std::move(r);
    }
    result.units_resumed = results.size();
  }

  std::ofstream ckpt;
  if (o.checkpoint) {
    const bool fresh = !std::filesystem::exists(*o.checkpoint);
    ckpt.open(*o.checkpoint, std::ios::app);
    if (!ckpt) throw std::runtime_error("cannot write checkpoint " + o.checkpoint->string());
    if (fresh) ckpt << header << '\n' << std::flush;
  }

  std::vector<std::size_t> todo;
  for (std::size_t u : mine)
    if (!results.count(u)) todo.push_back(u);
  if (o.unit_limit) {
    const std::size_t budget = o.unit_limit > results.size() ? o.unit_limit - results.size() : 0;
    if (todo.size() > budget) todo.resize(budget);
  }

  std::mutex mu;
  std::atomic<std::size_t> next{0};
  std::uint64_t done = results.size();
  auto worker = [&] {
    for (;;) {
      const std::size_t k = next++;
      if (k >= todo.size()) return;
      UnitResult r = run_unit(all[todo[k]]);
      std::lock_guard<std::mutex> lock(mu);
      if (ckpt.is_open()) {
        ckpt << "unit " << todo[k] << " counters=" << counters_to_string(r.counters) << " found=" << r.keys.size()
             << " digest=" << keys_digest(r.keys) << " keys=";
        for (std::size_t i = 0; i < r.keys.size(); ++i) ckpt << (i ? "," : "") << key_to_hex(r.keys[i]);
        ckpt << '\n' << std::flush;
      }
      results[todo[k]] = std::move(r);
      ++done;
      if (o.progress) o.progress(todo[k], done, mine.size());
    }
  };
  const int nworkers = std::max(1, o.workers);
  std::vector<std::thread> pool;
  for (int w = 1; w < nworkers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::set<PairingKey> keys;
  for (auto& [u, r] : results) {
    result.counters.add(r.counters);
    keys.insert(r.keys.begin(), r.keys.end());
  }
  result.units_done = results.size();
  for (const auto& k : keys) {
    const SidePairing p = pairing_from_key(k);
    if (o.recheck && !is_manifold(p)) {
      ++result.counters.recheck_failures;
      continue;
    }
    CensusEntry e{k, cusp_count(p)};
    if (o.one_cusped && e.cusps != 1) continue;
    result.entries.push_back(e);
  }
  return result;
}

std::string census_to_text(const CensusResult& r) {
  std::ostringstream out;
  out << "# c24-census/1 entries=" << r.entries.size() << " units=" << r.units_done << '/' << r.units_total << '\n';
  std::size_t n = 0;
  for (const auto& e : r.entries) {
    out << "# pairing " << ++n << " cusps=" << e.cusps << " key=" << key_to_hex(e.key) << '\n';
    out << serialize_pairing(pairing_from_key(e.key));
  }
  return out.str();
}

}  // namespace c24
