#include "c24/covers_isometry.hpp"

#include <algorithm>

#include "c24/search.hpp"

namespace c24 {

std::array<int, kSides> orientation_character(const SidePairing& p) {
  const auto d = derive_transformations(p);
  std::array<int, kSides> out{};
  for (int i = 0; i < kSides; ++i) out[i] = d.g[i].determinant_sign();
  return out;
}

bool is_orientable(const SidePairing& p) {
  const auto chi = orientation_character(p);
  return std::all_of(chi.begin(), chi.end(), [](int s) { return s == 1; });
}

SheetedPairing orientation_double_cover(const SidePairing& p) {
  const auto chi = orientation_character(p);
  SheetedPairing sp{p, 2, {}};
  bool any = false;
  for (int i = 0; i < kSides; ++i) {
    sp.shift[i] = chi[i] < 0 ? 1 : 0;
    any = any || chi[i] < 0;
  }
  if (!any) throw AlreadyOrientable("every side-pairing transformation preserves orientation");
  return sp;
}

bool pairings_equivalent(const SidePairing& p, const SidePairing& q) {
  return canonical_key(p) == canonical_key(q);
}

namespace {

bool carries(const SheetedPairing& p, const SheetedPairing& q, const SheetIsomorphism& m) {
  const Cell24Model& cell = standard_cell();
  for (int t = 0; t < 2; ++t) {
    for (int a = 0; a < kSides; ++a) {
      const int t2 = p.target_sheet(t, a);
      const Symmetry& phi = cell.symmetries[m.sheet_symmetry[t]];
      const Symmetry& phi2 = cell.symmetries[m.sheet_symmetry[t2]];
      const int a2 = phi.side_perm[a];
      if (q.target_sheet(m.sheet_map[t], a2) != m.sheet_map[t2]) return false;
      if (q.base.partner[a2] != phi2.side_perm[p.base.partner[a]]) return false;
      for (int x : cell.side_vertices[a]) {
        if (q.base.vertex_image(a2, phi.vertex_perm[x]) != phi2.vertex_perm[p.base.vertex_image(a, x)]) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::optional<SheetIsomorphism> double_covers_equivalent(const SheetedPairing& p, const SheetedPairing& q) {
  if (p.sheets != 2 || q.sheets != 2) throw std::invalid_argument("double cover equivalence needs two sheets");
  const Cell24Model& cell = standard_cell();
  int cross = -1;
  for (int a = 0; a < kSides && cross < 0; ++a)
    if (p.shift[a]) cross = a;
  if (cross < 0) return std::nullopt;  // p is disconnected; not a connected double cover
  const int b = p.base.partner[cross];

  for (int swap = 0; swap < 2; ++swap) {
    for (int f0 = 0; f0 < kSymmetries; ++f0) {
      const Symmetry& phi0 = cell.symmetries[f0];
      const int a2 = phi0.side_perm[cross];
      if (!q.shift[a2]) continue;
      // Sheet 1's symmetry is forced along the crossing side.
      SideVertexImages images{};
      for (int k = 0; k < kVerticesPerSide; ++k) {
        const int y = cell.side_vertices[b][k];
        const int x = p.base.vertex_image(b, y);
        images[k] = static_cast<std::uint8_t>(q.base.vertex_image(a2, phi0.vertex_perm[x]));
      }
      const auto f1 = cell.side_symmetry_index(b, q.base.partner[a2], images);
      if (!f1) continue;
      SheetIsomorphism m;
      m.sheet_map = swap ? std::array<int, 2>{1, 0} : std::array<int, 2>{0, 1};
      m.sheet_symmetry = {f0, *f1};
      if (carries(p, q, m)) return m;
    }
  }
  return std::nullopt;
}

std::vector<int> stabilizer(const SidePairing& p) {
  std::vector<int> out;
  for (int k = 0; k < kSymmetries; ++k)
    if (conjugate_pairing(p, k) == p) out.push_back(k);
  return out;
}

std::vector<int> stabilizer_by_matrices(const SidePairing& p) {
  const Cell24Model& cell = standard_cell();
  const auto d = derive_transformations(p);
  std::vector<int> out;
  for (int k = 0; k < kSymmetries; ++k) {
    const LorentzMatrix& phi = cell.symmetries[k].matrix;
    const LorentzMatrix inv = phi.inverse();
    std::array<bool, kSides> hit{};
    bool ok = true;
    for (int i = 0; i < kSides && ok; ++i) {
      const LorentzMatrix c = phi * d.g[i] * inv;
      int j = 0;
      while (j < kSides && !(d.g[j] == c)) ++j;
      if (j == kSides || hit[j]) {
        ok = false;
      } else {
        hit[j] = true;
      }
    }
    if (ok) out.push_back(k);
  }
  return out;
}

int isometry_group_order(const SidePairing& p) { return static_cast<int>(stabilizer(p).size()); }

}  // namespace c24
