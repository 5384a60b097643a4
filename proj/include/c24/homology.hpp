// Integral homology of 24-cell manifolds.  The ideal vertices of Q are cut
// off, leaving a compact truncated 24-cell whose cells are:
//   0: corners (v, e), one per ideal vertex v and edge e at v      (192)
//   1: truncated edges (96) and cube edges (v, ridge)              (288)
//   2: hexagons from ridges (96) and squares (v, side)             (144)
//   3: truncated octahedra from sides (24) and vertex cubes        (24)
//   4: the polytope itself.
// Gluing copies of it along the side-pairing gives a compact manifold with
// boundary homotopy equivalent to the cusped manifold.
#ifndef C24_HOMOLOGY_HPP
#define C24_HOMOLOGY_HPP

#include <memory>
#include <vector>

#include "c24/glued_complex.hpp"
#include "c24/pairing.hpp"
#include "c24/poincare_check.hpp"
#include "c24/smith.hpp"

namespace c24 {

/// The truncated 24-cell as a cell template with index helpers.
struct TruncatedCell {
  std::shared_ptr<const CellTemplate> cells;
  /// Template vertex index of corner (v, e); -1 if e does not meet v.
  std::vector<std::vector<int>> corner;  // [vertex][edge]
  std::vector<int> side_cell;            // 3-cell index of each truncated side
};

const TruncatedCell& truncated_cell();

GluedComplex truncated_glued(const SheetedPairing& p);
QuotientComplex truncated_complex(const SheetedPairing& p);
QuotientComplex truncated_complex(const SidePairing& p);

/// H_0 .. H_4.
std::vector<AbelianGroup> homology_groups(const SheetedPairing& p);
std::vector<AbelianGroup> homology_groups(const SidePairing& p);

/// Z^generators modulo the exponent-sum vectors of the relators.
AbelianGroup abelianization(const Presentation& pr);

/// (4/3) pi^2 chi.
double volume_from_euler(long long chi);

}  // namespace c24

#endif  // C24_HOMOLOGY_HPP
