// Orientation character, orientation double covers, equivalence of pairings
// and of two-sheet covers, and symmetry stabilisers.
#ifndef C24_COVERS_ISOMETRY_HPP
#define C24_COVERS_ISOMETRY_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "c24/pairing.hpp"

namespace c24 {

class AlreadyOrientable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// det g_i (+1 or -1) for every side.
std::array<int, kSides> orientation_character(const SidePairing& p);
bool is_orientable(const SidePairing& p);

/// Two sheets, crossing over exactly along the orientation-reversing sides.
SheetedPairing orientation_double_cover(const SidePairing& p);

/// Single-cell equivalence: equal canonical forms.
bool pairings_equivalent(const SidePairing& p, const SidePairing& q);

/// A map of two-sheet complexes: sheet t of the first goes to sheet
/// sheet_map[t] of the second by the symmetry sheet_symmetry[t].
struct SheetIsomorphism {
  std::array<int, 2> sheet_map{};
  std::array<int, 2> sheet_symmetry{};
};

/// Searches sheet swaps and per-sheet symmetries for a map carrying every
/// gluing of p onto a gluing of q.  Both inputs must have two sheets.
std::optional<SheetIsomorphism> double_covers_equivalent(const SheetedPairing& p, const SheetedPairing& q);

/// Symmetries phi of Q with phi p phi^{-1} = p, via the permutation action.
std::vector<int> stabilizer(const SidePairing& p);
/// The same set, via phi g_i phi^{-1} = g_{phi(i)} on matrices.
std::vector<int> stabilizer_by_matrices(const SidePairing& p);

/// |stabilizer(p)|; for the one-cusped census manifolds this is the order of
/// the isometry group, in general only a lower bound.
int isometry_group_order(const SidePairing& p);

}  // namespace c24

#endif  // C24_COVERS_ISOMETRY_HPP
