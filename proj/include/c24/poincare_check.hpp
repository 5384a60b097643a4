// Gluing conditions for side-pairings of the 24-cell: ridge cycles, edge
// links, completeness at the cusps, cusp classes, and the presentation of
// the group generated by the side-pairing transformations.
#ifndef C24_POINCARE_CHECK_HPP
#define C24_POINCARE_CHECK_HPP

#include <optional>
#include <string>
#include <vector>

#include "c24/pairing.hpp"

namespace c24 {

/// g_generator^power with power = +1 or -1; generators are the sides i with
/// i < sigma(i) (0-based).
struct Letter {
  int generator = 0;
  int power = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};
bool operator<(const Letter& a, const Letter& b);

using Word = std::vector<Letter>;

/// The letter standing for g_side: g_side itself if side < sigma(side),
/// otherwise the inverse of g_sigma(side).
Letter letter_for_side(const SidePairing& p, int side);

/// Minimum over all rotations of w and of w^{-1}.
Word canonical_relator(const Word& w);
Word inverse_word(const Word& w);

/// "g3 g16 g4^2" (1-based, consecutive equal letters collected).
std::string word_to_string(const Word& w);
/// Inverse of word_to_string; accepts exponents like ^-1, ^2, ^-2.
Word parse_word(const std::string& text);

/// Product of the letters read left to right.
LorentzMatrix evaluate_word(const Word& w, const DerivedTransformations& d, const SidePairing& p);

struct RidgeCycle {
  std::vector<int> ridges;      // ridges in traversal order
  std::vector<int> exit_sides;  // side through which each ridge is left
  Word word;                    // g_{a_n} ... g_{a_1}
  LorentzMatrix holonomy;
  bool closed = true;           // false: the chain hits a vertex map that does not carry the ridge to a ridge
  bool has_holonomy = false;    // false when the transformations could not be derived
  bool passes = false;          // closed, length 4 and identity holonomy
};

struct RidgeCycleReport {
  std::vector<RidgeCycle> cycles;  // one per ridge class
  bool partition_ok = false;       // every ridge in exactly one class
  bool all_pass = false;
};

/// Ridge cycles from the vertex maps.  Without transformations (d == nullptr)
/// the cycles are traced combinatorially and none of them passes.
RidgeCycleReport ridge_cycles(const SidePairing& p, const DerivedTransformations* d);
RidgeCycleReport ridge_cycles(const SidePairing& p, const DerivedTransformations& d);
/// Derives the transformations if possible, otherwise traces combinatorially.
RidgeCycleReport ridge_cycles(const SidePairing& p);

struct EdgeClass {
  std::vector<int> edges;  // undirected edge indices, sorted
  bool orientation_consistent = false;  // no edge meets its class in both directions
  int link_vertices = 0, link_edges = 0, link_faces = 0;
  int euler_characteristic = 0;
  bool connected = false;
  bool develops = false;  // copies of Q around the edge close up with identity
  bool passes = false;
};

struct EdgeLinkReport {
  std::vector<EdgeClass> classes;
  bool all_pass = false;
};

EdgeLinkReport edge_link_check(const SidePairing& p, const DerivedTransformations& d);
EdgeLinkReport edge_link_check(const SidePairing& p);

/// Classes of ideal vertices under the vertex maps, each sorted, ordered by
/// least element.
std::vector<std::vector<int>> cusp_classes(const SidePairing& p);
int cusp_count(const SidePairing& p);

/// g_a v_x == v_{vmap_a(x)} exactly for every side a and vertex x on it.
bool completeness_check(const SidePairing& p, const DerivedTransformations& d);

struct ManifoldReport {
  bool derivation_ok = false;
  std::string derivation_error;
  std::optional<DerivedTransformations> transformations;
  RidgeCycleReport ridges;
  EdgeLinkReport edges;
  bool complete = false;
  std::vector<std::vector<int>> cusps;
  bool is_manifold = false;
};

ManifoldReport check_manifold(const SidePairing& p);
bool is_manifold(const SidePairing& p);

struct Presentation {
  std::vector<int> generators;  // sides i < sigma(i)
  std::vector<Word> relators;
};

/// Requires a passing ridge report; throws std::invalid_argument otherwise.
Presentation presentation(const SidePairing& p);

}  // namespace c24

#endif  // C24_POINCARE_CHECK_HPP
