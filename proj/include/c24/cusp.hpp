// Cusp cross-sections: the closed flat 3-manifold obtained by gluing the
// cubical vertex links of Q, its identification, and the maximal cusp volume.
#ifndef C24_CUSP_HPP
#define C24_CUSP_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "c24/glued_complex.hpp"
#include "c24/pairing.hpp"

namespace c24 {

class MultipleCusps : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The unit cube; corner b has coordinates (b & 1, b >> 1 & 1, b >> 2 & 1)
/// and face 2*axis + side is the face where coordinate `axis` equals `side`.
const std::shared_ptr<const CellTemplate>& cube_template();
int cube_face_cell(int axis, int side);

/// Labels of the link cube at an ideal vertex v: corner bits -> neighbouring
/// vertex w (the corner lies on the edge vw).
std::array<int, 8> cube_corner_labels(int v);

struct FaceGluing {
  int cube, face, other_cube, other_face;
  int sign;  // orientation of the face map relative to the template faces
};

struct CubeComplex {
  std::vector<std::pair<int, int>> cubes;  // (sheet, ideal vertex)
  std::shared_ptr<GluedComplex> glued;
  std::vector<FaceGluing> gluings;
  QuotientComplex chain;

  bool closed() const;
};

/// Classes of (sheet, vertex) under the sheeted vertex maps, ordered by least element.
std::vector<std::vector<std::pair<int, int>>> sheeted_cusp_classes(const SheetedPairing& p);

CubeComplex build_cusp_link(const SheetedPairing& p, int cusp_class = 0);
CubeComplex build_cusp_link(const SidePairing& p, int cusp_class = 0);

/// Builds a cube complex from explicit face gluings of `cube_count` unit cubes;
/// each vertex map is indexed by corner bits.
CubeComplex glue_cubes(int cube_count, const std::vector<std::pair<FaceGluing, std::array<int, 8>>>& gluings);

struct FlatLinkClass {
  bool orientable = false;
  AbelianGroup h1;
  std::string label;  // "N3_2", "T3" or empty
  /// Orientability decided from the top homology agrees with the colouring.
  bool orientation_cross_check = false;
};

FlatLinkClass classify_flat_link(const CubeComplex& c);

struct CuspVolume {
  double total = 0;
  double horoball_scale = 0;       // lambda with horoballs {x : -x o (lambda v) <= 1}
  std::vector<double> per_vertex;  // volume of Q inside each horoball
  bool neighbours_clear = false;   // horoballs of adjacent copies of Q do not overlap
};

/// Equal-height horoballs at the 24 vertices, expanded to first tangency.
/// Throws MultipleCusps unless the pairing has a single cusp.
CuspVolume max_cusp_volume(const SidePairing& p);

}  // namespace c24

#endif  // C24_CUSP_HPP
