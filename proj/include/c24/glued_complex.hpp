// Cellular chain complexes of spaces obtained by gluing copies of a convex
// polytopal cell complex along facets.
//
// A CellTemplate is a convex polytope (or any complex of convex cells) given
// by integer vertex coordinates and, for every dimension, the vertex sets of
// its cells.  Boundary incidences and their signs are computed from the
// coordinates.  A GluedComplex takes several copies ("pieces") of a template
// and identifies facets by vertex bijections induced from affine maps; the
// quotient's integral chain complex is then available for homology.
#ifndef C24_GLUED_COMPLEX_HPP
#define C24_GLUED_COMPLEX_HPP

#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

#include "c24/smith.hpp"

namespace c24 {

class GluingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CellTemplate {
 public:
  /// `cells[k]` lists the k-cells as vertex-index lists; cells[0] may be left
  /// empty and is then filled with the singletons.
  CellTemplate(std::vector<std::vector<long long>> coords, std::vector<std::vector<std::vector<int>>> cells);

  int dimension() const { return static_cast<int>(cells_.size()) - 1; }
  int count(int k) const { return static_cast<int>(cells_[k].size()); }
  const std::vector<int>& vertices(int k, int cell) const { return cells_[k][cell]; }

  /// Index of the k-cell with exactly this vertex set (any order), or -1.
  int find(int k, std::vector<int> vertex_set) const;

  struct Incidence {
    int facet;
    int sign;
  };
  const std::vector<Incidence>& facets(int k, int cell) const { return facets_[k][cell]; }

  /// All cells of every dimension contained in the given k-cell (itself
  /// included), as (dimension, index).
  const std::vector<std::pair<int, int>>& closure(int k, int cell) const { return closure_[k][cell]; }

  /// +1 or -1: orientation of cell (k, to) relative to the image of cell
  /// (k, from) under the affine map determined by `vertex_map`.
  int transport_sign(int k, int from, int to, const std::vector<int>& vertex_map) const;

 private:
  std::vector<long long> diff(int a, int b) const;

  std::vector<std::vector<long long>> coords_;
  std::vector<std::vector<std::vector<int>>> cells_;
  std::vector<std::vector<std::vector<int>>> basis_;  // per cell: base vertex followed by k spanning vertices
  std::vector<std::vector<std::vector<Incidence>>> facets_;
  std::vector<std::vector<std::vector<std::pair<int, int>>>> closure_;
  std::vector<std::map<std::vector<int>, int>> index_;
};

/// Chain complex of a finite CW complex over Z.
struct QuotientComplex {
  std::vector<int> cell_counts;    // by dimension
  std::vector<IntMatrix> boundary;  // boundary[k]: C_k -> C_{k-1}, size counts[k-1] x counts[k]; boundary[0] empty

  int dimension() const { return static_cast<int>(cell_counts.size()) - 1; }
  long long euler_characteristic() const;
  /// boundary[k-1] * boundary[k] == 0 for every k.
  bool is_chain_complex() const;
};

/// H_0 .. H_dim of a chain complex.
std::vector<AbelianGroup> homology(const QuotientComplex& c);

class GluedComplex {
 public:
  GluedComplex(std::shared_ptr<const CellTemplate> tmpl, int pieces);

  const CellTemplate& cell_template() const { return *tmpl_; }
  int pieces() const { return pieces_; }

  /// Identifies cell (dim, from_cell) of piece `from_piece` with cell
  /// (dim, to_cell) of `to_piece`, carrying template vertex v to
  /// vertex_map[v].  Every subcell is identified accordingly.  Throws
  /// GluingError if the map does not carry cells to cells or if a cell would
  /// be identified with itself reversing orientation.
  void glue(int dim, int from_piece, int from_cell, int to_piece, int to_cell, const std::vector<int>& vertex_map);

  /// Class index and relative orientation of a cell of a piece.
  std::pair<int, int> cell_class(int k, int piece, int cell) const;
  int class_count(int k) const;
  /// Number of piece cells in the class of the given cell.
  int class_size(int k, int piece, int cell) const;

  QuotientComplex quotient() const;

 private:
  int node(int k, int piece, int cell) const;
  std::pair<int, int> find(int x) const;
  void unite(int a, int b, int sign);
  void renumber() const;

  std::shared_ptr<const CellTemplate> tmpl_;
  int pieces_;
  std::vector<int> offset_;  // node offset per dimension
  mutable std::vector<int> parent_;
  mutable std::vector<int> parity_;  // orientation of node relative to parent
  mutable bool numbered_ = false;
  mutable std::vector<std::vector<int>> class_of_root_;
  mutable std::vector<int> class_counts_;
};

}  // namespace c24

#endif  // C24_GLUED_COMPLEX_HPP
