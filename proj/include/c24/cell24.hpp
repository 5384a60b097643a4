// The standard ideal regular 24-cell Q in the hyperboloid model: its side
// normals, ideal vertices, face incidences, and its 1152 symmetries.
//
// Indices are 0-based throughout the library (side k here is side k+1 in the
// usual 1-based listing); text formats convert at the boundary.
#ifndef C24_CELL24_HPP
#define C24_CELL24_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "c24/exact_lorentz.hpp"

namespace c24 {

inline constexpr int kSides = 24;
inline constexpr int kVertices = 24;
inline constexpr int kRidges = 96;
inline constexpr int kEdges = 96;
inline constexpr int kSymmetries = 1152;
inline constexpr int kVerticesPerSide = 6;

using Permutation24 = std::array<std::uint8_t, 24>;

/// Images of a side's six vertices, listed in the side's sorted vertex order.
using SideVertexImages = std::array<std::uint8_t, kVerticesPerSide>;

struct Ridge {
  std::array<int, 2> sides;     // sorted
  std::array<int, 3> vertices;  // sorted
};

struct Edge {
  std::array<int, 2> vertices;  // sorted
  std::array<int, 3> sides;     // sorted
};

struct Symmetry {
  LorentzMatrix matrix;
  Permutation24 side_perm{};    // side i -> side_perm[i]
  Permutation24 vertex_perm{};  // vertex a -> vertex_perm[a]
};

class NotASymmetry : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Cell24Model {
 public:
  std::array<HalfVec5, kSides> normals;
  std::array<HalfVec5, kVertices> vertices;
  std::array<std::array<int, kVerticesPerSide>, kSides> side_vertices{};
  std::vector<Ridge> ridges;
  std::vector<Edge> edges;
  std::vector<Symmetry> symmetries;  // symmetries[0] is the identity

  /// Side k contains vertex a.
  bool incident(int side, int vertex) const { return side_mask_[side] >> vertex & 1u; }
  std::uint32_t side_vertex_mask(int side) const { return side_mask_[side]; }
  /// Position of a vertex in side_vertices[side], or -1.
  int vertex_slot(int side, int vertex) const { return slot_[side][vertex]; }

  /// Ridge spanned by three vertices (any order), or -1.
  int ridge_of_vertices(int a, int b, int c) const;
  int ridge_of_sides(int s, int t) const;
  /// Edge joining two vertices, or -1 if they are not adjacent.
  int edge_of_vertices(int a, int b) const;

  /// The 8 ridges of a side and the 12 edges of a side.
  const std::array<int, 8>& ridges_of_side(int side) const { return side_ridges_[side]; }
  const std::array<int, 12>& edges_of_side(int side) const { return side_edges_[side]; }
  /// The 12 ridges and 8 edges through an ideal vertex.
  const std::array<int, 12>& ridges_at_vertex(int vertex) const { return vertex_ridges_[vertex]; }
  const std::array<int, 8>& edges_at_vertex(int vertex) const { return vertex_edges_[vertex]; }

  const LorentzMatrix& side_reflection(int side) const { return reflections_[side]; }

  int inverse_symmetry(int k) const { return inverse_[k]; }
  /// Index of symmetries[a] * symmetries[b].
  int compose(int a, int b) const;

  /// The symmetry f with f(S_i) = S_j whose restriction to S_i is `images`,
  /// or std::nullopt.  Unique when it exists.
  std::optional<int> side_symmetry_index(int i, int j, const SideVertexImages& images) const;
  /// Index of the symmetry whose matrix equals m, or -1.
  int symmetry_index(const LorentzMatrix& m) const;
  /// Index of the symmetry with the given vertex permutation, or -1.
  int symmetry_index(const Permutation24& vertex_perm) const;

  /// All 48 symmetries carrying side i onto side j.
  const std::vector<int>& symmetries_between(int i, int j) const { return between_[i * kSides + j]; }

 private:
  friend Cell24Model build_standard_cell();

  std::array<std::uint32_t, kSides> side_mask_{};
  std::array<std::array<int, kVertices>, kSides> slot_{};
  std::array<std::array<int, 8>, kSides> side_ridges_{};
  std::array<std::array<int, 12>, kSides> side_edges_{};
  std::array<std::array<int, 12>, kVertices> vertex_ridges_{};
  std::array<std::array<int, 8>, kVertices> vertex_edges_{};
  std::array<int, kSides * kSides> ridge_by_sides_{};
  std::array<int, kVertices * kVertices> edge_by_vertices_{};
  std::array<LorentzMatrix, kSides> reflections_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> between_;
  std::unordered_map<std::uint64_t, int> side_map_index_;
  std::unordered_map<std::size_t, std::vector<int>> matrix_index_;
  std::unordered_map<std::uint64_t, int> perm_index_;
  std::vector<std::uint16_t> compose_;
};

/// Builds the model from scratch: data lists, incidence from inner products,
/// ridges, edges, and the symmetry group.  Throws std::logic_error if any
/// structural invariant fails.
Cell24Model build_standard_cell();

/// The shared immutable model (built on first use).
const Cell24Model& standard_cell();

/// Outward side normals s_1..s_24 and ideal vertices v_1..v_24 in the fixed order.
std::array<HalfVec5, kSides> standard_normals();
std::array<HalfVec5, kVertices> standard_vertices();

/// The four matrices generating the symmetry group of Q.
std::array<HalfMatrix5, 4> symmetry_generators();

/// Closure of symmetry_generators() under multiplication, identity first.
/// Throws std::logic_error unless exactly 1152 elements result.
std::vector<LorentzMatrix> generate_symmetry_group();

/// The side vertex lists in their published form (1-based, with the
/// five-element S_1 entry as printed).  Used only as a cross-check.
std::array<std::vector<int>, kSides> printed_side_vertex_lists();

/// reflect_in_hyperplane(s_j).
LorentzMatrix side_reflection(int side);

/// Matrix of the symmetry f with f(S_i) = S_j realising `images`.  Throws
/// NotASymmetry if none exists.
LorentzMatrix find_side_symmetry(int i, int j, const SideVertexImages& images);

}  // namespace c24

#endif  // C24_CELL24_HPP
