// Side-pairings of the 24-cell: the data model, its line-based text format,
// and the side-pairing transformations g_i = r_{sigma(i)} f_i.
#ifndef C24_PAIRING_HPP
#define C24_PAIRING_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "c24/cell24.hpp"
#include "c24/exact_lorentz.hpp"

namespace c24 {

/// A fixed-point-free involution on the sides together with, for every side
/// i, the bijection of its vertices onto the vertices of side partner[i].
/// images[partner[i]] is always the inverse of images[i].
struct SidePairing {
  std::array<int, kSides> partner{};
  std::array<SideVertexImages, kSides> images{};

  int vertex_image(int side, int vertex) const;

  friend bool operator==(const SidePairing&, const SidePairing&) = default;
};

enum class PairingErrorKind { MalformedLine, NotAnInvolution, NotABijection, VertexNotOnSide };

const char* to_string(PairingErrorKind kind);

class PairingError : public std::runtime_error {
 public:
  PairingError(PairingErrorKind kind, int line, const std::string& message);
  PairingErrorKind kind() const { return kind_; }
  /// 1-based line of the offending row, or 0 when the problem is global.
  int line() const { return line_; }

 private:
  PairingErrorKind kind_;
  int line_;
};

/// Parses the text format:
///
///     # comment
///     1 -> 5 : 13>21, 14>11, 15>16, 16>17, 17>12, 19>15
///
/// One row per unordered side pair with i < j (1-based).  The reverse rows
/// are filled in by inverting the vertex maps.
SidePairing parse_pairing(std::string_view text);
SidePairing load_pairing(const std::filesystem::path& path);

/// Canonical text: 12 rows ordered by i, vertex pairs ordered by source.
std::string serialize_pairing(const SidePairing& p);

/// Checks every SidePairing invariant; throws PairingError (line 0).
void validate_pairing(const SidePairing& p);

/// The symmetry index of each f_i, the symmetry of Q realising side i's
/// vertex map.  Throws NotASymmetry if some row is not realisable.
std::array<int, kSides> side_symmetries(const SidePairing& p);

struct DerivedTransformations {
  std::array<LorentzMatrix, kSides> g;
  std::array<int, kSides> symmetry{};  // index of f_i in standard_cell().symmetries
};

/// g_i = side_reflection(sigma(i)) * f_i for every side.
DerivedTransformations derive_transformations(const SidePairing& p);

/// phi p phi^{-1} for the symmetry with the given index.
SidePairing conjugate_pairing(const SidePairing& p, int symmetry);

/// Compact serialisation ordered side by side: partner, then the six images.
/// Lexicographic order on keys is the total order used for canonical forms.
inline constexpr std::size_t kPairingKeySize = kSides * (1 + kVerticesPerSide);
using PairingKey = std::array<std::uint8_t, kPairingKeySize>;

PairingKey pairing_key(const SidePairing& p);
SidePairing pairing_from_key(const PairingKey& key);
std::string key_to_hex(const PairingKey& key);
PairingKey key_from_hex(std::string_view hex);

/// FNV-1a over the canonical text; used as an input digest in reports.
std::string pairing_digest(const SidePairing& p);
std::string fnv1a_hex(std::string_view bytes);

/// Several copies ("sheets") of Q glued by one side-pairing: side a of sheet
/// t is glued to side sigma(a) of sheet (t + shift[a]) mod sheets.  One sheet
/// with zero shifts is the manifold itself; two sheets with shift = 1 on the
/// orientation-reversing generators give the orientation double cover.
struct SheetedPairing {
  SidePairing base;
  int sheets = 1;
  std::array<int, kSides> shift{};

  int target_sheet(int sheet, int side) const { return (sheet + shift[side]) % sheets; }
};

inline SheetedPairing single_sheet(const SidePairing& p) { return SheetedPairing{p, 1, {}}; }

/// Location of the four bundled census fixtures (24c1_1.pairing .. 24c1_4.pairing).
std::filesystem::path bundled_pairing_path(int k);
SidePairing bundled_pairing(int k);

}  // namespace c24

#endif  // C24_PAIRING_HPP
