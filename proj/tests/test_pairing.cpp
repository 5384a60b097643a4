#include <doctest.h>

#include <fstream>
#include <sstream>

#include "c24/pairing.hpp"
#include "support.hpp"

using namespace c24;

namespace {

std::string rows_of(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::string line, out;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') out += line + "\n";
  return out;
}

PairingError parse_error(const std::string& text) {
  try {
    parse_pairing(text);
  } catch (const PairingError& e) {
    return e;
  }
  FAIL("no error for:\n" << text);
  return PairingError(PairingErrorKind::MalformedLine, 0, "");
}

std::string replace_line(const std::string& text, int lineno, const std::string& with) {
  std::istringstream in(text);
  std::string line, out;
  for (int n = 1; std::getline(in, line); ++n) out += (n == lineno ? with : line) + "\n";
  return out;
}

}  // namespace

TEST_CASE("bundled fixtures round-trip through the text format") {
  for (int k = 1; k <= 4; ++k) {
    const SidePairing p = bundled_pairing(k);
    CHECK(serialize_pairing(p) == rows_of(bundled_pairing_path(k)));
    CHECK(parse_pairing(serialize_pairing(p)) == p);
    CHECK(pairing_from_key(pairing_key(p)) == p);
    CHECK(key_from_hex(key_to_hex(pairing_key(p))) == pairing_key(p));
    validate_pairing(p);
  }
}

TEST_CASE("parse errors name their kind and line") {
  const std::string good = rows_of(bundled_pairing_path(1));

  auto e = parse_error(replace_line(good, 3, "3 -> 12 : 9>20 10>9"));
  CHECK(e.kind() == PairingErrorKind::MalformedLine);
  CHECK(e.line() == 3);

  e = parse_error(replace_line(good, 2, "2 -> 2 : 5>5, 6>6, 7>7, 8>8, 18>18, 19>19"));
  CHECK(e.kind() == PairingErrorKind::NotAnInvolution);
  CHECK(e.line() == 2);

  e = parse_error(replace_line(good, 2, "2 -> 5 : 5>21, 6>15, 7>16, 8>17, 18>12, 19>11"));
  CHECK(e.kind() == PairingErrorKind::NotAnInvolution);
  CHECK(e.line() == 2);

  e = parse_error(replace_line(good, 1, "1 -> 5 : 13>21, 14>21, 15>16, 16>17, 17>12, 19>15"));
  CHECK(e.kind() == PairingErrorKind::NotABijection);
  CHECK(e.line() == 1);

  e = parse_error(replace_line(good, 1, "1 -> 5 : 1>21, 14>11, 15>16, 16>17, 17>12, 19>15"));
  CHECK(e.kind() == PairingErrorKind::VertexNotOnSide);
  CHECK(e.line() == 1);

  e = parse_error(replace_line(good, 12, "# dropped"));
  CHECK(e.kind() == PairingErrorKind::NotAnInvolution);
  CHECK(e.line() == 0);
}

TEST_CASE("side-pairing transformations") {
  const Cell24Model& cell = standard_cell();
  for (int k = 1; k <= 4; ++k) {
    const SidePairing p = bundled_pairing(k);
    const auto d = derive_transformations(p);
    for (int i = 0; i < kSides; ++i) {
      const int j = p.partner[i];
      REQUIRE(preserves_lorentz_form(d.g[i].matrix()));
      REQUIRE((d.g[j] * d.g[i]).is_identity());
      for (int v : cell.side_vertices[i])
        REQUIRE(same_ray(d.g[i] * cell.vertices[v], cell.vertices[p.vertex_image(i, v)]));
      // g_i carries Q to the neighbour across S_j: its side i goes onto side j.
      REQUIRE(d.g[i] * cell.normals[i] == -cell.normals[j]);
    }
  }
}

TEST_CASE("conjugation is a group action") {
  const Cell24Model& cell = standard_cell();
  const SidePairing p = bundled_pairing(3);
  auto g = test::rng(3);
  CHECK(conjugate_pairing(p, 0) == p);
  for (int trial = 0; trial < 50; ++trial) {
    const int a = test::uniform(g, 0, kSymmetries - 1);
    const int b = test::uniform(g, 0, kSymmetries - 1);
    REQUIRE(conjugate_pairing(conjugate_pairing(p, a), b) == conjugate_pairing(p, cell.compose(b, a)));
    REQUIRE(conjugate_pairing(conjugate_pairing(p, a), cell.inverse_symmetry(a)) == p);
  }
}
