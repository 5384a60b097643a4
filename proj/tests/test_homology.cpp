#include <doctest.h>

#include <boost/math/constants/constants.hpp>

#include "c24/covers_isometry.hpp"
#include "c24/cusp.hpp"
#include "c24/homology.hpp"
#include "support.hpp"

using namespace c24;

namespace {

// H_0 .. H_4 of 24c1.1 .. 24c1.4 as tabulated.
const char* const kManifoldHomology[4][5] = {
    {"Z", "Z + Z_3 + Z_13", "Z", "0", "0"},
    {"Z", "Z + Z_3", "Z + Z_13", "0", "0"},
    {"Z", "Z_2^3 + Z_5", "Z_2", "0", "0"},
    {"Z", "Z_2^2 + Z_3^3", "Z_3", "0", "0"},
};

}  // namespace

TEST_CASE("truncated 24-cell cell counts") {
  const auto& t = *truncated_cell().cells;
  CHECK(t.dimension() == 4);
  CHECK(t.count(0) == 192);
  CHECK(t.count(1) == 384);
  CHECK(t.count(2) == 240);
  CHECK(t.count(3) == 48);
  CHECK(t.count(4) == 1);
  CHECK(t.count(0) - t.count(1) + t.count(2) - t.count(3) + t.count(4) == 1);
}

TEST_CASE("quotient complexes of the fixtures") {
  for (int k = 1; k <= 4; ++k) {
    INFO("24c1." << k);
    const QuotientComplex q = truncated_complex(bundled_pairing(k));
    CHECK(q.is_chain_complex());
    CHECK(q.cell_counts == std::vector<int>{24, 84, 96, 36, 1});
    CHECK(q.euler_characteristic() == 1);
  }
}

TEST_CASE("homology of the one-cusped manifolds") {
  for (int k = 1; k <= 4; ++k) {
    INFO("24c1." << k);
    const SidePairing p = bundled_pairing(k);
    const auto h = homology_groups(p);
    REQUIRE(h.size() == 5);
    for (int d = 0; d < 5; ++d) CHECK(h[d].to_string() == kManifoldHomology[k - 1][d]);
    CHECK(abelianization(presentation(p)) == h[1]);
  }
}

TEST_CASE("boundary of boundary vanishes on every constructed complex") {
  for (int k = 1; k <= 4; ++k) {
    const SidePairing p = bundled_pairing(k);
    CHECK(truncated_complex(p).is_chain_complex());
    CHECK(truncated_complex(orientation_double_cover(p)).is_chain_complex());
    CHECK(build_cusp_link(p).chain.is_chain_complex());
    CHECK(build_cusp_link(orientation_double_cover(p)).chain.is_chain_complex());
  }
}

TEST_CASE("volume from the Euler characteristic") {
  const double pi = boost::math::constants::pi<double>();
  CHECK(volume_from_euler(1) == doctest::Approx(4 * pi * pi / 3).epsilon(1e-15));
}

TEST_CASE("gluing a face to itself with reversed orientation is rejected") {
  GluedComplex g(cube_template(), 1);
  std::vector<int> flip(8);
  for (int b = 0; b < 8; ++b) flip[b] = b ^ 2;  // reflect the face x = 0 in y
  CHECK_THROWS_AS(g.glue(2, 0, cube_face_cell(0, 0), 0, cube_face_cell(0, 0), flip), GluingError);
}
