#include <doctest.h>

#include <algorithm>

#include "c24/covers_isometry.hpp"
#include "c24/cusp.hpp"
#include "c24/homology.hpp"
#include "support.hpp"

using namespace c24;

namespace {

// H_0 .. H_4 of the orientation double covers 24cdc1.1 .. 24cdc1.4.
const char* const kCoverHomology[4][5] = {
    {"Z", "Z + Z_3 + Z_13", "Z^2 + Z_3 + Z_13", "0", "0"},
    {"Z", "Z + Z_3 + Z_13", "Z^2 + Z_3 + Z_13", "0", "0"},
    {"Z", "Z + Z_2^2 + Z_5", "Z^2 + Z_2 + Z_5", "0", "0"},
    {"Z", "Z + Z_3^3", "Z^2 + Z_3^3", "0", "0"},
};

}  // namespace

TEST_CASE("the fixtures are non-orientable") {
  for (int k = 1; k <= 4; ++k) {
    const SidePairing p = bundled_pairing(k);
    CHECK_FALSE(is_orientable(p));
    const auto chi = orientation_character(p);
    const auto d = derive_transformations(p);
    for (int i = 0; i < kSides; ++i) {
      CHECK(chi[i] == chi[p.partner[i]]);
      CHECK((d.g[i].matrix().determinant() > 0) == (chi[i] > 0));
    }
  }
}

TEST_CASE("orientation double covers") {
  for (int k = 1; k <= 4; ++k) {
    INFO("24cdc1." << k);
    const SheetedPairing c = orientation_double_cover(bundled_pairing(k));
    const auto h = homology_groups(c);
    for (int d = 0; d < 5; ++d) CHECK(h[d].to_string() == kCoverHomology[k - 1][d]);
    CHECK(truncated_complex(c).euler_characteristic() == 2);
    CHECK(sheeted_cusp_classes(c).size() == 1);
    const FlatLinkClass f = classify_flat_link(build_cusp_link(c));
    CHECK(f.orientable);
    CHECK(f.label == "T3");
    CHECK(f.h1.to_string() == "Z^3");
  }
}

TEST_CASE("the first two double covers are equivalent and the others are not") {
  std::vector<SheetedPairing> covers;
  for (int k = 1; k <= 4; ++k) covers.push_back(orientation_double_cover(bundled_pairing(k)));
  CHECK(double_covers_equivalent(covers[0], covers[1]).has_value());
  CHECK(double_covers_equivalent(covers[1], covers[0]).has_value());
  CHECK(double_covers_equivalent(covers[0], covers[0]).has_value());
  CHECK_FALSE(double_covers_equivalent(covers[0], covers[2]).has_value());
  CHECK_FALSE(double_covers_equivalent(covers[2], covers[3]).has_value());
  // The base pairings themselves are inequivalent.
  CHECK_FALSE(pairings_equivalent(bundled_pairing(1), bundled_pairing(2)));
}

TEST_CASE("equivalence ignores conjugation") {
  auto g = test::rng(4);
  for (int k = 1; k <= 4; ++k) {
    const SidePairing p = bundled_pairing(k);
    for (int trial = 0; trial < 5; ++trial) {
      const SidePairing q = conjugate_pairing(p, test::uniform(g, 0, kSymmetries - 1));
      CHECK(pairings_equivalent(p, q));
      CHECK(double_covers_equivalent(orientation_double_cover(p), orientation_double_cover(q)).has_value());
    }
  }
}

TEST_CASE("symmetry stabilisers by permutations and by matrices") {
  const int expect[4] = {12, 12, 2, 8};
  const Cell24Model& cell = standard_cell();
  for (int k = 1; k <= 4; ++k) {
    INFO("24c1." << k);
    const SidePairing p = bundled_pairing(k);
    const auto s = stabilizer(p);
    CHECK(s.size() == static_cast<std::size_t>(expect[k - 1]));
    CHECK(stabilizer_by_matrices(p) == s);
    CHECK(isometry_group_order(p) == expect[k - 1]);
    for (int a : s)
      for (int b : s) CHECK(std::binary_search(s.begin(), s.end(), cell.compose(a, b)));
    // Conjugate pairings have conjugate stabilisers of the same order.
    CHECK(stabilizer(conjugate_pairing(p, 100)).size() == s.size());
  }
}
