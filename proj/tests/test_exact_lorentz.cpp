#include <doctest.h>

#include "c24/cell24.hpp"
#include "c24/exact_lorentz.hpp"
#include "support.hpp"

using namespace c24;

TEST_CASE("generators of the symmetry group preserve the form") {
  for (const auto& g : symmetry_generators()) {
    CHECK(preserves_lorentz_form(g));
    CHECK(is_positive_lorentz(g));
  }
}

TEST_CASE("random products of generators stay in O+(4,1)") {
  const auto gens = symmetry_generators();
  auto g = test::rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    LorentzMatrix m;
    const int len = test::uniform(g, 1, 12);
    for (int k = 0; k < len; ++k) m = m * LorentzMatrix::from(gens[test::uniform(g, 0, 3)]);
    REQUIRE(preserves_lorentz_form(m.matrix()));
    REQUIRE(is_positive_lorentz(m.matrix()));
    REQUIRE((m * m.inverse()).is_identity());
  }
}

TEST_CASE("products leaving the half-integer lattice are rejected") {
  std::array<std::array<long long, 5>, 5> half{};
  for (int i = 0; i < 5; ++i) half[i][i] = 1;  // diag(1/2)
  const HalfMatrix5 a = HalfMatrix5::from_doubled(half);
  CHECK_THROWS_AS(a * a, ExactArithmeticError);
  CHECK_THROWS_AS(LorentzMatrix::from(a), ExactArithmeticError);
}

TEST_CASE("ideal vertices are light-like and rays compare by positive scaling") {
  const auto v = standard_vertices();
  for (const auto& x : v) CHECK(lorentz_product(x, x) == 0);
  CHECK(same_ray(v[0], v[0] + v[0]));
  CHECK_FALSE(same_ray(v[0], -v[0]));
  CHECK_FALSE(same_ray(v[0], v[1]));
}

TEST_CASE("side reflections are orientation-reversing involutions") {
  for (int s = 0; s < kSides; ++s) {
    const LorentzMatrix r = side_reflection(s);
    CHECK((r * r).is_identity());
    CHECK(r.determinant_sign() == -1);
    CHECK(r.matrix().determinant() == -1);
  }
}

TEST_CASE("inverse is J M^T J") {
  const auto gens = symmetry_generators();
  for (const auto& g : gens) {
    const HalfMatrix5 inv = matrix_inverse(g);
    CHECK(g * inv == HalfMatrix5::identity());
    CHECK(inv == HalfMatrix5::lorentz_form() * g.transpose() * HalfMatrix5::lorentz_form());
  }
}
