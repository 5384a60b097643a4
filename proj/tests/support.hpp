// Fixture loading and small generators shared by the test programs.
#ifndef C24_TESTS_SUPPORT_HPP
#define C24_TESTS_SUPPORT_HPP

#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "c24/exact_lorentz.hpp"
#include "c24/pairing.hpp"
#include "c24/poincare_check.hpp"

namespace c24::test {

std::filesystem::path fixture(const std::string& name);

/// Generators (keyed by 0-based side) and relators as printed for Gamma_k.
struct GammaFixture {
  std::map<int, HalfMatrix5> generators;
  std::vector<Word> relators;
};
GammaFixture load_gamma(int k);

/// p with side's vertex map (and its partner's) replaced by the given symmetry,
/// which must carry side onto p.partner[side].
SidePairing with_row(SidePairing p, int side, int symmetry);

/// Deterministic per-test random source.
inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline int uniform(std::mt19937_64& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

}  // namespace c24::test

#endif
