// Reference enumeration for prefix-restricted searches, written separately
// from the library search: ridges are vertex triples and edges vertex pairs
// found from the side incidences, the branching order differs, and every
// completed pairing goes through the full exact check and the exhaustive
// canonical form.
#ifndef C24_TESTS_ORACLE_SEARCH_HPP
#define C24_TESTS_ORACLE_SEARCH_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "c24/pairing.hpp"
#include "c24/search.hpp"

namespace c24::oracle {

struct OracleResult {
  std::set<PairingKey> canonical;  // canonical keys of the manifold completions
  std::uint64_t completions = 0;   // distinct complete pairings reached
  std::uint64_t nodes = 0;
};

OracleResult enumerate_completions(const std::vector<PairingRow>& prefix);

}  // namespace c24::oracle

#endif
