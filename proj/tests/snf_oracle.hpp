// Reference invariant factors for small integer matrices: determinantal
// divisors from cofactor expansion, and rank by rational elimination.
#ifndef C24_TESTS_SNF_ORACLE_HPP
#define C24_TESTS_SNF_ORACLE_HPP

#include <vector>

#include "c24/exact_lorentz.hpp"

namespace c24::test {

using Dense = std::vector<std::vector<long long>>;

/// d_k / d_{k-1} where d_k is the gcd of the k x k minors (nonzero d_k only).
std::vector<BigInt> oracle_invariants(const Dense& a);
std::size_t rational_rank(const Dense& a);

}  // namespace c24::test

#endif
