// Integer matrices, Smith normal form, and finitely generated abelian groups.
#ifndef C24_SMITH_HPP
#define C24_SMITH_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "c24/exact_lorentz.hpp"

namespace c24 {

/// Dense row-major matrix over arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const;
  bool is_zero() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

struct SmithResult {
  /// Nonzero diagonal entries d1 | d2 | ..., all positive.
  std::vector<BigInt> invariants;
  std::size_t rank() const { return invariants.size(); }
};

/// Diagonalises by unimodular row and column operations, pivoting on the
/// entry of smallest absolute value.
SmithResult smith_normal_form(IntMatrix a);

/// Z^free_rank + Z_{t1} + ... with t1 | t2 | ... and every ti >= 2.
struct AbelianGroup {
  int free_rank = 0;
  std::vector<BigInt> torsion;

  /// Builds the group from any list of cyclic orders (0 meaning Z, 1 ignored),
  /// normalising the torsion into invariant-factor form.
  static AbelianGroup from_cyclic_orders(int free_rank, const std::vector<BigInt>& orders);

  /// Prime-power decomposition of the torsion, sorted by prime then exponent.
  std::vector<BigInt> elementary_divisors() const;

  /// "0", "Z", "Z^2 + Z_3 + Z_13", "Z_2^3 + Z_5": free part first, then the
  /// elementary divisors with repeated factors collected into exponents.
  std::string to_string() const;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Parses the to_string() notation (also accepts "Z+Z_3" without spaces).
AbelianGroup parse_abelian_group(const std::string& text);

/// The cokernel Z^rows / (column span of a).
AbelianGroup cokernel(const IntMatrix& a);

}  // namespace c24

#endif  // C24_SMITH_HPP
