// Exact arithmetic over the half-integers for vectors and matrices acting on
// Lorentzian 5-space R^{4,1}, with the form x o y = x1 y1 + ... + x4 y4 - x5 y5.
//
// Entries are stored doubled, so every value used by the 24-cell model is an
// integer.  Multiplication asserts that results stay half-integral.
#ifndef C24_EXACT_LORENTZ_HPP
#define C24_EXACT_LORENTZ_HPP

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace c24 {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when a result leaves the half-integer lattice or a matrix is not in
/// the expected group.
class ExactArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A vector of R^5 whose coordinates lie in (1/2)Z.
class HalfVec5 {
 public:
  HalfVec5() = default;

  static HalfVec5 from_doubled(const std::array<BigInt, 5>& doubled);
  static HalfVec5 from_doubled(const std::array<long long, 5>& doubled);
  static HalfVec5 from_integers(const std::array<long long, 5>& values);

  const BigInt& doubled(std::size_t i) const { return d_[i]; }
  Rational operator[](std::size_t i) const;

  HalfVec5 operator-() const;
  HalfVec5 operator+(const HalfVec5& o) const;
  HalfVec5 operator-(const HalfVec5& o) const;

  friend bool operator==(const HalfVec5& a, const HalfVec5& b) { return a.d_ == b.d_; }

  std::string to_string() const;

 private:
  std::array<BigInt, 5> d_{};
};

/// x o y, exact (a quarter-integer).
Rational lorentz_product(const HalfVec5& x, const HalfVec5& y);

/// True iff y = c x for some rational c > 0.  Decided by cross-multiplication.
bool same_ray(const HalfVec5& x, const HalfVec5& y);

/// A 5x5 matrix with entries in (1/2)Z, not necessarily form-preserving.
class HalfMatrix5 {
 public:
  HalfMatrix5() = default;

  static HalfMatrix5 identity();
  /// diag(1,1,1,1,-1)
  static HalfMatrix5 lorentz_form();
  static HalfMatrix5 from_doubled(const std::array<std::array<long long, 5>, 5>& rows);
  static HalfMatrix5 from_doubled(const std::array<BigInt, 25>& entries);

  const BigInt& doubled(std::size_t r, std::size_t c) const { return d_[5 * r + c]; }
  Rational operator()(std::size_t r, std::size_t c) const;

  /// Throws ExactArithmeticError if the product is not half-integral.
  HalfMatrix5 operator*(const HalfMatrix5& o) const;
  HalfVec5 operator*(const HalfVec5& x) const;

  HalfMatrix5 transpose() const;
  Rational determinant() const;

  HalfVec5 column(std::size_t c) const;

  friend bool operator==(const HalfMatrix5& a, const HalfMatrix5& b) { return a.d_ == b.d_; }

  std::size_t hash() const;
  std::string to_string() const;

 private:
  std::array<BigInt, 25> d_{};
};

/// M^T J M == J, exact.
bool preserves_lorentz_form(const HalfMatrix5& m);

/// M^T J M == J and M(5,5) > 0.
bool is_positive_lorentz(const HalfMatrix5& m);

/// J M^T J; rejects matrices that do not preserve the form.
HalfMatrix5 matrix_inverse(const HalfMatrix5& m);

/// An element of the positive Lorentz group O+(4,1) with half-integer entries.
class LorentzMatrix {
 public:
  LorentzMatrix() : m_(HalfMatrix5::identity()) {}

  static LorentzMatrix identity() { return LorentzMatrix(); }
  /// Throws ExactArithmeticError unless is_positive_lorentz(m).
  static LorentzMatrix from(const HalfMatrix5& m);

  const HalfMatrix5& matrix() const { return m_; }
  const BigInt& doubled(std::size_t r, std::size_t c) const { return m_.doubled(r, c); }

  LorentzMatrix operator*(const LorentzMatrix& o) const;
  HalfVec5 operator*(const HalfVec5& x) const { return m_ * x; }
  HalfVec5 apply(const HalfVec5& x) const { return m_ * x; }

  LorentzMatrix inverse() const;
  /// +1 or -1.
  int determinant_sign() const;
  bool is_identity() const { return m_ == HalfMatrix5::identity(); }

  friend bool operator==(const LorentzMatrix& a, const LorentzMatrix& b) { return a.m_ == b.m_; }

  std::size_t hash() const { return m_.hash(); }
  std::string to_string() const { return m_.to_string(); }

 private:
  explicit LorentzMatrix(HalfMatrix5 m) : m_(std::move(m)) {}
  HalfMatrix5 m_;
};

/// The reflection x -> x - 2 (x o s) s in the hyperplane orthogonal to s.
/// Requires s o s == 1.
LorentzMatrix reflect_in_hyperplane(const HalfVec5& s);

struct LorentzMatrixHash {
  std::size_t operator()(const LorentzMatrix& m) const { return m.hash(); }
};

}  // namespace c24

#endif  // C24_EXACT_LORENTZ_HPP
