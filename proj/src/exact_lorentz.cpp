#include "c24/exact_lorentz.hpp"

#include <functional>
#include <sstream>

namespace c24 {

namespace {

const std::array<int, 5> kSignature = {1, 1, 1, 1, -1};

std::string half_to_string(const BigInt& doubled) {
  if (doubled % 2 == 0) return BigInt(doubled / 2).str();
  return doubled.str() + "/2";
}

bool is_even(const BigInt& x) { return (x & 1) == 0; }

}  // namespace

HalfVec5 HalfVec5::from_doubled(const std::array<BigInt, 5>& doubled) {
  HalfVec5 v;
  v.d_ = doubled;
  return v;
}

HalfVec5 HalfVec5::from_doubled(const std::array<long long, 5>& doubled) {
  HalfVec5 v;
  for (std::size_t i = 0; i < 5; ++i) v.d_[i] = doubled[i];
  return v;
}

HalfVec5 HalfVec5::from_integers(const std::array<long long, 5>& values) {
  HalfVec5 v;
  for (std::size_t i = 0; i < 5; ++i) v.d_[i] = BigInt(values[i]) * 2;
  return v;
}

Rational HalfVec5::operator[](std::size_t i) const { return Rational(d_[i], 2); }

HalfVec5 HalfVec5::operator-() const {
  HalfVec5 r;
  for (std::size_t i = 0; i < 5; ++i) r.d_[i] = -d_[i];
  return r;
}

HalfVec5 HalfVec5::operator+(const HalfVec5& o) const {
  HalfVec5 r;
  for (std::size_t i = 0; i < 5; ++i) r.d_[i] = d_[i] + o.d_[i];
  return r;
}

HalfVec5 HalfVec5::operator-(const HalfVec5& o) const {
  HalfVec5 r;
  for (std::size_t i = 0; i < 5; ++i) r.d_[i] = d_[i] - o.d_[i];
  return r;
}

std::string HalfVec5::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < 5; ++i) out << (i ? ", " : "") << half_to_string(d_[i]);
  out << ')';
  return out.str();
}

Rational lorentz_product(const HalfVec5& x, const HalfVec5& y) {
  BigInt acc = 0;
  for (std::size_t i = 0; i < 5; ++i) acc += kSignature[i] * x.doubled(i) * y.doubled(i);
  return Rational(acc, 4);
}

bool same_ray(const HalfVec5& x, const HalfVec5& y) {
  BigInt dot = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) {
      if (x.doubled(i) * y.doubled(j) != x.doubled(j) * y.doubled(i)) return false;
    }
    dot += x.doubled(i) * y.doubled(i);
  }
  return dot > 0;
}

HalfMatrix5 HalfMatrix5::identity() {
  HalfMatrix5 m;
  for (std::size_t i = 0; i < 5; ++i) m.d_[6 * i] = 2;
  return m;
}

HalfMatrix5 HalfMatrix5::lorentz_form() {
  HalfMatrix5 m;
  for (std::size_t i = 0; i < 5; ++i) m.d_[6 * i] = 2 * kSignature[i];
  return m;
}

HalfMatrix5 HalfMatrix5::from_doubled(const std::array<std::array<long long, 5>, 5>& rows) {
  HalfMatrix5 m;
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 5; ++c) m.d_[5 * r + c] = rows[r][c];
  return m;
}

HalfMatrix5 HalfMatrix5::from_doubled(const std::array<BigInt, 25>& entries) {
  HalfMatrix5 m;
  m.d_ = entries;
  return m;
}

Rational HalfMatrix5::operator()(std::size_t r, std::size_t c) const {
  return Rational(d_[5 * r + c], 2);
}

HalfMatrix5 HalfMatrix5::operator*(const HalfMatrix5& o) const {
  HalfMatrix5 p;
  for (std::size_t r = 0; r < 5; ++r) {
    for (std::size_t c = 0; c < 5; ++c) {
      BigInt acc = 0;
      for (std::size_t k = 0; k < 5; ++k) acc += d_[5 * r + k] * o.d_[5 * k + c];
      if (!is_even(acc)) throw ExactArithmeticError("matrix product is not half-integral");
      p.d_[5 * r + c] = acc / 2;
    }
  }
  return p;
}

HalfVec5 HalfMatrix5::operator*(const HalfVec5& x) const {
  std::array<BigInt, 5> out;
  for (std::size_t r = 0; r < 5; ++r) {
    BigInt acc = 0;
    for (std::size_t k = 0; k < 5; ++k) acc += d_[5 * r + k] * x.doubled(k);
    if (!is_even(acc)) throw ExactArithmeticError("matrix-vector product is not half-integral");
    out[r] = acc / 2;
  }
  return HalfVec5::from_doubled(out);
}

HalfMatrix5 HalfMatrix5::transpose() const {
  HalfMatrix5 t;
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 5; ++c) t.d_[5 * c + r] = d_[5 * r + c];
  return t;
}

Rational HalfMatrix5::determinant() const {
  // Bareiss elimination on the doubled entries; det(M) = det(2M) / 32.
  std::array<BigInt, 25> a = d_;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < 5; ++k) {
    if (a[5 * k + k] == 0) {
      std::size_t swap = k + 1;
      while (swap < 5 && a[5 * swap + k] == 0) ++swap;
      if (swap == 5) return Rational(0);
      for (std::size_t c = 0; c < 5; ++c) std::swap(a[5 * k + c], a[5 * swap + c]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < 5; ++i) {
      for (std::size_t j = k + 1; j < 5; ++j) {
        a[5 * i + j] = (a[5 * i + j] * a[5 * k + k] - a[5 * i + k] * a[5 * k + j]) / prev;
      }
    }
    prev = a[5 * k + k];
  }
  return Rational(sign * a[24], 32);
}

HalfVec5 HalfMatrix5::column(std::size_t c) const {
  std::array<BigInt, 5> out;
  for (std::size_t r = 0; r < 5; ++r) out[r] = d_[5 * r + c];
  return HalfVec5::from_doubled(out);
}

std::size_t HalfMatrix5::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (const auto& x : d_) {
    h ^= std::hash<long long>{}(static_cast<long long>(x % 1000003));
    h *= 1099511628211ull;
  }
  return h;
}

std::string HalfMatrix5::to_string() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < 5; ++r) {
    out << (r ? "; " : "[");
    for (std::size_t c = 0; c < 5; ++c) out << (c ? " " : "") << half_to_string(d_[5 * r + c]);
  }
  out << ']';
  return out.str();
}

bool preserves_lorentz_form(const HalfMatrix5& m) {
  // (M^T J M)_{ij} = sum_k sig_k M_ki M_kj; doubled entries give a factor of 4.
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      BigInt acc = 0;
      for (std::size_t k = 0; k < 5; ++k) acc += kSignature[k] * m.doubled(k, i) * m.doubled(k, j);
      const int expected = i == j ? 4 * kSignature[i] : 0;
      if (acc != expected) return false;
    }
  }
  return true;
}

bool is_positive_lorentz(const HalfMatrix5& m) {
  return m.doubled(4, 4) > 0 && preserves_lorentz_form(m);
}

HalfMatrix5 matrix_inverse(const HalfMatrix5& m) {
  if (!preserves_lorentz_form(m))
    throw ExactArithmeticError("inverse requested for a matrix that does not preserve the form");
  std::array<BigInt, 25> e;
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 5; ++c) e[5 * r + c] = kSignature[r] * kSignature[c] * m.doubled(c, r);
  return HalfMatrix5::from_doubled(e);
}

LorentzMatrix LorentzMatrix::from(const HalfMatrix5& m) {
  if (!is_positive_lorentz(m)) throw ExactArithmeticError("matrix is not in O+(4,1): " + m.to_string());
  return LorentzMatrix(m);
}

LorentzMatrix LorentzMatrix::operator*(const LorentzMatrix& o) const { return LorentzMatrix(m_ * o.m_); }

LorentzMatrix LorentzMatrix::inverse() const { return LorentzMatrix(matrix_inverse(m_)); }

int LorentzMatrix::determinant_sign() const { return m_.determinant() > 0 ? 1 : -1; }

LorentzMatrix reflect_in_hyperplane(const HalfVec5& s) {
  if (lorentz_product(s, s) != 1) throw ExactArithmeticError("reflection needs a unit spacelike normal");
  // 2 M_ij = 2 delta_ij - S_i (J S)_j with S = 2s.
  std::array<BigInt, 25> e;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      e[5 * i + j] = (i == j ? 2 : 0) - s.doubled(i) * kSignature[j] * s.doubled(j);
  return LorentzMatrix::from(HalfMatrix5::from_doubled(e));
}

}  // namespace c24
