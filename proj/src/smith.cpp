#include "c24/smith.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <stdexcept>

#include <boost/multiprecision/integer.hpp>

namespace c24 {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shapes do not compose");
  IntMatrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) p.at(i, j) += x * o.at(k, j);
    }
  return p;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
}

namespace {

// Rewrites a list of positive integers as d1 | d2 | ... by gcd/lcm exchange.
void normalise_divisibility(std::vector<BigInt>& d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const BigInt g = boost::multiprecision::gcd(d[i], d[j]);
      const BigInt l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  }
}

}  // namespace

SmithResult smith_normal_form(IntMatrix a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<BigInt> diag;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = m, pc = n;
      BigInt best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          const BigInt& x = a.at(i, j);
          if (x == 0) continue;
          if (pr == m || abs(x) < best) {
            best = abs(x);
            pr = i;
            pc = j;
          }
        }
      if (pr == m) goto done;
      if (pr != t)
        for (std::size_t j = 0; j < n; ++j) std::swap(a.at(t, j), a.at(pr, j));
      if (pc != t)
        for (std::size_t i = 0; i < m; ++i) std::swap(a.at(i, t), a.at(i, pc));

      bool clean = true;
      const BigInt p = a.at(t, t);
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a.at(i, t) == 0) continue;
        const BigInt q = a.at(i, t) / p;
        for (std::size_t j = t; j < n; ++j) a.at(i, j) -= q * a.at(t, j);
        if (a.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a.at(t, j) == 0) continue;
        const BigInt q = a.at(t, j) / p;
        for (std::size_t i = t; i < m; ++i) a.at(i, j) -= q * a.at(i, t);
        if (a.at(t, j) != 0) clean = false;
      }
      if (clean) break;
    }
    diag.push_back(abs(a.at(t, t)));
  }
done:
  normalise_divisibility(diag);
  return SmithResult{diag};
}

AbelianGroup AbelianGroup::from_cyclic_orders(int free_rank, const std::vector<BigInt>& orders) {
  AbelianGroup g;
  g.free_rank = free_rank;
  std::vector<BigInt> t;
  for (const BigInt& o : orders) {
    if (o == 0) {
      ++g.free_rank;
    } else if (abs(o) != 1) {
      t.push_back(abs(o));
    }
  }
  normalise_divisibility(t);
  for (auto& x : t)
    if (x != 1) g.torsion.push_back(x);
  return g;
}

std::vector<BigInt> AbelianGroup::elementary_divisors() const {
  std::vector<std::pair<BigInt, BigInt>> parts;  // (prime, prime power)
  for (BigInt x : torsion) {
    for (BigInt p = 2; p * p <= x; ++p) {
      if (x % p != 0) continue;
      BigInt q = 1;
      while (x % p == 0) {
        x /= p;
        q *= p;
      }
      parts.emplace_back(p, q);
    }
    if (x > 1) parts.emplace_back(x, x);
  }
  std::sort(parts.begin(), parts.end());
  std::vector<BigInt> out;
  for (auto& pq : parts) out.push_back(pq.second);
  return out;
}

std::string AbelianGroup::to_string() const {
  std::vector<std::string> terms;
  if (free_rank == 1) terms.push_back("Z");
  if (free_rank > 1) terms.push_back("Z^" + std::to_string(free_rank));
  const auto ed = elementary_divisors();
  for (std::size_t i = 0; i < ed.size();) {
    std::size_t j = i;
    while (j < ed.size() && ed[j] == ed[i]) ++j;
    std::string term = "Z_" + ed[i].str();
    if (j - i > 1) term += "^" + std::to_string(j - i);
    terms.push_back(term);
    i = j;
  }
  if (terms.empty()) return "0";
  std::string out = terms[0];
  for (std::size_t k = 1; k < terms.size(); ++k) out += " + " + terms[k];
  return out;
}

AbelianGroup parse_abelian_group(const std::string& text) {
  static const std::regex term_re(R"(^\s*(?:(0)|Z(?:_(\d+))?(?:\^(\d+))?)\s*$)");
  int free_rank = 0;
  std::vector<BigInt> orders;
  std::size_t start = 0;
  for (;;) {
    const std::size_t plus = text.find('+', start);
    const std::string term = text.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    std::smatch m;
    if (!std::regex_match(term, m, term_re)) throw std::invalid_argument("bad abelian group term '" + term + "'");
    if (!m[1].matched) {
      const int count = m[3].matched ? std::stoi(m[3]) : 1;
      for (int k = 0; k < count; ++k) {
        if (m[2].matched) {
          orders.emplace_back(m[2].str());
        } else {
          ++free_rank;
        }
      }
    }
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return AbelianGroup::from_cyclic_orders(free_rank, orders);
}

AbelianGroup cokernel(const IntMatrix& a) {
  const SmithResult s = smith_normal_form(a);
  return AbelianGroup::from_cyclic_orders(static_cast<int>(a.rows() - s.rank()), s.invariants);
}

}  // namespace c24
