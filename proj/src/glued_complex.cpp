#include "c24/glued_complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace c24 {

namespace {

// Sign of the determinant of a small square integer matrix (fraction-free
// elimination).
int det_sign(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  if (n == 0) return 1;
  return a[n - 1][n - 1] > 0 ? sign : -sign;
}

int rank_of(std::vector<std::vector<BigInt>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const BigInt a = rows[rank][c], b = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = rows[i][j] * a - rows[rank][j] * b;
    }
    ++rank;
  }
  return rank;
}

BigInt dot(const std::vector<long long>& x, const std::vector<long long>& y) {
  BigInt s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += BigInt(x[i]) * y[i];
  return s;
}

}  // namespace

CellTemplate::CellTemplate(std::vector<std::vector<long long>> coords,
                           std::vector<std::vector<std::vector<int>>> cells)
    : coords_(std::move(coords)), cells_(std::move(cells)) {
  if (cells_.empty()) throw std::invalid_argument("template has no cells");
  if (cells_[0].empty()) {
    for (int v = 0; v < static_cast<int>(coords_.size()); ++v) cells_[0].push_back({v});
  }
  const int top = dimension();
  index_.resize(top + 1);
  basis_.resize(top + 1);
  facets_.resize(top + 1);
  closure_.resize(top + 1);
  for (int k = 0; k <= top; ++k) {
    for (int c = 0; c < count(k); ++c) {
      auto& vs = cells_[k][c];
      std::sort(vs.begin(), vs.end());
      if (!index_[k].emplace(vs, c).second) throw std::invalid_argument("duplicate cell in template");

      std::vector<int> basis{vs[0]};
      std::vector<std::vector<BigInt>> rows;
      for (std::size_t j = 1; j < vs.size() && static_cast<int>(rows.size()) < k; ++j) {
        const auto d = diff(vs[j], vs[0]);
        std::vector<BigInt> row(d.begin(), d.end());
        rows.push_back(row);
        if (rank_of(rows) == static_cast<int>(rows.size())) {
          basis.push_back(vs[j]);
        } else {
          rows.pop_back();
        }
      }
      if (static_cast<int>(rows.size()) != k) throw std::invalid_argument("template cell is degenerate");
      basis_[k].push_back(basis);
    }
  }

  for (int k = 0; k <= top; ++k) {
    facets_[k].resize(count(k));
    closure_[k].resize(count(k));
    for (int c = 0; c < count(k); ++c) {
      const auto& vc = cells_[k][c];
      std::set<std::pair<int, int>> clos{{k, c}};
      if (k > 0) {
        const auto& bc = basis_[k][c];
        std::vector<long long> sum_c(coords_[0].size(), 0);
        for (int v : vc)
          for (std::size_t i = 0; i < sum_c.size(); ++i) sum_c[i] += coords_[v][i];
        for (int f = 0; f < count(k - 1); ++f) {
          const auto& vf = cells_[k - 1][f];
          if (!std::includes(vc.begin(), vc.end(), vf.begin(), vf.end())) continue;
          // Outward direction: centroid(f) - centroid(c), scaled to integers.
          std::vector<long long> out(sum_c.size(), 0);
          for (std::size_t i = 0; i < out.size(); ++i) {
            long long sf = 0;
            for (int v : vf) sf += coords_[v][i];
            out[i] = static_cast<long long>(vc.size()) * sf - static_cast<long long>(vf.size()) * sum_c[i];
          }
          std::vector<std::vector<long long>> rows{out};
          const auto& bf = basis_[k - 1][f];
          for (std::size_t j = 1; j < bf.size(); ++j) rows.push_back(diff(bf[j], bf[0]));
          std::vector<std::vector<BigInt>> m(k, std::vector<BigInt>(k));
          for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) m[i][j] = dot(rows[i], diff(bc[j + 1], bc[0]));
          const int s = det_sign(m);
          if (s == 0) throw std::invalid_argument("facet incidence is degenerate");
          facets_[k][c].push_back({f, s});
          clos.insert(closure_[k - 1][f].begin(), closure_[k - 1][f].end());
        }
      }
      closure_[k][c].assign(clos.begin(), clos.end());
    }
  }

  for (int k = 2; k <= top; ++k) {
    for (int c = 0; c < count(k); ++c) {
      std::map<int, int> acc;
      for (auto [f, s] : facets_[k][c])
        for (auto [g, t] : facets_[k - 1][f]) acc[g] += s * t;
      for (auto& [g, x] : acc)
        if (x != 0) throw std::logic_error("template boundary does not square to zero");
    }
  }
}

std::vector<long long> CellTemplate::diff(int a, int b) const {
  std::vector<long long> d(coords_[a].size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = coords_[a][i] - coords_[b][i];
  return d;
}

int CellTemplate::find(int k, std::vector<int> vertex_set) const {
  std::sort(vertex_set.begin(), vertex_set.end());
  auto it = index_[k].find(vertex_set);
  return it == index_[k].end() ? -1 : it->second;
}

int CellTemplate::transport_sign(int k, int from, int to, const std::vector<int>& vertex_map) const {
  if (k == 0) return 1;
  const auto& bf = basis_[k][from];
  const auto& bt = basis_[k][to];
  std::vector<std::vector<BigInt>> m(k, std::vector<BigInt>(k));
  for (int i = 0; i < k; ++i) {
    const auto img = diff(vertex_map[bf[i + 1]], vertex_map[bf[0]]);
    for (int j = 0; j < k; ++j) m[i][j] = dot(img, diff(bt[j + 1], bt[0]));
  }
  const int s = det_sign(m);
  if (s == 0) throw GluingError("gluing map is not affine on a cell");
  return s;
}

long long QuotientComplex::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t k = 0; k < cell_counts.size(); ++k) chi += (k % 2 ? -1 : 1) * static_cast<long long>(cell_counts[k]);
  return chi;
}

bool QuotientComplex::is_chain_complex() const {
  for (int k = 2; k <= dimension(); ++k)
    if (!(boundary[k - 1] * boundary[k]).is_zero()) return false;
  return true;
}

std::vector<AbelianGroup> homology(const QuotientComplex& c) {
  const int top = c.dimension();
  std::vector<SmithResult> snf(top + 2);
  for (int k = 1; k <= top; ++k) snf[k] = smith_normal_form(c.boundary[k]);
  std::vector<AbelianGroup> h;
  for (int k = 0; k <= top; ++k) {
    const std::size_t rank_in = k + 1 <= top ? snf[k + 1].rank() : 0;
    const std::size_t rank_out = k >= 1 ? snf[k].rank() : 0;
    const int free = c.cell_counts[k] - static_cast<int>(rank_in + rank_out);
    h.push_back(AbelianGroup::from_cyclic_orders(free, k + 1 <= top ? snf[k + 1].invariants : std::vector<BigInt>{}));
  }
  return h;
}

GluedComplex::GluedComplex(std::shared_ptr<const CellTemplate> tmpl, int pieces)
    : tmpl_(std::move(tmpl)), pieces_(pieces) {
  int total = 0;
  for (int k = 0; k <= tmpl_->dimension(); ++k) {
    offset_.push_back(total);
    total += pieces_ * tmpl_->count(k);
  }
  offset_.push_back(total);
  parent_.resize(total);
  std::iota(parent_.begin(), parent_.end(), 0);
  parity_.assign(total, 1);
}

int GluedComplex::node(int k, int piece, int cell) const {
  return offset_[k] + piece * tmpl_->count(k) + cell;
}

std::pair<int, int> GluedComplex::find(int x) const {
  int sign = 1;
  int r = x;
  while (parent_[r] != r) {
    sign *= parity_[r];
    r = parent_[r];
  }
  // Path compression keeping signs relative to the root.
  int s = sign;
  while (parent_[x] != r) {
    const int next = parent_[x];
    const int ps = parity_[x];
    parent_[x] = r;
    parity_[x] = s;
    s *= ps;
    x = next;
  }
  return {r, sign};
}

void GluedComplex::unite(int a, int b, int sign) {
  auto [ra, sa] = find(a);
  auto [rb, sb] = find(b);
  const int rel = sa * sign * sb;
  if (ra == rb) {
    if (rel != 1) throw GluingError("a cell is identified with itself reversing orientation");
    return;
  }
  parent_[ra] = rb;
  parity_[ra] = rel;
  numbered_ = false;
}

void GluedComplex::glue(int dim, int from_piece, int from_cell, int to_piece, int to_cell,
                        const std::vector<int>& vertex_map) {
  const CellTemplate& t = *tmpl_;
  std::vector<int> image;
  for (int v : t.vertices(dim, from_cell)) {
    if (v >= static_cast<int>(vertex_map.size()) || vertex_map[v] < 0)
      throw GluingError("vertex map undefined on the glued cell");
    image.push_back(vertex_map[v]);
  }
  if (t.find(dim, image) != to_cell) throw GluingError("vertex map does not carry the cell onto its target");
  for (auto [k, sub] : t.closure(dim, from_cell)) {
    std::vector<int> img;
    for (int v : t.vertices(k, sub)) img.push_back(vertex_map[v]);
    const int target = t.find(k, img);
    if (target < 0) throw GluingError("vertex map does not carry cells to cells");
    unite(node(k, from_piece, sub), node(k, to_piece, target), t.transport_sign(k, sub, target, vertex_map));
  }
}

void GluedComplex::renumber() const {
  if (numbered_) return;
  const int top = tmpl_->dimension();
  class_of_root_.assign(top + 1, {});
  class_counts_.assign(top + 1, 0);
  for (int k = 0; k <= top; ++k) {
    const int n = offset_[k + 1] - offset_[k];
    class_of_root_[k].assign(n, -1);
    for (int i = 0; i < n; ++i) {
      const int r = find(offset_[k] + i).first - offset_[k];
      if (class_of_root_[k][r] < 0) class_of_root_[k][r] = class_counts_[k]++;
    }
  }
  numbered_ = true;
}

std::pair<int, int> GluedComplex::cell_class(int k, int piece, int cell) const {
  renumber();
  auto [r, s] = find(node(k, piece, cell));
  return {class_of_root_[k][r - offset_[k]], s};
}

int GluedComplex::class_count(int k) const {
  renumber();
  return class_counts_[k];
}

int GluedComplex::class_size(int k, int piece, int cell) const {
  const int target = find(node(k, piece, cell)).first;
  int n = 0;
  for (int x = offset_[k]; x < offset_[k + 1]; ++x) n += find(x).first == target;
  return n;
}

QuotientComplex GluedComplex::quotient() const {
  renumber();
  const CellTemplate& t = *tmpl_;
  const int top = t.dimension();
  QuotientComplex q;
  q.cell_counts = class_counts_;
  q.boundary.resize(top + 1);
  for (int k = 1; k <= top; ++k) {
    IntMatrix m(class_counts_[k - 1], class_counts_[k]);
    std::vector<bool> done(class_counts_[k], false);
    for (int x = offset_[k]; x < offset_[k + 1]; ++x) {
      if (find(x).first != x) continue;
      const int col = class_of_root_[k][x - offset_[k]];
      if (done[col]) continue;
      done[col] = true;
      const int piece = (x - offset_[k]) / t.count(k);
      const int cell = (x - offset_[k]) % t.count(k);
      for (auto [f, s] : t.facets(k, cell)) {
        auto [row, fs] = cell_class(k - 1, piece, f);
        m.at(row, col) += s * fs;
      }
    }
    q.boundary[k] = std::move(m);
  }
  return q;
}

}  // namespace c24
