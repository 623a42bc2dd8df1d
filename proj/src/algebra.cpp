#include "almax/algebra.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <numeric>
#include <limits>
#include <set>

namespace almax {

using BigInt = boost::multiprecision::cpp_int;

namespace {

struct Overflow {};

// a - q*b with overflow detection for machine words.
inline long long sub_mul(long long a, long long q, long long b) {
  long long t, r;
  if (__builtin_mul_overflow(q, b, &t) || __builtin_sub_overflow(a, t, &r)) throw Overflow{};
  return r;
}
inline BigInt sub_mul(const BigInt& a, const BigInt& q, const BigInt& b) { return a - q * b; }

inline long long neg_checked(long long a) {
  if (a == std::numeric_limits<long long>::min()) throw Overflow{};
  return -a;
}
inline BigInt neg_checked(const BigInt& a) { return -a; }

template <class Int>
Int absval(const Int& a) {
  return a < 0 ? neg_checked(a) : a;
}

template <class Int>
using Mat = std::vector<std::vector<Int>>;

template <class Int>
Mat<Int> identity_of(int n) {
  Mat<Int> m(n, std::vector<Int>(n, Int(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Dense Smith normal form.  When U/V are given they accumulate the row and
// column operations so that U * m * V is diagonal.
template <class Int>
std::vector<Int> dense_snf(Mat<Int> a, Mat<Int>* U, Mat<Int>* V) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  auto row_sub = [&](int i, const Int& q, int t) {   // row_i -= q row_t
    if (q == 0) return;
    for (int j = 0; j < cols; ++j)
      if (a[t][j] != 0) a[i][j] = sub_mul(a[i][j], q, a[t][j]);
    if (U)
      for (int j = 0; j < rows; ++j)
        if ((*U)[t][j] != 0) (*U)[i][j] = sub_mul((*U)[i][j], q, (*U)[t][j]);
  };
  auto col_sub = [&](int j, const Int& q, int t) {   // col_j -= q col_t
    if (q == 0) return;
    for (int i = 0; i < rows; ++i)
      if (a[i][t] != 0) a[i][j] = sub_mul(a[i][j], q, a[i][t]);
    if (V)
      for (int i = 0; i < cols; ++i)
        if ((*V)[i][t] != 0) (*V)[i][j] = sub_mul((*V)[i][j], q, (*V)[i][t]);
  };
  auto swap_rows = [&](int i, int k) {
    if (i == k) return;
    std::swap(a[i], a[k]);
    if (U) std::swap((*U)[i], (*U)[k]);
  };
  auto swap_cols = [&](int j, int k) {
    if (j == k) return;
    for (auto& r : a) std::swap(r[j], r[k]);
    if (V)
      for (auto& r : *V) std::swap(r[j], r[k]);
  };

  std::vector<Int> diag;
  for (int t = 0; t < std::min(rows, cols); ++t) {
    int bi = -1, bj = -1;
    Int best = 0;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (a[i][j] != 0 && (bi < 0 || absval(a[i][j]) < best)) {
          best = absval(a[i][j]);
          bi = i;
          bj = j;
        }
    if (bi < 0) break;
    swap_rows(t, bi);
    swap_cols(t, bj);
    while (true) {
      bool clean = true;
      for (int i = t + 1; i < rows; ++i)
        if (a[i][t] != 0) {
          row_sub(i, a[i][t] / a[t][t], t);
          if (a[i][t] != 0) clean = false;
        }
      for (int j = t + 1; j < cols; ++j)
        if (a[t][j] != 0) {
          col_sub(j, a[t][j] / a[t][t], t);
          if (a[t][j] != 0) clean = false;
        }
      if (!clean) {
        // Move the smallest leftover in row/column t onto the diagonal.
        int mi = t, mj = t;
        Int m = absval(a[t][t]);
        for (int i = t + 1; i < rows; ++i)
          if (a[i][t] != 0 && absval(a[i][t]) < m) m = absval(a[i][t]), mi = i, mj = t;
        for (int j = t + 1; j < cols; ++j)
          if (a[t][j] != 0 && absval(a[t][j]) < m) m = absval(a[t][j]), mi = t, mj = j;
        swap_rows(t, mi);
        swap_cols(t, mj);
        continue;
      }
      int bad = -1;
      for (int i = t + 1; i < rows && bad < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      // row_t += row_bad; the next pass reduces the new remainders.
      row_sub(t, Int(-1), bad);
    }
    if (a[t][t] < 0) {
      for (int j = 0; j < cols; ++j) a[t][j] = neg_checked(a[t][j]);
      if (U)
        for (int j = 0; j < rows; ++j) (*U)[t][j] = neg_checked((*U)[t][j]);
    }
    diag.push_back(a[t][t]);
  }
  return diag;
}

long long to_ll(const BigInt& b) {
  if (b > std::numeric_limits<long long>::max() || b < std::numeric_limits<long long>::min())
    throw std::overflow_error("invariant factor exceeds 64 bits");
  return static_cast<long long>(b);
}

using Row = std::vector<std::pair<int, long long>>;

// Eliminates unit pivots; returns the number of pivots used and leaves the
// surviving rows (restricted to surviving columns) in `rest`.
int eliminate_units(const SparseMatrix& m, std::vector<Row>& rest) {
  const int R = m.rows(), C = m.cols();
  std::vector<Row> rows(R);
  for (int c = 0; c < C; ++c)
    for (const auto& [r, v] : m.column(c)) rows[r].push_back({c, v});
  std::vector<std::vector<int>> col_rows(C);
  for (int r = 0; r < R; ++r)
    for (const auto& [c, v] : rows[r]) col_rows[c].push_back(r);
  std::vector<char> row_alive(R, 1), col_alive(C, 1);

  auto value_in = [&](const Row& row, int c) -> long long {
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const std::pair<int, long long>& e, int x) { return e.first < x; });
    return (it != row.end() && it->first == c) ? it->second : 0;
  };

  int pivots = 0;
  Row scratch;
  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<int> order;
    for (int r = 0; r < R; ++r)
      if (row_alive[r] && !rows[r].empty()) order.push_back(r);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return rows[x].size() < rows[y].size(); });
    for (int r : order) {
      if (!row_alive[r] || rows[r].empty()) continue;
      int pc = -1;
      std::size_t best = 0;
      for (const auto& [c, v] : rows[r])
        if ((v == 1 || v == -1) && col_alive[c] && (pc < 0 || col_rows[c].size() < best)) {
          pc = c;
          best = col_rows[c].size();
        }
      if (pc < 0) continue;
      const long long pv = value_in(rows[r], pc);
      const Row prow = rows[r];
      for (int s : col_rows[pc]) {
        if (s == r || !row_alive[s]) continue;
        long long w = value_in(rows[s], pc);
        if (w == 0) continue;
        long long q = w * pv;   // pv = ±1, so w / pv
        scratch.clear();
        auto& rs = rows[s];
        std::size_t i = 0, j = 0;
        while (i < rs.size() || j < prow.size()) {
          if (j == prow.size() || (i < rs.size() && rs[i].first < prow[j].first)) {
            scratch.push_back(rs[i++]);
          } else if (i == rs.size() || prow[j].first < rs[i].first) {
            long long nv = sub_mul(0, q, prow[j].second);
            scratch.push_back({prow[j].first, nv});
            col_rows[prow[j].first].push_back(s);
            ++j;
          } else {
            long long nv = sub_mul(rs[i].second, q, prow[j].second);
            if (nv != 0) scratch.push_back({rs[i].first, nv});
            ++i;
            ++j;
          }
        }
        rs.swap(scratch);
      }
      row_alive[r] = 0;
      col_alive[pc] = 0;
      col_rows[pc].clear();
      ++pivots;
      progress = true;
    }
    // Compact candidate lists.
    for (int c = 0; c < C; ++c) {
      if (!col_alive[c]) continue;
      auto& lst = col_rows[c];
      std::sort(lst.begin(), lst.end());
      lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
      lst.erase(std::remove_if(lst.begin(), lst.end(),
                               [&](int s) { return !row_alive[s] || value_in(rows[s], c) == 0; }),
                lst.end());
    }
  }
  rest.clear();
  for (int r = 0; r < R; ++r)
    if (row_alive[r] && !rows[r].empty()) rest.push_back(rows[r]);
  return pivots;
}

template <class Int>
std::vector<long long> factors_of_rest(const std::vector<Row>& rest) {
  std::map<int, int> colmap;
  for (const auto& row : rest)
    for (const auto& [c, v] : row) colmap.emplace(c, 0);
  int k = 0;
  for (auto& [c, idx] : colmap) idx = k++;
  Mat<Int> a(rest.size(), std::vector<Int>(k, Int(0)));
  for (std::size_t i = 0; i < rest.size(); ++i)
    for (const auto& [c, v] : rest[i]) a[i][colmap[c]] = v;
  std::vector<long long> out;
  for (const auto& d : dense_snf<Int>(std::move(a), nullptr, nullptr)) {
    if constexpr (std::is_same_v<Int, BigInt>) out.push_back(to_ll(d));
    else out.push_back(d);
  }
  return out;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t to_modp(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<long long> invariant_factors(const SparseMatrix& m) {
  std::vector<long long> out;
  try {
    std::vector<Row> rest;
    int units = eliminate_units(m, rest);
    std::vector<long long> tail;
    try {
      tail = factors_of_rest<long long>(rest);
    } catch (const Overflow&) {
      tail = factors_of_rest<BigInt>(rest);
    }
    out.assign(units, 1);
    out.insert(out.end(), tail.begin(), tail.end());
  } catch (const Overflow&) {
    Mat<BigInt> a(m.rows(), std::vector<BigInt>(m.cols(), BigInt(0)));
    for (int c = 0; c < m.cols(); ++c)
      for (const auto& [r, v] : m.column(c)) a[r][c] = v;
    out.clear();
    for (const auto& d : dense_snf<BigInt>(std::move(a), nullptr, nullptr)) out.push_back(to_ll(d));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SmithForm smith_normal_form(const DenseMatrix& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  Mat<BigInt> a(rows, std::vector<BigInt>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = m[i][j];
  auto U = identity_of<BigInt>(rows);
  auto V = identity_of<BigInt>(cols);
  auto diag = dense_snf<BigInt>(std::move(a), &U, &V);
  SmithForm out;
  for (const auto& d : diag) out.factors.push_back(to_ll(d));
  out.U.assign(rows, std::vector<long long>(rows));
  out.V.assign(cols, std::vector<long long>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < rows; ++j) out.U[i][j] = to_ll(U[i][j]);
  for (int i = 0; i < cols; ++i)
    for (int j = 0; j < cols; ++j) out.V[i][j] = to_ll(V[i][j]);
  return out;
}

long long integer_rank(const SparseMatrix& m) {
  return static_cast<long long>(invariant_factors(m).size());
}

int rank_mod_p(const SparseMatrix& m, std::uint32_t p) {
  // Row echelon by leading column; each new row is reduced against the
  // pivots found so far.
  std::vector<std::vector<std::pair<int, std::uint32_t>>> rows(m.rows());
  for (int c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) {
      auto x = to_modp(v, p);
      if (x) rows[r].push_back({c, x});
    }
  std::map<int, std::vector<std::pair<int, std::uint32_t>>> pivot;
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<std::pair<int, std::uint32_t>> tmp;
  for (auto& row : rows) {
    while (!row.empty()) {
      auto it = pivot.find(row.front().first);
      if (it == pivot.end()) break;
      const auto& pr = it->second;   // normalized: leading coefficient 1
      std::uint64_t f = row.front().second;
      tmp.clear();
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < pr.size()) {
        if (j == pr.size() || (i < row.size() && row[i].first < pr[j].first)) {
          tmp.push_back(row[i++]);
        } else if (i == row.size() || pr[j].first < row[i].first) {
          tmp.push_back({pr[j].first, static_cast<std::uint32_t>((p - f * pr[j].second % p) % p)});
          ++j;
        } else {
          std::uint64_t v = (row[i].second + p - f * pr[j].second % p) % p;
          if (v) tmp.push_back({row[i].first, static_cast<std::uint32_t>(v)});
          ++i;
          ++j;
        }
      }
      row.swap(tmp);
    }
    if (row.empty()) continue;
    std::uint64_t inv = inv_mod(row.front().second, p);
    for (auto& e : row) e.second = static_cast<std::uint32_t>(e.second * inv % p);
    pivot.emplace(row.front().first, std::move(row));
  }
  return static_cast<int>(pivot.size());
}

// ---------------------------------------------------------------------------
// Homology
// ---------------------------------------------------------------------------

namespace {

void require_complex(const GradedChainComplex& c) {
  auto problems = c.check();
  if (!problems.empty()) throw std::invalid_argument("not a chain complex: " + problems.front());
}

}  // namespace

HomologyResult homology(const GradedChainComplex& c) {
  require_complex(c);
  HomologyResult out;
  auto degs = c.degrees();
  if (degs.empty()) return out;
  std::map<int, std::vector<long long>> f;
  for (int k = degs.front(); k <= degs.back() + 1; ++k) f[k] = invariant_factors(c.differential(k));
  for (int k : degs) {
    HomologyGroup g;
    g.betti = c.rank(k) - static_cast<int>(f[k].size()) - static_cast<int>(f[k + 1].size());
    for (long long d : f[k + 1])
      if (d > 1) g.torsion.push_back(d);
    out.set(k, g);
  }
  return out;
}

HomologyResult cohomology(const GradedChainComplex& c) {
  require_complex(c);
  HomologyResult out;
  auto degs = c.degrees();
  if (degs.empty()) return out;
  std::map<int, std::vector<long long>> f;
  for (int k = degs.front(); k <= degs.back() + 1; ++k) f[k] = invariant_factors(c.differential(k));
  for (int k : degs) {
    HomologyGroup g;
    g.betti = c.rank(k) - static_cast<int>(f[k].size()) - static_cast<int>(f[k + 1].size());
    // Coker of d_k^T : C^{k-1} -> C^k carries the torsion of d_k.
    for (long long d : f[k])
      if (d > 1) g.torsion.push_back(d);
    out.set(k, g);
  }
  return out;
}

std::map<int, int> betti_mod_p(const GradedChainComplex& c, std::uint32_t p) {
  std::map<int, int> out;
  auto degs = c.degrees();
  if (degs.empty()) return out;
  std::map<int, int> r;
  for (int k = degs.front(); k <= degs.back() + 1; ++k) r[k] = rank_mod_p(c.differential(k), p);
  for (int k : degs) {
    int b = c.rank(k) - r[k] - r[k + 1];
    if (b) out[k] = b;
  }
  return out;
}

GradedChainComplex simplicial_chain_complex(const SimplicialComplex& K, bool reduced) {
  std::map<int, std::vector<std::vector<int>>> by_dim;
  for (const auto& f : K.faces) {
    if (f.empty() && !reduced) continue;
    by_dim[static_cast<int>(f.size()) - 1].push_back(f);
  }
  GradedChainComplex c;
  std::map<int, std::map<std::vector<int>, int>> index;
  for (auto& [d, faces] : by_dim) {
    std::sort(faces.begin(), faces.end());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < faces.size(); ++i) {
      std::string s = "{";
      for (std::size_t j = 0; j < faces[i].size(); ++j) {
        if (j) s += ",";
        s += std::to_string(faces[i][j]);
      }
      labels.push_back(s + "}");
      index[d][faces[i]] = static_cast<int>(i);
    }
    c.set_basis(d, std::move(labels));
  }
  for (const auto& [d, faces] : by_dim) {
    if (!by_dim.count(d - 1)) continue;
    SparseMatrix m(c.rank(d - 1), c.rank(d));
    for (std::size_t col = 0; col < faces.size(); ++col)
      for (std::size_t i = 0; i < faces[col].size(); ++i) {
        auto g = faces[col];
        g.erase(g.begin() + static_cast<long>(i));
        m.add(index[d - 1].at(g), static_cast<int>(col), i % 2 == 0 ? 1 : -1);
      }
    c.set_differential(d, std::move(m));
  }
  return c;
}

GradedChainComplex tensor_product(const GradedChainComplex& a, const GradedChainComplex& b) {
  GradedChainComplex out;
  // offset[(i, k)] = position of the (i, k-i) block inside degree k.
  std::map<std::pair<int, int>, int> offset;
  std::map<int, std::vector<std::string>> labels;
  auto da = a.degrees(), db = b.degrees();
  std::set<int> total;
  for (int i : da)
    for (int j : db) total.insert(i + j);
  for (int k : total)
    for (int i : da) {
      int j = k - i;
      if (!b.rank(j)) continue;
      offset[{i, k}] = static_cast<int>(labels[k].size());
      for (const auto& x : a.basis(i))
        for (const auto& y : b.basis(j)) labels[k].push_back(x + "⊗" + y);
    }
  for (auto& [k, l] : labels) out.set_basis(k, std::move(l));
  for (int k : total) {
    if (!out.rank(k - 1)) continue;
    SparseMatrix m(out.rank(k - 1), out.rank(k));
    for (int i : da) {
      int j = k - i;
      if (!b.rank(j)) continue;
      int src = offset.at({i, k});
      int nb = b.rank(j);
      // d(x⊗y) = dx⊗y + (-1)^i x⊗dy
      if (a.rank(i - 1) && offset.count({i - 1, k - 1})) {
        auto d = a.differential(i);
        int dst = offset.at({i - 1, k - 1});
        for (int x = 0; x < a.rank(i); ++x)
          for (const auto& [r, v] : d.column(x))
            for (int y = 0; y < nb; ++y) m.add(dst + r * nb + y, src + x * nb + y, v);
      }
      if (b.rank(j - 1) && offset.count({i, k - 1})) {
        auto d = b.differential(j);
        int dst = offset.at({i, k - 1});
        int nb1 = b.rank(j - 1);
        long long sgn = (i % 2 == 0) ? 1 : -1;
        for (int x = 0; x < a.rank(i); ++x)
          for (int y = 0; y < nb; ++y)
            for (const auto& [r, v] : d.column(y)) m.add(dst + x * nb1 + r, src + x * nb + y, sgn * v);
      }
    }
    out.set_differential(k, std::move(m));
  }
  return out;
}

// ---------------------------------------------------------------------------
// ModpMatrix
// ---------------------------------------------------------------------------

ModpMatrix ModpMatrix::from(const SparseMatrix& m, std::uint32_t p) {
  ModpMatrix out(m.rows(), m.cols(), p);
  for (int c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) out.at(r, c) = to_modp(v, p);
  return out;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(ModpMatrix& a) {
  const std::uint32_t p = a.prime();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int sel = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a.at(i, c)) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(sel, j));
    std::uint64_t inv = inv_mod(a.at(r, c), p);
    for (int j = c; j < a.cols(); ++j) a.at(r, j) = static_cast<std::uint32_t>(a.at(r, j) * inv % p);
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || !a.at(i, c)) continue;
      std::uint64_t f = a.at(i, c);
      for (int j = c; j < a.cols(); ++j)
        if (a.at(r, j))
          a.at(i, j) = static_cast<std::uint32_t>((a.at(i, j) + p - f * a.at(r, j) % p) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int ModpMatrix::rank() const {
  ModpMatrix copy = *this;
  return static_cast<int>(rref(copy).size());
}

ModpMatrix ModpMatrix::kernel() const {
  ModpMatrix a = *this;
  auto piv = rref(a);
  std::vector<char> is_pivot(cols_, 0);
  for (int c : piv) is_pivot[c] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  ModpMatrix k(cols_, static_cast<int>(free_cols.size()), p_);
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    int fc = free_cols[f];
    k.at(fc, static_cast<int>(f)) = 1;
    for (std::size_t r = 0; r < piv.size(); ++r)
      if (a.at(static_cast<int>(r), fc))
        k.at(piv[r], static_cast<int>(f)) = (p_ - a.at(static_cast<int>(r), fc)) % p_;
  }
  return k;
}

ModpMatrix ModpMatrix::operator*(const ModpMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("mod p product shape mismatch");
  ModpMatrix out(rows_, rhs.cols_, p_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      std::uint64_t v = at(i, k);
      if (!v) continue;
      for (int j = 0; j < rhs.cols_; ++j)
        if (rhs.at(k, j)) out.at(i, j) = static_cast<std::uint32_t>((out.at(i, j) + v * rhs.at(k, j)) % p_);
    }
  return out;
}

ModpMatrix ModpMatrix::hconcat(const ModpMatrix& rhs) const {
  if (rows_ != rhs.rows_) throw std::invalid_argument("mod p concat shape mismatch");
  ModpMatrix out(rows_, cols_ + rhs.cols_, p_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (int j = 0; j < rhs.cols_; ++j) out.at(i, cols_ + j) = rhs.at(i, j);
  }
  return out;
}

namespace {

ModpMatrix sub_block(const SparseMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols,
                     std::uint32_t p) {
  std::vector<int> row_pos(m.rows(), -1);
  for (std::size_t i = 0; i < rows.size(); ++i) row_pos[rows[i]] = static_cast<int>(i);
  ModpMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()), p);
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [r, v] : m.column(cols[j]))
      if (row_pos[r] >= 0) out.at(row_pos[r], static_cast<int>(j)) = to_modp(v, p);
  return out;
}

// Rank of the map induced on homology by a family of cycles: the rank of
// [boundaries | cycles] minus the rank of the boundaries.
int rank_modulo(const ModpMatrix& boundaries, const ModpMatrix& cycles) {
  if (cycles.cols() == 0) return 0;
  if (boundaries.cols() == 0) return cycles.rank();
  return boundaries.hconcat(cycles).rank() - boundaries.rank();
}

}  // namespace

LesReport les_exactness(const GradedChainComplex& b, const std::map<int, std::vector<char>>& in_sub,
                        std::uint32_t p) {
  LesReport rep;
  rep.prime = p;
  auto degs = b.degrees();
  if (degs.empty()) return rep;
  const int lo = degs.front() - 1, hi = degs.back() + 1;

  std::map<int, std::vector<int>> A, C, all;
  for (int k = lo; k <= hi; ++k) {
    const int r = b.rank(k);
    auto it = in_sub.find(k);
    for (int i = 0; i < r; ++i) {
      all[k].push_back(i);
      bool sub = it != in_sub.end() && i < static_cast<int>(it->second.size()) && it->second[i];
      (sub ? A[k] : C[k]).push_back(i);
    }
  }
  auto fail = [&](bool& flag, const std::string& what) {
    flag = false;
    if (rep.first_failure.empty()) rep.first_failure = what;
  };

  // A must be closed under the differential.
  for (int k = lo + 1; k <= hi; ++k) {
    auto d = b.differential(k);
    std::vector<char> sub_row(b.rank(k - 1), 0);
    for (int r : A[k - 1]) sub_row[r] = 1;
    for (int c : A[k])
      for (const auto& [r, v] : d.column(c))
        if (v != 0 && !sub_row[r]) {
          fail(rep.subcomplex, "subcomplex not closed in degree " + std::to_string(k));
          break;
        }
  }
  if (!rep.subcomplex) return rep;

  std::map<int, ModpMatrix> dA, dB, dC, zA, zB, zC;
  for (int k = lo; k <= hi + 1; ++k) {
    auto d = b.differential(k);
    dA.emplace(k, sub_block(d, A[k - 1], A[k], p));
    dB.emplace(k, sub_block(d, all[k - 1], all[k], p));
    dC.emplace(k, sub_block(d, C[k - 1], C[k], p));
  }
  auto kernel_of = [&](const ModpMatrix& d, int cols) {
    if (d.rows() == 0) {
      ModpMatrix id(cols, cols, p);
      for (int i = 0; i < cols; ++i) id.at(i, i) = 1;
      return id;
    }
    return d.kernel();
  };
  for (int k = lo; k <= hi; ++k) {
    zA.emplace(k, kernel_of(dA.at(k), static_cast<int>(A[k].size())));
    zB.emplace(k, kernel_of(dB.at(k), static_cast<int>(all[k].size())));
    zC.emplace(k, kernel_of(dC.at(k), static_cast<int>(C[k].size())));
  }
  auto dim_h = [&](std::map<int, ModpMatrix>& z, std::map<int, ModpMatrix>& d, int k) {
    return z.at(k).cols() - d.at(k + 1).rank();
  };

  std::map<int, int> ri, rp, rd;
  for (int k = lo; k <= hi; ++k) {
    // i_* : H_k(A) -> H_k(B)
    ModpMatrix inc(static_cast<int>(all[k].size()), zA.at(k).cols(), p);
    for (std::size_t i = 0; i < A[k].size(); ++i)
      for (int j = 0; j < inc.cols(); ++j) inc.at(A[k][i], j) = zA.at(k).at(static_cast<int>(i), j);
    ri[k] = rank_modulo(dB.at(k + 1), inc);
    // p_* : H_k(B) -> H_k(C)
    ModpMatrix proj(static_cast<int>(C[k].size()), zB.at(k).cols(), p);
    for (std::size_t i = 0; i < C[k].size(); ++i)
      for (int j = 0; j < proj.cols(); ++j) proj.at(static_cast<int>(i), j) = zB.at(k).at(C[k][i], j);
    rp[k] = rank_modulo(dC.at(k + 1), proj);
    // delta : H_k(C) -> H_{k-1}(A), lift by zero on the A coordinates
    ModpMatrix lift(static_cast<int>(all[k].size()), zC.at(k).cols(), p);
    for (std::size_t i = 0; i < C[k].size(); ++i)
      for (int j = 0; j < lift.cols(); ++j) lift.at(C[k][i], j) = zC.at(k).at(static_cast<int>(i), j);
    ModpMatrix image = dB.at(k).rows() ? dB.at(k) * lift : ModpMatrix(0, lift.cols(), p);
    ModpMatrix in_a(static_cast<int>(A[k - 1].size()), lift.cols(), p);
    for (std::size_t i = 0; i < A[k - 1].size(); ++i)
      for (int j = 0; j < lift.cols(); ++j) in_a.at(static_cast<int>(i), j) = image.at(A[k - 1][i], j);
    rd[k] = rank_modulo(dA.at(k), in_a);
  }
  for (int k = lo; k <= hi; ++k) {
    int ha = dim_h(zA, dA, k), hb = dim_h(zB, dB, k), hc = dim_h(zC, dC, k);
    if (ha || hb || hc) rep.dims[k] = {ha, hb, hc};
    int rdn = rd.count(k + 1) ? rd[k + 1] : 0;
    if (rdn + ri[k] != ha) fail(rep.exact, "not exact at H_" + std::to_string(k) + "(A)");
    if (ri[k] + rp[k] != hb) fail(rep.exact, "not exact at H_" + std::to_string(k) + "(B)");
    if (rp[k] + rd[k] != hc) fail(rep.exact, "not exact at H_" + std::to_string(k) + "(B/A)");
  }
  return rep;
}

}  // namespace almax
