#include "almax/model.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace almax {

// ---------------------------------------------------------------------------
// ChordDiagram
// ---------------------------------------------------------------------------

int ChordDiagram::find_chord(ChordIndex index) const {
  auto it = std::lower_bound(chords.begin(), chords.end(), index,
                             [](const Chord& c, ChordIndex i) { return c.index < i; });
  if (it == chords.end() || it->index != index) return -1;
  return static_cast<int>(it - chords.begin());
}

const Chord& ChordDiagram::chord(ChordIndex index) const {
  int pos = find_chord(index);
  if (pos < 0) throw std::out_of_range("no chord with index " + std::to_string(index + 1));
  return chords[pos];
}

std::vector<int> ChordDiagram::circle_of() const {
  std::vector<int> where(endpoints.size(), -1);
  for (int c = 0; c < circle_count(); ++c)
    for (EndpointId e : circles[c].endpoints)
      if (e >= 0 && e < static_cast<int>(where.size())) where[e] = c;
  return where;
}

std::vector<ChordIndex> ChordDiagram::chord_indices() const {
  std::vector<ChordIndex> out;
  out.reserve(chords.size());
  for (const auto& c : chords) out.push_back(c.index);
  return out;
}

std::vector<EndpointId> ChordDiagram::markers() const {
  std::vector<char> used(endpoints.size(), 0);
  for (const auto& c : chords)
    for (EndpointId e : c.ends) used[e] = 1;
  std::vector<EndpointId> out;
  for (EndpointId e = 0; e < static_cast<int>(endpoints.size()); ++e)
    if (!used[e]) out.push_back(e);
  return out;
}

namespace {

// Rotate so the smallest name comes first; circles compare by their
// endpoint name sequences.
std::vector<std::string> canonical_cycle(const ChordDiagram& d, const Circle& c) {
  std::vector<std::string> names;
  for (EndpointId e : c.endpoints) names.push_back(d.endpoints[e].name);
  if (names.empty()) return names;
  auto it = std::min_element(names.begin(), names.end());
  std::rotate(names.begin(), it, names.end());
  return names;
}

}  // namespace

bool ChordDiagram::same_structure(const ChordDiagram& other) const {
  if (endpoints.size() != other.endpoints.size()) return false;
  if (chords.size() != other.chords.size()) return false;
  if (circles.size() != other.circles.size()) return false;
  // Compared through names so that identifier numbering may differ.
  auto endpoint_set = [](const ChordDiagram& d) {
    std::vector<std::pair<std::string, Side>> v;
    for (const auto& e : d.endpoints) v.push_back({e.name, e.side});
    std::sort(v.begin(), v.end());
    return v;
  };
  if (endpoint_set(*this) != endpoint_set(other)) return false;
  for (std::size_t i = 0; i < chords.size(); ++i) {
    const auto& a = chords[i];
    const auto& b = other.chords[i];
    if (a.index != b.index || a.label != b.label) return false;
    for (int k = 0; k < 2; ++k)
      if (endpoints[a.ends[k]].name != other.endpoints[b.ends[k]].name) return false;
  }
  std::vector<std::vector<std::string>> mine, theirs;
  for (const auto& c : circles) mine.push_back(canonical_cycle(*this, c));
  for (const auto& c : other.circles) theirs.push_back(canonical_cycle(other, c));
  std::sort(mine.begin(), mine.end());
  std::sort(theirs.begin(), theirs.end());
  return mine == theirs;
}

std::vector<std::string> validate(const ChordDiagram& d) {
  std::vector<std::string> out;
  const int ne = static_cast<int>(d.endpoints.size());
  std::vector<int> seen(ne, 0);
  bool out_of_range = false;
  for (const auto& c : d.circles)
    for (EndpointId e : c.endpoints) {
      if (e < 0 || e >= ne) {
        out_of_range = true;
        continue;
      }
      ++seen[e];
    }
  if (out_of_range) out.push_back("unknown endpoint on circle");
  if (std::any_of(seen.begin(), seen.end(), [](int s) { return s > 1; }))
    out.push_back("endpoint multiplicity");
  if (std::any_of(seen.begin(), seen.end(), [](int s) { return s == 0; }))
    out.push_back("endpoint on no circle");

  bool dangling = false, degenerate = false, duplicate = false, orientation = false,
       shared = false, badlabel = false;
  std::vector<int> use(ne, 0);
  for (std::size_t i = 0; i < d.chords.size(); ++i) {
    const auto& c = d.chords[i];
    if (i > 0 && d.chords[i - 1].index >= c.index) duplicate = true;
    if (c.label != 0 && c.label != 1) badlabel = true;
    for (EndpointId e : c.ends) {
      if (e < 0 || e >= ne || seen[e] == 0) {
        dangling = true;
      } else if (++use[e] > 1) {
        shared = true;
      }
    }
    if (c.ends[0] == c.ends[1]) degenerate = true;
    else if (c.ends[0] > c.ends[1]) orientation = true;
  }
  if (dangling) out.push_back("dangling endpoint");
  if (degenerate) out.push_back("degenerate chord");
  if (duplicate) out.push_back("duplicate or unsorted chord index");
  if (orientation) out.push_back("distinguished endpoint not first");
  if (shared) out.push_back("endpoint shared by two chords");
  if (badlabel) out.push_back("chord label outside {0,1}");
  return out;
}

// ---------------------------------------------------------------------------
// State
// ---------------------------------------------------------------------------

std::string State::str() const {
  std::string s(n_, '0');
  for (int i = 0; i < n_; ++i)
    if ((*this)[i]) s[i] = '1';
  return s;
}

// ---------------------------------------------------------------------------
// SparseMatrix
// ---------------------------------------------------------------------------

void SparseMatrix::add(int row, int col, long long value) {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
    throw std::out_of_range("matrix entry out of range");
  if (value == 0) return;
  auto& column = col_[col];
  auto it = std::lower_bound(column.begin(), column.end(), row,
                             [](const Entry& e, int r) { return e.first < r; });
  if (it != column.end() && it->first == row) {
    it->second += value;
    if (it->second == 0) column.erase(it);
  } else {
    column.insert(it, {row, value});
  }
}

long long SparseMatrix::at(int row, int col) const {
  const auto& column = col_[col];
  auto it = std::lower_bound(column.begin(), column.end(), row,
                             [](const Entry& e, int r) { return e.first < r; });
  return (it != column.end() && it->first == row) ? it->second : 0;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : col_) n += c.size();
  return n;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (int c = 0; c < cols_; ++c)
    for (const auto& [r, v] : col_[c]) t.col_[r].push_back({c, v});
  return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
  SparseMatrix out(rows_, rhs.cols_);
  std::vector<long long> acc(rows_, 0);
  std::vector<int> touched;
  for (int c = 0; c < rhs.cols_; ++c) {
    touched.clear();
    for (const auto& [k, v] : rhs.col_[c])
      for (const auto& [r, w] : col_[k]) {
        if (acc[r] == 0) touched.push_back(r);
        acc[r] += v * w;
      }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (int r : touched) {
      if (acc[r] != 0) out.col_[c].push_back({r, acc[r]});
      acc[r] = 0;
    }
  }
  return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix difference shape mismatch");
  SparseMatrix out = *this;
  for (int c = 0; c < cols_; ++c)
    for (const auto& [r, v] : rhs.col_[c]) out.add(r, c, -v);
  return out;
}

bool SparseMatrix::operator==(const SparseMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && col_ == rhs.col_;
}

SparseMatrix SparseMatrix::identity(int n) {
  SparseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.col_[i].push_back({i, 1});
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<long long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  SparseMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if (rows[i][j] != 0) m.col_[j].push_back({i, rows[i][j]});
  return m;
}

std::vector<std::vector<long long>> SparseMatrix::dense() const {
  std::vector<std::vector<long long>> out(rows_, std::vector<long long>(cols_, 0));
  for (int c = 0; c < cols_; ++c)
    for (const auto& [r, v] : col_[c]) out[r][c] = v;
  return out;
}

// ---------------------------------------------------------------------------
// GradedChainComplex
// ---------------------------------------------------------------------------

const std::vector<std::string>& GradedChainComplex::basis(int k) const {
  static const std::vector<std::string> empty;
  auto it = basis_.find(k);
  return it == basis_.end() ? empty : it->second;
}

void GradedChainComplex::set_basis(int k, std::vector<std::string> labels) {
  index_.erase(k);
  if (labels.empty()) basis_.erase(k);
  else basis_[k] = std::move(labels);
}

SparseMatrix GradedChainComplex::differential(int k) const {
  auto it = d_.find(k);
  if (it != d_.end()) return it->second;
  return SparseMatrix(rank(k - 1), rank(k));
}

void GradedChainComplex::set_differential(int k, SparseMatrix m) {
  if (m.rows() != rank(k - 1) || m.cols() != rank(k))
    throw std::invalid_argument("differential shape does not match bases in degree " +
                                std::to_string(k));
  if (m.is_zero()) d_.erase(k);
  else d_[k] = std::move(m);
}

std::vector<int> GradedChainComplex::degrees() const {
  std::vector<int> out;
  for (const auto& [k, b] : basis_)
    if (!b.empty()) out.push_back(k);
  return out;
}

int GradedChainComplex::min_degree() const {
  auto d = degrees();
  return d.empty() ? 0 : d.front();
}

int GradedChainComplex::max_degree() const {
  auto d = degrees();
  return d.empty() ? -1 : d.back();
}

int GradedChainComplex::index_of(int k, const std::string& label) const {
  auto& idx = index_[k];
  const auto& b = basis(k);
  if (idx.size() != b.size()) {
    idx.clear();
    for (int i = 0; i < static_cast<int>(b.size()); ++i) idx.emplace(b[i], i);
  }
  auto it = idx.find(label);
  return it == idx.end() ? -1 : it->second;
}

std::vector<std::string> GradedChainComplex::check() const {
  std::vector<std::string> out;
  for (const auto& [k, m] : d_) {
    if (m.rows() != rank(k - 1) || m.cols() != rank(k))
      out.push_back("shape mismatch at degree " + std::to_string(k));
  }
  if (!out.empty()) return out;
  for (const auto& [k, m] : d_) {
    auto below = d_.find(k - 1);
    if (below == d_.end()) continue;
    if (!(below->second * m).is_zero())
      out.push_back("d∘d nonzero at degree " + std::to_string(k));
  }
  return out;
}

GradedChainComplex GradedChainComplex::shifted(int shift) const {
  GradedChainComplex out;
  for (const auto& [k, b] : basis_) out.basis_[k + shift] = b;
  for (const auto& [k, m] : d_) out.d_[k + shift] = m;
  return out;
}

GradedChainComplex GradedChainComplex::dual() const {
  GradedChainComplex out;
  for (const auto& [k, b] : basis_) out.basis_[-k] = b;
  // d_k : C_k -> C_{k-1} becomes C^{-(k-1)} -> C^{-k}, i.e. degree 1-k.
  for (const auto& [k, m] : d_) out.d_[1 - k] = m.transpose();
  return out;
}

// ---------------------------------------------------------------------------
// SimplicialComplex
// ---------------------------------------------------------------------------

std::vector<std::string> SimplicialComplex::check() const {
  std::vector<std::string> out;
  if (!faces.count({})) out.push_back("missing empty face");
  std::set<int> verts(vertices.begin(), vertices.end());
  for (const auto& f : faces) {
    if (!std::is_sorted(f.begin(), f.end()) ||
        std::adjacent_find(f.begin(), f.end()) != f.end()) {
      out.push_back("face not a sorted set");
      break;
    }
    bool bad = false;
    for (int v : f)
      if (!verts.count(v)) bad = true;
    if (bad) {
      out.push_back("face uses unknown vertex");
      break;
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
      auto g = f;
      g.erase(g.begin() + static_cast<long>(i));
      if (!faces.count(g)) {
        out.push_back("not downward closed");
        return out;
      }
    }
  }
  return out;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : faces) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

// ---------------------------------------------------------------------------
// HomologyResult
// ---------------------------------------------------------------------------

const HomologyGroup& HomologyResult::at(int k) const {
  static const HomologyGroup zero;
  auto it = groups.find(k);
  return it == groups.end() ? zero : it->second;
}

void HomologyResult::set(int k, HomologyGroup g) {
  if (g.is_zero()) groups.erase(k);
  else groups[k] = std::move(g);
}

bool HomologyResult::torsion_free() const {
  for (const auto& [k, g] : groups)
    if (!g.torsion.empty()) return false;
  return true;
}

long long HomologyResult::euler_characteristic() const {
  long long chi = 0;
  for (const auto& [k, g] : groups) chi += (k % 2 == 0 ? 1 : -1) * g.betti;
  return chi;
}

HomologyResult HomologyResult::shifted(int shift) const {
  HomologyResult out;
  for (const auto& [k, g] : groups) out.groups[k + shift] = g;
  return out;
}

std::string HomologyResult::str() const {
  if (groups.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, g] : groups) {
    if (!first) os << ", ";
    first = false;
    os << "H" << k << "=";
    bool term = false;
    if (g.betti) {
      os << "Z";
      if (g.betti > 1) os << "^" << g.betti;
      term = true;
    }
    for (long long t : g.torsion) {
      if (term) os << "+";
      os << "Z/" << t;
      term = true;
    }
  }
  return os.str();
}

}  // namespace almax
