// Shared domain types: planar-diagram codes, chord diagrams, cube states,
// graded chain complexes, simplicial complexes and homology results.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace almax {

using EndpointId = int;
using ChordIndex = int;   // 0-based position in the crossing order

// ---------------------------------------------------------------------------
// Planar diagram codes
// ---------------------------------------------------------------------------

struct PDCode {
  // X[a,b,c,d]: a is the incoming under-arc, c the outgoing one.
  std::vector<std::array<int, 4>> crossings;
  std::vector<int> signs;   // +1 / -1, one per crossing
  int n_plus = 0;
  int n_minus = 0;

  int size() const { return static_cast<int>(crossings.size()); }
};

// ---------------------------------------------------------------------------
// Chord diagrams
// ---------------------------------------------------------------------------

// Which side of its circle (relative to the circle's traversal direction)
// a chord leaves from.  Only compared for equality when two circles merge.
enum class Side : std::uint8_t { left = 0, right = 1 };

inline Side opposite(Side s) { return s == Side::left ? Side::right : Side::left; }

struct Endpoint {
  std::string name;
  Side side = Side::left;
};

struct Circle {
  std::string name;
  std::vector<EndpointId> endpoints;   // cyclic order
};

struct Chord {
  ChordIndex index = 0;
  // ends[0] is the distinguished endpoint: the smaller identifier.
  std::array<EndpointId, 2> ends{0, 0};
  int label = 1;

  EndpointId distinguished() const { return ends[0]; }
};

// Circles with cyclically ordered endpoints plus labeled chords.  Endpoint
// identifiers are minted once and never renamed by surgery; an endpoint that
// no chord references is a marker (left behind by smoothing) and only serves
// to keep circle identity stable.
class ChordDiagram {
 public:
  std::vector<Endpoint> endpoints;   // indexed by EndpointId
  std::vector<Circle> circles;
  std::vector<Chord> chords;         // sorted by index

  int circle_count() const { return static_cast<int>(circles.size()); }
  int chord_count() const { return static_cast<int>(chords.size()); }

  // Position of a chord with the given crossing index, or -1.
  int find_chord(ChordIndex index) const;
  const Chord& chord(ChordIndex index) const;

  // circle_of()[id] = circle holding endpoint id (-1 if none).
  std::vector<int> circle_of() const;

  bool is_monochord(const Chord& c, const std::vector<int>& circle_of) const {
    return circle_of[c.ends[0]] == circle_of[c.ends[1]];
  }

  // Chord indices in ascending order.
  std::vector<ChordIndex> chord_indices() const;

  // Endpoints that no chord references.
  std::vector<EndpointId> markers() const;

  // Structural equality (same endpoints, same chords, same cyclic orders
  // up to rotation and circle permutation).
  bool same_structure(const ChordDiagram& other) const;
};

// Empty list iff every ChordDiagram invariant holds.
std::vector<std::string> validate(const ChordDiagram& diagram);

// ---------------------------------------------------------------------------
// Cube states
// ---------------------------------------------------------------------------

class State {
 public:
  State() = default;
  State(int n, std::uint32_t bits) : n_(n), bits_(bits) {}

  static State ones(int n) { return {n, n == 0 ? 0u : (n >= 32 ? ~0u : ((1u << n) - 1u))}; }
  static State zeros(int n) { return {n, 0u}; }

  int size() const { return n_; }
  std::uint32_t bits() const { return bits_; }
  bool operator[](int i) const { return (bits_ >> i) & 1u; }
  int weight() const { return __builtin_popcount(bits_); }

  State with(int i, bool value) const {
    return {n_, value ? (bits_ | (1u << i)) : (bits_ & ~(1u << i))};
  }
  // Number of j < i with u_j = 1; the cube sign exponent.
  int ones_before(int i) const { return __builtin_popcount(bits_ & ((1u << i) - 1u)); }

  // "1101" with coordinate 0 first.
  std::string str() const;

  auto operator<=>(const State&) const = default;

 private:
  int n_ = 0;
  std::uint32_t bits_ = 0;
};

// A cube vertex together with its resolution D(u).
struct ResolvedState {
  State state;
  std::shared_ptr<const ChordDiagram> diagram;   // null when phi > 1 and dropped
  int phi = 0;
  int circle_count = 0;
  // component[c] = connected component of G(u) holding circle c (phi <= 1).
  std::vector<int> component;
  int component_count = 0;
  std::vector<ChordIndex> zero_chords;
  std::vector<ChordIndex> one_chords;
};

// ---------------------------------------------------------------------------
// Integer matrices and chain complexes
// ---------------------------------------------------------------------------

// Column-compressed integer matrix with sorted row indices per column.
class SparseMatrix {
 public:
  using Entry = std::pair<int, long long>;

  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), col_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void add(int row, int col, long long value);
  long long at(int row, int col) const;
  const std::vector<Entry>& column(int c) const { return col_[c]; }

  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  SparseMatrix transpose() const;
  SparseMatrix operator*(const SparseMatrix& rhs) const;
  SparseMatrix operator-(const SparseMatrix& rhs) const;
  bool operator==(const SparseMatrix& rhs) const;

  static SparseMatrix identity(int n);
  static SparseMatrix from_dense(const std::vector<std::vector<long long>>& rows);
  std::vector<std::vector<long long>> dense() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::vector<Entry>> col_;
};

// Free integer modules per degree with differentials d_k : C_k -> C_{k-1}.
class GradedChainComplex {
 public:
  // Basis labels in degree k (empty vector when absent).
  const std::vector<std::string>& basis(int k) const;
  void set_basis(int k, std::vector<std::string> labels);
  int rank(int k) const { return static_cast<int>(basis(k).size()); }

  // d_k : C_k -> C_{k-1}; zero matrix of the right shape when unset.
  SparseMatrix differential(int k) const;
  void set_differential(int k, SparseMatrix m);

  // Degrees carrying a nonzero module, ascending.
  std::vector<int> degrees() const;
  int min_degree() const;
  int max_degree() const;

  // Index of a label in degree k, -1 if absent.
  int index_of(int k, const std::string& label) const;

  // Empty when dimensions match and consecutive differentials compose to zero.
  std::vector<std::string> check() const;

  // Same modules in degrees k + shift, same differentials.
  GradedChainComplex shifted(int shift) const;

  // Degree k -> -k, transposed differentials.  Homology of the result in
  // degree -k is the cohomology of *this in degree k.
  GradedChainComplex dual() const;

 private:
  std::map<int, std::vector<std::string>> basis_;
  std::map<int, SparseMatrix> d_;
  mutable std::map<int, std::map<std::string, int>> index_;
};

// ---------------------------------------------------------------------------
// Simplicial complexes and homology
// ---------------------------------------------------------------------------

struct SimplicialComplex {
  std::vector<int> vertices;
  std::set<std::vector<int>> faces;   // sorted vertex lists, includes {}

  // Empty when downward closed and containing the empty face.
  std::vector<std::string> check() const;
  int dimension() const;
};

struct HomologyGroup {
  int betti = 0;
  std::vector<long long> torsion;   // invariant factors > 1, divisibility chain

  bool is_zero() const { return betti == 0 && torsion.empty(); }
  auto operator<=>(const HomologyGroup&) const = default;
};

// Zero groups are never stored, so equality is group-wise equality.
struct HomologyResult {
  std::map<int, HomologyGroup> groups;

  const HomologyGroup& at(int k) const;
  void set(int k, HomologyGroup g);
  bool is_zero() const { return groups.empty(); }
  bool torsion_free() const;
  long long euler_characteristic() const;
  HomologyResult shifted(int shift) const;
  std::string str() const;

  bool operator==(const HomologyResult&) const = default;
};

}  // namespace almax
