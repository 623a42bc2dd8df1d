// Chain-level Burnside functors at the almost-extreme grading.
//
// F(u) = Z(u) when Phi(u) = 0 and {u+} when Phi(u) = 1.  M(u) replaces the
// circles by the components and 0-chords of the state graph G(u).  Only
// span cardinalities are materialized.  Degree k holds the states of
// weight k and the differential lowers the weight.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "almax/model.hpp"
#include "almax/statecube.hpp"

namespace almax {

struct GeneratorLabel {
  enum class Kind { circle, plus, component, edge };
  Kind kind = Kind::plus;
  std::uint32_t state = 0;
  int id = 0;   // circle id, component id or chord index; 0 for plus
  std::string str(int n) const;
};

// One cube edge u > v along coordinate i with its local block: entries
// (target generator, source generator, value) before the sign.
struct EdgeBlock {
  std::uint32_t source = 0;
  std::uint32_t target = 0;
  int coordinate = 0;
  int sign = 1;
  std::vector<std::array<long long, 3>> entries;
};

enum class FunctorKind { F, M, extreme };
std::string to_string(FunctorKind k);

// A functor evaluated on the whole cube: generators per state and the
// nonzero edge blocks.
struct FunctorCube {
  FunctorKind kind = FunctorKind::F;
  int n = 0;
  std::vector<std::vector<GeneratorLabel>> generators;   // indexed by state bits
  std::vector<EdgeBlock> edges;                          // sorted by (source, coordinate)

  // Totalization.  Basis of degree k lists the generators of the weight-k
  // states in increasing state order.
  GradedChainComplex complex() const;
  // Position of a generator inside its degree.
  std::vector<int> offsets() const;
};

// Orientation of a 0-chord e in a Phi = 0 state: e points to the circle of
// its distinguished endpoint, and e+ is the set of circles in that
// component of G(u) - e.
std::vector<int> e_plus(const ChordDiagram& d, const ResolvedState& r, ChordIndex e);

// All e+ sets of one state, keyed by position in r.zero_chords.
std::vector<std::vector<int>> orient_edges(const CubeIndex& cube, std::uint32_t u);

// Size of the ladybug set of a Phi = 1 state.
int ladybug_size(const CubeIndex& cube, std::uint32_t v);

FunctorCube build_F(const CubeIndex& cube, int jobs = 1);
FunctorCube build_M(const CubeIndex& cube, int jobs = 1);
FunctorCube build_extreme(const CubeIndex& cube);

GradedChainComplex build_F_complex(const CubeIndex& cube, int jobs = 1);
GradedChainComplex build_M_complex(const CubeIndex& cube, int jobs = 1);
GradedChainComplex build_extreme_complex(const CubeIndex& cube);

// gamma : C(M) -> C(F) and the explicit inverse, per degree.  forward[k]
// has rank_F(k) rows and rank_M(k) columns.
struct GammaMaps {
  std::map<int, SparseMatrix> forward;
  std::map<int, SparseMatrix> inverse;
};
GammaMaps build_gamma(const CubeIndex& cube, const FunctorCube& F, const FunctorCube& M);

struct GammaCheck {
  bool chain_map = true;
  bool left_inverse = true;    // gamma^{-1} gamma = id
  bool right_inverse = true;   // gamma gamma^{-1} = id
  std::string first_failure;
  bool ok() const { return chain_map && left_inverse && right_inverse; }
};
GammaCheck check_gamma(const GammaMaps& g, const GradedChainComplex& F,
                       const GradedChainComplex& M);

// Pointed semi-simplicial set from a functor whose spans are all functions
// of pointed sets.  Simplices of dimension k are the generators of the
// weight k+1 states; face p of a generator at u is the image along the
// p-th coordinate where u is 1, or the basepoint.
struct SemiSimplicialData {
  int top_dimension = -1;
  std::map<int, std::vector<std::string>> simplices;   // dimension -> names
  // faces[k][s][p] = index of face p of simplex s in dimension k - 1, or -1
  std::map<int, std::vector<std::vector<int>>> faces;
  // Reduced chain complex: degree k = k-simplices, basepoint removed.
  GradedChainComplex chain_complex() const;
};

struct FactorizationResult {
  std::optional<SemiSimplicialData> data;
  // Witness edge when factorization fails: source, target states and the
  // offending source generator.
  std::optional<EdgeBlock> witness;
  bool factors() const { return data.has_value(); }
};
FactorizationResult factor_through_pointed(const FunctorCube& f);

}  // namespace almax
