// Lando graphs, independence complexes and the extreme grading.
//
// The Lando graph of D(1) has a vertex per monochord and an edge per
// alternating pair.  Its independence complex I_D computes Kh at j_max, and
// the Phi = 0 states of the cube form the categorical dual of its face
// poset.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "almax/model.hpp"
#include "almax/statecube.hpp"

namespace almax {

// Raised when an enumeration would exceed a configured size bound.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Graph {
  std::vector<int> vertices;                  // chord indices, ascending
  std::vector<std::pair<int, int>> edges;     // (a, b) with a < b, sorted

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  bool adjacent(int a, int b) const;
  // Vertices 0..n-1 relabeled in order, for comparing shapes.
  Graph normalized() const;
  // Connected components as vertex lists.
  std::vector<std::vector<int>> components() const;
  Graph induced(const std::vector<int>& keep) const;
};

// Cycle C_n on n vertices, path L_n with n edges (n + 1 vertices).
Graph cycle_graph(int n);
Graph path_graph(int n);

// True when g is isomorphic to a cycle C_n / a path L_n.
bool is_cycle(const Graph& g, int n);
bool is_path(const Graph& g, int n);

Graph lando_graph(const ChordDiagram& d);

inline constexpr int kDefaultMaxIndependenceVertices = 24;

// Faces are the independent vertex sets (as sorted chord indices).
// Throws ResourceLimit above max_vertices.
SimplicialComplex independence_complex(const Graph& g,
                                       int max_vertices = kDefaultMaxIndependenceVertices);

// Reduced homology of a simplicial complex; the empty complex {{}} has
// reduced homology Z in degree -1.
HomologyResult reduced_homology(const SimplicialComplex& k);

enum class GraphFamily { cycle, path };

// Reduced homology of the independence complex of C_n (n >= 3) or L_n
// (n >= 0) from the closed formulas: S^{k-1} for cycles with n = 3k +- 1,
// S^{k-1} v S^{k-1} for n = 3k; S^k for paths with n = 3k + 1, 3k + 2 and a
// point for n = 3k.
HomologyResult reference_homotopy(GraphFamily family, int n);

// {u : Phi(u) = 0} equals the set of states whose 0-coordinates are the
// vertices of a face of i.
bool dual_subposet_check(const CubeIndex& cube, const SimplicialComplex& i);

// Kh^{i, j_max}(D) predicted from I_D: H~_{n_+ - i - 1}(I_D) placed in
// homological degree i.
HomologyResult extreme_from_independence(const HomologyResult& reduced_i_d, int n_plus);

// Reduced homology of the realization of a subposet complex: H~_d of the
// realization is H_{d+1} of the chain complex.
inline constexpr int kRealizationShift = 1;
HomologyResult realization_homology(const GradedChainComplex& c);

}  // namespace almax
