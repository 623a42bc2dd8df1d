// Brute-force Khovanov homology over all enhanced states.  Independent of
// the cube/functor code: it traces resolutions by union-find over arcs.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "almax/model.hpp"

namespace almax {

struct EnhancedState {
  State state;
  std::uint32_t plus = 0;   // bit c set: circle c labeled +1
};

// h = |u| - n_-,  q = n_+ - 2 n_- + |u| + |Z_+| - |Z_-|.
std::pair<int, int> gradings(int weight, int circles, int plus_circles, int n_plus, int n_minus);

// Circles of the resolution of pd at state u: circle id of every arc label
// (arc labels are renumbered densely in increasing order).
struct ArcResolution {
  std::vector<int> circle_of_arc;
  int circles = 0;
};
ArcResolution trace_state(const PDCode& pd, std::uint32_t u);

// j_max = q(1, x_+) = n_+ - 2 n_- + n + |Z(1)|.
int oracle_j_max(const PDCode& pd);

// Khovanov cochain complex at quantum grading j, stored as a chain complex
// in degree -i (so ordinary homology in degree -i is Kh^{i,j}).
GradedChainComplex khovanov_complex(const PDCode& pd, int j);

// Kh^{*,j} indexed by homological degree i.
HomologyResult khovanov_homology(const PDCode& pd, int j);

// All nonzero quantum gradings.
std::map<int, HomologyResult> khovanov_homology_all(const PDCode& pd);

// Number of enhancements of each state (indexed by state bits) at grading j.
std::vector<int> generator_census(const PDCode& pd, int j);

// Unnormalized Jones polynomial from the Kauffman state sum
// (-1)^{n_-} q^{n_+ - 2n_-} sum_u (-q)^{|u|} (q + q^{-1})^{|Z(u)|},
// as a map from exponent to coefficient.
std::map<int, long long> kauffman_state_sum(const PDCode& pd);

// Comparison of the oracle with the functor pipelines at j_almax.
struct AgreementReport {
  int j_almax = 0;
  HomologyResult oracle;         // indexed by i
  HomologyResult from_F;         // cohomology of C_*(F), reindexed to i
  HomologyResult from_M;
  bool census_ok = true;
  bool agree = false;
  std::string first_mismatch;    // empty when agree
};
AgreementReport almost_extreme_agreement(const PDCode& pd, int jobs = 1);

}  // namespace almax
