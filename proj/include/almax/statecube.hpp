// The cube of resolutions of a chord diagram D(1): surgery, Phi and the
// state graphs G(u).
//
// Cube coordinate j is the j-th chord of D(1) in index order, so a diagram
// whose chord indices have gaps (after smoothing) still has a dense cube.

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "almax/model.hpp"

namespace almax {

// Surgery along the 1-chord with index i.  Merges or splits circles,
// relabels the chord 0.  Throws std::invalid_argument if the chord is
// already 0-labeled or absent.
ChordDiagram surger(const ChordDiagram& d, ChordIndex i);

// True when the chord with index i joins two different circles.
bool is_bichord(const ChordDiagram& d, ChordIndex i);

// D(1) with only the chords at coordinates j where u_j = 0.
ChordDiagram restricted(const ChordDiagram& top, State u);

// Canonical comparison of two diagrams sharing endpoint identifiers: same
// chords and labels, same circles as cyclic sequences up to rotation and
// reversal.
bool same_resolution(const ChordDiagram& a, const ChordDiagram& b);

struct CubeOptions {
  int jobs = 1;
  // Keep D(u) for states with Phi(u) > 1 (otherwise dropped once used).
  bool keep_all_diagrams = false;
};

class CubeIndex {
 public:
  explicit CubeIndex(ChordDiagram top, CubeOptions options = {});

  int n() const { return n_; }
  const ChordDiagram& top() const { return top_; }
  int top_circles() const { return top_.circle_count(); }

  // Chord index carried by cube coordinate j.
  ChordIndex chord_at(int j) const { return top_.chords[j].index; }
  // Coordinate of the chord with the given index, or -1.
  int coordinate_of(ChordIndex index) const { return top_.find_chord(index); }

  State state(std::uint32_t bits) const { return {n_, bits}; }
  const ResolvedState& resolve(State u) const { return memo_[u.bits()]; }
  const ResolvedState& resolve(std::uint32_t bits) const { return memo_[bits]; }

  // States of weight k in increasing bit order.
  std::vector<State> states_of_weight(int k) const;

  std::size_t size() const { return memo_.size(); }

 private:
  void fill(std::uint32_t bits, const ResolvedState& parent, int coordinate);

  ChordDiagram top_;
  int n_ = 0;
  std::vector<ResolvedState> memo_;
};

// Exhaustive edge check: for every edge u > v, surgery on D(u) reproduces
// D(v) and Phi(v) = Phi(u) + [merge].  For n above the exhaustive bound,
// additionally walks `samples` random descending chains (fixed seed) and
// compares merge counts with the memo.
bool phi_chain_independence_check(const CubeIndex& cube, int exhaustive_bound = 8,
                                  int samples = 200);

// Components of the state graph: circles as vertices, 0-chords as edges.
// Returns the component id of every circle and the number of components;
// sets has_cycle when some 0-chord closes a cycle.
struct StateGraph {
  std::vector<int> component;
  int count = 0;
  bool has_cycle = false;
};
StateGraph state_graph(const ChordDiagram& d);

}  // namespace almax
