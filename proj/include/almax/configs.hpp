// Chord configurations of a chord diagram, read off the cyclic endpoint
// order of each circle: alternating pairs and triples, mixed alternating
// pairs, parallel bichords and the freeness predicates used by the
// simplification moves.

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "almax/model.hpp"
#include "almax/statecube.hpp"

namespace almax {

// Position lookup for endpoints: circle and index within the circle.
class CyclicOrder {
 public:
  explicit CyclicOrder(const ChordDiagram& d);

  int circle(EndpointId e) const { return circle_[e]; }
  int position(EndpointId e) const { return position_[e]; }
  bool is_mono(const Chord& c) const { return circle_[c.ends[0]] == circle_[c.ends[1]]; }

  // Endpoints x and y (on the circle of monochord m, not endpoints of m)
  // lie on different arcs of the circle cut at m.
  bool separates(const Chord& m, EndpointId x, EndpointId y) const;
  // Point x lies strictly inside the arc of m running forward from
  // ends[0] to ends[1].
  bool on_forward_arc(const Chord& m, EndpointId x) const;

  // Two monochords on one circle whose endpoints interleave.
  bool alternate(const Chord& a, const Chord& b) const;

  // The two circles of a bichord, smaller first.
  std::pair<int, int> circles_of(const Chord& b) const;
  bool parallel(const Chord& a, const Chord& b) const;

  // Bichords a, b parallel and monochord c on one of their circles whose
  // endpoints separate the ends of a and b on that circle.
  bool alternating_triple(const Chord& a, const Chord& b, const Chord& c) const;

 private:
  std::vector<int> circle_;
  std::vector<int> position_;
  std::vector<int> length_;
};

struct MonochordFreeness {
  ChordIndex chord = 0;
  bool two_free = true;
  bool three_free = true;
  bool free = true;
  // Bichords b for which this monochord is not b-free.
  std::vector<ChordIndex> triple_bichords;
  bool b_free(ChordIndex b) const;
};

struct ConfigReport {
  std::vector<ChordIndex> monochords;
  std::vector<ChordIndex> bichords;
  std::vector<std::pair<ChordIndex, ChordIndex>> alternating_pairs;
  // (a, b, c): a < b parallel bichords, c the monochord.
  std::vector<std::array<ChordIndex, 3>> alternating_triples;
  // (a, b, c, d): the alternations among them are exactly ab, bc, cd.
  std::vector<std::array<ChordIndex, 4>> mixed_alternating_pairs;
  std::optional<std::pair<ChordIndex, ChordIndex>> non_parallel_bichords;
  std::optional<std::array<ChordIndex, 3>> alternating_pair_and_bichord;
  std::optional<std::array<ChordIndex, 4>> disjoint_alternating_pairs;
  std::vector<MonochordFreeness> freeness;
  // (a, c, d): 2-free monochord a with 2-free monochords c and d on the
  // two sides of a.
  std::vector<std::array<ChordIndex, 3>> nested_monochords;
  std::vector<std::vector<ChordIndex>> parallel_classes;
  std::vector<std::pair<ChordIndex, ChordIndex>> equivalent_bichords;
  // Half-disk of each monochord: the bichords with an endpoint on it.
  std::map<ChordIndex, std::vector<ChordIndex>> half_disks;

  bool has_bichord() const { return !bichords.empty(); }
  bool has_alternating_pair() const { return !alternating_pairs.empty(); }
  bool has_alternating_triple() const { return !alternating_triples.empty(); }
  bool has_mixed_alternating_pair() const { return !mixed_alternating_pairs.empty(); }
  const MonochordFreeness* freeness_of(ChordIndex c) const;
};

ConfigReport detect_configs(const ChordDiagram& d);

// Re-checks every witness of the report against its defining predicate.
std::vector<std::string> recheck_witnesses(const ChordDiagram& d, const ConfigReport& r);

enum class PhiBucket { zero, one, more };
std::string to_string(PhiBucket b);
inline PhiBucket bucket_of(int phi) {
  return phi == 0 ? PhiBucket::zero : (phi == 1 ? PhiBucket::one : PhiBucket::more);
}

// Bucket from the configurations present in a chord diagram (used on
// restricted(D(1), u)).
PhiBucket phi_bucket_from_configs(const ChordDiagram& d);
PhiBucket classify_phi_by_configs(const CubeIndex& cube, State u);

bool is_1_adequate(const ChordDiagram& d);
bool has_alternating_pair(const ChordDiagram& d);

}  // namespace almax
