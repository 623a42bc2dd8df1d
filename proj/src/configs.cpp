#include "almax/configs.hpp"

#include <algorithm>
#include <set>

namespace almax {

CyclicOrder::CyclicOrder(const ChordDiagram& d)
    : circle_(d.endpoints.size(), -1), position_(d.endpoints.size(), -1) {
  for (int z = 0; z < d.circle_count(); ++z) {
    const auto& eps = d.circles[z].endpoints;
    length_.push_back(static_cast<int>(eps.size()));
    for (int p = 0; p < static_cast<int>(eps.size()); ++p) {
      circle_[eps[p]] = z;
      position_[eps[p]] = p;
    }
  }
}

bool CyclicOrder::separates(const Chord& m, EndpointId x, EndpointId y) const {
  int lo = std::min(position_[m.ends[0]], position_[m.ends[1]]);
  int hi = std::max(position_[m.ends[0]], position_[m.ends[1]]);
  auto inside = [&](EndpointId e) { return lo < position_[e] && position_[e] < hi; };
  return inside(x) != inside(y);
}

bool CyclicOrder::on_forward_arc(const Chord& m, EndpointId x) const {
  const int len = length_[circle_[m.ends[0]]];
  int s = position_[m.ends[0]];
  int t = (position_[m.ends[1]] - s + len) % len;
  int p = (position_[x] - s + len) % len;
  return 0 < p && p < t;
}

bool CyclicOrder::alternate(const Chord& a, const Chord& b) const {
  if (a.index == b.index || !is_mono(a) || !is_mono(b)) return false;
  if (circle_[a.ends[0]] != circle_[b.ends[0]]) return false;
  return separates(a, b.ends[0], b.ends[1]);
}

std::pair<int, int> CyclicOrder::circles_of(const Chord& b) const {
  int x = circle_[b.ends[0]], y = circle_[b.ends[1]];
  return {std::min(x, y), std::max(x, y)};
}

bool CyclicOrder::parallel(const Chord& a, const Chord& b) const {
  return a.index != b.index && !is_mono(a) && !is_mono(b) && circles_of(a) == circles_of(b);
}

bool CyclicOrder::alternating_triple(const Chord& a, const Chord& b, const Chord& c) const {
  if (!parallel(a, b) || !is_mono(c)) return false;
  int z = circle_[c.ends[0]];
  auto end_on = [&](const Chord& x) {
    return circle_[x.ends[0]] == z ? x.ends[0] : (circle_[x.ends[1]] == z ? x.ends[1] : -1);
  };
  EndpointId ea = end_on(a), eb = end_on(b);
  if (ea < 0 || eb < 0) return false;
  return separates(c, ea, eb);
}

bool MonochordFreeness::b_free(ChordIndex b) const {
  return !std::binary_search(triple_bichords.begin(), triple_bichords.end(), b);
}

const MonochordFreeness* ConfigReport::freeness_of(ChordIndex c) const {
  for (const auto& f : freeness)
    if (f.chord == c) return &f;
  return nullptr;
}

namespace {

// Alternation graph on monochords as adjacency matrix over list positions.
struct Alternation {
  std::vector<const Chord*> mono;
  std::vector<std::vector<char>> adj;
};

Alternation alternation(const ChordDiagram& d, const CyclicOrder& order) {
  Alternation a;
  for (const auto& c : d.chords)
    if (order.is_mono(c)) a.mono.push_back(&c);
  const int m = static_cast<int>(a.mono.size());
  a.adj.assign(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      a.adj[i][j] = a.adj[j][i] = order.alternate(*a.mono[i], *a.mono[j]);
  return a;
}

// Induced path a-b-c-d on four distinct monochords.
bool induced_p4(const Alternation& g, int a, int b, int c, int d) {
  const auto& e = g.adj;
  return e[a][b] && e[b][c] && e[c][d] && !e[a][c] && !e[b][d] && !e[a][d];
}

// Two alternating pairs with no alternation between them.
bool induced_2k2(const Alternation& g, int a, int b, int c, int d) {
  const auto& e = g.adj;
  return e[a][b] && e[c][d] && !e[a][c] && !e[a][d] && !e[b][c] && !e[b][d];
}

}  // namespace

ConfigReport detect_configs(const ChordDiagram& d) {
  ConfigReport r;
  CyclicOrder order(d);
  auto g = alternation(d, order);
  const int m = static_cast<int>(g.mono.size());
  std::vector<const Chord*> bi;
  for (const auto& c : d.chords) {
    if (order.is_mono(c))
      r.monochords.push_back(c.index);
    else {
      r.bichords.push_back(c.index);
      bi.push_back(&c);
    }
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.adj[i][j]) r.alternating_pairs.push_back({g.mono[i]->index, g.mono[j]->index});

  // Parallel classes and non-parallel pairs.
  std::map<std::pair<int, int>, std::vector<ChordIndex>> classes;
  for (const Chord* b : bi) classes[order.circles_of(*b)].push_back(b->index);
  for (auto& [key, members] : classes) r.parallel_classes.push_back(members);
  if (r.parallel_classes.size() >= 2)
    r.non_parallel_bichords =
        std::pair{r.parallel_classes[0].front(), r.parallel_classes[1].front()};

  for (std::size_t i = 0; i < bi.size(); ++i)
    for (std::size_t j = i + 1; j < bi.size(); ++j) {
      if (!order.parallel(*bi[i], *bi[j])) continue;
      bool equivalent = true;
      for (const Chord* c : g.mono)
        if (order.alternating_triple(*bi[i], *bi[j], *c)) {
          r.alternating_triples.push_back({bi[i]->index, bi[j]->index, c->index});
          equivalent = false;
        }
      if (equivalent) r.equivalent_bichords.push_back({bi[i]->index, bi[j]->index});
    }
  std::sort(r.alternating_triples.begin(), r.alternating_triples.end());

  if (!r.alternating_pairs.empty() && !r.bichords.empty())
    r.alternating_pair_and_bichord = std::array<ChordIndex, 3>{
        r.alternating_pairs[0].first, r.alternating_pairs[0].second, r.bichords[0]};

  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int x = 0; x < m; ++x) {
          if (a == b || a == c || a == x || b == c || b == x || c == x) continue;
          // Each path is listed once, from its end with the smaller index.
          if (a < x && induced_p4(g, a, b, c, x))
            r.mixed_alternating_pairs.push_back(
                {g.mono[a]->index, g.mono[b]->index, g.mono[c]->index, g.mono[x]->index});
          if (!r.disjoint_alternating_pairs && a < b && c < x && a < c && induced_2k2(g, a, b, c, x))
            r.disjoint_alternating_pairs = std::array<ChordIndex, 4>{
                g.mono[a]->index, g.mono[b]->index, g.mono[c]->index, g.mono[x]->index};
        }
  std::sort(r.mixed_alternating_pairs.begin(), r.mixed_alternating_pairs.end());

  // Freeness.
  for (int i = 0; i < m; ++i) {
    MonochordFreeness f;
    f.chord = g.mono[i]->index;
    for (int j = 0; j < m; ++j)
      if (g.adj[i][j]) f.two_free = false;
    std::set<ChordIndex> with;
    for (const auto& t : r.alternating_triples)
      if (t[2] == f.chord) {
        with.insert(t[0]);
        with.insert(t[1]);
      }
    f.triple_bichords.assign(with.begin(), with.end());
    f.three_free = with.empty();
    f.free = f.two_free && f.three_free;
    r.freeness.push_back(f);
  }

  // Nested monochords: a 2-free monochord with 2-free monochords on both sides.
  for (int i = 0; i < m; ++i) {
    if (!r.freeness[i].two_free) continue;
    const Chord& a = *g.mono[i];
    int fwd = -1, bwd = -1;
    for (int j = 0; j < m; ++j) {
      if (j == i || !r.freeness[j].two_free) continue;
      const Chord& c = *g.mono[j];
      if (order.circle(c.ends[0]) != order.circle(a.ends[0])) continue;
      if (order.on_forward_arc(a, c.ends[0])) {
        if (fwd < 0) fwd = j;
      } else if (bwd < 0) {
        bwd = j;
      }
    }
    if (fwd >= 0 && bwd >= 0)
      r.nested_monochords.push_back({a.index, g.mono[fwd]->index, g.mono[bwd]->index});
  }

  // Half-disks.
  for (int i = 0; i < m; ++i) {
    const Chord& e = *g.mono[i];
    const int z = order.circle(e.ends[0]);
    std::array<int, 2> mono_ends{0, 0};
    std::array<std::set<ChordIndex>, 2> bichords_on;
    for (EndpointId x : d.circles[z].endpoints) {
      if (x == e.ends[0] || x == e.ends[1]) continue;
      int side = order.on_forward_arc(e, x) ? 0 : 1;
      int c = -1;
      for (const auto& ch : d.chords)
        if (ch.ends[0] == x || ch.ends[1] == x) c = ch.index;
      if (c < 0) continue;
      if (order.is_mono(d.chord(c)))
        ++mono_ends[side];
      else
        bichords_on[side].insert(c);
    }
    int pick;
    bool clean0 = mono_ends[0] == 0, clean1 = mono_ends[1] == 0;
    if (clean0 != clean1)
      pick = clean0 ? 0 : 1;
    else
      pick = bichords_on[1].size() < bichords_on[0].size() ? 1 : 0;
    r.half_disks[e.index].assign(bichords_on[pick].begin(), bichords_on[pick].end());
  }
  return r;
}

std::vector<std::string> recheck_witnesses(const ChordDiagram& d, const ConfigReport& r) {
  std::vector<std::string> bad;
  CyclicOrder order(d);
  auto chord = [&](ChordIndex i) -> const Chord* {
    int k = d.find_chord(i);
    return k < 0 ? nullptr : &d.chords[k];
  };
  auto alt = [&](ChordIndex a, ChordIndex b) {
    auto x = chord(a), y = chord(b);
    return x && y && order.alternate(*x, *y);
  };
  for (auto [a, b] : r.alternating_pairs)
    if (!alt(a, b) || !alt(b, a)) bad.push_back("alternating pair");
  for (auto t : r.alternating_triples) {
    auto a = chord(t[0]), b = chord(t[1]), c = chord(t[2]);
    if (!a || !b || !c || !order.alternating_triple(*a, *b, *c) ||
        !order.alternating_triple(*b, *a, *c))
      bad.push_back("alternating triple");
  }
  for (auto q : r.mixed_alternating_pairs) {
    if (!(alt(q[0], q[1]) && alt(q[1], q[2]) && alt(q[2], q[3]) && !alt(q[0], q[2]) &&
          !alt(q[1], q[3]) && !alt(q[0], q[3])))
      bad.push_back("mixed alternating pair");
  }
  if (r.non_parallel_bichords) {
    auto a = chord(r.non_parallel_bichords->first), b = chord(r.non_parallel_bichords->second);
    if (!a || !b || order.is_mono(*a) || order.is_mono(*b) || order.parallel(*a, *b))
      bad.push_back("non-parallel bichords");
  }
  if (r.disjoint_alternating_pairs) {
    auto q = *r.disjoint_alternating_pairs;
    if (!(alt(q[0], q[1]) && alt(q[2], q[3]) && !alt(q[0], q[2]) && !alt(q[0], q[3]) &&
          !alt(q[1], q[2]) && !alt(q[1], q[3])))
      bad.push_back("disjoint alternating pairs");
  }
  for (const auto& cls : r.parallel_classes)
    for (std::size_t i = 1; i < cls.size(); ++i)
      if (!order.parallel(*chord(cls[0]), *chord(cls[i]))) bad.push_back("parallel class");
  for (auto [a, b] : r.equivalent_bichords) {
    if (!order.parallel(*chord(a), *chord(b))) bad.push_back("equivalent bichords");
    for (ChordIndex c : r.monochords)
      if (order.alternating_triple(*chord(a), *chord(b), *chord(c)))
        bad.push_back("equivalent bichords");
  }
  for (auto t : r.nested_monochords) {
    auto a = chord(t[0]), c = chord(t[1]), e = chord(t[2]);
    if (!order.is_mono(*a) || order.on_forward_arc(*a, c->ends[0]) ==
                                  order.on_forward_arc(*a, e->ends[0]))
      bad.push_back("nested monochords");
    for (ChordIndex x : {t[0], t[1], t[2]}) {
      auto f = r.freeness_of(x);
      if (!f || !f->two_free) bad.push_back("nested monochords");
    }
  }
  return bad;
}

std::string to_string(PhiBucket b) {
  switch (b) {
    case PhiBucket::zero: return "zero";
    case PhiBucket::one: return "one";
    default: return "more";
  }
}

PhiBucket phi_bucket_from_configs(const ChordDiagram& d) {
  CyclicOrder order(d);
  auto g = alternation(d, order);
  const int m = static_cast<int>(g.mono.size());
  std::vector<const Chord*> bi;
  for (const auto& c : d.chords)
    if (!order.is_mono(c)) bi.push_back(&c);
  bool pair = false;
  for (int i = 0; i < m && !pair; ++i)
    for (int j = i + 1; j < m && !pair; ++j) pair = g.adj[i][j];
  if (bi.empty() && !pair) return PhiBucket::zero;

  for (std::size_t i = 1; i < bi.size(); ++i)
    if (!order.parallel(*bi[0], *bi[i])) return PhiBucket::more;
  if (pair && !bi.empty()) return PhiBucket::more;
  for (std::size_t i = 0; i < bi.size(); ++i)
    for (std::size_t j = i + 1; j < bi.size(); ++j)
      for (const Chord* c : g.mono)
        if (order.alternating_triple(*bi[i], *bi[j], *c)) return PhiBucket::more;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (b == a || !g.adj[a][b]) continue;
      for (int c = 0; c < m; ++c) {
        if (c == a || c == b) continue;
        for (int x = 0; x < m; ++x) {
          if (x == a || x == b || x == c) continue;
          if (induced_p4(g, a, b, c, x) || induced_2k2(g, a, b, c, x)) return PhiBucket::more;
        }
      }
    }
  return PhiBucket::one;
}

PhiBucket classify_phi_by_configs(const CubeIndex& cube, State u) {
  return phi_bucket_from_configs(restricted(cube.top(), u));
}

bool is_1_adequate(const ChordDiagram& d) {
  CyclicOrder order(d);
  for (const auto& c : d.chords)
    if (order.is_mono(c)) return false;
  return true;
}

bool has_alternating_pair(const ChordDiagram& d) {
  CyclicOrder order(d);
  for (std::size_t i = 0; i < d.chords.size(); ++i)
    for (std::size_t j = i + 1; j < d.chords.size(); ++j)
      if (order.alternate(d.chords[i], d.chords[j])) return true;
  return false;
}

}  // namespace almax
