#include "almax/statecube.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "almax/parallel.hpp"

namespace almax {

namespace {

std::vector<EndpointId> rotated_to(const std::vector<EndpointId>& cycle, EndpointId start) {
  auto it = std::find(cycle.begin(), cycle.end(), start);
  std::vector<EndpointId> out(it, cycle.end());
  out.insert(out.end(), cycle.begin(), it);
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

// Circle as (endpoint, side) pairs, minimized over rotations and reversal.
std::vector<std::pair<int, int>> canonical_circle(const ChordDiagram& d, const Circle& c) {
  std::vector<std::pair<int, int>> fwd, bwd;
  for (EndpointId e : c.endpoints) fwd.push_back({e, static_cast<int>(d.endpoints[e].side)});
  for (auto it = c.endpoints.rbegin(); it != c.endpoints.rend(); ++it)
    bwd.push_back({*it, 1 - static_cast<int>(d.endpoints[*it].side)});
  auto best = fwd;
  for (auto* seq : {&fwd, &bwd}) {
    for (std::size_t r = 0; r < seq->size(); ++r) {
      std::vector<std::pair<int, int>> rot(seq->begin() + static_cast<long>(r), seq->end());
      rot.insert(rot.end(), seq->begin(), seq->begin() + static_cast<long>(r));
      best = std::min(best, rot);
    }
  }
  return best;
}

}  // namespace

bool is_bichord(const ChordDiagram& d, ChordIndex i) {
  const Chord& c = d.chord(i);
  auto where = d.circle_of();
  return where[c.ends[0]] != where[c.ends[1]];
}

ChordDiagram surger(const ChordDiagram& d, ChordIndex i) {
  int pos = d.find_chord(i);
  if (pos < 0) throw std::invalid_argument("surgery along a missing chord");
  if (d.chords[pos].label != 1) throw std::invalid_argument("surgery along a 0-chord");
  ChordDiagram out = d;
  out.chords[pos].label = 0;
  const EndpointId p = d.chords[pos].ends[0], q = d.chords[pos].ends[1];
  auto where = d.circle_of();
  const int c1 = where[p], c2 = where[q];
  const Side s1 = d.endpoints[p].side, s2 = d.endpoints[q].side;

  if (c1 != c2) {
    // z1 = [p, A], z2 = [q, B]  ->  [p, A, q, B] or [p, A, q, rev B].
    auto z1 = rotated_to(d.circles[c1].endpoints, p);
    auto z2 = rotated_to(d.circles[c2].endpoints, q);
    std::vector<EndpointId> merged = z1;
    merged.push_back(q);
    if (s1 == s2) {
      merged.insert(merged.end(), z2.begin() + 1, z2.end());
    } else {
      for (auto it = z2.rbegin(); it + 1 != z2.rend(); ++it) {
        merged.push_back(*it);
        out.endpoints[*it].side = opposite(out.endpoints[*it].side);
      }
    }
    int lo = std::min(c1, c2), hi = std::max(c1, c2);
    out.circles[lo].endpoints = std::move(merged);
    out.circles.erase(out.circles.begin() + hi);
  } else {
    // z = [p, A, q, B]  ->  [p, A] and [q, B].
    auto z = rotated_to(d.circles[c1].endpoints, p);
    auto mid = std::find(z.begin(), z.end(), q);
    Circle first{d.circles[c1].name, std::vector<EndpointId>(z.begin(), mid)};
    Circle second{d.circles[c1].name + "'", std::vector<EndpointId>(mid, z.end())};
    out.circles[c1] = std::move(first);
    out.circles.insert(out.circles.begin() + c1 + 1, std::move(second));
  }
  out.endpoints[p].side = opposite(s1);
  out.endpoints[q].side = opposite(s1);
  return out;
}

ChordDiagram restricted(const ChordDiagram& top, State u) {
  ChordDiagram out = top;
  out.chords.clear();
  for (int j = 0; j < top.chord_count(); ++j)
    if (!u[j]) out.chords.push_back(top.chords[j]);
  return out;
}

bool same_resolution(const ChordDiagram& a, const ChordDiagram& b) {
  if (a.endpoints.size() != b.endpoints.size() || a.circles.size() != b.circles.size() ||
      a.chords.size() != b.chords.size())
    return false;
  for (std::size_t i = 0; i < a.chords.size(); ++i)
    if (a.chords[i].index != b.chords[i].index || a.chords[i].ends != b.chords[i].ends ||
        a.chords[i].label != b.chords[i].label)
      return false;
  std::vector<std::vector<std::pair<int, int>>> ca, cb;
  for (const auto& c : a.circles) ca.push_back(canonical_circle(a, c));
  for (const auto& c : b.circles) cb.push_back(canonical_circle(b, c));
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  return ca == cb;
}

StateGraph state_graph(const ChordDiagram& d) {
  StateGraph g;
  UnionFind uf(d.circle_count());
  auto where = d.circle_of();
  for (const auto& c : d.chords)
    if (c.label == 0 && !uf.unite(where[c.ends[0]], where[c.ends[1]])) g.has_cycle = true;
  g.component.assign(d.circle_count(), -1);
  for (int c = 0; c < d.circle_count(); ++c) {
    int r = uf.find(c);
    if (g.component[r] < 0) g.component[r] = g.count++;
    g.component[c] = g.component[r];
  }
  return g;
}

// ---------------------------------------------------------------------------
// CubeIndex
// ---------------------------------------------------------------------------

CubeIndex::CubeIndex(ChordDiagram top, CubeOptions options) : top_(std::move(top)) {
  n_ = top_.chord_count();
  if (n_ > 24) throw std::length_error("cube dimension above 24 is not supported");
  for (auto& c : top_.chords) c.label = 1;
  memo_.resize(std::size_t{1} << n_);

  const std::uint32_t all = State::ones(n_).bits();
  {
    ResolvedState& r = memo_[all];
    r.state = State(n_, all);
    r.diagram = std::make_shared<const ChordDiagram>(top_);
    r.circle_count = top_.circle_count();
    auto g = state_graph(top_);
    r.component = g.component;
    r.component_count = g.count;
    r.one_chords = top_.chord_indices();
  }

  std::vector<std::vector<std::uint32_t>> by_weight(n_ + 1);
  for (std::uint32_t b = 0; b <= all; ++b) {
    by_weight[__builtin_popcount(b)].push_back(b);
    if (b == all) break;
  }
  for (int k = n_ - 1; k >= 0; --k) {
    const auto& level = by_weight[k];
    parallel_for(level.size(), options.jobs, [&](std::size_t idx) {
      std::uint32_t b = level[idx];
      int j = __builtin_ctz(~b);   // lowest zero coordinate
      fill(b, memo_[b | (1u << j)], j);
    });
    if (!options.keep_all_diagrams)
      for (std::uint32_t b : by_weight[k + 1])
        if (memo_[b].phi > 1) memo_[b].diagram.reset();
  }
}

void CubeIndex::fill(std::uint32_t bits, const ResolvedState& parent, int coordinate) {
  ResolvedState& r = memo_[bits];
  r.state = State(n_, bits);
  const ChordDiagram& pd = *parent.diagram;
  const ChordIndex idx = chord_at(coordinate);
  auto d = std::make_shared<ChordDiagram>(surger(pd, idx));
  r.circle_count = d->circle_count();
  const bool merge = r.circle_count < parent.circle_count;
  r.phi = parent.phi + (merge ? 1 : 0);
  if (r.circle_count != top_circles() + n_ - r.state.weight() - 2 * r.phi)
    throw std::logic_error("circle-count identity violated at state " + r.state.str());
  for (int j = 0; j < n_; ++j)
    (r.state[j] ? r.one_chords : r.zero_chords).push_back(chord_at(j));
  if (r.phi <= 1) {
    auto g = state_graph(*d);
    r.component = std::move(g.component);
    r.component_count = g.count;
  }
  r.diagram = std::move(d);
}

std::vector<State> CubeIndex::states_of_weight(int k) const {
  std::vector<State> out;
  if (k < 0 || k > n_) return out;
  const std::uint32_t all = State::ones(n_).bits();
  for (std::uint32_t b = 0;; ++b) {
    if (__builtin_popcount(b) == k) out.push_back(State(n_, b));
    if (b == all) break;
  }
  return out;
}

bool phi_chain_independence_check(const CubeIndex& cube, int exhaustive_bound, int samples) {
  const int n = cube.n();
  const std::uint32_t all = State::ones(n).bits();
  for (std::uint32_t b = 0;; ++b) {
    const ResolvedState& u = cube.resolve(b);
    for (int i = 0; i < n; ++i) {
      if (!u.state[i]) continue;
      const ResolvedState& v = cube.resolve(b & ~(1u << i));
      int delta = v.circle_count - u.circle_count;
      if (delta != 1 && delta != -1) return false;
      if (v.phi != u.phi + (delta < 0 ? 1 : 0)) return false;
      if (u.diagram && v.diagram &&
          !same_resolution(surger(*u.diagram, cube.chord_at(i)), *v.diagram))
        return false;
    }
    if (b == all) break;
  }
  if (n <= exhaustive_bound) return true;

  std::mt19937 rng(12345);
  for (int s = 0; s < samples; ++s) {
    std::uint32_t target = rng() & all;
    std::vector<int> order;
    for (int j = 0; j < n; ++j)
      if (!((target >> j) & 1u)) order.push_back(j);
    std::shuffle(order.begin(), order.end(), rng);
    ChordDiagram d = cube.top();
    int merges = 0;
    for (int j : order) {
      int before = d.circle_count();
      d = surger(d, cube.chord_at(j));
      if (d.circle_count() < before) ++merges;
    }
    const ResolvedState& r = cube.resolve(target);
    if (r.phi != merges) return false;
    if (r.diagram && !same_resolution(d, *r.diagram)) return false;
  }
  return true;
}

}  // namespace almax
