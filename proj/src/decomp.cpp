#include "almax/decomp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "almax/configs.hpp"
#include "almax/parallel.hpp"

namespace almax {

std::string to_string(SubposetKind k) {
  switch (k) {
    case SubposetKind::X: return "X";
    case SubposetKind::Xe: return "X^e";
    case SubposetKind::Y: return "Y";
    default: return "Z^b";
  }
}

std::string to_string(SkeinKind k) {
  switch (k) {
    case SkeinKind::monochord: return "monochord";
    case SkeinKind::bichord: return "bichord";
    default: return "x-sequence";
  }
}

std::string Subposet::name() const {
  switch (kind) {
    case SubposetKind::Xe: return "X^e" + std::to_string(parameter + 1);
    case SubposetKind::Zb: return "Z^b" + std::to_string(parameter + 1);
    default: return to_string(kind);
  }
}

bool Subposet::contains(std::uint32_t u) const {
  return std::binary_search(members.begin(), members.end(), u);
}

std::vector<int> Subposet::profile() const {
  std::vector<int> p(n + 1, 0);
  for (auto u : members) ++p[__builtin_popcount(u)];
  return p;
}

namespace {

int sign_of(std::uint32_t u, int i) {
  return (__builtin_popcount(u & ((1u << i) - 1u)) % 2) ? -1 : 1;
}

// Coordinate pairs of D(1) whose chords alternate.
std::vector<std::pair<int, int>> alternating_coordinates(const ChordDiagram& top) {
  CyclicOrder order(top);
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < top.chord_count(); ++i)
    for (int j = i + 1; j < top.chord_count(); ++j)
      if (order.alternate(top.chords[i], top.chords[j])) out.emplace_back(i, j);
  return out;
}

std::pair<int, int> circle_pair(const ChordDiagram&, const std::vector<int>& circle_of,
                                const Chord& c) {
  int a = circle_of[c.ends[0]], b = circle_of[c.ends[1]];
  return {std::min(a, b), std::max(a, b)};
}

// Bichord classes of D(1) as coordinate lists, ordered by first member.
std::vector<std::vector<int>> bichord_classes(const ChordDiagram& top) {
  auto circle_of = top.circle_of();
  std::map<std::pair<int, int>, std::vector<int>> by_pair;
  for (int j = 0; j < top.chord_count(); ++j) {
    const Chord& c = top.chords[j];
    if (top.is_monochord(c, circle_of)) continue;
    by_pair[circle_pair(top, circle_of, c)].push_back(j);
  }
  std::vector<std::vector<int>> out;
  for (auto& [p, v] : by_pair) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

GradedChainComplex direct_sum(const std::vector<GradedChainComplex>& parts) {
  GradedChainComplex out;
  std::set<int> degrees;
  for (const auto& p : parts)
    for (int k : p.degrees()) degrees.insert(k);
  for (int k : degrees) {
    std::vector<std::string> basis;
    for (const auto& p : parts)
      for (const auto& l : p.basis(k)) basis.push_back(l);
    out.set_basis(k, std::move(basis));
  }
  for (int k : degrees) {
    if (!out.rank(k - 1)) continue;
    SparseMatrix m(out.rank(k - 1), out.rank(k));
    int row0 = 0, col0 = 0;
    for (const auto& p : parts) {
      auto d = p.differential(k);
      for (int c = 0; c < d.cols(); ++c)
        for (const auto& [r, v] : d.column(c)) m.add(row0 + r, col0 + c, v);
      row0 += p.rank(k - 1);
      col0 += p.rank(k);
    }
    out.set_differential(k, std::move(m));
  }
  return out;
}

// Rows and columns of c picked in the given order per degree.
GradedChainComplex extract(const GradedChainComplex& c, const std::map<int, std::vector<int>>& order) {
  GradedChainComplex out;
  for (const auto& [k, idx] : order) {
    if (idx.empty()) continue;
    std::vector<std::string> basis;
    for (int i : idx) basis.push_back(c.basis(k)[i]);
    out.set_basis(k, std::move(basis));
  }
  for (const auto& [k, cols] : order) {
    auto rit = order.find(k - 1);
    if (cols.empty() || rit == order.end() || rit->second.empty()) continue;
    const auto& rows = rit->second;
    std::map<int, int> row_pos;
    for (std::size_t i = 0; i < rows.size(); ++i) row_pos[rows[i]] = static_cast<int>(i);
    auto d = c.differential(k);
    SparseMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (const auto& [r, v] : d.column(cols[j])) {
        auto it = row_pos.find(r);
        if (it != row_pos.end()) m.add(it->second, static_cast<int>(j), v);
      }
    out.set_differential(k, std::move(m));
  }
  return out;
}

bool same_shape_and_maps(const GradedChainComplex& a, const GradedChainComplex& b) {
  if (a.degrees() != b.degrees()) return false;
  for (int k : a.degrees())
    if (a.rank(k) != b.rank(k) || !(a.differential(k) == b.differential(k))) return false;
  return true;
}

std::vector<LesReport> les_all_primes(const GradedChainComplex& c,
                                      const std::map<int, std::vector<char>>& mask) {
  std::vector<LesReport> out;
  for (auto p : kLesPrimes) out.push_back(les_exactness(c, mask, p));
  return out;
}

// Sub mask of a functor complex: generators at states satisfying pred.
template <class Pred>
std::map<int, std::vector<char>> state_mask(const FunctorCube& f, Pred pred) {
  std::map<int, std::vector<char>> mask;
  for (std::uint32_t u = 0; u < f.generators.size(); ++u)
    for (std::size_t g = 0; g < f.generators[u].size(); ++g)
      mask[__builtin_popcount(u)].push_back(pred(u) ? 1 : 0);
  return mask;
}

}  // namespace

Subposet build_subposet(const CubeIndex& cube, SubposetKind which, ChordIndex parameter) {
  const ChordDiagram& top = cube.top();
  auto circle_of = top.circle_of();
  Subposet s;
  s.kind = which;
  s.n = cube.n();
  std::function<bool(std::uint32_t)> keep;
  switch (which) {
    case SubposetKind::X:
      keep = [&](std::uint32_t u) { return cube.resolve(u).phi == 0; };
      break;
    case SubposetKind::Xe: {
      int j = cube.coordinate_of(parameter);
      if (j < 0 || !top.is_monochord(top.chords[j], circle_of))
        throw std::invalid_argument("X^e needs a monochord of D(1)");
      s.parameter = parameter;
      keep = [&cube, j](std::uint32_t u) { return cube.resolve(u).phi == 0 && !((u >> j) & 1u); };
      break;
    }
    case SubposetKind::Y: {
      auto pairs = alternating_coordinates(top);
      keep = [&cube, pairs](std::uint32_t u) {
        if (cube.resolve(u).phi != 1) return false;
        for (auto [i, j] : pairs)
          if (!((u >> i) & 1u) && !((u >> j) & 1u)) return true;
        return false;
      };
      break;
    }
    case SubposetKind::Zb: {
      int j = cube.coordinate_of(parameter);
      if (j < 0 || top.is_monochord(top.chords[j], circle_of))
        throw std::invalid_argument("Z^b needs a bichord of D(1)");
      std::uint32_t mask = 0;
      for (const auto& cls : bichord_classes(top))
        if (std::find(cls.begin(), cls.end(), j) != cls.end()) {
          for (int c : cls) {
            mask |= 1u << c;
            s.bichord_class.push_back(cube.chord_at(c));
          }
          s.parameter = cube.chord_at(cls.front());
        }
      keep = [&cube, mask](std::uint32_t u) {
        return cube.resolve(u).phi == 1 && (~u & mask) != 0;
      };
      break;
    }
  }
  for (std::uint32_t u = 0; u < cube.size(); ++u)
    if (keep(u)) s.members.push_back(u);
  return s;
}

std::vector<Subposet> all_subposets(const CubeIndex& cube) {
  const ChordDiagram& top = cube.top();
  auto circle_of = top.circle_of();
  std::vector<Subposet> out{build_subposet(cube, SubposetKind::X)};
  for (const auto& c : top.chords)
    if (top.is_monochord(c, circle_of)) out.push_back(build_subposet(cube, SubposetKind::Xe, c.index));
  out.push_back(build_subposet(cube, SubposetKind::Y));
  for (const auto& cls : bichord_classes(top))
    out.push_back(build_subposet(cube, SubposetKind::Zb, cube.chord_at(cls.front())));
  return out;
}

GradedChainComplex subposet_complex(const CubeIndex& cube, const Subposet& s) {
  (void)cube;
  GradedChainComplex c;
  std::map<int, std::vector<std::string>> labels;
  std::map<std::uint32_t, int> index;
  for (auto u : s.members) {
    int k = __builtin_popcount(u);
    index[u] = static_cast<int>(labels[k].size());
    labels[k].push_back(State(s.n, u).str());
  }
  for (auto& [k, l] : labels) c.set_basis(k, std::move(l));
  std::map<int, SparseMatrix> d;
  for (auto u : s.members) {
    const int k = __builtin_popcount(u);
    for (int i = 0; i < s.n; ++i) {
      if (!((u >> i) & 1u)) continue;
      std::uint32_t v = u & ~(1u << i);
      auto it = index.find(v);
      if (it == index.end()) continue;
      auto m = d.find(k);
      if (m == d.end()) m = d.emplace(k, SparseMatrix(c.rank(k - 1), c.rank(k))).first;
      m->second.add(it->second, index[u], sign_of(u, i));
    }
  }
  for (auto& [k, m] : d) c.set_differential(k, std::move(m));
  return c;
}

std::vector<int> component_top_circles(const CubeIndex& cube, std::uint32_t u) {
  const auto& r = cube.resolve(u);
  if (r.phi != 0 || !r.diagram) throw std::invalid_argument("component_top_circles needs Phi = 0");
  const ChordDiagram& top = cube.top();
  auto cu = r.diagram->circle_of();
  std::vector<int> out(r.component_count, -1);
  std::vector<int> free_top, free_u;
  for (int z = 0; z < top.circle_count(); ++z) {
    if (top.circles[z].endpoints.empty()) {
      free_top.push_back(z);
      continue;
    }
    out[r.component[cu[top.circles[z].endpoints.front()]]] = z;
  }
  for (int z = 0; z < r.circle_count; ++z)
    if (r.diagram->circles[z].endpoints.empty()) free_u.push_back(z);
  for (std::size_t i = 0; i < free_top.size() && i < free_u.size(); ++i)
    out[r.component[free_u[i]]] = free_top[i];
  return out;
}

bool CofibreReport::ok() const {
  bool les_ok = std::all_of(les.begin(), les.end(), [](const LesReport& r) { return r.ok(); });
  return partition && block_triangular && sub_matches && quotient_matches && les_ok;
}

CofibreReport verify_cofibre_partition(const CubeIndex& cube, int jobs) {
  CofibreReport rep;
  auto fail = [&](bool& flag, const std::string& what, std::optional<std::uint32_t> u = {}) {
    flag = false;
    if (rep.first_failure.empty()) {
      rep.first_failure = what;
      rep.witness_state = u;
    }
  };
  const ChordDiagram& top = cube.top();
  const int z1 = top.circle_count();
  auto M = build_M(cube, jobs);
  auto cm = M.complex();
  rep.total = homology(cm);
  auto off = M.offsets();
  auto subs = all_subposets(cube);

  rep.subposets.resize(subs.size());
  std::vector<GradedChainComplex> complexes(subs.size());
  parallel_for(subs.size(), jobs, [&](std::size_t i) {
    complexes[i] = subposet_complex(cube, subs[i]);
    rep.subposets[i] = {subs[i].name(), subs[i].profile(), homology(complexes[i])};
  });

  const Subposet& X = subs.front();
  std::map<ChordIndex, const Subposet*> xe;
  std::vector<const Subposet*> phi_one;
  for (const auto& s : subs) {
    if (s.kind == SubposetKind::Xe) xe[s.parameter] = &s;
    if (s.kind == SubposetKind::Y || s.kind == SubposetKind::Zb) phi_one.push_back(&s);
  }

  // (a) partition of the generators.
  std::size_t expected = X.members.size() * static_cast<std::size_t>(z1);
  for (const auto& s : subs)
    if (s.kind != SubposetKind::X) expected += s.members.size();
  std::size_t total = 0;
  std::vector<int> family(cube.size(), -1);   // index into phi_one
  for (std::uint32_t u = 0; u < cube.size(); ++u) {
    const auto& gens = M.generators[u];
    total += gens.size();
    if (gens.empty()) continue;
    const auto& r = cube.resolve(u);
    if (r.phi == 0) {
      if (!X.contains(u)) fail(rep.partition, "Phi = 0 state outside X", u);
      auto circles = component_top_circles(cube, u);
      std::vector<int> sorted = circles;
      std::sort(sorted.begin(), sorted.end());
      std::vector<int> want(z1);
      std::iota(want.begin(), want.end(), 0);
      if (sorted != want) fail(rep.partition, "components do not match the circles of D(1)", u);
      for (ChordIndex e : r.zero_chords) {
        auto it = xe.find(e);
        if (it == xe.end() || !it->second->contains(u))
          fail(rep.partition, "edge generator outside X^e", u);
      }
      for (const auto* s : phi_one)
        if (s->contains(u)) fail(rep.partition, "Phi = 0 state in " + s->name(), u);
    } else {
      int hits = 0;
      for (std::size_t i = 0; i < phi_one.size(); ++i)
        if (phi_one[i]->contains(u)) {
          ++hits;
          family[u] = static_cast<int>(i);
        }
      if (hits != 1) fail(rep.partition, "Phi = 1 state in " + std::to_string(hits) + " families", u);
    }
  }
  if (total != expected)
    fail(rep.partition, "generator count " + std::to_string(total) + " differs from family count " +
                            std::to_string(expected));

  // (b) the Phi = 1 part is closed and its families do not mix.
  for (const auto& e : M.edges) {
    if (cube.resolve(e.source).phi != 1) continue;
    if (cube.resolve(e.target).phi != 1)
      fail(rep.block_triangular, "Phi = 1 generator maps to Phi = 0", e.source);
    else if (family[e.source] != family[e.target])
      fail(rep.block_triangular, "differential mixes Y and Z^b families", e.source);
  }

  // (c) both parts against sums of subposet complexes.
  std::map<int, std::vector<int>> quotient_order, sub_order;
  std::vector<GradedChainComplex> quotient_parts, sub_parts;
  if (rep.partition) {
    for (int z = 0; z < z1; ++z) {
      for (auto u : X.members) {
        auto circles = component_top_circles(cube, u);
        int c = static_cast<int>(std::find(circles.begin(), circles.end(), z) - circles.begin());
        quotient_order[__builtin_popcount(u)].push_back(off[u] + c);
      }
      quotient_parts.push_back(complexes.front());
    }
    for (std::size_t i = 0; i < subs.size(); ++i) {
      const auto& s = subs[i];
      if (s.kind == SubposetKind::Xe) {
        for (auto u : s.members) {
          const auto& r = cube.resolve(u);
          auto pos = std::lower_bound(r.zero_chords.begin(), r.zero_chords.end(), s.parameter) -
                     r.zero_chords.begin();
          quotient_order[__builtin_popcount(u)].push_back(off[u] + r.component_count + static_cast<int>(pos));
        }
        quotient_parts.push_back(complexes[i]);
      } else if (s.kind != SubposetKind::X) {
        for (auto u : s.members) sub_order[__builtin_popcount(u)].push_back(off[u]);
        sub_parts.push_back(complexes[i]);
      }
    }
    if (!same_shape_and_maps(extract(cm, quotient_order), direct_sum(quotient_parts)))
      fail(rep.quotient_matches, "quotient differs from the sum of X complexes");
    if (!same_shape_and_maps(extract(cm, sub_order), direct_sum(sub_parts)))
      fail(rep.sub_matches, "Phi = 1 part differs from the sum of Y and Z^b complexes");
  }

  rep.les = les_all_primes(cm, state_mask(M, [&](std::uint32_t u) { return cube.resolve(u).phi == 1; }));
  for (const auto& l : rep.les)
    if (!l.ok() && rep.first_failure.empty())
      rep.first_failure = "F_" + std::to_string(l.prime) + ": " + l.first_failure;
  return rep;
}

ChordDiagram smooth(const ChordDiagram& d, ChordIndex c, int value) {
  if (value != 0 && value != 1) throw std::invalid_argument("smoothing value must be 0 or 1");
  if (d.find_chord(c) < 0) throw std::invalid_argument("no chord " + std::to_string(c + 1));
  ChordDiagram out = value == 0 ? surger(d, c) : d;
  int pos = out.find_chord(c);
  for (EndpointId e : out.chords[pos].ends) out.endpoints[e].side = Side::left;
  out.chords.erase(out.chords.begin() + pos);
  return out;
}

std::vector<SkeinKind> eligible_skeins(const ChordDiagram& top, ChordIndex a) {
  if (top.find_chord(a) < 0) return {};
  if (is_bichord(top, a)) return {SkeinKind::bichord};
  return {SkeinKind::monochord, SkeinKind::x_sequence};
}

FunctorCube cube_face(const FunctorCube& f, int coordinate, int value) {
  const std::uint32_t bit = 1u << coordinate;
  auto compress = [&](std::uint32_t u) {
    return (u & (bit - 1u)) | ((u >> (coordinate + 1)) << coordinate);
  };
  auto on_face = [&](std::uint32_t u) { return ((u & bit) != 0) == (value == 1); };
  FunctorCube g;
  g.kind = f.kind;
  g.n = f.n - 1;
  g.generators.resize(std::size_t{1} << g.n);
  for (std::uint32_t u = 0; u < f.generators.size(); ++u) {
    if (!on_face(u)) continue;
    auto& gens = g.generators[compress(u)];
    gens = f.generators[u];
    for (auto& l : gens) l.state = compress(u);
  }
  for (const auto& e : f.edges) {
    if (e.coordinate == coordinate || !on_face(e.source)) continue;
    EdgeBlock b = e;
    b.source = compress(e.source);
    b.target = compress(e.target);
    b.coordinate = e.coordinate - (e.coordinate > coordinate ? 1 : 0);
    b.sign = sign_of(b.source, b.coordinate);
    g.edges.push_back(std::move(b));
  }
  return g;
}

std::vector<std::vector<std::string>> generator_keys(const CubeIndex& cube, const FunctorCube& f) {
  std::vector<std::vector<std::string>> keys(f.generators.size());
  for (std::uint32_t u = 0; u < f.generators.size(); ++u) {
    if (f.generators[u].empty()) continue;
    const auto& r = cube.resolve(u);
    std::vector<std::string> circle_keys;
    if (r.diagram) {
      int free = 0;
      for (const auto& c : r.diagram->circles) {
        std::vector<EndpointId> ids = c.endpoints;
        std::sort(ids.begin(), ids.end());
        std::ostringstream os;
        if (ids.empty()) os << "free" << free++;
        for (auto id : ids) os << id << ',';
        circle_keys.push_back(os.str());
      }
    }
    for (const auto& g : f.generators[u]) {
      switch (g.kind) {
        case GeneratorLabel::Kind::circle: keys[u].push_back(circle_keys.at(g.id)); break;
        case GeneratorLabel::Kind::plus: keys[u].push_back("+"); break;
        case GeneratorLabel::Kind::edge: keys[u].push_back("e" + std::to_string(g.id)); break;
        case GeneratorLabel::Kind::component: {
          std::vector<std::string> parts;
          for (int z = 0; z < r.circle_count; ++z)
            if (r.component[z] == g.id) parts.push_back(circle_keys.at(z));
          std::sort(parts.begin(), parts.end());
          std::string key = "C";
          for (const auto& p : parts) key += "[" + p + "]";
          keys[u].push_back(key);
          break;
        }
      }
    }
  }
  return keys;
}

bool same_functor(const FunctorCube& a, const std::vector<std::vector<std::string>>& keys_a,
                  const FunctorCube& b, const std::vector<std::vector<std::string>>& keys_b,
                  std::string* why) {
  auto say = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (a.n != b.n) return say("cube dimensions differ");
  for (std::uint32_t u = 0; u < a.generators.size(); ++u) {
    auto ka = keys_a[u], kb = keys_b[u];
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    if (ka != kb) return say("generators differ at state " + State(a.n, u).str());
  }
  using Entry = std::tuple<std::uint32_t, std::uint32_t, std::string, std::string, long long>;
  auto entries = [](const FunctorCube& f, const std::vector<std::vector<std::string>>& keys) {
    std::vector<Entry> out;
    for (const auto& e : f.edges)
      for (const auto& [row, col, val] : e.entries)
        out.emplace_back(e.source, e.target, keys[e.source][col], keys[e.target][row], e.sign * val);
    std::sort(out.begin(), out.end());
    return out;
  };
  auto ea = entries(a, keys_a), eb = entries(b, keys_b);
  if (ea != eb) {
    for (std::size_t i = 0; i < std::min(ea.size(), eb.size()); ++i)
      if (ea[i] != eb[i])
        return say("edge entries differ from state " + State(a.n, std::get<0>(ea[i])).str());
    return say("edge entry counts differ");
  }
  return true;
}

bool SkeinReport::ok() const {
  bool les_ok = std::all_of(les.begin(), les.end(), [](const LesReport& r) { return r.ok(); });
  return embeds && quotient_matches && les_ok;
}

SkeinReport verify_skein(const CubeIndex& cube, ChordIndex a, SkeinKind kind, int jobs) {
  const ChordDiagram& top = cube.top();
  const int j = cube.coordinate_of(a);
  if (j < 0) throw std::invalid_argument("no chord " + std::to_string(a + 1));
  const bool mono = !is_bichord(top, a);
  if ((kind == SkeinKind::bichord) == mono)
    throw std::invalid_argument(to_string(kind) + " sequence does not apply to chord " +
                                std::to_string(a + 1));
  SkeinReport rep;
  rep.kind = kind;
  rep.chord = a;
  auto fail = [&](bool& flag, const std::string& what) {
    flag = false;
    if (rep.first_failure.empty()) rep.first_failure = what;
  };

  CubeIndex c0(smooth(top, a, 0), CubeOptions{jobs, false});
  CubeIndex c1(smooth(top, a, 1), CubeOptions{jobs, false});
  const bool uses_m = kind != SkeinKind::x_sequence;
  FunctorCube whole = uses_m ? build_M(cube, jobs) : build_extreme(cube);
  auto whole_keys = generator_keys(cube, whole);
  FunctorCube left = uses_m ? build_M(c1, jobs) : build_extreme(c1);
  FunctorCube middle = kind == SkeinKind::monochord ? build_M(c0, jobs) : build_extreme(c0);

  auto keyed_face = [&](const FunctorCube& f, const std::vector<std::vector<std::string>>& keys,
                        int value) {
    std::vector<std::vector<std::string>> out(std::size_t{1} << (f.n - 1));
    const std::uint32_t bit = 1u << j;
    for (std::uint32_t u = 0; u < keys.size(); ++u)
      if (((u & bit) != 0) == (value == 1))
        out[(u & (bit - 1u)) | ((u >> (j + 1)) << j)] = keys[u];
    return std::make_pair(cube_face(f, j, value), out);
  };

  std::string why;
  auto [top_face, top_face_keys] = keyed_face(whole, whole_keys, 1);
  if (!same_functor(top_face, top_face_keys, left, generator_keys(c1, left), &why))
    fail(rep.quotient_matches, "u_a = 1 part: " + why);

  if (kind == SkeinKind::monochord) {
    // M changes basis under the smoothing; compare through F, which does not.
    auto F = build_F(cube, jobs);
    auto [f0, f0_keys] = keyed_face(F, generator_keys(cube, F), 0);
    auto F0 = build_F(c0, jobs);
    if (!same_functor(f0, f0_keys, F0, generator_keys(c0, F0), &why))
      fail(rep.embeds, "u_a = 0 part of F: " + why);
    if (homology(cube_face(whole, j, 0).complex()) != homology(middle.complex()))
      fail(rep.embeds, "u_a = 0 part of M has different homology");
  } else {
    auto [bottom, bottom_keys] = keyed_face(whole, whole_keys, 0);
    if (!same_functor(bottom, bottom_keys, middle, generator_keys(c0, middle), &why))
      fail(rep.embeds, "u_a = 0 part: " + why);
  }

  auto total = whole.complex();
  rep.left = homology(left.complex());
  rep.middle = homology(middle.complex());
  rep.right = homology(total);
  rep.les = les_all_primes(total, state_mask(whole, [&](std::uint32_t u) { return !((u >> j) & 1u); }));
  for (const auto& l : rep.les)
    if (!l.ok() && rep.first_failure.empty())
      rep.first_failure = "F_" + std::to_string(l.prime) + ": " + l.first_failure;
  return rep;
}

Simplification simplify(const ChordDiagram& d) {
  Simplification s;
  s.reduced = d;
  for (;;) {
    auto r = detect_configs(s.reduced);
    if (!r.equivalent_bichords.empty()) {
      auto [a, b] = r.equivalent_bichords.front();
      s.moves.push_back({"equivalent-bichords", a, {b}});
      s.reduced = smooth(s.reduced, a, 1);
    } else if (!r.nested_monochords.empty()) {
      auto [a, c, e] = r.nested_monochords.front();
      s.moves.push_back({"nested-monochords", a, {c, e}});
      s.reduced = smooth(s.reduced, a, 1);
    } else {
      break;
    }
    ++s.suspensions;
  }
  return s;
}

}  // namespace almax
