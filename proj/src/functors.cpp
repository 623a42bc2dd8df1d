#include "almax/functors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "almax/parallel.hpp"

namespace almax {

std::string GeneratorLabel::str(int n) const {
  std::string s = State(n, state).str() + "/";
  switch (kind) {
    case Kind::circle: return s + "z" + std::to_string(id);
    case Kind::plus: return s + "+";
    case Kind::component: return s + "C" + std::to_string(id);
    case Kind::edge: return s + "e" + std::to_string(id + 1);
  }
  return s;
}

std::string to_string(FunctorKind k) {
  switch (k) {
    case FunctorKind::F: return "F";
    case FunctorKind::M: return "M";
    default: return "extreme";
  }
}

std::vector<int> FunctorCube::offsets() const {
  std::vector<int> off(generators.size(), 0);
  std::vector<int> running(n + 1, 0);
  for (std::uint32_t u = 0; u < generators.size(); ++u) {
    int k = __builtin_popcount(u);
    off[u] = running[k];
    running[k] += static_cast<int>(generators[u].size());
  }
  return off;
}

GradedChainComplex FunctorCube::complex() const {
  GradedChainComplex c;
  std::vector<std::vector<std::string>> labels(n + 1);
  for (std::uint32_t u = 0; u < generators.size(); ++u)
    for (const auto& g : generators[u]) labels[__builtin_popcount(u)].push_back(g.str(n));
  for (int k = 0; k <= n; ++k)
    if (!labels[k].empty()) c.set_basis(k, std::move(labels[k]));
  auto off = offsets();
  std::map<int, SparseMatrix> d;
  for (const auto& e : edges) {
    int k = __builtin_popcount(e.source);
    auto it = d.find(k);
    if (it == d.end()) it = d.emplace(k, SparseMatrix(c.rank(k - 1), c.rank(k))).first;
    for (const auto& [row, col, val] : e.entries)
      it->second.add(off[e.target] + static_cast<int>(row), off[e.source] + static_cast<int>(col),
                     e.sign * val);
  }
  for (auto& [k, m] : d) c.set_differential(k, std::move(m));
  return c;
}

namespace {

// Circles of G(u) adjacent through 0-chords, skipping one chord.
std::vector<int> component_without(const ChordDiagram& d, const std::vector<int>& circle_of,
                                   ChordIndex skip, int start) {
  const int z = d.circle_count();
  std::vector<std::vector<int>> adj(z);
  for (const auto& c : d.chords) {
    if (c.label != 0 || c.index == skip) continue;
    int a = circle_of[c.ends[0]], b = circle_of[c.ends[1]];
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(z, 0);
  std::vector<int> stack{start}, out;
  seen[start] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (int y : adj[x])
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Correspondence of circles across the surgery u > v along one chord.
struct EdgeGeometry {
  std::vector<std::vector<int>> image;   // u circle -> v circles
  std::vector<int> touched_u;            // O_i(u)
  std::vector<int> touched_v;            // O_i(v)
};

EdgeGeometry edge_geometry(const ChordDiagram& du, const ChordDiagram& dv, ChordIndex c) {
  EdgeGeometry g;
  auto cu = du.circle_of(), cv = dv.circle_of();
  const Chord& ch = du.chord(c);
  for (EndpointId e : ch.ends) {
    if (std::find(g.touched_u.begin(), g.touched_u.end(), cu[e]) == g.touched_u.end())
      g.touched_u.push_back(cu[e]);
    if (std::find(g.touched_v.begin(), g.touched_v.end(), cv[e]) == g.touched_v.end())
      g.touched_v.push_back(cv[e]);
  }
  std::sort(g.touched_u.begin(), g.touched_u.end());
  std::sort(g.touched_v.begin(), g.touched_v.end());
  std::vector<int> empty_u, empty_v;
  for (int z = 0; z < du.circle_count(); ++z)
    if (du.circles[z].endpoints.empty()) empty_u.push_back(z);
  for (int z = 0; z < dv.circle_count(); ++z)
    if (dv.circles[z].endpoints.empty()) empty_v.push_back(z);
  if (empty_u.size() != empty_v.size())
    throw std::logic_error("endpoint-free circles changed across a surgery");
  g.image.resize(du.circle_count());
  for (int z = 0; z < du.circle_count(); ++z) {
    if (std::binary_search(g.touched_u.begin(), g.touched_u.end(), z)) {
      g.image[z] = g.touched_v;
    } else if (du.circles[z].endpoints.empty()) {
      auto pos = std::find(empty_u.begin(), empty_u.end(), z) - empty_u.begin();
      g.image[z] = {empty_v[pos]};
    } else {
      g.image[z] = {cv[du.circles[z].endpoints.front()]};
    }
  }
  return g;
}

int sign_of(std::uint32_t u, int i) {
  return (__builtin_popcount(u & ((1u << i) - 1u)) % 2) ? -1 : 1;
}

template <class Gens, class Block>
FunctorCube assemble(const CubeIndex& cube, FunctorKind kind, int jobs, Gens gens, Block block) {
  FunctorCube f;
  f.kind = kind;
  f.n = cube.n();
  const std::size_t count = cube.size();
  f.generators.resize(count);
  for (std::uint32_t u = 0; u < count; ++u) f.generators[u] = gens(u);
  std::vector<std::vector<EdgeBlock>> per(count);
  parallel_for(count, jobs, [&](std::size_t idx) {
    auto u = static_cast<std::uint32_t>(idx);
    if (f.generators[u].empty()) return;
    for (int i = 0; i < f.n; ++i) {
      if (!((u >> i) & 1u)) continue;
      std::uint32_t v = u & ~(1u << i);
      if (f.generators[v].empty()) continue;
      EdgeBlock e;
      e.source = u;
      e.target = v;
      e.coordinate = i;
      e.sign = sign_of(u, i);
      block(u, v, i, e.entries);
      if (!e.entries.empty()) per[u].push_back(std::move(e));
    }
  });
  for (auto& p : per)
    for (auto& e : p) f.edges.push_back(std::move(e));
  return f;
}

}  // namespace

std::vector<int> e_plus(const ChordDiagram& d, const ResolvedState& r, ChordIndex e) {
  (void)r;
  auto circle_of = d.circle_of();
  const Chord& c = d.chord(e);
  return component_without(d, circle_of, e, circle_of[c.distinguished()]);
}

std::vector<std::vector<int>> orient_edges(const CubeIndex& cube, std::uint32_t u) {
  const auto& r = cube.resolve(u);
  if (r.phi != 0 || !r.diagram) throw std::invalid_argument("orient_edges needs a Phi = 0 state");
  std::vector<std::vector<int>> out;
  for (ChordIndex e : r.zero_chords) out.push_back(e_plus(*r.diagram, r, e));
  return out;
}

int ladybug_size(const CubeIndex& cube, std::uint32_t v) {
  const auto& r = cube.resolve(v);
  if (r.phi != 1) throw std::invalid_argument("ladybug set needs a Phi = 1 state");
  return r.component_count == cube.top_circles() ? 2 : 1;
}

FunctorCube build_F(const CubeIndex& cube, int jobs) {
  auto gens = [&](std::uint32_t u) {
    std::vector<GeneratorLabel> g;
    const auto& r = cube.resolve(u);
    if (r.phi == 0)
      for (int z = 0; z < r.circle_count; ++z)
        g.push_back({GeneratorLabel::Kind::circle, u, z});
    else if (r.phi == 1)
      g.push_back({GeneratorLabel::Kind::plus, u, 0});
    return g;
  };
  auto block = [&](std::uint32_t u, std::uint32_t v, int i, auto& entries) {
    const auto& ru = cube.resolve(u);
    const auto& rv = cube.resolve(v);
    if (ru.phi == 1) {
      entries.push_back({0, 0, 1});
      return;
    }
    auto geo = edge_geometry(*ru.diagram, *rv.diagram, cube.chord_at(i));
    if (rv.phi == 0) {
      for (int z = 0; z < ru.circle_count; ++z)
        for (int w : geo.image[z]) entries.push_back({w, z, 1});
    } else {
      for (int z : geo.touched_u) entries.push_back({0, z, 1});
    }
  };
  return assemble(cube, FunctorKind::F, jobs, gens, block);
}

FunctorCube build_M(const CubeIndex& cube, int jobs) {
  auto gens = [&](std::uint32_t u) {
    std::vector<GeneratorLabel> g;
    const auto& r = cube.resolve(u);
    if (r.phi == 0) {
      for (int c = 0; c < r.component_count; ++c)
        g.push_back({GeneratorLabel::Kind::component, u, c});
      for (ChordIndex e : r.zero_chords) g.push_back({GeneratorLabel::Kind::edge, u, e});
    } else if (r.phi == 1) {
      g.push_back({GeneratorLabel::Kind::plus, u, 0});
    }
    return g;
  };
  auto block = [&](std::uint32_t u, std::uint32_t v, int i, auto& entries) {
    const auto& ru = cube.resolve(u);
    const auto& rv = cube.resolve(v);
    if (ru.phi == 1) {
      entries.push_back({0, 0, 1});
      return;
    }
    const ChordDiagram& du = *ru.diagram;
    auto geo = edge_geometry(du, *rv.diagram, cube.chord_at(i));
    const int cu = ru.component_count;
    if (rv.phi == 0) {
      // Components map through any of their circles.
      std::vector<int> rep(cu, -1);
      for (int z = 0; z < ru.circle_count; ++z)
        if (rep[ru.component[z]] < 0) rep[ru.component[z]] = z;
      for (int c = 0; c < cu; ++c)
        entries.push_back({rv.component[geo.image[rep[c]].front()], c, 1});
      for (std::size_t k = 0; k < ru.zero_chords.size(); ++k) {
        auto it = std::lower_bound(rv.zero_chords.begin(), rv.zero_chords.end(), ru.zero_chords[k]);
        entries.push_back({rv.component_count + (it - rv.zero_chords.begin()),
                           cu + static_cast<long long>(k), 1});
      }
      return;
    }
    const int lv = rv.component_count == cube.top_circles() ? 2 : 1;
    std::vector<char> hit(cu, 0);
    for (int z : geo.touched_u) hit[ru.component[z]] = 1;
    for (int c = 0; c < cu; ++c)
      if (hit[c]) entries.push_back({0, c, lv});
    for (std::size_t k = 0; k < ru.zero_chords.size(); ++k) {
      auto plus = e_plus(du, ru, ru.zero_chords[k]);
      long long m = 0;
      for (int z : geo.touched_u) m += std::binary_search(plus.begin(), plus.end(), z);
      if (m) entries.push_back({0, cu + static_cast<long long>(k), m});
    }
  };
  return assemble(cube, FunctorKind::M, jobs, gens, block);
}

FunctorCube build_extreme(const CubeIndex& cube) {
  auto gens = [&](std::uint32_t u) {
    std::vector<GeneratorLabel> g;
    if (cube.resolve(u).phi == 0) g.push_back({GeneratorLabel::Kind::plus, u, 0});
    return g;
  };
  auto block = [&](std::uint32_t, std::uint32_t, int, auto& entries) {
    entries.push_back({0, 0, 1});
  };
  return assemble(cube, FunctorKind::extreme, 1, gens, block);
}

GradedChainComplex build_F_complex(const CubeIndex& cube, int jobs) {
  return build_F(cube, jobs).complex();
}
GradedChainComplex build_M_complex(const CubeIndex& cube, int jobs) {
  return build_M(cube, jobs).complex();
}
GradedChainComplex build_extreme_complex(const CubeIndex& cube) {
  return build_extreme(cube).complex();
}

GammaMaps build_gamma(const CubeIndex& cube, const FunctorCube& F, const FunctorCube& M) {
  if (F.generators.size() != M.generators.size())
    throw std::invalid_argument("gamma: functors on different cubes");
  GammaMaps g;
  auto offF = F.offsets(), offM = M.offsets();
  std::vector<int> rankF(F.n + 1, 0), rankM(M.n + 1, 0);
  for (std::uint32_t u = 0; u < F.generators.size(); ++u) {
    rankF[__builtin_popcount(u)] += static_cast<int>(F.generators[u].size());
    rankM[__builtin_popcount(u)] += static_cast<int>(M.generators[u].size());
  }
  for (int k = 0; k <= F.n; ++k) {
    if (rankF[k] != rankM[k]) throw std::logic_error("gamma: rank mismatch in degree " + std::to_string(k));
    if (!rankF[k]) continue;
    g.forward.emplace(k, SparseMatrix(rankF[k], rankM[k]));
    g.inverse.emplace(k, SparseMatrix(rankM[k], rankF[k]));
  }
  for (std::uint32_t u = 0; u < F.generators.size(); ++u) {
    if (F.generators[u].empty()) continue;
    const int k = __builtin_popcount(u);
    auto& fw = g.forward.at(k);
    auto& inv = g.inverse.at(k);
    const auto& r = cube.resolve(u);
    const int of = offF[u], om = offM[u];
    if (r.phi == 1) {
      fw.add(of, om, 1);
      inv.add(om, of, 1);
      continue;
    }
    const ChordDiagram& d = *r.diagram;
    auto circle_of = d.circle_of();
    const int cc = r.component_count;
    for (int z = 0; z < r.circle_count; ++z) fw.add(of + z, om + r.component[z], 1);
    std::vector<std::vector<int>> plus;
    for (std::size_t k2 = 0; k2 < r.zero_chords.size(); ++k2) {
      plus.push_back(e_plus(d, r, r.zero_chords[k2]));
      for (int z : plus.back()) fw.add(of + z, om + cc + static_cast<int>(k2), 1);
    }
    for (int z = 0; z < r.circle_count; ++z) {
      long long into = 0;
      for (std::size_t k2 = 0; k2 < r.zero_chords.size(); ++k2) {
        const Chord& e = d.chord(r.zero_chords[k2]);
        if (circle_of[e.ends[0]] != z && circle_of[e.ends[1]] != z) continue;
        bool in_plus = std::binary_search(plus[k2].begin(), plus[k2].end(), z);
        inv.add(om + cc + static_cast<int>(k2), of + z, in_plus ? 1 : -1);
        into += in_plus;
      }
      if (1 - into != 0) inv.add(om + r.component[z], of + z, 1 - into);
    }
  }
  return g;
}

GammaCheck check_gamma(const GammaMaps& g, const GradedChainComplex& F,
                       const GradedChainComplex& M) {
  GammaCheck out;
  auto fail = [&](bool& flag, const std::string& what) {
    flag = false;
    if (out.first_failure.empty()) out.first_failure = what;
  };
  auto fwd = [&](int k) {
    auto it = g.forward.find(k);
    return it == g.forward.end() ? SparseMatrix(F.rank(k), M.rank(k)) : it->second;
  };
  auto inv = [&](int k) {
    auto it = g.inverse.find(k);
    return it == g.inverse.end() ? SparseMatrix(M.rank(k), F.rank(k)) : it->second;
  };
  std::vector<int> degrees = F.degrees();
  for (int k : M.degrees()) degrees.push_back(k);
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  for (int k : degrees) {
    if (!(fwd(k - 1) * M.differential(k) == F.differential(k) * fwd(k)))
      fail(out.chain_map, "chain map fails in degree " + std::to_string(k));
    if (!(inv(k) * fwd(k) == SparseMatrix::identity(M.rank(k))))
      fail(out.left_inverse, "inverse fails on C(M) in degree " + std::to_string(k));
    if (!(fwd(k) * inv(k) == SparseMatrix::identity(F.rank(k))))
      fail(out.right_inverse, "inverse fails on C(F) in degree " + std::to_string(k));
  }
  return out;
}

GradedChainComplex SemiSimplicialData::chain_complex() const {
  GradedChainComplex c;
  for (const auto& [k, names] : simplices)
    if (!names.empty()) c.set_basis(k, names);
  for (const auto& [k, fs] : faces) {
    if (!c.rank(k) || !c.rank(k - 1)) continue;
    SparseMatrix m(c.rank(k - 1), c.rank(k));
    for (std::size_t s = 0; s < fs.size(); ++s)
      for (std::size_t p = 0; p < fs[s].size(); ++p)
        if (fs[s][p] >= 0) m.add(fs[s][p], static_cast<int>(s), (p % 2) ? -1 : 1);
    c.set_differential(k, std::move(m));
  }
  return c;
}

FactorizationResult factor_through_pointed(const FunctorCube& f) {
  FactorizationResult res;
  for (const auto& e : f.edges) {
    std::map<long long, int> hits;
    for (const auto& [row, col, val] : e.entries) {
      if (val != 1 || ++hits[col] > 1) {
        res.witness = e;
        return res;
      }
    }
  }
  SemiSimplicialData data;
  data.top_dimension = f.n - 1;
  auto off = f.offsets();
  for (std::uint32_t u = 0; u < f.generators.size(); ++u) {
    const int k = __builtin_popcount(u) - 1;
    auto& names = data.simplices[k];
    auto& fs = data.faces[k];
    for (const auto& g : f.generators[u]) {
      names.push_back(g.str(f.n));
      fs.emplace_back(k + 1, -1);
    }
  }
  for (const auto& e : f.edges) {
    const int k = __builtin_popcount(e.source) - 1;
    const int p = __builtin_popcount(e.source & ((1u << e.coordinate) - 1u));
    auto& fs = data.faces[k];
    for (const auto& [row, col, val] : e.entries)
      fs[off[e.source] + col][p] = off[e.target] + static_cast<int>(row);
  }
  res.data = std::move(data);
  return res;
}

}  // namespace almax
