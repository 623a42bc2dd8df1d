#include "almax/extreme.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "almax/algebra.hpp"
#include "almax/configs.hpp"

namespace almax {

bool Graph::adjacent(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges.begin(), edges.end(), std::pair<int, int>{a, b});
}

Graph Graph::normalized() const {
  Graph g;
  for (int i = 0; i < vertex_count(); ++i) g.vertices.push_back(i);
  auto pos = [&](int v) {
    return static_cast<int>(std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
  };
  for (auto [a, b] : edges) g.edges.emplace_back(pos(a), pos(b));
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::vector<std::vector<int>> Graph::components() const {
  std::map<int, std::vector<int>> adj;
  for (int v : vertices) adj[v];
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::set<int> seen;
  std::vector<std::vector<int>> out;
  for (int v : vertices) {
    if (seen.count(v)) continue;
    std::vector<int> comp, stack{v};
    seen.insert(v);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (int y : adj[x])
        if (seen.insert(y).second) stack.push_back(y);
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Graph Graph::induced(const std::vector<int>& keep) const {
  Graph g;
  g.vertices = keep;
  std::sort(g.vertices.begin(), g.vertices.end());
  for (auto [a, b] : edges)
    if (std::binary_search(g.vertices.begin(), g.vertices.end(), a) &&
        std::binary_search(g.vertices.begin(), g.vertices.end(), b))
      g.edges.emplace_back(a, b);
  return g;
}

Graph cycle_graph(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.vertices.push_back(i);
  for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
  if (n >= 3) g.edges.emplace_back(0, n - 1);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

Graph path_graph(int n) {
  Graph g;
  for (int i = 0; i <= n; ++i) g.vertices.push_back(i);
  for (int i = 0; i < n; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

namespace {

std::vector<int> degrees_of(const Graph& g) {
  std::vector<int> deg;
  for (int v : g.vertices)
    deg.push_back(static_cast<int>(std::count_if(g.edges.begin(), g.edges.end(),
                                                 [&](auto e) { return e.first == v || e.second == v; })));
  return deg;
}

}  // namespace

bool is_cycle(const Graph& g, int n) {
  if (n < 3 || g.vertex_count() != n || static_cast<int>(g.edges.size()) != n) return false;
  auto deg = degrees_of(g);
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; }) &&
         g.components().size() == 1;
}

bool is_path(const Graph& g, int n) {
  if (g.vertex_count() != n + 1 || static_cast<int>(g.edges.size()) != n) return false;
  if (g.components().size() != 1) return false;
  auto deg = degrees_of(g);
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d <= 2; });
}

Graph lando_graph(const ChordDiagram& d) {
  CyclicOrder order(d);
  Graph g;
  for (const auto& c : d.chords)
    if (order.is_mono(c)) g.vertices.push_back(c.index);
  for (std::size_t i = 0; i < d.chords.size(); ++i)
    for (std::size_t j = i + 1; j < d.chords.size(); ++j)
      if (order.alternate(d.chords[i], d.chords[j]))
        g.edges.emplace_back(d.chords[i].index, d.chords[j].index);
  std::sort(g.vertices.begin(), g.vertices.end());
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

SimplicialComplex independence_complex(const Graph& g, int max_vertices) {
  if (g.vertex_count() > max_vertices)
    throw ResourceLimit("independence complex: " + std::to_string(g.vertex_count()) +
                        " vertices exceeds the bound " + std::to_string(max_vertices));
  SimplicialComplex k;
  k.vertices = g.vertices;
  const int n = g.vertex_count();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [a, b] : g.edges) {
    int i = static_cast<int>(std::lower_bound(g.vertices.begin(), g.vertices.end(), a) - g.vertices.begin());
    int j = static_cast<int>(std::lower_bound(g.vertices.begin(), g.vertices.end(), b) - g.vertices.begin());
    adj[i][j] = adj[j][i] = 1;
  }
  std::vector<int> current;
  std::function<void(int)> grow = [&](int from) {
    std::vector<int> face;
    for (int i : current) face.push_back(g.vertices[i]);
    k.faces.insert(face);
    for (int v = from; v < n; ++v) {
      bool ok = std::none_of(current.begin(), current.end(), [&](int u) { return adj[u][v]; });
      if (!ok) continue;
      current.push_back(v);
      grow(v + 1);
      current.pop_back();
    }
  };
  grow(0);
  return k;
}

HomologyResult reduced_homology(const SimplicialComplex& k) {
  return homology(simplicial_chain_complex(k, true));
}

HomologyResult reference_homotopy(GraphFamily family, int n) {
  HomologyResult h;
  if (family == GraphFamily::cycle) {
    if (n < 3) throw std::invalid_argument("cycle graphs need n >= 3");
    if (n % 3 == 0) {
      h.set(n / 3 - 1, {2, {}});
    } else {
      int k = (n % 3 == 1) ? (n - 1) / 3 : (n + 1) / 3;
      h.set(k - 1, {1, {}});
    }
  } else {
    if (n < 0) throw std::invalid_argument("path graphs need n >= 0");
    if (n % 3 != 0) h.set(n / 3, {1, {}});
  }
  return h;
}

bool dual_subposet_check(const CubeIndex& cube, const SimplicialComplex& i) {
  std::set<std::uint32_t> from_faces;
  const std::uint32_t all = State::ones(cube.n()).bits();
  for (const auto& face : i.faces) {
    std::uint32_t zeros = 0;
    for (int chord : face) {
      int j = cube.coordinate_of(chord);
      if (j < 0) return false;
      zeros |= 1u << j;
    }
    from_faces.insert(all & ~zeros);
  }
  std::set<std::uint32_t> phi_zero;
  for (std::uint32_t u = 0; u < cube.size(); ++u)
    if (cube.resolve(u).phi == 0) phi_zero.insert(u);
  return from_faces == phi_zero;
}

HomologyResult extreme_from_independence(const HomologyResult& reduced_i_d, int n_plus) {
  HomologyResult out;
  for (const auto& [d, g] : reduced_i_d.groups) out.set(n_plus - d - 1, g);
  return out;
}

HomologyResult realization_homology(const GradedChainComplex& c) {
  return homology(c).shifted(-kRealizationShift);
}

}  // namespace almax
