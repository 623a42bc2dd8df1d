#include "almax/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "almax/algebra.hpp"

namespace almax {

std::pair<int, int> gradings(int weight, int circles, int plus_circles, int n_plus, int n_minus) {
  int h = weight - n_minus;
  int q = n_plus - 2 * n_minus + weight + plus_circles - (circles - plus_circles);
  return {h, q};
}

ArcResolution trace_state(const PDCode& pd, std::uint32_t u) {
  ArcResolution r;
  if (pd.size() == 0) {
    r.circles = 1;
    return r;
  }
  std::vector<int> labels;
  for (const auto& x : pd.crossings) labels.insert(labels.end(), x.begin(), x.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  auto id = [&](int a) {
    return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), a) - labels.begin());
  };
  std::vector<int> parent(labels.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto join = [&](int a, int b) { parent[find(id(a))] = find(id(b)); };
  for (int c = 0; c < pd.size(); ++c) {
    const auto& x = pd.crossings[c];
    if ((u >> c) & 1u) {
      join(x[0], x[1]);
      join(x[2], x[3]);
    } else {
      join(x[0], x[3]);
      join(x[1], x[2]);
    }
  }
  r.circle_of_arc.assign(labels.size(), -1);
  std::map<int, int> root_id;
  for (std::size_t a = 0; a < labels.size(); ++a) {
    int root = find(static_cast<int>(a));
    auto it = root_id.emplace(root, static_cast<int>(root_id.size())).first;
    r.circle_of_arc[a] = it->second;
  }
  r.circles = static_cast<int>(root_id.size());
  return r;
}

namespace {

struct Resolutions {
  std::vector<ArcResolution> states;
  std::vector<int> label_index;   // arc label -> dense arc index
  int max_label = 0;
};

Resolutions all_states(const PDCode& pd) {
  if (pd.size() > 24) throw std::length_error("oracle limited to 24 crossings");
  Resolutions r;
  const std::uint32_t count = 1u << pd.size();
  r.states.reserve(count);
  for (std::uint32_t u = 0; u < count; ++u) r.states.push_back(trace_state(pd, u));
  std::vector<int> labels;
  for (const auto& x : pd.crossings) labels.insert(labels.end(), x.begin(), x.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  r.max_label = labels.empty() ? 0 : labels.back();
  r.label_index.assign(r.max_label + 1, -1);
  for (std::size_t i = 0; i < labels.size(); ++i) r.label_index[labels[i]] = static_cast<int>(i);
  return r;
}

// Number of + circles needed for grading j at a state, or -1.
int plus_needed(const PDCode& pd, int weight, int circles, int j) {
  int twice = j - pd.n_plus + 2 * pd.n_minus - weight + circles;
  if (twice % 2 != 0) return -1;
  int p = twice / 2;
  return (p < 0 || p > circles) ? -1 : p;
}

std::vector<std::uint32_t> masks_with_popcount(int bits, int k) {
  std::vector<std::uint32_t> out;
  if (k < 0 || k > bits) return out;
  if (bits == 0) {
    out.push_back(0);
    return out;
  }
  // Gosper's hack in increasing order.
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  std::uint64_t m = (std::uint64_t{1} << k) - 1, limit = std::uint64_t{1} << bits;
  while (m < limit) {
    out.push_back(static_cast<std::uint32_t>(m));
    std::uint64_t c = m & (~m + 1), r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return out;
}

}  // namespace

int oracle_j_max(const PDCode& pd) {
  int top = trace_state(pd, pd.size() == 0 ? 0u : ((1u << pd.size()) - 1u)).circles;
  return pd.n_plus - 2 * pd.n_minus + pd.size() + top;
}

GradedChainComplex khovanov_complex(const PDCode& pd, int j) {
  const int n = pd.size();
  auto res = all_states(pd);
  const std::uint32_t count = 1u << n;

  // Generators of each state at grading j, sorted masks.
  std::vector<std::vector<std::uint32_t>> gens(count);
  std::vector<int> offset(count, 0);
  std::map<int, int> size_at;   // homological degree i -> rank
  for (std::uint32_t u = 0; u < count; ++u) {
    int w = __builtin_popcount(u);
    int p = plus_needed(pd, w, res.states[u].circles, j);
    gens[u] = masks_with_popcount(res.states[u].circles, p);
    int i = w - pd.n_minus;
    offset[u] = size_at[i];
    size_at[i] += static_cast<int>(gens[u].size());
  }

  GradedChainComplex c;
  for (const auto& [i, sz] : size_at) {
    if (!sz) continue;
    std::vector<std::string> labels;
    labels.reserve(sz);
    for (std::uint32_t u = 0; u < count; ++u) {
      if (__builtin_popcount(u) - pd.n_minus != i) continue;
      for (auto m : gens[u]) {
        std::string s(n, '0');
        for (int b = 0; b < n; ++b)
          if ((u >> b) & 1u) s[b] = '1';
        s += ":";
        for (int b = 0; b < res.states[u].circles; ++b) s += ((m >> b) & 1u) ? '+' : '-';
        labels.push_back(s);
      }
    }
    c.set_basis(-i, std::move(labels));
  }

  auto index_in = [&](std::uint32_t u, std::uint32_t mask) {
    const auto& g = gens[u];
    auto it = std::lower_bound(g.begin(), g.end(), mask);
    if (it == g.end() || *it != mask) return -1;
    return offset[u] + static_cast<int>(it - g.begin());
  };

  std::map<int, SparseMatrix> d;   // keyed by source chain degree -i
  for (const auto& [i, sz] : size_at) {
    if (!sz || !size_at.count(i + 1) || !size_at[i + 1]) continue;
    d.emplace(-i, SparseMatrix(size_at[i + 1], sz));
  }

  for (std::uint32_t u = 0; u < count; ++u) {
    if (gens[u].empty()) continue;
    const auto& ru = res.states[u];
    const int i = __builtin_popcount(u) - pd.n_minus;
    for (int cr = 0; cr < n; ++cr) {
      if ((u >> cr) & 1u) continue;
      const std::uint32_t v = u | (1u << cr);
      if (gens[v].empty()) continue;
      const auto& rv = res.states[v];
      const long long sign = (__builtin_popcount(u & ((1u << cr) - 1u)) % 2) ? -1 : 1;
      const auto& x = pd.crossings[cr];
      // Circle correspondence through arcs.
      std::vector<int> image(ru.circles, -1);
      for (std::size_t a = 0; a < ru.circle_of_arc.size(); ++a)
        image[ru.circle_of_arc[a]] = rv.circle_of_arc[a];
      auto arc_u = [&](int label) { return ru.circle_of_arc[res.label_index[label]]; };
      auto arc_v = [&](int label) { return rv.circle_of_arc[res.label_index[label]]; };
      SparseMatrix& m = d.at(-i);

      for (std::size_t g = 0; g < gens[u].size(); ++g) {
        const std::uint32_t mask = gens[u][g];
        const int col = offset[u] + static_cast<int>(g);
        // Base image mask for untouched circles.
        auto carry = [&](std::uint32_t skip_a, std::uint32_t skip_b) {
          std::uint32_t out = 0;
          for (int z = 0; z < ru.circles; ++z) {
            if (static_cast<std::uint32_t>(z) == skip_a || static_cast<std::uint32_t>(z) == skip_b)
              continue;
            if ((mask >> z) & 1u) out |= 1u << image[z];
          }
          return out;
        };
        if (rv.circles < ru.circles) {
          // Merge: m(++) = +, m(+-) = -, m(--) = 0.
          int z1 = arc_u(x[0]), z2 = arc_u(x[1]);
          int target = arc_v(x[0]);
          int pluses = ((mask >> z1) & 1u) + ((mask >> z2) & 1u);
          if (pluses == 0) continue;
          std::uint32_t out = carry(z1, z2);
          if (pluses == 2) out |= 1u << target;
          int row = index_in(v, out);
          if (row >= 0) m.add(row, col, sign);
        } else {
          // Split: Δ(+) = +- + -+, Δ(-) = --.
          int z = arc_u(x[0]);
          int t1 = arc_v(x[0]), t2 = arc_v(x[2]);
          std::uint32_t out = carry(z, z);
          if ((mask >> z) & 1u) {
            int r1 = index_in(v, out | (1u << t1));
            int r2 = index_in(v, out | (1u << t2));
            if (r1 >= 0) m.add(r1, col, sign);
            if (r2 >= 0) m.add(r2, col, sign);
          } else {
            int row = index_in(v, out);
            if (row >= 0) m.add(row, col, sign);
          }
        }
      }
    }
  }
  for (auto& [k, m] : d) c.set_differential(k, std::move(m));
  return c;
}

HomologyResult khovanov_homology(const PDCode& pd, int j) {
  auto h = homology(khovanov_complex(pd, j));
  HomologyResult out;
  for (const auto& [k, g] : h.groups) out.set(-k, g);
  return out;
}

std::map<int, HomologyResult> khovanov_homology_all(const PDCode& pd) {
  std::map<int, HomologyResult> out;
  int jmax = oracle_j_max(pd);
  int jmin = pd.n_plus - 2 * pd.n_minus - (pd.size() + 1) * 2 - 1;
  for (int j = jmax; j >= jmin; --j) {
    auto h = khovanov_homology(pd, j);
    if (!h.is_zero()) out[j] = std::move(h);
  }
  return out;
}

std::vector<int> generator_census(const PDCode& pd, int j) {
  const std::uint32_t count = 1u << pd.size();
  std::vector<int> out(count, 0);
  for (std::uint32_t u = 0; u < count; ++u) {
    int circles = trace_state(pd, u).circles;
    int p = plus_needed(pd, __builtin_popcount(u), circles, j);
    if (p < 0) continue;
    // binomial(circles, p)
    long long b = 1;
    for (int t = 0; t < p; ++t) b = b * (circles - t) / (t + 1);
    out[u] = static_cast<int>(b);
  }
  return out;
}

std::map<int, long long> kauffman_state_sum(const PDCode& pd) {
  // Polynomials as exponent -> coefficient maps.
  using Poly = std::map<int, long long>;
  auto mul = [](const Poly& a, const Poly& b) {
    Poly c;
    for (const auto& [ea, ca] : a)
      for (const auto& [eb, cb] : b) c[ea + eb] += ca * cb;
    for (auto it = c.begin(); it != c.end();)
      it = it->second == 0 ? c.erase(it) : std::next(it);
    return c;
  };
  const Poly loop{{1, 1}, {-1, 1}};
  Poly total;
  const std::uint32_t count = 1u << pd.size();
  for (std::uint32_t u = 0; u < count; ++u) {
    int w = __builtin_popcount(u);
    Poly term{{w, (w % 2) ? -1 : 1}};
    int circles = trace_state(pd, u).circles;
    for (int k = 0; k < circles; ++k) term = mul(term, loop);
    for (const auto& [e, c] : term) total[e] += c;
  }
  Poly out;
  long long s = (pd.n_minus % 2) ? -1 : 1;
  for (const auto& [e, c] : total)
    if (c) out[e + pd.n_plus - 2 * pd.n_minus] = s * c;
  return out;
}

}  // namespace almax
