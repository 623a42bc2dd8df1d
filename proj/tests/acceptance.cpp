// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "almax/algebra.hpp"
#include "almax/configs.hpp"
#include "almax/decomp.hpp"
#include "almax/extreme.hpp"
#include "almax/functors.hpp"
#include "almax/ingest.hpp"
#include "almax/oracle.hpp"
#include "support/braid.hpp"
#include "support/families.hpp"

using namespace almax;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

bool same_complex(const GradedChainComplex& a, const GradedChainComplex& b) {
  if (a.degrees() != b.degrees()) return false;
  for (int k : a.degrees())
    if (a.rank(k) != b.rank(k) || !(a.differential(k) == b.differential(k))) return false;
  return true;
}

std::vector<int> cycle_order(const Graph& g) {
  std::vector<int> order{g.vertices.front()};
  while (order.size() < g.vertices.size()) {
    int cur = order.back();
    for (int v : g.vertices)
      if (g.adjacent(cur, v) && std::find(order.begin(), order.end(), v) == order.end()) {
        order.push_back(v);
        break;
      }
  }
  return order;
}

HomologyResult free_sphere_wedge(int degree, int rank) {
  HomologyResult h;
  h.set(degree, HomologyGroup{rank, {}});
  return h;
}

Outcome oracle_agreement() {
  Outcome o;
  for (const auto& [name, pd] : testing::corpus()) {
    auto rep = almost_extreme_agreement(pd);
    if (!rep.agree) o.fail(name + ": " + rep.first_mismatch);
  }
  return o;
}

Outcome trefoil_torsion() {
  Outcome o;
  auto pd = testing::named("trefoil_right");
  auto rep = almost_extreme_agreement(pd);
  HomologyResult expected;
  expected.set(3, HomologyGroup{0, {2}});
  if (rep.j_almax != 7) o.fail("j_almax = " + std::to_string(rep.j_almax));
  if (rep.from_F != expected) o.fail("F gives " + rep.from_F.str());
  if (rep.from_M != expected) o.fail("M gives " + rep.from_M.str());
  return o;
}

Outcome gamma_iso() {
  Outcome o;
  for (const auto& [name, pd] : testing::corpus()) {
    CubeIndex cube(resolve_all_ones(pd));
    auto F = build_F(cube);
    auto M = build_M(cube);
    auto g = check_gamma(build_gamma(cube, F, M), F.complex(), M.complex());
    if (!g.ok()) o.fail(name + ": " + g.first_failure);
  }
  return o;
}

Outcome classifier() {
  Outcome o;
  long long states = 0;
  for (const auto& [name, pd] : testing::corpus()) {
    if (pd.size() > 12) continue;
    CubeIndex cube(resolve_all_ones(pd));
    for (std::uint32_t u = 0; u < cube.size(); ++u, ++states)
      if (classify_phi_by_configs(cube, cube.state(u)) != bucket_of(cube.resolve(u).phi))
        o.fail(name + " state " + cube.state(u).str());
  }
  if (o.pass) o.detail = std::to_string(states) + " states";
  return o;
}

Outcome extreme_theorem() {
  Outcome o;
  for (const auto& [name, pd] : testing::corpus()) {
    auto top = resolve_all_ones(pd);
    auto predicted = extreme_from_independence(reduced_homology(independence_complex(lando_graph(top))), pd.n_plus);
    auto kh = khovanov_homology(pd, oracle_j_max(pd));
    if (predicted != kh) o.fail(name + ": predicted " + predicted.str() + ", oracle " + kh.str());
  }
  return o;
}

Outcome reference_formulas() {
  Outcome o;
  for (int n = 0; n <= 15; ++n) {
    if (n >= 3 && reduced_homology(independence_complex(cycle_graph(n))) != reference_homotopy(GraphFamily::cycle, n))
      o.fail("C_" + std::to_string(n));
    if (reduced_homology(independence_complex(path_graph(n))) != reference_homotopy(GraphFamily::path, n))
      o.fail("L_" + std::to_string(n));
  }
  return o;
}

Outcome torus_lando() {
  Outcome o;
  for (int q = 3; q <= 5; ++q) {
    std::string tag = "T(3," + std::to_string(q) + ")";
    auto top = resolve_all_ones(testing::braid_closure(3, testing::repeat({1, 2}, q)));
    auto g = lando_graph(top);
    if (!is_cycle(g, 2 * q)) {
      o.fail(tag + " is not C_" + std::to_string(2 * q));
      continue;
    }
    auto order = cycle_order(g);
    auto one = smooth(top, order[0], 0);
    auto two = smooth(one, order[1], 0);
    auto three = smooth(two, order[2], 0);
    if (!is_path(lando_graph(one), 2 * q - 4)) o.fail(tag + " after one smoothing");
    if (!is_cycle(lando_graph(two), 2 * q - 2)) o.fail(tag + " after two smoothings");
    if (!is_path(lando_graph(three), 2 * q - 6)) o.fail(tag + " after three smoothings");
  }
  return o;
}

Outcome closed_forms() {
  Outcome o;
  std::ostringstream seen;
  for (int k = 2; k <= 4; ++k) {
    CubeIndex cube(testing::one_monochord_family(k));
    auto h = realization_homology(build_M_complex(cube));
    seen << "monochord k=" << k << ": " << h.str() << "; ";
    if (h != free_sphere_wedge(cube.n() - 3, k - 1)) o.fail("one-monochord k=" + std::to_string(k) + " gives " + h.str());
  }
  for (int n = 2; n <= 4; ++n) {
    int degree = n % 3 == 0 ? 8 * n / 3 - 1 : (n % 3 == 1 ? (8 * n + 1) / 3 - 1 : (8 * n + 2) / 3 - 2);
    int rank = n % 3 == 0 ? 2 : 1;
    CubeIndex cube(testing::disk_disk_family(n), CubeOptions{4, false});
    auto h = realization_homology(build_M_complex(cube, 4));
    seen << "disk-disk n=" << n << ": " << h.str() << "; ";
    if (h != free_sphere_wedge(degree, rank)) o.fail("disk-disk n=" + std::to_string(n) + " gives " + h.str());
  }
  if (o.pass) o.detail = seen.str();
  return o;
}

Outcome wedge_property() {
  Outcome o;
  int checked = 0;
  for (const auto& [name, pd] : testing::corpus()) {
    auto top = resolve_all_ones(pd);
    if (has_alternating_pair(top) || is_1_adequate(top)) continue;
    ++checked;
    CubeIndex cube(top);
    auto h = homology(build_M_complex(cube));
    if (!h.torsion_free()) o.fail(name + " has torsion " + h.str());
  }
  if (o.pass) o.detail = std::to_string(checked) + " diagrams";
  return o;
}

Outcome factorization() {
  Outcome o;
  for (const auto& [name, pd] : testing::corpus()) {
    auto top = resolve_all_ones(pd);
    CubeIndex cube(top);
    auto F = build_F(cube);
    auto M = build_M(cube);
    auto fF = factor_through_pointed(F);
    auto fM = factor_through_pointed(M);
    if (fF.factors() != is_1_adequate(top)) o.fail(name + ": F factorization disagrees with 1-adequacy");
    if (fM.factors() != !has_alternating_pair(top)) o.fail(name + ": M factorization disagrees with alternating pairs");
    if (fF.factors() && !same_complex(fF.data->chain_complex().shifted(1), F.complex()))
      o.fail(name + ": semi-simplicial complex of F differs");
    if (fM.factors() && !same_complex(fM.data->chain_complex().shifted(1), M.complex()))
      o.fail(name + ": semi-simplicial complex of M differs");
  }
  return o;
}

Outcome structural_sequences() {
  Outcome o;
  int sequences = 0;
  for (const auto& [name, pd] : testing::corpus()) {
    if (pd.size() > 10) continue;
    auto top = resolve_all_ones(pd);
    CubeIndex cube(top);
    auto cof = verify_cofibre_partition(cube);
    if (!cof.ok()) o.fail(name + " cofibre: " + cof.first_failure);
    for (auto a : top.chord_indices())
      for (auto kind : eligible_skeins(top, a)) {
        ++sequences;
        auto rep = verify_skein(cube, a, kind);
        if (!rep.ok()) o.fail(name + " " + to_string(kind) + " chord " + std::to_string(a + 1) + ": " + rep.first_failure);
      }
  }
  if (o.pass) o.detail = std::to_string(sequences) + " skein sequences";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle agreement at j_almax", oracle_agreement},
      {"trefoil torsion signature", trefoil_torsion},
      {"gamma isomorphism", gamma_iso},
      {"classifier equivalence", classifier},
      {"extreme-grading theorem", extreme_theorem},
      {"reference formulas for C_n and L_n", reference_formulas},
      {"T(3,q) Lando graphs", torus_lando},
      {"closed forms of the two families", closed_forms},
      {"torsion-free M without alternating pairs", wedge_property},
      {"factorization dichotomy", factorization},
      {"cofibre and skein exactness", structural_sequences},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].first;
    std::cout.precision(2);
    std::cout << std::fixed << " (" << secs << "s)";
    if (!o.detail.empty()) std::cout << "  " << o.detail;
    std::cout << '\n';
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
