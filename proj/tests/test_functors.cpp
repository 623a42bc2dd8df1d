#include "doctest.h"

#include <random>

#include "almax/algebra.hpp"
#include "almax/configs.hpp"
#include "almax/functors.hpp"
#include "almax/ingest.hpp"
#include "almax/oracle.hpp"
#include "support/braid.hpp"

using namespace almax;

namespace {

PDCode right_trefoil() { return parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]"); }

long long det3(const std::vector<std::vector<long long>>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

bool same_complex(const GradedChainComplex& a, const GradedChainComplex& b) {
  if (a.degrees() != b.degrees()) return false;
  for (int k : a.degrees()) {
    if (a.rank(k) != b.rank(k)) return false;
    if (!(a.differential(k) == b.differential(k))) return false;
  }
  return true;
}

std::vector<std::pair<std::string, PDCode>> random_braids(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<std::pair<std::string, PDCode>> out;
  for (int trial = 0; trial < count; ++trial) {
    int strands = 2 + trial % 3;
    int len = 3 + static_cast<int>(rng() % 7);
    std::vector<int> word;
    for (int i = 0; i < len; ++i) {
      int g = 1 + static_cast<int>(rng() % (strands - 1));
      word.push_back(rng() % 3 == 0 ? -g : g);
    }
    out.emplace_back("random" + std::to_string(trial), testing::braid_closure(strands, word));
  }
  return out;
}

}  // namespace

TEST_CASE("trefoil F complex") {
  CubeIndex cube(resolve_all_ones(right_trefoil()));
  auto c = build_F_complex(cube);
  CHECK(c.check().empty());
  CHECK(c.rank(3) == 3);
  CHECK(c.rank(2) == 3);
  CHECK(c.rank(1) == 0);
  auto d = c.differential(3).dense();
  CHECK((det3(d) == 2 || det3(d) == -2));
  auto h = cohomology(c);
  CHECK(h.at(3) == HomologyGroup{0, {2}});
  CHECK(h.at(2).is_zero());
}

TEST_CASE("differentials square to zero on the corpus") {
  for (const auto& [name, pd] : testing::corpus()) {
    CAPTURE(name);
    CubeIndex cube(resolve_all_ones(pd));
    CHECK(build_F_complex(cube).check().empty());
    CHECK(build_M_complex(cube).check().empty());
    CHECK(build_extreme_complex(cube).check().empty());
  }
}

TEST_CASE("parallel construction matches serial") {
  auto pd = testing::named("t3_4");
  CubeIndex cube(resolve_all_ones(pd));
  CHECK(same_complex(build_F_complex(cube, 1), build_F_complex(cube, 4)));
  CHECK(same_complex(build_M_complex(cube, 1), build_M_complex(cube, 4)));
}

TEST_CASE("F and M have equal ranks and gamma is an isomorphism") {
  auto cases = testing::corpus();
  for (auto& r : random_braids(25, 77)) cases.push_back({r.first, r.second});
  for (const auto& [name, pd] : cases) {
    CAPTURE(name);
    CubeIndex cube(resolve_all_ones(pd));
    auto F = build_F(cube);
    auto M = build_M(cube);
    for (std::uint32_t u = 0; u < cube.size(); ++u)
      CHECK(F.generators[u].size() == M.generators[u].size());
    auto g = build_gamma(cube, F, M);
    auto check = check_gamma(g, F.complex(), M.complex());
    CAPTURE(check.first_failure);
    CHECK(check.ok());
  }
}

TEST_CASE("functor cohomology matches the oracle at j_max - 2") {
  auto cases = testing::corpus();
  for (auto& r : random_braids(25, 91)) cases.push_back({r.first, r.second});
  for (const auto& [name, pd] : cases) {
    CAPTURE(name);
    auto rep = almost_extreme_agreement(pd);
    CAPTURE(rep.first_mismatch);
    CHECK(rep.census_ok);
    CHECK(rep.agree);
  }
}

TEST_CASE("extreme complex matches the oracle at j_max") {
  for (const auto& [name, pd] : testing::corpus()) {
    CAPTURE(name);
    CubeIndex cube(resolve_all_ones(pd));
    auto h = cohomology(build_extreme_complex(cube)).shifted(-pd.n_minus);
    CHECK(h == khovanov_homology(pd, oracle_j_max(pd)));
  }
}

TEST_CASE("factorization through pointed sets") {
  auto cases = testing::corpus();
  for (auto& r : random_braids(25, 5)) cases.push_back({r.first, r.second});
  for (const auto& [name, pd] : cases) {
    CAPTURE(name);
    auto top = resolve_all_ones(pd);
    CubeIndex cube(top);
    auto F = build_F(cube);
    auto M = build_M(cube);
    auto fF = factor_through_pointed(F);
    auto fM = factor_through_pointed(M);
    CHECK(fF.factors() == is_1_adequate(top));
    CHECK(fM.factors() == !has_alternating_pair(top));
    CHECK(fF.factors() != fF.witness.has_value());
    for (const auto* f : {&fF, &fM}) {
      if (!f->factors()) continue;
      const auto& cube_f = (f == &fF) ? F : M;
      CHECK(same_complex(f->data->chain_complex().shifted(1), cube_f.complex()));
    }
  }
}

TEST_CASE("e+ contains the distinguished circle and ladybug sizes") {
  auto pd = testing::named("figure_eight");
  CubeIndex cube(resolve_all_ones(pd));
  for (std::uint32_t u = 0; u < cube.size(); ++u) {
    const auto& r = cube.resolve(u);
    if (r.phi == 0) {
      auto circle_of = r.diagram->circle_of();
      auto plus = orient_edges(cube, u);
      for (std::size_t k = 0; k < r.zero_chords.size(); ++k) {
        int z = circle_of[r.diagram->chord(r.zero_chords[k]).ends[0]];
        CHECK(std::binary_search(plus[k].begin(), plus[k].end(), z));
      }
    } else if (r.phi == 1) {
      int l = ladybug_size(cube, u);
      CHECK((l == 1 || l == 2));
    }
  }
}
