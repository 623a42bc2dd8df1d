#include "doctest.h"

#include <random>

#include "almax/algebra.hpp"
#include "almax/configs.hpp"
#include "almax/decomp.hpp"
#include "almax/extreme.hpp"
#include "almax/functors.hpp"
#include "almax/ingest.hpp"
#include "support/braid.hpp"
#include "support/families.hpp"

using namespace almax;

namespace {

ChordDiagram cd(const char* text) { return parse_chord_diagram(text).diagram; }

HomologyResult m_homology(const ChordDiagram& top) {
  CubeIndex cube(top);
  return homology(build_M_complex(cube));
}

std::vector<std::pair<std::string, ChordDiagram>> small_diagrams() {
  std::vector<std::pair<std::string, ChordDiagram>> out;
  for (const auto& [name, pd] : testing::corpus())
    if (pd.size() <= 10) out.emplace_back(name, resolve_all_ones(pd));
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 12; ++trial) {
    int strands = 2 + trial % 3;
    int len = 3 + static_cast<int>(rng() % 5);
    std::vector<int> word;
    for (int i = 0; i < len; ++i) {
      int g = 1 + static_cast<int>(rng() % (strands - 1));
      word.push_back(rng() % 2 ? -g : g);
    }
    out.emplace_back("random" + std::to_string(trial),
                     resolve_all_ones(testing::braid_closure(strands, word)));
  }
  out.emplace_back("one_monochord_2", testing::one_monochord_family(2));
  out.emplace_back("one_monochord_3", testing::one_monochord_family(3));
  return out;
}

// Lando-graph vertices in cycle order, starting anywhere.
std::vector<int> cycle_order(const Graph& g) {
  std::vector<int> order{g.vertices.front()};
  int prev = -1;
  while (order.size() < g.vertices.size()) {
    int cur = order.back();
    for (int v : g.vertices)
      if (v != prev && v != cur && g.adjacent(cur, v) &&
          std::find(order.begin(), order.end(), v) == order.end()) {
        prev = cur;
        order.push_back(v);
        break;
      }
  }
  return order;
}

}  // namespace

TEST_CASE("smoothing chords of D(1)") {
  auto top = resolve_all_ones(testing::named("t3_4"));
  auto all_one = top;
  for (auto c : top.chord_indices()) all_one = smooth(all_one, c, 1);
  CHECK(all_one.chords.empty());
  CHECK(all_one.circle_count() == top.circle_count());
  CHECK(validate(all_one).empty());

  CHECK_THROWS_AS(smooth(top, 99, 0), std::invalid_argument);
  CHECK_THROWS_AS(smooth(top, 0, 2), std::invalid_argument);

  auto order = cycle_order(lando_graph(top));
  // Two chords that do not alternate.
  int a = order[0], b = order[2];
  REQUIRE(!lando_graph(top).adjacent(a, b));
  auto ab = smooth(smooth(top, a, 0), b, 0);
  auto ba = smooth(smooth(top, b, 0), a, 0);
  CHECK(ab.same_structure(ba));
  auto ab1 = smooth(smooth(top, a, 0), b, 1);
  auto ba1 = smooth(smooth(top, b, 1), a, 0);
  CHECK(ab1.same_structure(ba1));
}

TEST_CASE("Lando graphs of T(3,q) after smoothing monochords") {
  for (int q = 3; q <= 5; ++q) {
    CAPTURE(q);
    auto top = resolve_all_ones(testing::braid_closure(3, testing::repeat({1, 2}, q)));
    auto g = lando_graph(top);
    REQUIRE(is_cycle(g, 2 * q));
    auto order = cycle_order(g);
    auto one = smooth(top, order[0], 0);
    CHECK(is_path(lando_graph(one), 2 * q - 4));
    auto two = smooth(one, order[1], 0);
    CHECK(is_cycle(lando_graph(two), 2 * q - 2));
    auto three = smooth(two, order[2], 0);
    CHECK(is_path(lando_graph(three), 2 * q - 6));
  }
}

TEST_CASE("subposets of the trefoil") {
  auto top = resolve_all_ones(testing::named("trefoil_right"));
  CubeIndex cube(top);
  auto X = build_subposet(cube, SubposetKind::X);
  CHECK(X.members == std::vector<std::uint32_t>{7});
  CHECK(build_subposet(cube, SubposetKind::Y).members.empty());
  // D(1) is a triangle of three circles, one bichord per pair.
  auto Z = build_subposet(cube, SubposetKind::Zb, 0);
  CHECK(Z.members == std::vector<std::uint32_t>{6});
  CHECK(Z.bichord_class == std::vector<ChordIndex>{0});
  CHECK(all_subposets(cube).size() == 5);
  CHECK_THROWS_AS(build_subposet(cube, SubposetKind::Xe, 0), std::invalid_argument);

  auto cx = subposet_complex(cube, X);
  CHECK(homology(cx).at(3) == HomologyGroup{1, {}});
  CHECK(realization_homology(cx).at(2) == HomologyGroup{1, {}});

  auto rep = verify_cofibre_partition(cube);
  CAPTURE(rep.first_failure);
  CHECK(rep.ok());
  // Quotient = three copies of X.
  CHECK(rep.total.at(2) == HomologyGroup{0, {2}});
}

TEST_CASE("alternating-pair diagram has a nonempty Y") {
  auto d = cd("circle A: a1 b1 a2 b2\nchord 1: a1 a2\nchord 2: b1 b2\n");
  CubeIndex cube(d);
  auto Y = build_subposet(cube, SubposetKind::Y);
  CHECK(Y.members == std::vector<std::uint32_t>{0});
  CHECK(verify_cofibre_partition(cube).ok());

  auto chordless = cd("circle A: \n");
  CubeIndex empty(chordless);
  auto rep = verify_cofibre_partition(empty);
  CHECK(rep.ok());
  CHECK(build_subposet(empty, SubposetKind::X).members.size() == 1);
}

TEST_CASE("cofibre partition holds on small diagrams") {
  for (const auto& [name, top] : small_diagrams()) {
    CAPTURE(name);
    CubeIndex cube(top);
    auto rep = verify_cofibre_partition(cube, 2);
    CAPTURE(rep.first_failure);
    CHECK(rep.ok());
    CHECK(rep.les.size() == 3);
  }
}

TEST_CASE("Z^b of the one-monochord family is M-shaped") {
  for (int k = 2; k <= 3; ++k) {
    auto top = testing::one_monochord_family(k);
    CubeIndex cube(top);
    const int n = cube.n();
    for (int i = 1; i <= k; ++i) {
      auto Z = build_subposet(cube, SubposetKind::Zb, 2 * i - 1);
      auto p = Z.profile();
      CHECK(Z.members.size() == 5);
      CHECK(p[n - 1] == 2);
      CHECK(p[n - 2] == 3);
      auto h = realization_homology(subposet_complex(cube, Z));
      CHECK(h.at(n - 3) == HomologyGroup{1, {}});
      CHECK(h.groups.size() == 1);
    }
  }
}

TEST_CASE("skein sequences on small diagrams") {
  for (const auto& [name, top] : small_diagrams()) {
    CubeIndex cube(top);
    for (auto a : top.chord_indices())
      for (auto kind : eligible_skeins(top, a)) {
        CAPTURE(name);
        CAPTURE(a);
        CAPTURE(to_string(kind));
        auto rep = verify_skein(cube, a, kind);
        CAPTURE(rep.first_failure);
        CHECK(rep.ok());
      }
  }
  auto trefoil = resolve_all_ones(testing::named("trefoil_right"));
  CubeIndex cube(trefoil);
  CHECK_THROWS_AS(verify_skein(cube, 0, SkeinKind::monochord), std::invalid_argument);
  CHECK(eligible_skeins(trefoil, 0) == std::vector<SkeinKind>{SkeinKind::bichord});
}

TEST_CASE("simplification moves") {
  auto two = cd("circle A: p q\ncircle B: p' q'\nchord 1: p p'\nchord 2: q q'\n");
  auto s = simplify(two);
  CHECK(s.suspensions == 1);
  REQUIRE(s.moves.size() == 1);
  CHECK(s.moves[0].lemma == "equivalent-bichords");
  CHECK(s.reduced.chord_count() == 1);

  auto super_simple = testing::disk_disk_family(2);
  CHECK(simplify(super_simple).moves.empty());
  CHECK(simplify(cd("circle A: \ncircle B: \n")).moves.empty());

  auto nested = cd("circle A: x1 x2 a1 y1 y2 a2\nchord 1: a1 a2\nchord 2: x1 x2\nchord 3: y1 y2\n");
  auto n = simplify(nested);
  CHECK(n.moves.size() >= 1);
  CHECK(n.moves[0].lemma == "nested-monochords");
}

TEST_CASE("simplification preserves the homology of M up to suspension") {
  auto cases = small_diagrams();
  cases.emplace_back("nested", cd("circle A: x1 x2 a1 y1 y2 a2 p\ncircle B: p' q'\ncircle C: q\n"
                                  "chord 1: a1 a2\nchord 2: x1 x2\nchord 3: y1 y2\n"
                                  "chord 4: p p'\nchord 5: q q'\n"));
  cases.emplace_back("parallel", cd("circle A: e1 p q e2 r\ncircle B: q' p' r'\n"
                                    "chord 1: e1 e2\nchord 2: p p'\nchord 3: q q'\nchord 4: r r'\n"));
  int moved = 0;
  for (const auto& [name, top] : cases) {
    CAPTURE(name);
    auto s = simplify(top);
    moved += !s.moves.empty();
    CHECK(m_homology(top) == m_homology(s.reduced).shifted(s.suspensions));
  }
  CHECK(moved >= 2);
}

TEST_CASE("a 2-free monochord makes X, Y and the other X^e acyclic") {
  int checked = 0;
  for (const auto& [name, top] : small_diagrams()) {
    auto r = detect_configs(top);
    for (const auto& f : r.freeness) {
      if (!f.two_free) continue;
      CAPTURE(name);
      CAPTURE(f.chord);
      ++checked;
      CubeIndex cube(top);
      for (const auto& s : all_subposets(cube)) {
        bool claimed = s.kind == SubposetKind::X || s.kind == SubposetKind::Y ||
                       (s.kind == SubposetKind::Xe && s.parameter != f.chord);
        if (claimed) CHECK(homology(subposet_complex(cube, s)).is_zero());
      }
      break;
    }
  }
  CHECK(checked >= 3);
}

TEST_CASE("with two 2-free monochords M is the sum of the Z^b") {
  std::vector<ChordDiagram> cases{testing::disk_disk_family(2)};
  for (const auto& [name, top] : small_diagrams()) cases.push_back(top);
  int checked = 0;
  for (const auto& top : cases) {
    auto r = detect_configs(top);
    int free2 = 0;
    for (const auto& f : r.freeness) free2 += f.two_free;
    if (free2 < 2) continue;
    ++checked;
    CubeIndex cube(top);
    std::map<int, HomologyGroup> sum;
    for (const auto& s : all_subposets(cube)) {
      if (s.kind != SubposetKind::Zb) continue;
      for (const auto& [k, g] : homology(subposet_complex(cube, s)).groups) {
        auto& acc = sum[k];
        acc.betti += g.betti;
        acc.torsion.insert(acc.torsion.end(), g.torsion.begin(), g.torsion.end());
      }
    }
    auto h = homology(build_M_complex(cube));
    for (const auto& [k, g] : sum) CHECK(h.at(k).betti == g.betti);
    for (const auto& [k, g] : h.groups) CHECK(sum[k].betti == g.betti);
  }
  CHECK(checked >= 1);
}
