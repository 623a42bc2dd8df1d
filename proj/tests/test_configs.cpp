#include "doctest.h"

#include <random>

#include "almax/configs.hpp"
#include "almax/ingest.hpp"
#include "support/braid.hpp"

using namespace almax;

namespace {

ChordDiagram cd(const char* text) { return parse_chord_diagram(text).diagram; }

void check_classifier(const ChordDiagram& top) {
  CubeIndex cube(top);
  for (std::uint32_t b = 0; b < cube.size(); ++b) {
    State u = cube.state(b);
    CAPTURE(u.str());
    CHECK(classify_phi_by_configs(cube, u) == bucket_of(cube.resolve(u).phi));
  }
}

}  // namespace

TEST_CASE("alternating pair on one circle") {
  auto d = cd("circle A: a1 b1 a2 b2\nchord 1: a1 a2\nchord 2: b1 b2\n");
  auto r = detect_configs(d);
  REQUIRE(r.alternating_pairs.size() == 1);
  CHECK(r.alternating_pairs[0] == std::pair<ChordIndex, ChordIndex>{0, 1});
  CHECK(has_alternating_pair(d));
  CHECK(!is_1_adequate(d));
  CHECK(phi_bucket_from_configs(d) == PhiBucket::one);
}

TEST_CASE("non-interleaved monochords do not alternate") {
  auto d = cd("circle A: a1 a2 b1 b2\nchord 1: a1 a2\nchord 2: b1 b2\n");
  auto r = detect_configs(d);
  CHECK(r.alternating_pairs.empty());
  CHECK(!has_alternating_pair(d));
  CHECK(phi_bucket_from_configs(d) == PhiBucket::zero);
  CHECK(r.freeness.size() == 2);
  CHECK(r.freeness[0].free);
}

TEST_CASE("alternating triple: two parallel bichords split by a monochord") {
  auto d = cd(
      "circle A: p c1 q c2\n"
      "circle B: p' q'\n"
      "chord 1: p p'\nchord 2: q q'\nchord 3: c1 c2\n");
  auto r = detect_configs(d);
  REQUIRE(r.alternating_triples.size() == 1);
  CHECK(r.alternating_triples[0] == std::array<ChordIndex, 3>{0, 1, 2});
  CHECK(r.equivalent_bichords.empty());
  CHECK(!r.freeness_of(2)->three_free);
  CHECK(!r.freeness_of(2)->b_free(0));
  CHECK(r.freeness_of(2)->two_free);
  CHECK(phi_bucket_from_configs(d) == PhiBucket::more);
  CHECK(recheck_witnesses(d, r).empty());

  auto e = cd(
      "circle A: p q c1 c2\n"
      "circle B: p' q'\n"
      "chord 1: p p'\nchord 2: q q'\nchord 3: c1 c2\n");
  auto s = detect_configs(e);
  CHECK(s.alternating_triples.empty());
  CHECK(s.equivalent_bichords.size() == 1);
  CHECK(phi_bucket_from_configs(e) == PhiBucket::one);
}

TEST_CASE("mixed alternating pair is an induced path of alternations") {
  // a alt b, b alt c, c alt d only.
  auto d = cd("circle A: a1 b1 a2 c1 b2 d1 c2 d2\n"
              "chord 1: a1 a2\nchord 2: b1 b2\nchord 3: c1 c2\nchord 4: d1 d2\n");
  auto r = detect_configs(d);
  CHECK(r.alternating_pairs.size() == 3);
  REQUIRE(r.mixed_alternating_pairs.size() == 1);
  CHECK(r.mixed_alternating_pairs[0] == std::array<ChordIndex, 4>{0, 1, 2, 3});
  CHECK(!r.disjoint_alternating_pairs);
  CHECK(recheck_witnesses(d, r).empty());
}

TEST_CASE("two non-parallel bichords and parallel classes") {
  auto d = cd("circle A: a1 b1\ncircle B: a2\ncircle C: b2\nchord 1: a1 a2\nchord 2: b1 b2\n");
  auto r = detect_configs(d);
  CHECK(r.parallel_classes.size() == 2);
  CHECK(r.non_parallel_bichords.has_value());
  CHECK(phi_bucket_from_configs(d) == PhiBucket::more);
}

TEST_CASE("nested 2-free monochords and half-disks") {
  auto d = cd("circle A: x1 x2 a1 y1 y2 a2\nchord 1: a1 a2\nchord 2: x1 x2\nchord 3: y1 y2\n");
  auto r = detect_configs(d);
  REQUIRE(r.nested_monochords.size() == 1);
  CHECK(r.nested_monochords[0][0] == 0);
  CHECK(recheck_witnesses(d, r).empty());

  auto two = cd("circle A: e1 p e2 f1 q f2\ncircle B: p' q'\n"
                "chord 1: e1 e2\nchord 2: f1 f2\nchord 3: p p'\nchord 4: q q'\n");
  auto s = detect_configs(two);
  CHECK(s.half_disks.at(0) == std::vector<ChordIndex>{2});
  CHECK(s.half_disks.at(1) == std::vector<ChordIndex>{3});
}

TEST_CASE("trefoil classification examples") {
  auto top = resolve_all_ones(parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]"));
  CHECK(is_1_adequate(top));
  CubeIndex cube(top);
  CHECK(classify_phi_by_configs(cube, State::ones(3)) == PhiBucket::zero);
  for (const auto& u : cube.states_of_weight(2))
    CHECK(classify_phi_by_configs(cube, u) == PhiBucket::one);
  CHECK(classify_phi_by_configs(cube, State::zeros(3)) == PhiBucket::more);
}

TEST_CASE("classifier agrees with surgery Phi on the corpus") {
  for (const auto& [name, pd] : testing::corpus()) {
    CAPTURE(name);
    check_classifier(resolve_all_ones(pd));
  }
}

TEST_CASE("classifier agrees with surgery Phi on random braid closures") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    int strands = 2 + trial % 3;
    int len = 3 + static_cast<int>(rng() % 8);
    std::vector<int> word;
    for (int i = 0; i < len; ++i) {
      int g = 1 + static_cast<int>(rng() % (strands - 1));
      word.push_back(rng() % 3 == 0 ? -g : g);
    }
    CAPTURE(trial);
    auto top = resolve_all_ones(testing::braid_closure(strands, word));
    check_classifier(top);
    auto r = detect_configs(top);
    CHECK(recheck_witnesses(top, r).empty());
  }
}

TEST_CASE("alternation is symmetric and parallelism is an equivalence") {
  auto top = resolve_all_ones(testing::braid_closure(4, {1, 2, -3, 2, 1, -2, 3, 2, -1}));
  CyclicOrder order(top);
  for (const auto& a : top.chords)
    for (const auto& b : top.chords) {
      CHECK(order.alternate(a, b) == order.alternate(b, a));
      CHECK(order.parallel(a, b) == order.parallel(b, a));
      for (const auto& c : top.chords)
        if (order.parallel(a, b) && order.parallel(b, c) && a.index != c.index)
          CHECK(order.parallel(a, c));
    }
  auto r = detect_configs(top);
  for (auto [a, b] : r.equivalent_bichords) CHECK(order.parallel(top.chord(a), top.chord(b)));
}
