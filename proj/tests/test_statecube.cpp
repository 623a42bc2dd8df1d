#include "doctest.h"

#include "almax/ingest.hpp"
#include "almax/statecube.hpp"
#include "support/braid.hpp"
#include "support/trace.hpp"

using namespace almax;

namespace {

ChordDiagram cd(const char* text) { return parse_chord_diagram(text).diagram; }

ChordDiagram trefoil() {
  return resolve_all_ones(parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]"));
}

}  // namespace

TEST_CASE("smallest merging") {
  auto d = cd("circle A: a1\ncircle B: a2\nchord 1: a1 a2\n");
  auto s = surger(d, 0);
  CHECK(s.circle_count() == 1);
  CHECK(s.chords[0].label == 0);
  auto where = s.circle_of();
  CHECK(s.is_monochord(s.chords[0], where));
  CHECK(validate(s).empty());
  CHECK_THROWS_AS(surger(s, 0), std::invalid_argument);
}

TEST_CASE("smallest splitting turns the spectator into a bichord") {
  auto d = cd("circle A: a1 b1 a2 b2\nchord 1: a1 a2\nchord 2: b1 b2\n");
  auto s = surger(d, 0);
  REQUIRE(s.circle_count() == 2);
  auto where = s.circle_of();
  CHECK(!s.is_monochord(s.chord(1), where));
  CHECK(s.is_monochord(s.chord(0), where) == false);
  // (a1 b1) and (a2 b2)
  std::vector<std::string> first, second;
  for (EndpointId e : s.circles[0].endpoints) first.push_back(s.endpoints[e].name);
  for (EndpointId e : s.circles[1].endpoints) second.push_back(s.endpoints[e].name);
  CHECK(first == std::vector<std::string>{"a1", "b1"});
  CHECK(second == std::vector<std::string>{"a2", "b2"});
}

TEST_CASE("trefoil: two surgeries leave one circle") {
  auto d = trefoil();
  auto s = surger(surger(d, 0), 1);
  CHECK(s.circle_count() == 1);
  // 1 = 3 + 3 - 1 - 2*Phi  =>  Phi = 2
  CubeIndex cube(d);
  CHECK(cube.resolve(State(3, 0b100)).phi == 2);
}

TEST_CASE("Hopf link chord diagram") {
  auto d = cd("circle A: a1 a2\ncircle B: b1 b2\nchord 1: a1 b1\nchord 2: b2 a2\n");
  CubeIndex cube(d);
  CHECK(cube.resolve(State(2, 0b10)).phi == 1);   // u = (0,1)
  CHECK(cube.resolve(State(2, 0b00)).phi == 1);
  CHECK(cube.resolve(State(2, 0b00)).circle_count == 2);
  CHECK(phi_chain_independence_check(cube));
}

TEST_CASE("trefoil Phi values") {
  CubeIndex cube(trefoil());
  CHECK(cube.resolve(State::ones(3)).phi == 0);
  for (const auto& u : cube.states_of_weight(2)) CHECK(cube.resolve(u).phi == 1);
  for (int k = 0; k <= 1; ++k)
    for (const auto& u : cube.states_of_weight(k)) CHECK(cube.resolve(u).phi == 2);
  CHECK(phi_chain_independence_check(cube));
}

TEST_CASE("restricted keeps the chords where u is 0") {
  auto d = trefoil();
  CHECK(restricted(d, State::ones(3)).chord_count() == 0);
  CHECK(restricted(d, State::zeros(3)).chord_count() == 3);
  auto r = restricted(d, State(3, 0b110));   // u = (0,1,1)
  REQUIRE(r.chord_count() == 1);
  CHECK(r.chords[0].index == 0);
  CHECK(is_bichord(r, 0));
}

TEST_CASE("cube invariants against an independent circle count") {
  for (const auto& [name, pd] : testing::corpus()) {
    CAPTURE(name);
    CubeIndex cube(resolve_all_ones(pd));
    const int n = cube.n();
    CHECK(cube.size() == (std::size_t{1} << n));
    for (int k = 0; k <= n; ++k) {
      auto states = cube.states_of_weight(k);
      long long binom = 1;
      for (int i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
      CHECK(static_cast<long long>(states.size()) == binom);
    }
    const int top = cube.top_circles();
    for (std::uint32_t b = 0; b < cube.size(); ++b) {
      const auto& r = cube.resolve(b);
      int z = testing::circles_in_state(pd, b);
      CHECK(r.circle_count == z);
      CHECK((top + n - r.state.weight() - z) % 2 == 0);
      CHECK(r.phi == (top + n - r.state.weight() - z) / 2);
      if (r.phi == 0) {
        auto g = state_graph(*r.diagram);
        CHECK(!g.has_cycle);
        CHECK(r.component_count == top);
      }
      if (r.phi <= 1) {
        CHECK(r.component_count <= top);
        CHECK(r.component_count >= top - r.phi);
      }
      for (int i = 0; i < n; ++i)
        if (r.state[i]) {
          int d = cube.resolve(b & ~(1u << i)).circle_count - r.circle_count;
          CHECK((d == 1 || d == -1));
        }
    }
    CHECK(phi_chain_independence_check(cube));
  }
}

TEST_CASE("chain independence with random chains above the exhaustive bound") {
  auto d = resolve_all_ones(testing::braid_closure(3, testing::repeat({1, 2}, 4)));
  CubeIndex cube(d, {2, false});
  CHECK(phi_chain_independence_check(cube, 4, 300));
}

TEST_CASE("parallel construction matches serial construction") {
  auto d = resolve_all_ones(testing::braid_closure(3, {1, -2, 1, -2, 1, -2}));
  CubeIndex a(d, {1, true}), b(d, {4, true});
  for (std::uint32_t s = 0; s < a.size(); ++s) {
    CHECK(a.resolve(s).phi == b.resolve(s).phi);
    CHECK(same_resolution(*a.resolve(s).diagram, *b.resolve(s).diagram));
  }
}

TEST_CASE("surgery preserves endpoints and other chords") {
  auto d = resolve_all_ones(testing::braid_closure(3, testing::repeat({1, 2}, 3)));
  for (const auto& c : d.chords) {
    auto s = surger(d, c.index);
    CHECK(validate(s).empty());
    CHECK(s.endpoints.size() == d.endpoints.size());
    for (const auto& o : d.chords)
      if (o.index != c.index) CHECK(s.chord(o.index).label == 1);
  }
}
