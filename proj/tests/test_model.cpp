#include "doctest.h"

#include "almax/model.hpp"

using namespace almax;

namespace {

ChordDiagram one_circle_one_chord() {
  ChordDiagram d;
  d.endpoints = {{"p1", Side::left}, {"p2", Side::left}};
  d.circles = {{"A", {0, 1}}};
  d.chords = {{0, {0, 1}, 1}};
  return d;
}

}  // namespace

TEST_CASE("validate accepts the smallest legal diagram") {
  CHECK(validate(one_circle_one_chord()).empty());
}

TEST_CASE("validate flags a chord whose endpoint is missing") {
  auto d = one_circle_one_chord();
  d.endpoints.push_back({"p3", Side::left});
  d.chords[0].ends = {0, 2};
  auto v = validate(d);
  REQUIRE(!v.empty());
  CHECK(std::find(v.begin(), v.end(), "dangling endpoint") != v.end());
}

TEST_CASE("validate flags an endpoint on two circles") {
  auto d = one_circle_one_chord();
  d.circles.push_back({"B", {1}});
  auto v = validate(d);
  CHECK(std::find(v.begin(), v.end(), "endpoint multiplicity") != v.end());
}

TEST_CASE("validate flags degenerate and duplicate chords") {
  auto d = one_circle_one_chord();
  d.chords.push_back({0, {0, 1}, 1});
  auto v = validate(d);
  CHECK(std::find(v.begin(), v.end(), "duplicate or unsorted chord index") != v.end());
  d = one_circle_one_chord();
  d.chords[0].ends = {1, 1};
  v = validate(d);
  CHECK(std::find(v.begin(), v.end(), "degenerate chord") != v.end());
}

TEST_CASE("markers are endpoints without chords") {
  auto d = one_circle_one_chord();
  CHECK(d.markers().empty());
  d.chords.clear();
  CHECK(d.markers() == std::vector<EndpointId>{0, 1});
  CHECK(validate(d).empty());
}

TEST_CASE("state bit accessors") {
  State u(5, 0b10110);
  CHECK(u.weight() == 3);
  CHECK(u.str() == "01101");
  CHECK(u.ones_before(0) == 0);
  CHECK(u.ones_before(3) == 2);
  CHECK(u.ones_before(5) == 3);
  CHECK(u.with(0, true).bits() == 0b10111);
  CHECK(u.with(4, false).bits() == 0b00110);
  CHECK(State::ones(4).bits() == 0b1111);
  CHECK(State::ones(0).bits() == 0);
}

TEST_CASE("sparse matrix arithmetic agrees with dense arithmetic") {
  auto a = SparseMatrix::from_dense({{1, 2, 0}, {0, -1, 3}});
  auto b = SparseMatrix::from_dense({{1, 0}, {2, 1}, {0, 4}});
  auto p = (a * b).dense();
  CHECK(p == std::vector<std::vector<long long>>{{5, 2}, {-2, 11}});
  CHECK(a.transpose().dense() == std::vector<std::vector<long long>>{{1, 0}, {2, -1}, {0, 3}});
  CHECK((a - a).is_zero());
  CHECK(SparseMatrix::identity(3) * b == b);
  SparseMatrix m(2, 2);
  m.add(0, 1, 3);
  m.add(0, 1, -3);
  CHECK(m.nonzeros() == 0);
}

TEST_CASE("chain complex shape and square-zero checks") {
  GradedChainComplex c;
  c.set_basis(1, {"e"});
  c.set_basis(0, {"a", "b"});
  c.set_differential(1, SparseMatrix::from_dense({{1}, {-1}}));
  CHECK(c.check().empty());
  CHECK(c.degrees() == std::vector<int>{0, 1});
  CHECK(c.index_of(0, "b") == 1);
  CHECK(c.index_of(0, "z") == -1);
  CHECK_THROWS(c.set_differential(1, SparseMatrix(3, 1)));

  GradedChainComplex bad;
  bad.set_basis(2, {"x"});
  bad.set_basis(1, {"y"});
  bad.set_basis(0, {"z"});
  bad.set_differential(2, SparseMatrix::from_dense({{1}}));
  bad.set_differential(1, SparseMatrix::from_dense({{1}}));
  CHECK(!bad.check().empty());

  auto d = c.dual();
  CHECK(d.rank(0) == 2);
  CHECK(d.rank(-1) == 1);
  CHECK(d.differential(0).rows() == 1);
  CHECK(d.differential(0).cols() == 2);
  CHECK(c.shifted(3).rank(4) == 1);
}

TEST_CASE("simplicial complex checks downward closure") {
  SimplicialComplex k;
  k.vertices = {0, 1, 2};
  k.faces = {{}, {0}, {1}, {2}, {0, 1}};
  CHECK(k.check().empty());
  CHECK(k.dimension() == 1);
  k.faces.insert({0, 1, 2});
  CHECK(!k.check().empty());
  k.faces.erase(std::vector<int>{});
  auto v = k.check();
  CHECK(std::find(v.begin(), v.end(), "missing empty face") != v.end());
}

TEST_CASE("homology result drops zero groups") {
  HomologyResult h;
  h.set(2, {1, {}});
  h.set(3, {0, {}});
  h.set(1, {0, {2}});
  CHECK(h.groups.size() == 2);
  CHECK(!h.torsion_free());
  CHECK(h.euler_characteristic() == 1);
  CHECK(h.shifted(-1).at(1).betti == 1);
  CHECK(h.str() == "H1=Z/2, H2=Z");
}
