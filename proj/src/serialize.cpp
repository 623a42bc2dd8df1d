#include "almax/serialize.hpp"

#include <sstream>

namespace almax {

namespace {

int label(ChordIndex c) { return c + 1; }

Json labels(const std::vector<ChordIndex>& v) {
  Json out = Json::array();
  for (auto c : v) out.push_back(label(c));
  return out;
}

template <std::size_t N>
Json labels(const std::array<ChordIndex, N>& v) {
  return labels(std::vector<ChordIndex>(v.begin(), v.end()));
}

Json labels(const std::pair<ChordIndex, ChordIndex>& p) { return Json::array({label(p.first), label(p.second)}); }

}  // namespace

Json document(const std::string& command, Json payload) {
  Json out = std::move(payload);
  if (!out.is_object()) out = Json{{"result", out}};
  out["schema"] = kSchemaVersion;
  out["command"] = command;
  return out;
}

Json to_json(const HomologyGroup& g) { return Json{{"betti", g.betti}, {"torsion", g.torsion}}; }

Json to_json(const HomologyResult& h) {
  Json out = Json::array();
  for (const auto& [k, g] : h.groups) {
    Json e = to_json(g);
    e["degree"] = k;
    out.push_back(std::move(e));
  }
  return out;
}

Json bigraded_table(const HomologyResult& h, int j) {
  Json out = Json::array();
  for (const auto& [i, g] : h.groups) {
    Json e = to_json(g);
    e["i"] = i;
    e["j"] = j;
    out.push_back(std::move(e));
  }
  return out;
}

Json to_json(const GradedChainComplex& c) {
  Json degrees = Json::array();
  for (int k : c.degrees()) {
    auto d = c.differential(k);
    Json entries = Json::array();
    for (int col = 0; col < d.cols(); ++col)
      for (const auto& [row, v] : d.column(col)) entries.push_back({row, col, v});
    degrees.push_back({{"degree", k},
                       {"basis", c.basis(k)},
                       {"differential", {{"rows", d.rows()}, {"cols", d.cols()}, {"entries", entries}}}});
  }
  return Json{{"degrees", degrees}};
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [a, b] : g.edges) edges.push_back({label(a), label(b)});
  return Json{{"vertices", labels(g.vertices)}, {"edges", edges}};
}

Json to_json(const ChordDiagram& d) {
  Json circles = Json::array();
  for (const auto& c : d.circles) {
    Json pts = Json::array();
    for (auto e : c.endpoints) pts.push_back(d.endpoints[e].name);
    circles.push_back({{"name", c.name}, {"endpoints", pts}});
  }
  Json chords = Json::array();
  for (const auto& c : d.chords)
    chords.push_back({{"index", label(c.index)},
                      {"ends", {d.endpoints[c.ends[0]].name, d.endpoints[c.ends[1]].name}},
                      {"label", c.label}});
  return Json{{"circles", circles}, {"chords", chords}};
}

Json to_json(const ConfigReport& r) {
  Json freeness = Json::array();
  for (const auto& f : r.freeness)
    freeness.push_back({{"chord", label(f.chord)},
                        {"two_free", f.two_free},
                        {"three_free", f.three_free},
                        {"free", f.free},
                        {"not_b_free", labels(f.triple_bichords)}});
  auto list = [](const auto& v) {
    Json out = Json::array();
    for (const auto& w : v) out.push_back(labels(w));
    return out;
  };
  auto optional = [](const auto& o) { return o ? labels(*o) : Json(nullptr); };
  Json half = Json::object();
  for (const auto& [m, bs] : r.half_disks) half[std::to_string(label(m))] = labels(bs);
  return Json{{"monochords", labels(r.monochords)},
              {"bichords", labels(r.bichords)},
              {"has_bichord", r.has_bichord()},
              {"alternating_pairs", list(r.alternating_pairs)},
              {"alternating_triples", list(r.alternating_triples)},
              {"mixed_alternating_pairs", list(r.mixed_alternating_pairs)},
              {"non_parallel_bichords", optional(r.non_parallel_bichords)},
              {"alternating_pair_and_bichord", optional(r.alternating_pair_and_bichord)},
              {"disjoint_alternating_pairs", optional(r.disjoint_alternating_pairs)},
              {"freeness", freeness},
              {"nested_monochords", list(r.nested_monochords)},
              {"parallel_classes", list(r.parallel_classes)},
              {"equivalent_bichords", list(r.equivalent_bichords)},
              {"half_disks", half}};
}

Json to_json(const LesReport& r) {
  Json dims = Json::array();
  for (const auto& [k, d] : r.dims) dims.push_back({{"degree", k}, {"sub", d[0]}, {"total", d[1]}, {"quotient", d[2]}});
  return Json{{"prime", r.prime},
              {"subcomplex", r.subcomplex},
              {"exact", r.exact},
              {"first_failure", r.first_failure},
              {"betti", dims}};
}

Json to_json(const SubposetHomology& s) {
  return Json{{"name", s.name}, {"profile", s.profile}, {"homology", to_json(s.homology)}};
}

Json to_json(const CofibreReport& r) {
  Json les = Json::array(), subs = Json::array();
  for (const auto& l : r.les) les.push_back(to_json(l));
  for (const auto& s : r.subposets) subs.push_back(to_json(s));
  return Json{{"ok", r.ok()},
              {"partition", r.partition},
              {"block_triangular", r.block_triangular},
              {"sub_matches", r.sub_matches},
              {"quotient_matches", r.quotient_matches},
              {"les", les},
              {"first_failure", r.first_failure},
              {"witness_state", r.witness_state ? Json(*r.witness_state) : Json(nullptr)},
              {"subposets", subs},
              {"total", to_json(r.total)}};
}

Json to_json(const SkeinReport& r) {
  Json les = Json::array();
  for (const auto& l : r.les) les.push_back(to_json(l));
  return Json{{"ok", r.ok()},
              {"kind", to_string(r.kind)},
              {"chord", label(r.chord)},
              {"embeds", r.embeds},
              {"quotient_matches", r.quotient_matches},
              {"les", les},
              {"left", to_json(r.left)},
              {"middle", to_json(r.middle)},
              {"right", to_json(r.right)},
              {"first_failure", r.first_failure}};
}

Json to_json(const Simplification& s) {
  Json moves = Json::array();
  for (const auto& m : s.moves)
    moves.push_back({{"lemma", m.lemma}, {"chord", label(m.chord)}, {"witnesses", labels(m.witnesses)}});
  return Json{{"suspensions", s.suspensions}, {"moves", moves}, {"reduced", to_json(s.reduced)}};
}

Json to_json(const GammaCheck& g) {
  return Json{{"ok", g.ok()},
              {"chain_map", g.chain_map},
              {"left_inverse", g.left_inverse},
              {"right_inverse", g.right_inverse},
              {"first_failure", g.first_failure}};
}

Json to_json(const AgreementReport& r) {
  return Json{{"j", r.j_almax},
              {"agree", r.agree},
              {"census_ok", r.census_ok},
              {"first_mismatch", r.first_mismatch},
              {"oracle", bigraded_table(r.oracle, r.j_almax)},
              {"from_F", bigraded_table(r.from_F, r.j_almax)},
              {"from_M", bigraded_table(r.from_M, r.j_almax)}};
}

std::string bigraded_tsv(const Json& table) {
  std::ostringstream out;
  out << "i\tj\tbetti\ttorsion\n";
  for (const auto& row : table) {
    out << row["i"].get<int>() << '\t' << row["j"].get<int>() << '\t' << row["betti"].get<int>() << '\t';
    bool first = true;
    for (const auto& t : row["torsion"]) {
      out << (first ? "" : ",") << t.get<long long>();
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace almax
