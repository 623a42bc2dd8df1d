// almax: command-line front end.
//
// Exit codes: 0 success, 1 input error, 2 verification failure, 3 resource
// guard.  JSON goes to stdout, diagnostics to stderr.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "almax/algebra.hpp"
#include "almax/configs.hpp"
#include "almax/decomp.hpp"
#include "almax/extreme.hpp"
#include "almax/functors.hpp"
#include "almax/ingest.hpp"
#include "almax/oracle.hpp"
#include "almax/serialize.hpp"
#include "almax/statecube.hpp"

using namespace almax;
namespace fs = std::filesystem;

namespace {

enum Exit { kOk = 0, kInputError = 1, kVerifyFailed = 2, kGuard = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  std::string format = "json";
  int jobs = 1;
  int max_crossings = 14;
  int max_independence_vertices = kDefaultMaxIndependenceVertices;
};

// Signs default to all-positive when a chord diagram carries no writhe line.
struct Loaded {
  LinkInput in;
  int n = 0;

  int j_max() const { return in.n_plus - 2 * in.n_minus + n + in.top.circle_count(); }
};

Loaded load(const std::string& path, const Options& o) {
  if (!fs::is_regular_file(path)) throw InputError("cannot read " + path);
  Loaded l{load_input(path), 0};
  l.n = l.in.top.chord_count();
  if (auto bad = validate(l.in.top); !bad.empty()) throw InputError(path + ": " + bad.front());
  if (!l.in.has_signs) {
    l.in.n_plus = l.n;
    l.in.n_minus = 0;
  }
  if (l.n > o.max_crossings)
    throw ResourceLimit(path + " has " + std::to_string(l.n) + " crossings, above --max-crossings " +
                        std::to_string(o.max_crossings));
  return l;
}

Json header(const Loaded& l) {
  return Json{{"source", l.in.source},
              {"crossings", l.n},
              {"circles", l.in.top.circle_count()},
              {"signs_known", l.in.has_signs},
              {"n_plus", l.in.n_plus},
              {"n_minus", l.in.n_minus}};
}

void merge(Json& into, const Json& from) {
  for (auto it = from.begin(); it != from.end(); ++it) into[it.key()] = it.value();
}

void emit(const Options& o, const std::string& command, Json payload, const Json* table = nullptr) {
  if (o.format == "tsv") {
    if (table) {
      std::cout << bigraded_tsv(*table);
      return;
    }
    for (const auto& [k, v] : document(command, std::move(payload)).flatten().items())
      std::cout << k << '\t' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    return;
  }
  std::cout << document(command, std::move(payload)).dump(2) << '\n';
}

// ---------------------------------------------------------------------------

int cmd_classify(const Options& o) {
  auto l = load(o.file, o);
  auto r = detect_configs(l.in.top);
  Json out = header(l);
  out["one_adequate"] = is_1_adequate(l.in.top);
  out["alternating_pairs"] = r.has_alternating_pair();
  out["bichords"] = r.has_bichord();
  out["alternating_triples"] = r.has_alternating_triple();
  out["configs"] = to_json(r);
  emit(o, "classify", out);
  return kOk;
}

HomologyResult functor_kh(const Loaded& l, const CubeIndex& cube, FunctorKind kind, int jobs) {
  GradedChainComplex c = kind == FunctorKind::F   ? build_F_complex(cube, jobs)
                         : kind == FunctorKind::M ? build_M_complex(cube, jobs)
                                                  : build_extreme_complex(cube);
  return cohomology(c).shifted(-l.in.n_minus);
}

int cmd_homology(const Options& o, const std::string& grading, const std::string& functor) {
  auto l = load(o.file, o);
  Json out = header(l);
  const int jmax = l.j_max();
  int j = 0;
  if (grading == "almax") j = jmax - 2;
  else if (grading == "max") j = jmax;
  else if (grading.rfind("j=", 0) == 0) {
    try {
      j = std::stoi(grading.substr(2));
    } catch (const std::exception&) {
      throw InputError("bad grading " + grading);
    }
  } else {
    throw InputError("bad grading " + grading);
  }
  out["j"] = j;
  out["j_max"] = jmax;
  Json table;
  if (j == jmax || j == jmax - 2) {
    CubeIndex cube(l.in.top, CubeOptions{o.jobs, false});
    if (j == jmax) {
      out["grading"] = "max";
      table = bigraded_table(functor_kh(l, cube, FunctorKind::extreme, o.jobs), j);
      out["table"] = table;
    } else {
      out["grading"] = "almax";
      std::optional<HomologyResult> hf, hm;
      if (functor != "M") hf = functor_kh(l, cube, FunctorKind::F, o.jobs);
      if (functor != "F") hm = functor_kh(l, cube, FunctorKind::M, o.jobs);
      if (hf) out["F"] = bigraded_table(*hf, j);
      if (hm) out["M"] = bigraded_table(*hm, j);
      table = hf ? out["F"] : out["M"];
      if (hf && hm) {
        out["F_equals_M"] = *hf == *hm;
        if (*hf != *hm) {
          emit(o, "homology", out, &table);
          return kVerifyFailed;
        }
      }
    }
  } else {
    if (!l.in.pd) throw InputError("grading j=" + std::to_string(j) + " needs a PD code");
    out["grading"] = "oracle";
    table = bigraded_table(khovanov_homology(*l.in.pd, j), j);
    out["table"] = table;
  }
  emit(o, "homology", out, &table);
  return kOk;
}

int cmd_oracle(const Options& o, const std::string& jarg) {
  auto l = load(o.file, o);
  if (!l.in.pd) throw InputError("oracle needs a PD code");
  Json out = header(l);
  Json table = Json::array();
  if (jarg == "all") {
    for (const auto& [j, h] : khovanov_homology_all(*l.in.pd))
      for (auto& row : bigraded_table(h, j)) table.push_back(row);
  } else {
    int j = 0;
    try {
      j = std::stoi(jarg);
    } catch (const std::exception&) {
      throw InputError("bad --j " + jarg);
    }
    table = bigraded_table(khovanov_homology(*l.in.pd, j), j);
  }
  out["table"] = table;
  emit(o, "oracle", out, &table);
  return kOk;
}

int cmd_extreme(const Options& o) {
  auto l = load(o.file, o);
  Json out = header(l);
  auto g = lando_graph(l.in.top);
  out["lando_graph"] = to_json(g);
  auto ind = independence_complex(g, o.max_independence_vertices);
  auto reduced = reduced_homology(ind);
  out["independence_homology"] = to_json(reduced);
  Json family = nullptr;
  for (int m = 0; m <= g.vertex_count(); ++m) {
    if (m >= 3 && is_cycle(g, m)) family = {{"family", "cycle"}, {"n", m}, {"matches", reference_homotopy(GraphFamily::cycle, m) == reduced}};
    if (is_path(g, m)) family = {{"family", "path"}, {"n", m}, {"matches", reference_homotopy(GraphFamily::path, m) == reduced}};
  }
  out["reference"] = family;

  CubeIndex cube(l.in.top, CubeOptions{o.jobs, false});
  const int jmax = l.j_max();
  auto predicted = extreme_from_independence(reduced, l.in.n_plus);
  auto from_cube = functor_kh(l, cube, FunctorKind::extreme, o.jobs);
  out["predicted"] = bigraded_table(predicted, jmax);
  out["from_cube"] = bigraded_table(from_cube, jmax);
  out["realization"] = to_json(realization_homology(build_extreme_complex(cube)));
  out["dual_check"] = dual_subposet_check(cube, ind);
  bool ok = predicted == from_cube && out["dual_check"].get<bool>();
  out["ok"] = ok;
  emit(o, "extreme", out);
  return ok ? kOk : kVerifyFailed;
}

int cmd_decompose(const Options& o) {
  auto l = load(o.file, o);
  Json out = header(l);
  CubeIndex cube(l.in.top, CubeOptions{o.jobs, false});
  auto rep = verify_cofibre_partition(cube, o.jobs);
  out["cofibre"] = to_json(rep);
  out["realization"] = to_json(realization_homology(build_M_complex(cube, o.jobs)));
  emit(o, "decompose", out);
  return rep.ok() ? kOk : kVerifyFailed;
}

int cmd_skein(const Options& o, int chord, const std::string& kind) {
  auto l = load(o.file, o);
  const ChordIndex a = chord - 1;
  if (l.in.top.find_chord(a) < 0) throw InputError("no chord " + std::to_string(chord));
  std::vector<SkeinKind> kinds;
  if (kind.empty()) kinds = eligible_skeins(l.in.top, a);
  else if (kind == "monochord") kinds = {SkeinKind::monochord};
  else if (kind == "bichord") kinds = {SkeinKind::bichord};
  else if (kind == "x") kinds = {SkeinKind::x_sequence};
  else throw InputError("bad --kind " + kind);
  CubeIndex cube(l.in.top, CubeOptions{o.jobs, false});
  Json out = header(l);
  Json reports = Json::array();
  bool ok = true;
  for (auto k : kinds) {
    auto rep = verify_skein(cube, a, k, o.jobs);
    ok = ok && rep.ok();
    reports.push_back(to_json(rep));
  }
  out["sequences"] = reports;
  out["ok"] = ok;
  emit(o, "skein", out);
  return ok ? kOk : kVerifyFailed;
}

int cmd_simplify(const Options& o) {
  auto l = load(o.file, o);
  Json out = header(l);
  auto s = simplify(l.in.top);
  out["simplification"] = to_json(s);
  CubeIndex before(l.in.top, CubeOptions{o.jobs, false});
  CubeIndex after(s.reduced, CubeOptions{o.jobs, false});
  auto hb = homology(build_M_complex(before, o.jobs));
  auto ha = homology(build_M_complex(after, o.jobs)).shifted(s.suspensions);
  out["homology"] = to_json(hb);
  out["homology_matches"] = hb == ha;
  emit(o, "simplify", out);
  return hb == ha ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------------------

Json verify_one(const Loaded& l, const Options& o, bool* ok) {
  Json out = header(l);
  Json checks = Json::object();
  const auto& top = l.in.top;
  CubeIndex cube(top, CubeOptions{o.jobs, false});
  auto F = build_F(cube, o.jobs);
  auto M = build_M(cube, o.jobs);
  auto cF = F.complex(), cM = M.complex();
  checks["d_squared"] = cF.check().empty() && cM.check().empty() && build_extreme_complex(cube).check().empty();

  auto gamma = check_gamma(build_gamma(cube, F, M), cF, cM);
  checks["gamma"] = gamma.ok();

  bool classifier = true;
  for (std::uint32_t u = 0; u < cube.size() && classifier; ++u)
    classifier = classify_phi_by_configs(cube, cube.state(u)) == bucket_of(cube.resolve(u).phi);
  checks["classifier"] = classifier;

  checks["factorization"] = factor_through_pointed(F).factors() == is_1_adequate(top) &&
                            factor_through_pointed(M).factors() == !has_alternating_pair(top);

  if (l.in.pd) checks["oracle_agreement"] = almost_extreme_agreement(*l.in.pd, o.jobs).agree;

  checks["cofibre"] = verify_cofibre_partition(cube, o.jobs).ok();
  bool skein = true;
  for (auto a : top.chord_indices())
    for (auto k : eligible_skeins(top, a)) skein = skein && verify_skein(cube, a, k, o.jobs).ok();
  checks["skein"] = skein;

  for (const auto& [k, v] : checks.items()) *ok = *ok && v.get<bool>();
  out["checks"] = checks;
  return out;
}

int cmd_verify(const Options& o, const std::string& dir) {
  bool ok = true;
  if (dir.empty()) {
    auto l = load(o.file, o);
    Json out = verify_one(l, o, &ok);
    out["ok"] = ok;
    emit(o, "verify", out);
    return ok ? kOk : kVerifyFailed;
  }
  if (!fs::is_directory(dir)) throw InputError("not a directory: " + dir);
  std::vector<std::string> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file()) files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  Json results = Json::array();
  for (const auto& f : files) {
    auto l = load(f, o);
    bool one = true;
    results.push_back(verify_one(l, o, &one));
    results.back()["ok"] = one;
    if (!one) std::cerr << "verification failed: " << f << '\n';
    ok = ok && one;
  }
  Json out{{"files", results}, {"ok", ok}};
  emit(o, "verify", out);
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Almost-extreme Khovanov homology of link diagrams"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--max-crossings", o.max_crossings, "Refuse diagrams with more crossings");
  app.add_option("--max-independence-vertices", o.max_independence_vertices,
                 "Refuse Lando graphs with more vertices");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));

  auto file_arg = [&](CLI::App* sub) { sub->add_option("file", o.file, "PD code or chord diagram")->required(); };

  auto* classify = app.add_subcommand("classify", "Chord configurations of D(1)");
  file_arg(classify);

  std::string grading = "almax", functor = "both";
  auto* hom = app.add_subcommand("homology", "Khovanov homology at one quantum grading");
  hom->add_option("--grading", grading, "almax, max or j=<int>");
  hom->add_option("--functor", functor, "F, M or both")->check(CLI::IsMember({"F", "M", "both"}));
  file_arg(hom);

  auto* extreme = app.add_subcommand("extreme", "Lando graph and independence complex");
  file_arg(extreme);

  auto* decompose = app.add_subcommand("decompose", "Subposet homologies and the cofibre check");
  file_arg(decompose);

  int chord = 0;
  std::string kind;
  auto* skein = app.add_subcommand("skein", "Skein sequences along one chord");
  skein->add_option("--chord", chord, "Chord number (1-based)")->required();
  skein->add_option("--kind", kind, "monochord, bichord or x (default: every eligible one)");
  file_arg(skein);

  auto* simp = app.add_subcommand("simplify", "Remove equivalent bichords and nested monochords");
  file_arg(simp);

  std::string all_dir;
  auto* verify = app.add_subcommand("verify", "Run the property checks");
  verify->add_option("--all", all_dir, "Verify every file in a directory");
  verify->add_option("file", o.file, "PD code or chord diagram");

  std::string jarg;
  auto* oracle = app.add_subcommand("oracle", "Brute-force Khovanov homology");
  oracle->add_option("--j", jarg, "Quantum grading or 'all'")->required();
  file_arg(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*classify) return cmd_classify(o);
    if (*hom) return cmd_homology(o, grading, functor);
    if (*extreme) return cmd_extreme(o);
    if (*decompose) return cmd_decompose(o);
    if (*skein) return cmd_skein(o, chord, kind);
    if (*simp) return cmd_simplify(o);
    if (*verify) {
      if (all_dir.empty() && o.file.empty()) throw InputError("verify needs a file or --all");
      return cmd_verify(o, all_dir);
    }
    if (*oracle) return cmd_oracle(o, jarg);
  } catch (const ResourceLimit& e) {
    std::cerr << "resource guard: " << e.what() << '\n';
    return kGuard;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
