#include <sstream>

#include "almax/algebra.hpp"
#include "almax/functors.hpp"
#include "almax/ingest.hpp"
#include "almax/oracle.hpp"
#include "almax/statecube.hpp"

namespace almax {

namespace {

std::string describe(const HomologyResult& h) { return h.str(); }

}  // namespace

AgreementReport almost_extreme_agreement(const PDCode& pd, int jobs) {
  AgreementReport rep;
  rep.j_almax = oracle_j_max(pd) - 2;
  rep.oracle = khovanov_homology(pd, rep.j_almax);

  CubeIndex cube(resolve_all_ones(pd), CubeOptions{jobs, false});
  auto F = build_F(cube, jobs);
  auto M = build_M(cube, jobs);
  rep.from_F = cohomology(F.complex()).shifted(-pd.n_minus);
  rep.from_M = cohomology(M.complex()).shifted(-pd.n_minus);

  auto census = generator_census(pd, rep.j_almax);
  for (std::uint32_t u = 0; u < census.size(); ++u) {
    if (census[u] != static_cast<int>(F.generators[u].size())) {
      rep.census_ok = false;
      std::ostringstream os;
      os << "state " << cube.state(u).str() << ": oracle has " << census[u]
         << " generators, F has " << F.generators[u].size();
      rep.first_mismatch = os.str();
      break;
    }
  }

  if (rep.first_mismatch.empty() && rep.from_F != rep.oracle)
    rep.first_mismatch = "F gives " + describe(rep.from_F) + ", oracle gives " + describe(rep.oracle);
  if (rep.first_mismatch.empty() && rep.from_M != rep.oracle)
    rep.first_mismatch = "M gives " + describe(rep.from_M) + ", oracle gives " + describe(rep.oracle);
  rep.agree = rep.first_mismatch.empty();
  return rep;
}

}  // namespace almax
