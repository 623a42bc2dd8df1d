// Braid closures as PD codes, and the named test corpus.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "almax/ingest.hpp"

namespace almax::testing {

// Closure of a braid word on `strands` strands.  Letters are +i for the
// generator sigma_i and -i for its inverse (1-based).  Strands run upward;
// positions are listed clockwise from the incoming under-strand.
inline PDCode braid_closure(int strands, const std::vector<int>& word) {
  std::vector<int> cur(strands);
  for (int s = 0; s < strands; ++s) cur[s] = s + 1;
  int next = strands;
  std::vector<std::array<int, 4>> xs;
  for (int g : word) {
    int i = (g > 0 ? g : -g) - 1;
    int sw = cur[i], se = cur[i + 1];
    int nw = ++next, ne = ++next;
    if (g > 0) xs.push_back({se, sw, nw, ne});   // over strand SW -> NE
    else xs.push_back({sw, nw, ne, se});         // over strand SE -> NW
    cur[i] = nw;
    cur[i + 1] = ne;
  }
  // Close up: the label leaving the top of strand s is the bottom label s+1.
  std::vector<int> rename(next + 1);
  for (int l = 0; l <= next; ++l) rename[l] = l;
  for (int s = 0; s < strands; ++s) rename[cur[s]] = s + 1;
  PDCode pd;
  std::string text = "PD[";
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) text += ",";
    text += "X[";
    for (int p = 0; p < 4; ++p) {
      if (p) text += ",";
      text += std::to_string(rename[xs[k][p]]);
    }
    text += "]";
  }
  text += "]";
  return parse_pd(text);
}

inline std::vector<int> repeat(const std::vector<int>& w, int times) {
  std::vector<int> out;
  for (int t = 0; t < times; ++t) out.insert(out.end(), w.begin(), w.end());
  return out;
}

struct NamedPD {
  std::string name;
  PDCode pd;
};

// The acceptance corpus: unknot kinks, Hopf links, trefoils, figure-eight,
// T(2,n) for n <= 7 and T(3,4).
inline std::vector<NamedPD> corpus() {
  std::vector<NamedPD> out;
  out.push_back({"unknot", parse_pd("PD[]")});
  out.push_back({"kink_pos", braid_closure(2, {1})});
  out.push_back({"kink_neg", braid_closure(2, {-1})});
  out.push_back({"hopf_pos", braid_closure(2, {1, 1})});
  out.push_back({"hopf_neg", braid_closure(2, {-1, -1})});
  out.push_back({"trefoil_right", parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]")});
  out.push_back({"trefoil_left", braid_closure(2, {-1, -1, -1})});
  out.push_back({"figure_eight", braid_closure(3, {1, -2, 1, -2})});
  for (int n = 2; n <= 7; ++n)
    out.push_back({"t2_" + std::to_string(n), braid_closure(2, std::vector<int>(n, 1))});
  out.push_back({"t3_4", braid_closure(3, repeat({1, 2}, 4))});
  return out;
}

inline PDCode named(const std::string& name) {
  for (auto& e : corpus())
    if (e.name == name) return e.pd;
  throw std::out_of_range("no corpus entry " + name);
}

}  // namespace almax::testing
