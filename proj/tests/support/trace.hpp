// Independent circle counting for test oracles: union-find over arc labels.
#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "almax/model.hpp"

namespace almax::testing {

// Number of circles when crossing j is smoothed by bit j of u (1: join
// positions a-b and c-d, 0: join a-d and b-c).
inline int circles_in_state(const PDCode& pd, std::uint32_t u) {
  if (pd.size() == 0) return 1;
  std::map<int, int> id;
  for (const auto& x : pd.crossings)
    for (int a : x) id.emplace(a, 0);
  int k = 0;
  for (auto& [a, i] : id) i = k++;
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto join = [&](int a, int b) { parent[find(id[a])] = find(id[b]); };
  for (int j = 0; j < pd.size(); ++j) {
    const auto& x = pd.crossings[j];
    if ((u >> j) & 1u) {
      join(x[0], x[1]);
      join(x[2], x[3]);
    } else {
      join(x[0], x[3]);
      join(x[1], x[2]);
    }
  }
  int roots = 0;
  for (int i = 0; i < k; ++i)
    if (find(i) == i) ++roots;
  return roots;
}

}  // namespace almax::testing
