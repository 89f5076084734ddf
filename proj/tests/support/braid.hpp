#pragma once

// Closures of braid words, used to build test diagrams independently of the fixture files.

#include <array>
#include <map>
#include <numeric>
#include <vector>

#include "khoma/linkdiag.hpp"

namespace khoma::testing {

/// Closure of a braid on `strands` strands; letter +k is sigma_k, -k its inverse (1-based).
inline LinkDiagram braid_closure(int strands, const std::vector<int>& word) {
  int next_id = strands;
  std::vector<int> cur(strands);
  std::iota(cur.begin(), cur.end(), 0);
  std::vector<std::array<int, 4>> raw;
  std::map<int, int> succ;  // arc -> arc continuing the same strand through a crossing
  for (int letter : word) {
    const int i = std::abs(letter) - 1;
    const int l_in = cur[i], r_in = cur[i + 1];
    const int l_out = next_id++, r_out = next_id++;
    if (letter > 0) raw.push_back({r_in, r_out, l_out, l_in});
    else raw.push_back({l_in, r_in, r_out, l_out});
    succ[r_in] = l_out;
    succ[l_in] = r_out;
    cur[i] = l_out;
    cur[i + 1] = r_out;
  }
  // Close up: the top arc at each position is the bottom arc there.
  std::vector<int> same(next_id);
  std::iota(same.begin(), same.end(), 0);
  for (int p = 0; p < strands; ++p) same[cur[p]] = p;
  auto canon = [&](int a) { return same[a]; };
  std::map<int, int> next;
  for (auto [a, b] : succ) next[canon(a)] = canon(b);
  std::map<int, int> label;
  int free_loops = 0, counter = 0;
  std::vector<bool> seen(next_id, false);
  for (int start = 0; start < next_id; ++start) {
    const int s = canon(start);
    if (seen[s]) continue;
    if (!next.count(s)) {
      seen[s] = true;
      if (s < strands) ++free_loops;
      continue;
    }
    for (int a = s; !seen[a]; a = next[a]) {
      seen[a] = true;
      label[a] = ++counter;
    }
  }
  std::vector<std::array<int, 4>> tuples;
  for (auto t : raw) {
    for (auto& x : t) x = label.at(canon(x));
    tuples.push_back(t);
  }
  return LinkDiagram::from_crossings(tuples, free_loops);
}

}  // namespace khoma::testing
