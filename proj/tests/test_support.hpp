// Copyright 2026 the racg authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RACG_TEST_SUPPORT_HPP
#define RACG_TEST_SUPPORT_HPP

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "racg/graph.hpp"

namespace racg::testing {

inline SimplicialGraph make_cycle(int n, const std::string& prefix = "v") {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  for (int i = 0; i < n; ++i) edges.emplace_back(names[i], names[(i + 1) % n]);
  return SimplicialGraph(names, edges);
}

inline SimplicialGraph make_c5() { return make_cycle(5); }

inline SimplicialGraph make_path(int n, const std::string& prefix = "v") {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(names[i], names[i + 1]);
  return SimplicialGraph(names, edges);
}

// Heawood graph as the point/line incidence graph of the Fano plane,
// built from an explicit line list (independent of the catalog module).
inline SimplicialGraph make_heawood(const std::string& p = "p", const std::string& l = "l") {
  static const int lines[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6},
                                  {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
  std::vector<std::string> names;
  for (int i = 1; i <= 7; ++i) names.push_back(p + std::to_string(i));
  for (int i = 1; i <= 7; ++i) names.push_back(l + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 3; ++j)
      edges.emplace_back(p + std::to_string(lines[i][j]), l + std::to_string(i + 1));
  return SimplicialGraph(names, edges);
}

// Tutte-Coxeter graph as the Levi graph of the Cremona-Richmond
// configuration: duads {a,b} of {1..6} versus synthemes (perfect matchings
// into three duads), incident by containment. Independent of the catalog's
// symplectic construction.
inline SimplicialGraph make_tutte_coxeter() {
  std::vector<std::pair<int, int>> duads;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b) duads.emplace_back(a, b);
  auto duad_name = [](std::pair<int, int> d) {
    return "d" + std::to_string(d.first) + std::to_string(d.second);
  };
  std::vector<std::array<std::pair<int, int>, 3>> synthemes;
  // enumerate partitions of {1..6} into three pairs
  std::vector<int> rest{2, 3, 4, 5, 6};
  std::sort(rest.begin(), rest.end());
  for (int i = 0; i < 5; ++i) {
    std::vector<int> r2;
    for (int x : rest)
      if (x != rest[i]) r2.push_back(x);
    std::pair<int, int> first{1, rest[i]};
    // r2 has 4 elements; 3 ways to pair them
    for (int j = 1; j < 4; ++j) {
      std::pair<int, int> second{r2[0], r2[j]};
      std::vector<int> r3;
      for (int x : r2)
        if (x != r2[0] && x != r2[j]) r3.push_back(x);
      std::pair<int, int> third{r3[0], r3[1]};
      synthemes.push_back({first, second, third});
    }
  }
  std::vector<std::string> names;
  for (auto d : duads) names.push_back(duad_name(d));
  for (size_t i = 0; i < synthemes.size(); ++i) names.push_back("s" + std::to_string(i + 1));
  std::vector<std::pair<std::string, std::string>> edges;
  for (size_t i = 0; i < synthemes.size(); ++i)
    for (auto d : synthemes[i]) edges.emplace_back(duad_name(d), "s" + std::to_string(i + 1));
  return SimplicialGraph(names, edges);
}

inline SimplicialGraph make_petersen() {
  std::vector<std::string> names;
  for (int i = 0; i < 10; ++i) names.push_back("u" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(names[i], names[(i + 1) % 5]);
    edges.emplace_back(names[5 + i], names[5 + (i + 2) % 5]);
    edges.emplace_back(names[i], names[5 + i]);
  }
  return SimplicialGraph(names, edges);
}

inline SimplicialGraph make_complete_bipartite(int s, int t, const std::string& a = "a",
                                               const std::string& b = "b") {
  std::vector<std::string> names;
  for (int i = 1; i <= s; ++i) names.push_back(a + std::to_string(i));
  for (int i = 1; i <= t; ++i) names.push_back(b + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i <= s; ++i)
    for (int j = 1; j <= t; ++j)
      edges.emplace_back(a + std::to_string(i), b + std::to_string(j));
  return SimplicialGraph(names, edges);
}

inline SimplicialGraph relabel(const SimplicialGraph& g, std::mt19937& rng,
                               const std::string& prefix = "w") {
  std::vector<uint32_t> perm(g.n());
  for (uint32_t i = 0; i < g.n(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  // perm[i] = new position of old vertex i
  std::vector<std::string> names(g.n());
  for (uint32_t i = 0; i < g.n(); ++i) names[perm[i]] = prefix + std::to_string(i + 1);
  std::vector<std::string> ordered(names);
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(names[perm[u]], names[perm[v]]);
  std::shuffle(edges.begin(), edges.end(), rng);
  return SimplicialGraph(ordered, edges);
}

// Exact girth by edge removal: min over edges of dist(u,v) in G - e, plus 1.
inline std::optional<int> oracle_girth(const SimplicialGraph& g) {
  int best = -1;
  for (size_t skip = 0; skip < g.edges().size(); ++skip) {
    auto [su, sv] = g.edges()[skip];
    std::vector<int> dist(g.n(), -1);
    std::deque<uint32_t> q{su};
    dist[su] = 0;
    while (!q.empty()) {
      uint32_t u = q.front();
      q.pop_front();
      for (uint32_t w : g.neighbors(u)) {
        if ((u == su && w == sv) || (u == sv && w == su)) continue;
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          q.push_back(w);
        }
      }
    }
    if (dist[sv] >= 0) {
      int len = dist[sv] + 1;
      if (best < 0 || len < best) best = len;
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

// Diameter via Floyd-Warshall; -1 if disconnected.
inline int oracle_diameter(const SimplicialGraph& g) {
  const int INF = 1 << 28;
  size_t n = g.n();
  std::vector<int> d(n * n, INF);
  for (size_t i = 0; i < n; ++i) d[i * n + i] = 0;
  for (auto [u, v] : g.edges()) d[u * n + v] = d[v * n + u] = 1;
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
  int diam = 0;
  for (int x : d) {
    if (x >= INF) return -1;
    diam = std::max(diam, x);
  }
  return diam;
}

inline SimplicialGraph random_connected_bipartite(std::mt19937& rng, int max_vertices = 16) {
  std::uniform_int_distribution<int> side(1, max_vertices - 1);
  int s = side(rng);
  int t = std::uniform_int_distribution<int>(1, max_vertices - s)(rng);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  double p = std::uniform_real_distribution<double>(0.2, 0.9)(rng);
  std::vector<std::string> names;
  for (int i = 1; i <= s; ++i) names.push_back("a" + std::to_string(i));
  for (int i = 1; i <= t; ++i) names.push_back("b" + std::to_string(i));
  std::set<std::pair<int, int>> chosen;
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < t; ++j)
      if (coin(rng) < p) chosen.insert({i, j});
  // stitch components together with cross edges until connected
  while (true) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [i, j] : chosen) edges.emplace_back(names[i], names[size_t(s) + j]);
    SimplicialGraph g(names, edges);
    auto comps = connected_components(g);
    if (comps.size() <= 1) return g;
    std::vector<int> compof(g.n(), 0);
    for (size_t c = 0; c < comps.size(); ++c)
      for (uint32_t v : comps[c]) compof[v] = static_cast<int>(c);
    bool added = false;
    for (int i = 0; i < s && !added; ++i)
      for (int j = 0; j < t && !added; ++j)
        if (compof[i] != compof[size_t(s) + j]) {
          chosen.insert({i, j});
          added = true;
        }
  }
}

}  // namespace racg::testing

#endif  // RACG_TEST_SUPPORT_HPP
