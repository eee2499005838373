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
//
// Generalized m-gon verification. A connected bipartite graph is a
// generalized m-gon when (1) every pair of edges lies on some circuit of
// combinatorial length 2m, and (2) any two such circuits sharing an edge
// admit an isomorphism pointwise fixing their intersection. Apartments are
// the 2m-circuits; an edge is a chamber. Thick means every valence >= 3,
// and the thick finite case only allows m in {2,3,4,6,8}.

#ifndef RACG_POLYGON_HPP
#define RACG_POLYGON_HPP

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "racg/error.hpp"
#include "racg/graph.hpp"

namespace racg {

using ApartmentCycle = std::vector<uint32_t>;  // 2m vertices in canonical rotation

/// All simple cycles of length exactly 2m, each reported once: least vertex
/// first, lesser cycle-neighbor second, sorted lexicographically.
inline std::vector<ApartmentCycle> enumerate_apartments(const SimplicialGraph& g, int m) {
  require(find_bipartition(g).has_value(), ErrorKind::Precondition,
          "apartment enumeration expects a bipartite graph");
  const int target = 2 * m;
  std::vector<ApartmentCycle> out;
  if (m < 2 || static_cast<uint32_t>(target) > g.n()) return out;

  std::vector<uint32_t> path;
  std::vector<char> used(g.n(), 0);
  for (uint32_t s = 0; s < g.n(); ++s) {
    auto dist = bfs_distances(g, s);
    path.assign(1, s);
    used.assign(g.n(), 0);
    used[s] = 1;
    // iterative DFS over vertices > s
    struct Frame {
      uint32_t vertex;
      size_t next_idx;
    };
    std::vector<Frame> stack{{s, 0}};
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nb = g.neighbors(f.vertex);
      if (f.next_idx >= nb.size()) {
        used[f.vertex] = 0;
        path.pop_back();
        stack.pop_back();
        continue;
      }
      uint32_t w = nb[f.next_idx++];
      int depth = static_cast<int>(path.size());
      if (depth == target) {
        if (w == s && path[1] < path.back()) out.push_back(path);
        continue;
      }
      if (w <= s || used[w]) continue;
      if (dist[w] < 0 || depth + dist[w] > target) continue;
      used[w] = 1;
      path.push_back(w);
      stack.push_back({w, 0});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct PolygonReport {
  bool is_generalized_polygon = false;
  std::optional<int> m;
  bool thick = false;
  std::optional<int> r, b;
  std::optional<int> girth;
  std::optional<int> diameter;
  std::vector<json> axiom_failures;
  bool metric_criterion = false;  // girth == 2 * diameter
  bool metric_only = false;       // axioms skipped (size guard)
  bool feit_higman_ok = true;
  bool degrees_constant_per_color = false;
  bool verifier_error = false;  // metric criterion and axioms disagree
  size_t apartment_count = 0;
  std::optional<Bipartition> bipartition;
};

inline json polygon_report_to_json(const PolygonReport& r) {
  json j{{"schema_version", 1},
         {"is_generalized_polygon", r.is_generalized_polygon},
         {"m", r.m ? json(*r.m) : json()},
         {"thick", r.thick},
         {"r", r.r ? json(*r.r) : json()},
         {"b", r.b ? json(*r.b) : json()},
         {"girth", r.girth ? json(*r.girth) : json()},
         {"diameter", r.diameter ? json(*r.diameter) : json()},
         {"axiom_failures", r.axiom_failures},
         {"metric_criterion", r.metric_criterion},
         {"metric_only", r.metric_only},
         {"feit_higman_ok", r.feit_higman_ok},
         {"degrees_constant_per_color", r.degrees_constant_per_color},
         {"verifier_error", r.verifier_error},
         {"apartment_count", r.apartment_count}};
  return j;
}

namespace detail {

inline std::map<std::pair<uint32_t, uint32_t>, uint32_t> edge_index_map(
    const SimplicialGraph& g) {
  std::map<std::pair<uint32_t, uint32_t>, uint32_t> idx;
  for (uint32_t i = 0; i < g.edge_count(); ++i) idx[g.edges()[i]] = i;
  return idx;
}

inline std::vector<uint64_t> apartment_edge_masks(
    const SimplicialGraph& g, const std::vector<ApartmentCycle>& apts,
    const std::map<std::pair<uint32_t, uint32_t>, uint32_t>& eidx, size_t words) {
  std::vector<uint64_t> masks(apts.size() * words, 0);
  for (size_t a = 0; a < apts.size(); ++a) {
    const auto& cyc = apts[a];
    for (size_t i = 0; i < cyc.size(); ++i) {
      uint32_t u = cyc[i], v = cyc[(i + 1) % cyc.size()];
      if (u > v) std::swap(u, v);
      uint32_t e = eidx.at({u, v});
      masks[a * words + e / 64] |= 1ull << (e % 64);
    }
  }
  return masks;
}

// Axiom (2) for one pair: search the dihedral correspondences of the two
// 2m-circuits for one fixing every shared vertex.
inline bool apartment_pair_isomorphism(const ApartmentCycle& a1, const ApartmentCycle& a2,
                                       const std::vector<char>& in_a2,
                                       const std::vector<int>& pos_a2) {
  const int L = static_cast<int>(a1.size());
  for (int dir : {1, -1}) {
    for (int off = 0; off < L; ++off) {
      bool ok = true;
      for (int i = 0; i < L && ok; ++i) {
        uint32_t v = a1[i];
        if (!in_a2[v]) continue;
        int image = ((off + dir * i) % L + L) % L;
        if (pos_a2[v] != image) ok = false;
      }
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace detail

/// Runs the metric criterion, the direct axioms (within the size guard), the
/// thickness test, parameter extraction and the Feit-Higman gate.
inline PolygonReport verify_polygon(const SimplicialGraph& g, int max_direct_check = 64,
                                    std::optional<Bipartition> declared_colors = std::nullopt) {
  require(g.edge_count() >= 1, ErrorKind::InvalidInput, "polygon verification needs an edge");
  require(is_connected(g), ErrorKind::InvalidInput,
          "polygon verification needs a connected graph");

  PolygonReport rep;
  auto metrics = graph_metrics(g);
  rep.girth = metrics.girth;
  rep.diameter = metrics.diameter;
  rep.bipartition = declared_colors ? declared_colors : metrics.bipartition;
  rep.metric_criterion =
      metrics.girth && metrics.diameter && *metrics.girth == 2 * *metrics.diameter;

  uint32_t min_degree = g.degree(0);
  for (uint32_t v = 0; v < g.n(); ++v) min_degree = std::min(min_degree, g.degree(v));
  rep.thick = min_degree >= 3;

  if (!metrics.bipartition) {
    rep.axiom_failures.push_back({{"kind", "not_bipartite"}});
    return rep;
  }

  // parameters from per-color degrees
  {
    const auto& bp = *rep.bipartition;
    std::optional<uint32_t> dr, db;
    bool constant = true;
    for (uint32_t v = 0; v < g.n(); ++v) {
      auto& slot = bp.color[v] == Color::Red ? dr : db;
      if (!slot)
        slot = g.degree(v);
      else if (*slot != g.degree(v))
        constant = false;
    }
    rep.degrees_constant_per_color = constant;
    if (constant && dr && db) {
      rep.r = static_cast<int>(*dr) - 1;
      rep.b = static_cast<int>(*db) - 1;
    }
  }

  if (g.n() > static_cast<uint32_t>(max_direct_check)) {
    rep.metric_only = true;
    rep.is_generalized_polygon = rep.metric_criterion;
    if (rep.metric_criterion) rep.m = *metrics.diameter;
  } else {
    std::vector<int> candidates;
    if (rep.metric_criterion) candidates.push_back(*metrics.diameter);
    if (metrics.girth && *metrics.girth % 2 == 0 && *metrics.girth / 2 >= 2)
      candidates.push_back(*metrics.girth / 2);
    if (metrics.diameter && *metrics.diameter >= 2) candidates.push_back(*metrics.diameter);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    if (rep.metric_criterion) {
      // try the metric candidate first
      std::swap(*std::find(candidates.begin(), candidates.end(), *metrics.diameter),
                candidates.front());
    }

    std::vector<json> first_failures;
    for (size_t ci = 0; ci < candidates.size() && !rep.is_generalized_polygon; ++ci) {
      int m = candidates[ci];
      auto apartments = enumerate_apartments(g, m);
      std::vector<json> failures;

      auto eidx = detail::edge_index_map(g);
      size_t words = (g.edge_count() + 63) / 64;
      auto masks = detail::apartment_edge_masks(g, apartments, eidx, words);

      // axiom (1): every pair of chambers lies in a common apartment
      for (uint32_t e1 = 0; e1 < g.edge_count() && failures.size() < 8; ++e1) {
        for (uint32_t e2 = e1; e2 < g.edge_count() && failures.size() < 8; ++e2) {
          bool found = false;
          for (size_t a = 0; a < apartments.size() && !found; ++a) {
            bool h1 = masks[a * words + e1 / 64] >> (e1 % 64) & 1;
            bool h2 = masks[a * words + e2 / 64] >> (e2 % 64) & 1;
            found = h1 && h2;
          }
          if (!found) {
            auto [u1, v1] = g.edges()[e1];
            auto [u2, v2] = g.edges()[e2];
            failures.push_back({{"kind", "axiom1"},
                                {"m", m},
                                {"edges",
                                 {{g.name(u1), g.name(v1)}, {g.name(u2), g.name(v2)}}}});
          }
        }
      }

      // axiom (2): apartments sharing an edge admit a pointwise-fixing map
      if (failures.empty()) {
        std::vector<char> in_a2(g.n(), 0);
        std::vector<int> pos_a2(g.n(), -1);
        for (size_t a2i = 0; a2i < apartments.size() && failures.size() < 8; ++a2i) {
          for (uint32_t v : apartments[a2i]) in_a2[v] = 1;
          for (size_t i = 0; i < apartments[a2i].size(); ++i)
            pos_a2[apartments[a2i][i]] = static_cast<int>(i);
          for (size_t a1i = 0; a1i < apartments.size() && failures.size() < 8; ++a1i) {
            if (a1i == a2i) continue;
            bool share_edge = false;
            for (size_t w = 0; w < words && !share_edge; ++w)
              share_edge = (masks[a1i * words + w] & masks[a2i * words + w]) != 0;
            if (!share_edge) continue;
            if (!detail::apartment_pair_isomorphism(apartments[a1i], apartments[a2i], in_a2,
                                                    pos_a2))
              failures.push_back({{"kind", "axiom2"},
                                  {"m", m},
                                  {"apartments", {a1i, a2i}}});
          }
          for (uint32_t v : apartments[a2i]) {
            in_a2[v] = 0;
            pos_a2[v] = -1;
          }
        }
      }

      if (failures.empty()) {
        rep.is_generalized_polygon = true;
        rep.m = m;
        rep.apartment_count = apartments.size();
      } else if (ci == 0) {
        first_failures = std::move(failures);
      }
    }
    if (!rep.is_generalized_polygon) {
      rep.axiom_failures = std::move(first_failures);
      if (rep.axiom_failures.empty())
        rep.axiom_failures.push_back({{"kind", "no_candidate_m"},
                                      {"girth", metrics.girth ? json(*metrics.girth) : json()},
                                      {"diameter", *metrics.diameter}});
    }

    // independent cross-check of the metric criterion against the axioms
    bool metric_says = rep.metric_criterion;
    bool metric_m_matches = rep.is_generalized_polygon && metrics.girth && metrics.diameter &&
                            *metrics.girth == 2 * *rep.m && *metrics.diameter == *rep.m;
    if (rep.is_generalized_polygon != metric_says ||
        (rep.is_generalized_polygon && !metric_m_matches)) {
      rep.verifier_error = true;
      rep.axiom_failures.push_back({{"kind", "metric_axiom_disagreement"},
                                    {"metric_criterion", metric_says},
                                    {"axioms", rep.is_generalized_polygon}});
    }
  }

  if (rep.is_generalized_polygon && rep.thick && rep.m) {
    int m = *rep.m;
    rep.feit_higman_ok = m == 2 || m == 3 || m == 4 || m == 6 || m == 8;
  }
  return rep;
}

/// The common-vertex subcomplex of two apartments; true when it is a single
/// path (possibly one vertex).
inline bool apartment_intersection_is_segment(const SimplicialGraph& g,
                                              const ApartmentCycle& a1,
                                              const ApartmentCycle& a2) {
  std::set<uint32_t> s1(a1.begin(), a1.end());
  std::vector<uint32_t> common;
  for (uint32_t v : a2)
    if (s1.count(v)) common.push_back(v);
  if (common.empty()) return true;
  auto cycle_edges = [](const ApartmentCycle& a) {
    std::set<std::pair<uint32_t, uint32_t>> es;
    for (size_t i = 0; i < a.size(); ++i) {
      uint32_t u = a[i], v = a[(i + 1) % a.size()];
      if (u > v) std::swap(u, v);
      es.insert({u, v});
    }
    return es;
  };
  auto e1 = cycle_edges(a1), e2 = cycle_edges(a2);
  std::vector<std::pair<uint32_t, uint32_t>> shared;
  for (const auto& e : e1)
    if (e2.count(e)) shared.push_back(e);
  // degree check and connectivity of the intersection subcomplex
  std::map<uint32_t, int> deg;
  for (uint32_t v : common) deg[v] = 0;
  for (auto [u, v] : shared) {
    ++deg[u];
    ++deg[v];
  }
  for (auto [v, d] : deg)
    if (d > 2) return false;
  if (shared.size() >= common.size()) return false;  // would close a cycle
  // connected?
  std::map<uint32_t, std::vector<uint32_t>> adj;
  for (auto [u, v] : shared) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::set<uint32_t> seen{common[0]};
  std::vector<uint32_t> stack{common[0]};
  while (!stack.empty()) {
    uint32_t u = stack.back();
    stack.pop_back();
    for (uint32_t w : adj[u])
      if (seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == common.size();
}

// ---------------------------------------------------------------------------
// Catalog: small finite thick polygons from embedded field arithmetic.
// ---------------------------------------------------------------------------

namespace detail {

/// F_q arithmetic for q in {2,3,4}; GF(4) is {0,1,w,w+1} with w^2 = w+1.
struct GaloisField {
  int q;
  explicit GaloisField(int q_) : q(q_) {
    require(q == 2 || q == 3 || q == 4, ErrorKind::InvalidInput,
            "unsupported field order", {{"q", q}});
  }
  int add(int a, int b) const { return q == 4 ? (a ^ b) : (a + b) % q; }
  int neg(int a) const { return q == 4 ? a : (q - a) % q; }
  int mul(int a, int b) const {
    if (q != 4) return (a * b) % q;
    static const int t[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    return t[a][b];
  }
};

template <size_t D>
std::vector<std::array<int, D>> projective_points(const GaloisField& f) {
  // representatives with first nonzero coordinate equal to 1
  std::vector<std::array<int, D>> pts;
  std::array<int, D> v{};
  size_t total = 1;
  for (size_t i = 0; i < D; ++i) total *= static_cast<size_t>(f.q);
  for (size_t code = 1; code < total; ++code) {
    size_t c = code;
    for (size_t i = 0; i < D; ++i) {
      v[D - 1 - i] = static_cast<int>(c % f.q);
      c /= f.q;
    }
    int lead = 0;
    for (size_t i = 0; i < D; ++i)
      if (v[i] != 0) {
        lead = v[i];
        break;
      }
    if (lead == 1) pts.push_back(v);
  }
  return pts;
}

}  // namespace detail

enum class CatalogFamily { ProjectivePlane, SymplecticQuadrangle, CompleteBipartite };

/// Point-line incidence graph of PG(2,q): points and lines are the
/// projective points of F_q^3, incident when the dot product vanishes.
inline ParsedGraph catalog_projective_plane(int q) {
  require(q == 2 || q == 3 || q == 4, ErrorKind::InvalidInput,
          "projective_plane supports q in {2,3,4}", {{"q", q}});
  detail::GaloisField f(q);
  auto pts = detail::projective_points<3>(f);
  std::vector<std::string> names;
  std::vector<std::optional<Color>> colors;
  for (size_t i = 0; i < pts.size(); ++i) names.push_back("p" + std::to_string(i));
  for (size_t i = 0; i < pts.size(); ++i) names.push_back("l" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> edges;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = 0; j < pts.size(); ++j) {
      int dot = 0;
      for (int c = 0; c < 3; ++c) dot = f.add(dot, f.mul(pts[i][c], pts[j][c]));
      if (dot == 0) edges.emplace_back("p" + std::to_string(i), "l" + std::to_string(j));
    }
  ParsedGraph out{SimplicialGraph(names, edges), std::nullopt};
  Bipartition bp;
  for (size_t i = 0; i < pts.size(); ++i) bp.color.push_back(Color::Red);
  for (size_t i = 0; i < pts.size(); ++i) bp.color.push_back(Color::Blue);
  out.colors = std::move(bp);
  return out;
}

/// Incidence graph of the rank-2 symplectic polar space over F_q: all
/// projective points of F_q^4 versus the totally isotropic lines of the
/// standard alternating form x1 y2 - x2 y1 + x3 y4 - x4 y3.
inline ParsedGraph catalog_symplectic_quadrangle(int q) {
  require(q == 2 || q == 3, ErrorKind::InvalidInput,
          "symplectic_quadrangle supports q in {2,3}", {{"q", q}});
  detail::GaloisField f(q);
  auto pts = detail::projective_points<4>(f);
  auto form = [&](const std::array<int, 4>& x, const std::array<int, 4>& y) {
    int a = f.add(f.mul(x[0], y[1]), f.neg(f.mul(x[1], y[0])));
    int b = f.add(f.mul(x[2], y[3]), f.neg(f.mul(x[3], y[2])));
    return f.add(a, b);
  };
  // lines as sorted point-index sets of size q+1
  std::set<std::vector<uint32_t>> lines;
  std::map<std::array<int, 4>, uint32_t> point_index;
  for (uint32_t i = 0; i < pts.size(); ++i) point_index[pts[i]] = i;
  auto normalize = [&](std::array<int, 4> v) {
    int lead = 0;
    for (int c : v)
      if (c != 0) {
        lead = c;
        break;
      }
    // scale so the leading coordinate is 1
    int inv = 1;
    for (int x = 1; x < f.q; ++x)
      if (f.mul(lead, x) == 1) inv = x;
    for (auto& c : v) c = f.mul(c, inv);
    return v;
  };
  for (uint32_t i = 0; i < pts.size(); ++i)
    for (uint32_t j = i + 1; j < pts.size(); ++j) {
      if (form(pts[i], pts[j]) != 0) continue;
      std::set<uint32_t> span;
      for (int a = 0; a < f.q; ++a)
        for (int b = 0; b < f.q; ++b) {
          if (a == 0 && b == 0) continue;
          std::array<int, 4> v{};
          for (int c = 0; c < 4; ++c)
            v[c] = f.add(f.mul(a, pts[i][c]), f.mul(b, pts[j][c]));
          span.insert(point_index.at(normalize(v)));
        }
      lines.insert(std::vector<uint32_t>(span.begin(), span.end()));
    }
  std::vector<std::string> names;
  for (size_t i = 0; i < pts.size(); ++i) names.push_back("p" + std::to_string(i));
  for (size_t i = 0; i < lines.size(); ++i) names.push_back("l" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> edges;
  size_t li = 0;
  for (const auto& line : lines) {
    for (uint32_t p : line)
      edges.emplace_back("p" + std::to_string(p), "l" + std::to_string(li));
    ++li;
  }
  ParsedGraph out{SimplicialGraph(names, edges), std::nullopt};
  Bipartition bp;
  for (size_t i = 0; i < pts.size(); ++i) bp.color.push_back(Color::Red);
  for (size_t i = 0; i < lines.size(); ++i) bp.color.push_back(Color::Blue);
  out.colors = std::move(bp);
  return out;
}

/// K_{s,t} as the trivial generalized 2-gon: t points (red, one per line
/// bundle) against s lines (blue), every point on every line. Red valence is
/// s, so the parameters come out as r = s-1, b = t-1.
inline ParsedGraph catalog_complete_bipartite(int s, int t) {
  require(s >= 1 && t >= 1, ErrorKind::InvalidInput, "sizes must be at least 1",
          {{"s", s}, {"t", t}});
  std::vector<std::string> names;
  for (int i = 1; i <= t; ++i) names.push_back("p" + std::to_string(i));
  for (int i = 1; i <= s; ++i) names.push_back("l" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i <= t; ++i)
    for (int j = 1; j <= s; ++j)
      edges.emplace_back("p" + std::to_string(i), "l" + std::to_string(j));
  ParsedGraph out{SimplicialGraph(names, edges), std::nullopt};
  Bipartition bp;
  for (int i = 0; i < t; ++i) bp.color.push_back(Color::Red);
  for (int i = 0; i < s; ++i) bp.color.push_back(Color::Blue);
  out.colors = std::move(bp);
  return out;
}

inline ParsedGraph catalog_build(const std::string& name, const std::vector<int>& params) {
  if (name == "projective_plane") {
    require(params.size() == 1, ErrorKind::InvalidInput, "projective_plane takes one parameter");
    return catalog_projective_plane(params[0]);
  }
  if (name == "symplectic_quadrangle") {
    require(params.size() == 1, ErrorKind::InvalidInput,
            "symplectic_quadrangle takes one parameter");
    return catalog_symplectic_quadrangle(params[0]);
  }
  if (name == "complete_bipartite") {
    require(params.size() == 2, ErrorKind::InvalidInput, "complete_bipartite takes two sizes");
    return catalog_complete_bipartite(params[0], params[1]);
  }
  fail(ErrorKind::InvalidInput, "unknown catalog family: " + name, {{"name", name}});
}

}  // namespace racg

#endif  // RACG_POLYGON_HPP
