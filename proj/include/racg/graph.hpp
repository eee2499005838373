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

#ifndef RACG_GRAPH_HPP
#define RACG_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "racg/error.hpp"

namespace racg {

using json = nlohmann::json;

enum class Color : uint8_t { Red = 0, Blue = 1 };

inline const char* to_string(Color c) { return c == Color::Red ? "red" : "blue"; }

/// A proper red/blue coloring, indexed like the owning graph's vertex list.
struct Bipartition {
  std::vector<Color> color;
};

/// Finite simplicial graph: named vertices in document order, loop-free
/// deduplicated undirected edges stored as index pairs (u < v).
class SimplicialGraph {
 public:
  SimplicialGraph() = default;

  SimplicialGraph(std::vector<std::string> vertex_names,
                  const std::vector<std::pair<std::string, std::string>>& edge_names) {
    names_ = std::move(vertex_names);
    for (size_t i = 0; i < names_.size(); ++i) {
      auto [it, fresh] = index_.emplace(names_[i], static_cast<uint32_t>(i));
      require(fresh, ErrorKind::InvalidInput, "duplicate vertex name: " + names_[i],
              {{"vertex", names_[i]}, {"position", i}});
    }
    std::set<std::pair<uint32_t, uint32_t>> seen;
    size_t pos = 0;
    for (const auto& [a, b] : edge_names) {
      uint32_t u = index_checked(a, pos);
      uint32_t v = index_checked(b, pos);
      require(u != v, ErrorKind::InvalidInput, "loop edge at vertex " + a,
              {{"vertex", a}, {"edge_position", pos}});
      if (u > v) std::swap(u, v);
      require(seen.insert({u, v}).second, ErrorKind::InvalidInput,
              "duplicate edge " + a + " -- " + b, {{"edge_position", pos}});
      ++pos;
    }
    edges_.assign(seen.begin(), seen.end());
    build_adjacency();
  }

  /// Induced subgraph on the given vertex indices (kept in document order).
  SimplicialGraph induced(const std::vector<uint32_t>& keep) const {
    std::vector<uint32_t> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::string> vs;
    std::unordered_map<uint32_t, uint32_t> remap;
    for (uint32_t old : sorted) {
      remap[old] = static_cast<uint32_t>(vs.size());
      vs.push_back(names_[old]);
    }
    std::vector<std::pair<std::string, std::string>> es;
    for (auto [u, v] : edges_)
      if (remap.count(u) && remap.count(v)) es.emplace_back(names_[u], names_[v]);
    return SimplicialGraph(std::move(vs), es);
  }

  uint32_t n() const { return static_cast<uint32_t>(names_.size()); }
  uint32_t edge_count() const { return static_cast<uint32_t>(edges_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& name(uint32_t v) const { return names_[v]; }
  const std::vector<std::pair<uint32_t, uint32_t>>& edges() const { return edges_; }
  const std::vector<uint32_t>& neighbors(uint32_t v) const { return adj_[v]; }
  uint32_t degree(uint32_t v) const { return static_cast<uint32_t>(adj_[v].size()); }

  bool adjacent(uint32_t u, uint32_t v) const { return matrix_[size_t(u) * n() + v] != 0; }

  std::optional<uint32_t> index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  uint32_t index_of_checked(const std::string& name) const {
    auto idx = index_of(name);
    require(idx.has_value(), ErrorKind::InvalidInput, "unknown vertex name: " + name,
            {{"vertex", name}});
    return *idx;
  }

  bool operator==(const SimplicialGraph& o) const {
    return names_ == o.names_ && edges_ == o.edges_;
  }
  bool operator!=(const SimplicialGraph& o) const { return !(*this == o); }

 private:
  uint32_t index_checked(const std::string& name, size_t edge_pos) const {
    auto it = index_.find(name);
    require(it != index_.end(), ErrorKind::InvalidInput,
            "edge endpoint not in vertex list: " + name,
            {{"vertex", name}, {"edge_position", edge_pos}});
    return it->second;
  }

  void build_adjacency() {
    adj_.assign(n(), {});
    matrix_.assign(size_t(n()) * n(), 0);
    for (auto [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
      matrix_[size_t(u) * n() + v] = 1;
      matrix_[size_t(v) * n() + u] = 1;
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }

  std::vector<std::string> names_;
  std::vector<std::pair<uint32_t, uint32_t>> edges_;
  std::unordered_map<std::string, uint32_t> index_;
  std::vector<std::vector<uint32_t>> adj_;
  std::vector<uint8_t> matrix_;
};

struct ParsedGraph {
  SimplicialGraph graph;
  std::optional<Bipartition> colors;  // present iff the document colored every vertex
};

// ---------------------------------------------------------------------------
// graph-JSON
//
// { "vertices": ["v1", ...] or [{"name": "...", "color": "red"|"blue"}, ...],
//   "edges": [["v1","v2"], ...] }
// Unknown keys are rejected.
// ---------------------------------------------------------------------------

inline ParsedGraph parse_graph_json(const json& doc) {
  require(doc.is_object(), ErrorKind::InvalidInput, "graph document must be a JSON object");
  for (auto it = doc.begin(); it != doc.end(); ++it)
    require(it.key() == "vertices" || it.key() == "edges", ErrorKind::InvalidInput,
            "unknown key in graph document: " + it.key(), {{"key", it.key()}});
  require(doc.contains("vertices") && doc["vertices"].is_array(), ErrorKind::InvalidInput,
          "graph document needs a \"vertices\" array");
  require(doc.contains("edges") && doc["edges"].is_array(), ErrorKind::InvalidInput,
          "graph document needs an \"edges\" array");

  std::vector<std::string> names;
  std::vector<std::optional<Color>> colors;
  size_t pos = 0;
  for (const auto& v : doc["vertices"]) {
    if (v.is_string()) {
      names.push_back(v.get<std::string>());
      colors.push_back(std::nullopt);
    } else if (v.is_object()) {
      for (auto it = v.begin(); it != v.end(); ++it)
        require(it.key() == "name" || it.key() == "color", ErrorKind::InvalidInput,
                "unknown key in vertex object: " + it.key(),
                {{"key", it.key()}, {"position", pos}});
      require(v.contains("name") && v["name"].is_string(), ErrorKind::InvalidInput,
              "vertex object needs a string \"name\"", {{"position", pos}});
      names.push_back(v["name"].get<std::string>());
      if (v.contains("color")) {
        std::string c = v["color"].get<std::string>();
        require(c == "red" || c == "blue", ErrorKind::InvalidInput,
                "vertex color must be \"red\" or \"blue\"", {{"position", pos}, {"color", c}});
        colors.push_back(c == "red" ? Color::Red : Color::Blue);
      } else {
        colors.push_back(std::nullopt);
      }
    } else {
      fail(ErrorKind::InvalidInput, "vertex entries must be strings or objects",
           {{"position", pos}});
    }
    ++pos;
  }

  std::vector<std::pair<std::string, std::string>> edge_names;
  pos = 0;
  for (const auto& e : doc["edges"]) {
    require(e.is_array() && e.size() == 2 && e[0].is_string() && e[1].is_string(),
            ErrorKind::InvalidInput, "edges must be 2-element string lists",
            {{"edge_position", pos}});
    edge_names.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    ++pos;
  }

  ParsedGraph out{SimplicialGraph(std::move(names), edge_names), std::nullopt};

  size_t colored = 0;
  for (const auto& c : colors)
    if (c) ++colored;
  if (colored > 0) {
    require(colored == colors.size(), ErrorKind::InvalidInput,
            "either all vertices carry a color or none do",
            {{"colored", colored}, {"total", colors.size()}});
    Bipartition bp;
    for (const auto& c : colors) bp.color.push_back(*c);
    for (auto [u, v] : out.graph.edges())
      require(bp.color[u] != bp.color[v], ErrorKind::InvalidInput,
              "coloring is not proper at edge " + out.graph.name(u) + " -- " + out.graph.name(v),
              {{"edge", {out.graph.name(u), out.graph.name(v)}}});
    out.colors = std::move(bp);
  }
  return out;
}

inline ParsedGraph parse_graph(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what(),
         {{"byte", e.byte}});
  }
  return parse_graph_json(doc);
}

inline json graph_to_json(const SimplicialGraph& g,
                          const std::optional<Bipartition>& colors = std::nullopt) {
  json verts = json::array();
  for (uint32_t i = 0; i < g.n(); ++i) {
    if (colors)
      verts.push_back({{"name", g.name(i)}, {"color", to_string(colors->color[i])}});
    else
      verts.push_back(g.name(i));
  }
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({g.name(u), g.name(v)});
  return json{{"vertices", verts}, {"edges", edges}};
}

inline std::string serialize_graph_json(const SimplicialGraph& g,
                                        const std::optional<Bipartition>& colors = std::nullopt) {
  return graph_to_json(g, colors).dump(2) + "\n";
}

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline std::string serialize_graph_dot(const SimplicialGraph& g,
                                       const std::optional<Bipartition>& colors = std::nullopt,
                                       const std::string& name = "G") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (uint32_t i = 0; i < g.n(); ++i) {
    os << "  " << dot_quote(g.name(i));
    if (colors) os << " [color=" << to_string(colors->color[i]) << "]";
    os << ";\n";
  }
  for (auto [u, v] : g.edges())
    os << "  " << dot_quote(g.name(u)) << " -- " << dot_quote(g.name(v)) << ";\n";
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Metrics
// ---------------------------------------------------------------------------

inline std::vector<int> bfs_distances(const SimplicialGraph& g, uint32_t src) {
  std::vector<int> dist(g.n(), -1);
  std::deque<uint32_t> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    uint32_t u = q.front();
    q.pop_front();
    for (uint32_t w : g.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

inline std::vector<std::vector<uint32_t>> connected_components(const SimplicialGraph& g) {
  std::vector<int> comp(g.n(), -1);
  std::vector<std::vector<uint32_t>> out;
  for (uint32_t s = 0; s < g.n(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<uint32_t> cur;
    std::deque<uint32_t> q{s};
    comp[s] = static_cast<int>(out.size());
    while (!q.empty()) {
      uint32_t u = q.front();
      q.pop_front();
      cur.push_back(u);
      for (uint32_t w : g.neighbors(u))
        if (comp[w] < 0) {
          comp[w] = comp[s];
          q.push_back(w);
        }
    }
    std::sort(cur.begin(), cur.end());
    out.push_back(std::move(cur));
  }
  return out;
}

inline bool is_connected(const SimplicialGraph& g) {
  return g.n() == 0 || connected_components(g).size() == 1;
}

/// Shortest cycle length through BFS from every root; nullopt for forests.
inline std::optional<int> graph_girth(const SimplicialGraph& g) {
  int best = -1;
  for (uint32_t s = 0; s < g.n(); ++s) {
    std::vector<int> dist(g.n(), -1), parent(g.n(), -1);
    std::deque<uint32_t> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      uint32_t u = q.front();
      q.pop_front();
      for (uint32_t w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = static_cast<int>(u);
          q.push_back(w);
        } else if (static_cast<int>(w) != parent[u]) {
          int len = dist[u] + dist[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

inline std::optional<Bipartition> find_bipartition(const SimplicialGraph& g) {
  Bipartition bp;
  bp.color.assign(g.n(), Color::Red);
  std::vector<int> seen(g.n(), 0);
  for (uint32_t s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::deque<uint32_t> q{s};
    while (!q.empty()) {
      uint32_t u = q.front();
      q.pop_front();
      for (uint32_t w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          bp.color[w] = bp.color[u] == Color::Red ? Color::Blue : Color::Red;
          q.push_back(w);
        } else if (bp.color[w] == bp.color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return bp;
}

inline bool has_induced_4cycle(const SimplicialGraph& g) {
  // u-x-v-y-u with u,v and x,y non-adjacent
  for (uint32_t u = 0; u < g.n(); ++u)
    for (uint32_t v = u + 1; v < g.n(); ++v) {
      if (g.adjacent(u, v)) continue;
      std::vector<uint32_t> common;
      for (uint32_t x : g.neighbors(u))
        if (g.adjacent(x, v)) common.push_back(x);
      for (size_t i = 0; i < common.size(); ++i)
        for (size_t j = i + 1; j < common.size(); ++j)
          if (!g.adjacent(common[i], common[j])) return true;
    }
  return false;
}

inline bool is_triangle_free(const SimplicialGraph& g) {
  for (auto [u, v] : g.edges())
    for (uint32_t w : g.neighbors(u))
      if (w != v && g.adjacent(w, v)) return false;
  return true;
}

struct ComponentMetrics {
  std::vector<std::string> vertices;
  std::optional<int> girth;
  int diameter = 0;
};

struct GraphMetrics {
  bool connected = true;
  std::optional<int> girth;     // nullopt: forest
  std::optional<int> diameter;  // nullopt: disconnected
  std::vector<uint32_t> degree_multiset;  // sorted ascending
  std::optional<Bipartition> bipartition;
  bool has_induced_4cycle = false;
  bool triangle_free = true;
  std::vector<ComponentMetrics> components;  // populated when disconnected
};

inline GraphMetrics graph_metrics(const SimplicialGraph& g) {
  GraphMetrics m;
  auto comps = connected_components(g);
  m.connected = comps.size() <= 1;
  m.girth = graph_girth(g);
  if (m.connected) {
    int diam = 0;
    for (uint32_t s = 0; s < g.n(); ++s)
      for (int d : bfs_distances(g, s)) diam = std::max(diam, d);
    m.diameter = diam;
  } else {
    for (const auto& comp : comps) {
      auto sub = g.induced(comp);
      ComponentMetrics cm;
      cm.vertices = sub.vertex_names();
      cm.girth = graph_girth(sub);
      for (uint32_t s = 0; s < sub.n(); ++s)
        for (int d : bfs_distances(sub, s)) cm.diameter = std::max(cm.diameter, d);
      m.components.push_back(std::move(cm));
    }
  }
  for (uint32_t v = 0; v < g.n(); ++v) m.degree_multiset.push_back(g.degree(v));
  std::sort(m.degree_multiset.begin(), m.degree_multiset.end());
  m.bipartition = find_bipartition(g);
  m.has_induced_4cycle = has_induced_4cycle(g);
  m.triangle_free = is_triangle_free(g);
  return m;
}

inline json metrics_to_json(const GraphMetrics& m) {
  json j{{"schema_version", 1},
         {"connected", m.connected},
         {"girth", m.girth ? json(*m.girth) : json()},
         {"diameter", m.diameter ? json(*m.diameter) : json()},
         {"degree_multiset", m.degree_multiset},
         {"has_induced_4cycle", m.has_induced_4cycle},
         {"triangle_free", m.triangle_free},
         {"bipartite", m.bipartition.has_value()}};
  if (!m.connected) {
    json comps = json::array();
    for (const auto& c : m.components)
      comps.push_back({{"vertices", c.vertices},
                       {"girth", c.girth ? json(*c.girth) : json()},
                       {"diameter", c.diameter}});
    j["components"] = comps;
  }
  return j;
}

// ---------------------------------------------------------------------------
// Join decomposition: maximal join factors are the connected components of
// the complement graph, taken as induced subgraphs.
// ---------------------------------------------------------------------------

namespace detail {

// Stable color refinement. Returns per-vertex color ids normalized so that
// structurally identical graphs receive identical sequences; the ids order
// cells by (round history), making signatures comparable across graphs.
inline std::vector<uint32_t> refine_colors(const SimplicialGraph& g,
                                           std::vector<uint32_t> color) {
  if (g.n() == 0) return color;
  while (true) {
    std::map<std::pair<uint32_t, std::vector<uint32_t>>, std::vector<uint32_t>> buckets;
    for (uint32_t v = 0; v < g.n(); ++v) {
      std::vector<uint32_t> sig;
      for (uint32_t w : g.neighbors(v)) sig.push_back(color[w]);
      std::sort(sig.begin(), sig.end());
      buckets[{color[v], std::move(sig)}].push_back(v);
    }
    std::vector<uint32_t> next(g.n());
    uint32_t id = 0;
    for (const auto& [key, verts] : buckets) {
      for (uint32_t v : verts) next[v] = id;
      ++id;
    }
    if (next == color) return color;
    color = std::move(next);
  }
}

inline std::vector<uint32_t> degree_seed(const SimplicialGraph& g) {
  std::vector<uint32_t> color(g.n());
  for (uint32_t v = 0; v < g.n(); ++v) color[v] = g.degree(v);
  return color;
}

// Signature used for deterministic ordering of join factors.
inline std::vector<uint32_t> canonical_signature(const SimplicialGraph& g) {
  auto color = refine_colors(g, degree_seed(g));
  std::sort(color.begin(), color.end());
  std::vector<uint32_t> sig{g.n(), g.edge_count()};
  sig.insert(sig.end(), color.begin(), color.end());
  return sig;
}

}  // namespace detail

inline std::vector<SimplicialGraph> join_decompose(const SimplicialGraph& g) {
  require(g.n() > 0, ErrorKind::Precondition, "join_decompose needs a nonempty graph");
  // components of the complement graph
  std::vector<int> comp(g.n(), -1);
  int ncomp = 0;
  for (uint32_t s = 0; s < g.n(); ++s) {
    if (comp[s] >= 0) continue;
    std::deque<uint32_t> q{s};
    comp[s] = ncomp;
    while (!q.empty()) {
      uint32_t u = q.front();
      q.pop_front();
      for (uint32_t w = 0; w < g.n(); ++w)
        if (w != u && comp[w] < 0 && !g.adjacent(u, w)) {
          comp[w] = ncomp;
          q.push_back(w);
        }
    }
    ++ncomp;
  }
  std::vector<std::vector<uint32_t>> groups(ncomp);
  for (uint32_t v = 0; v < g.n(); ++v) groups[comp[v]].push_back(v);
  std::vector<SimplicialGraph> factors;
  for (auto& grp : groups) factors.push_back(g.induced(grp));
  std::sort(factors.begin(), factors.end(),
            [](const SimplicialGraph& a, const SimplicialGraph& b) {
              auto sa = detail::canonical_signature(a), sb = detail::canonical_signature(b);
              if (sa != sb) return sa < sb;
              return a.vertex_names() < b.vertex_names();
            });
  return factors;
}

/// Join of graphs: disjoint union plus all cross edges. Vertex names must be
/// disjoint across factors.
inline SimplicialGraph graph_join(const std::vector<SimplicialGraph>& factors) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::pair<size_t, size_t>> ranges;
  for (const auto& f : factors) {
    size_t base = names.size();
    for (const auto& nm : f.vertex_names()) names.push_back(nm);
    for (auto [u, v] : f.edges()) edges.emplace_back(f.name(u), f.name(v));
    ranges.emplace_back(base, names.size());
  }
  for (size_t i = 0; i < ranges.size(); ++i)
    for (size_t j = i + 1; j < ranges.size(); ++j)
      for (size_t a = ranges[i].first; a < ranges[i].second; ++a)
        for (size_t b = ranges[j].first; b < ranges[j].second; ++b)
          edges.emplace_back(names[a], names[b]);
  return SimplicialGraph(std::move(names), edges);
}

// ---------------------------------------------------------------------------
// Isomorphism: color refinement plus backtracking.
// ---------------------------------------------------------------------------

struct GraphIsomorphism {
  std::vector<uint32_t> mapping;  // index in a -> index in b

  std::map<std::string, std::string> name_mapping(const SimplicialGraph& a,
                                                  const SimplicialGraph& b) const {
    std::map<std::string, std::string> out;
    for (uint32_t v = 0; v < mapping.size(); ++v) out[a.name(v)] = b.name(mapping[v]);
    return out;
  }
};

namespace detail {

inline bool iso_backtrack(const SimplicialGraph& a, const SimplicialGraph& b,
                          const std::vector<uint32_t>& ca, const std::vector<uint32_t>& cb,
                          const std::vector<uint32_t>& order, size_t pos,
                          std::vector<int>& map_ab, std::vector<int>& map_ba) {
  if (pos == order.size()) return true;
  uint32_t u = order[pos];
  for (uint32_t w = 0; w < b.n(); ++w) {
    if (map_ba[w] >= 0 || cb[w] != ca[u]) continue;
    bool ok = true;
    for (uint32_t x : a.neighbors(u)) {
      if (map_ab[x] >= 0 && !b.adjacent(w, static_cast<uint32_t>(map_ab[x]))) {
        ok = false;
        break;
      }
    }
    if (ok) {
      // mapped non-neighbors must stay non-neighbors
      for (uint32_t wn : b.neighbors(w)) {
        int pre = map_ba[wn];
        if (pre >= 0 && !a.adjacent(u, static_cast<uint32_t>(pre))) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    map_ab[u] = static_cast<int>(w);
    map_ba[w] = static_cast<int>(u);
    if (iso_backtrack(a, b, ca, cb, order, pos + 1, map_ab, map_ba)) return true;
    map_ab[u] = -1;
    map_ba[w] = -1;
  }
  return false;
}

}  // namespace detail

/// Finds a witness isomorphism, or nullopt. With respect_colors set, the
/// witness must also preserve the given colorings.
inline std::optional<GraphIsomorphism> graph_isomorphism(
    const SimplicialGraph& a, const SimplicialGraph& b, bool respect_colors = false,
    const std::optional<Bipartition>& colors_a = std::nullopt,
    const std::optional<Bipartition>& colors_b = std::nullopt) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return std::nullopt;
  if (a.n() == 0) return GraphIsomorphism{};

  std::vector<uint32_t> seed_a = detail::degree_seed(a), seed_b = detail::degree_seed(b);
  if (respect_colors) {
    require(colors_a && colors_b, ErrorKind::Precondition,
            "respect_colors requires colorings for both graphs");
    for (uint32_t v = 0; v < a.n(); ++v)
      seed_a[v] = seed_a[v] * 2 + (colors_a->color[v] == Color::Blue ? 1 : 0);
    for (uint32_t v = 0; v < b.n(); ++v)
      seed_b[v] = seed_b[v] * 2 + (colors_b->color[v] == Color::Blue ? 1 : 0);
  }
  auto ca = detail::refine_colors(a, seed_a);
  auto cb = detail::refine_colors(b, seed_b);
  {
    auto ha = ca, hb = cb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return std::nullopt;
  }

  // match rarest colors first
  std::map<uint32_t, uint32_t> freq;
  for (uint32_t c : ca) ++freq[c];
  std::vector<uint32_t> order(a.n());
  for (uint32_t v = 0; v < a.n(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](uint32_t x, uint32_t y) {
    auto kx = std::make_tuple(freq[ca[x]], ca[x], x);
    auto ky = std::make_tuple(freq[ca[y]], ca[y], y);
    return kx < ky;
  });

  std::vector<int> map_ab(a.n(), -1), map_ba(b.n(), -1);
  if (!detail::iso_backtrack(a, b, ca, cb, order, 0, map_ab, map_ba)) return std::nullopt;
  GraphIsomorphism iso;
  iso.mapping.assign(a.n(), 0);
  for (uint32_t v = 0; v < a.n(); ++v) iso.mapping[v] = static_cast<uint32_t>(map_ab[v]);
  return iso;
}

inline bool isomorphism_valid(const SimplicialGraph& a, const SimplicialGraph& b,
                              const GraphIsomorphism& iso) {
  if (iso.mapping.size() != a.n() || a.n() != b.n()) return false;
  std::vector<char> used(b.n(), 0);
  for (uint32_t v : iso.mapping) {
    if (v >= b.n() || used[v]) return false;
    used[v] = 1;
  }
  for (uint32_t u = 0; u < a.n(); ++u)
    for (uint32_t v = u + 1; v < a.n(); ++v)
      if (a.adjacent(u, v) != b.adjacent(iso.mapping[u], iso.mapping[v])) return false;
  return true;
}

}  // namespace racg

#endif  // RACG_GRAPH_HPP
