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

#include <catch2/catch_amalgamated.hpp>

#include "racg/graph.hpp"
#include "test_support.hpp"

using namespace racg;
using namespace racg::testing;

static const char* kC5Doc = R"({
  "vertices": ["v1", "v2", "v3", "v4", "v5"],
  "edges": [["v1","v2"], ["v2","v3"], ["v3","v4"], ["v4","v5"], ["v5","v1"]]
})";

TEST_CASE("parse_graph accepts the five cycle") {
  auto parsed = parse_graph(kC5Doc);
  CHECK(parsed.graph.n() == 5);
  CHECK(parsed.graph.edge_count() == 5);
  CHECK(parsed.graph.vertex_names() ==
        std::vector<std::string>{"v1", "v2", "v3", "v4", "v5"});
  CHECK(parsed.graph == make_c5());
  CHECK_FALSE(parsed.colors.has_value());
}

TEST_CASE("parse_graph degenerate and error cases") {
  auto single = parse_graph(R"({"vertices": ["x"], "edges": []})");
  CHECK(single.graph.n() == 1);
  CHECK(single.graph.edge_count() == 0);

  CHECK_THROWS_MATCHES(parse_graph(R"({"vertices": ["v1"], "edges": [["v1","v1"]]})"), Error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("loop")));
  CHECK_THROWS_AS(
      parse_graph(R"({"vertices": ["a","b"], "edges": [["a","b"],["b","a"]]})"), Error);
  CHECK_THROWS_AS(parse_graph(R"({"vertices": ["a"], "edges": [["a","zz"]]})"), Error);
  CHECK_THROWS_AS(parse_graph(R"({"vertices": [], "edges": [], "extra": 1})"), Error);
  CHECK_THROWS_AS(parse_graph("{"), Error);
  CHECK_THROWS_AS(parse_graph(R"({"vertices": ["a", "a"], "edges": []})"), Error);
}

TEST_CASE("parse_graph colored vertices") {
  auto ok = parse_graph(R"({
    "vertices": [{"name":"a","color":"red"}, {"name":"b","color":"blue"}],
    "edges": [["a","b"]]})");
  REQUIRE(ok.colors.has_value());
  CHECK(ok.colors->color[0] == Color::Red);
  CHECK(ok.colors->color[1] == Color::Blue);

  CHECK_THROWS_AS(parse_graph(R"({
    "vertices": [{"name":"a","color":"red"}, {"name":"b","color":"red"}],
    "edges": [["a","b"]]})"),
                  Error);
  CHECK_THROWS_AS(parse_graph(R"({
    "vertices": [{"name":"a","color":"red"}, "b"],
    "edges": [["a","b"]]})"),
                  Error);
}

TEST_CASE("serialize round trips and DOT output") {
  auto c5 = make_c5();
  auto again = parse_graph(serialize_graph_json(c5));
  CHECK(again.graph == c5);

  auto heawood = make_heawood();
  auto dot = serialize_graph_dot(heawood);
  CHECK(std::count(dot.begin(), dot.end(), ';') == 14 + 21);
  CHECK(dot.find("graph G {") == 0);

  auto bp = find_bipartition(heawood);
  REQUIRE(bp.has_value());
  auto colored = serialize_graph_dot(heawood, bp);
  CHECK(colored.find("[color=red]") != std::string::npos);
  CHECK(colored.find("[color=blue]") != std::string::npos);

  auto round = parse_graph(serialize_graph_json(heawood, bp));
  REQUIRE(round.colors.has_value());
  CHECK(round.graph == heawood);
}

TEST_CASE("graph metrics on named graphs") {
  auto hm = graph_metrics(make_heawood());
  CHECK(hm.connected);
  CHECK(hm.girth == 6);
  CHECK(hm.diameter == 3);
  CHECK(hm.bipartition.has_value());
  CHECK(hm.degree_multiset == std::vector<uint32_t>(14, 3));
  CHECK_FALSE(hm.has_induced_4cycle);

  auto c4 = graph_metrics(make_cycle(4));
  CHECK(c4.has_induced_4cycle);
  CHECK(c4.girth == 4);

  auto c5 = graph_metrics(make_c5());
  CHECK(c5.girth == 5);
  CHECK(c5.diameter == 2);
  CHECK_FALSE(c5.bipartition.has_value());
  CHECK(c5.triangle_free);

  auto pet = graph_metrics(make_petersen());
  CHECK(pet.girth == 5);
  CHECK_FALSE(pet.bipartition.has_value());
}

TEST_CASE("graph metrics on forests and disconnected graphs") {
  auto path = graph_metrics(make_path(4));
  CHECK_FALSE(path.girth.has_value());
  CHECK(path.diameter == 3);

  SimplicialGraph two({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
  auto m = graph_metrics(two);
  CHECK_FALSE(m.connected);
  CHECK_FALSE(m.diameter.has_value());
  REQUIRE(m.components.size() == 2);
  CHECK(m.components[0].diameter == 1);
}

TEST_CASE("girth and diameter agree with oracles") {
  std::mt19937 rng(20260810);
  std::vector<SimplicialGraph> samples{make_c5(),      make_cycle(6),  make_heawood(),
                                       make_petersen(), make_path(7),  make_tutte_coxeter(),
                                       make_complete_bipartite(3, 4)};
  for (int i = 0; i < 30; ++i) samples.push_back(random_connected_bipartite(rng, 12));
  for (const auto& g : samples) {
    auto m = graph_metrics(g);
    CHECK(m.girth == oracle_girth(g));
    if (m.connected) CHECK(m.diameter == oracle_diameter(g));
  }
}

TEST_CASE("join decomposition") {
  auto c5_factors = join_decompose(make_c5());
  REQUIRE(c5_factors.size() == 1);
  CHECK(c5_factors[0] == make_c5());

  SimplicialGraph k2({"v1", "v2"}, {{"v1", "v2"}});
  auto pts = join_decompose(k2);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].n() == 1);
  CHECK(pts[1].n() == 1);
  CHECK(pts[0].edge_count() == 0);

  auto joined = graph_join({make_heawood("p", "l"), make_tutte_coxeter()});
  auto factors = join_decompose(joined);
  REQUIRE(factors.size() == 2);
  // canonical order puts the 14-vertex factor first
  CHECK(factors[0].n() == 14);
  CHECK(factors[1].n() == 30);
  CHECK(graph_isomorphism(factors[0], make_heawood()).has_value());
  CHECK(graph_isomorphism(factors[1], make_tutte_coxeter()).has_value());
}

TEST_CASE("join then re-join is isomorphic to the input") {
  std::mt19937 rng(7);
  std::vector<SimplicialGraph> samples{make_c5(), make_heawood(),
                                       graph_join({make_cycle(6, "x"), make_cycle(4, "y")}),
                                       make_complete_bipartite(2, 3)};
  for (int i = 0; i < 10; ++i) samples.push_back(random_connected_bipartite(rng, 8));
  for (const auto& g : samples) {
    auto factors = join_decompose(g);
    for (const auto& f : factors) {
      // factor complements stay connected
      auto sub = join_decompose(f);
      CHECK(sub.size() == 1);
    }
    auto rejoined = graph_join(factors);
    auto iso = graph_isomorphism(rejoined, g);
    REQUIRE(iso.has_value());
    CHECK(isomorphism_valid(rejoined, g, *iso));
  }
}

TEST_CASE("graph isomorphism witnesses") {
  std::mt19937 rng(99);
  auto heawood = make_heawood();
  auto renamed = relabel(heawood, rng);
  auto iso = graph_isomorphism(heawood, renamed);
  REQUIRE(iso.has_value());
  CHECK(isomorphism_valid(heawood, renamed, *iso));

  CHECK_FALSE(graph_isomorphism(heawood, make_tutte_coxeter()).has_value());

  auto c5 = make_c5();
  SimplicialGraph reversed({"v1", "v2", "v3", "v4", "v5"},
                           {{"v5", "v4"}, {"v4", "v3"}, {"v3", "v2"}, {"v2", "v1"}, {"v1", "v5"}});
  auto c5iso = graph_isomorphism(c5, reversed);
  REQUIRE(c5iso.has_value());
  CHECK(isomorphism_valid(c5, reversed, *c5iso));

  // same size, different structure
  CHECK_FALSE(graph_isomorphism(make_cycle(6), make_complete_bipartite(3, 3)).has_value());
}

TEST_CASE("isomorphism is symmetric") {
  std::mt19937 rng(4242);
  std::vector<SimplicialGraph> samples{make_heawood(), make_petersen(), make_cycle(8)};
  for (int i = 0; i < 8; ++i) samples.push_back(random_connected_bipartite(rng, 10));
  for (const auto& a : samples) {
    auto b = relabel(a, rng);
    auto fwd = graph_isomorphism(a, b);
    auto bwd = graph_isomorphism(b, a);
    REQUIRE(fwd.has_value());
    REQUIRE(bwd.has_value());
    CHECK(isomorphism_valid(a, b, *fwd));
    CHECK(isomorphism_valid(b, a, *bwd));
  }
  // non-isomorphic stays absent both ways
  CHECK_FALSE(graph_isomorphism(make_cycle(6), make_cycle(7).induced({0, 1, 2, 3, 4, 5})).has_value());
}

TEST_CASE("color-respecting isomorphism option") {
  SimplicialGraph a({"a", "b"}, {{"a", "b"}});
  SimplicialGraph b({"x", "y"}, {{"x", "y"}});
  Bipartition ca{{Color::Red, Color::Blue}};
  Bipartition cb_same{{Color::Red, Color::Blue}};
  auto iso = graph_isomorphism(a, b, true, ca, cb_same);
  REQUIRE(iso.has_value());
  CHECK(iso->mapping == std::vector<uint32_t>{0, 1});
}

TEST_CASE("bipartitions are proper whenever returned") {
  std::mt19937 rng(11);
  std::vector<SimplicialGraph> samples{make_heawood(), make_tutte_coxeter(),
                                       make_complete_bipartite(3, 4), make_cycle(6)};
  for (int i = 0; i < 20; ++i) samples.push_back(random_connected_bipartite(rng, 14));
  for (const auto& g : samples) {
    auto bp = find_bipartition(g);
    REQUIRE(bp.has_value());
    for (auto [u, v] : g.edges()) CHECK(bp->color[u] != bp->color[v]);
  }
}
