#include "quatgraphs/graphs.hpp"

#include "doctest.h"

using namespace quatgraphs;

namespace {

struct Built {
  ClassSet cs;
  BrandtMatrix B;
  WeightedGraph big, little, enhanced;
};

Built build(int g, long long ell, long long p) {
  Built out{compute_class_set(g, p), {}, {}, {}, {}};
  out.B = brandt(out.cs, ell);
  out.big = big_graph(out.cs, out.B);
  out.little = little_graph(out.cs, out.B);
  out.enhanced = enhanced_graph(out.little);
  return out;
}

}  // namespace

TEST_CASE("single vertex with loops: connected, not bipartite") {
  Built b = build(1, 2, 7);
  CHECK(b.big.vertex_count() == 1);
  CHECK(int_eq(b.big.adjacency(), IntMat{{Int(3)}}));
  CHECK(is_connected(b.big));
  CHECK_FALSE(is_bipartite(b.big));
}

TEST_CASE("weighted adjacency of the little graph equals the big adjacency") {
  for (auto [g, ell, p] : std::vector<std::tuple<int, long long, long long>>{
           {1, 2, 7}, {1, 2, 11}, {1, 3, 11}, {2, 2, 7}, {2, 3, 7}}) {
    CAPTURE(g);
    CAPTURE(ell);
    CAPTURE(p);
    Built b = build(g, ell, p);
    RatMat aw = b.little.weighted_adjacency();
    IntMat ad = b.big.adjacency();
    REQUIRE(int_eq(ad, b.B.entries));
    for (int i = 0; i < b.cs.h(); ++i)
      for (int j = 0; j < b.cs.h(); ++j) CHECK(aw[i][j] == Rat(ad[i][j]));
  }
}

TEST_CASE("opposite pairing is a weight-preserving involution") {
  Built b = build(1, 2, 11);
  bool any_half = false;
  for (int id = 0; id < (int)b.little.edges.size(); ++id) {
    const GraphEdge& e = b.little.edges[id];
    REQUIRE(e.opposite >= 0);
    const GraphEdge& o = b.little.edges[e.opposite];
    CHECK(o.opposite == id);
    CHECK(o.weight == e.weight);
    CHECK(o.from == e.to);
    CHECK(o.to == e.from);
    CHECK(e.half == (e.opposite == id));
    if (e.half) any_half = true;
    // edge weight divides both endpoint weights
    CHECK(b.little.vertex_weights[e.from] % e.weight == 0);
    CHECK(b.little.vertex_weights[e.to] % e.weight == 0);
  }
  (void)any_half;
}

TEST_CASE("out-degree of the little graph in weighted units") {
  Built b = build(2, 2, 7);
  // sum over edges out of i of w(v_i)/w(e) = regular degree
  for (int i = 0; i < b.cs.h(); ++i) {
    Rat s = 0;
    for (const GraphEdge& e : b.little.edges)
      if (e.from == i) s += Rat(b.little.vertex_weights[i], e.weight);
    CHECK(s == Rat(regular_degree(2, 2)));
  }
}

TEST_CASE("enhanced graph is the bipartite double cover") {
  for (auto [g, ell, p] : std::vector<std::tuple<int, long long, long long>>{
           {1, 2, 7}, {1, 2, 11}, {2, 2, 7}}) {
    CAPTURE(g);
    CAPTURE(ell);
    CAPTURE(p);
    Built b = build(g, ell, p);
    const int h = b.cs.h();
    CHECK(b.enhanced.vertex_count() == 2 * h);
    CHECK(b.enhanced.edges.size() == 2 * b.little.edges.size());
    for (const GraphEdge& e : b.enhanced.edges) CHECK_FALSE(e.half);
    // block anti-diagonal weighted adjacency
    RatMat aw = b.enhanced.weighted_adjacency();
    for (int i = 0; i < 2 * h; ++i)
      for (int j = 0; j < 2 * h; ++j) {
        bool cross = (i < h) != (j < h);
        if (!cross) {
          CHECK(aw[i][j] == 0);
        } else {
          int bi = i % h, bj = j % h;
          CHECK(aw[i][j] == Rat(b.B.entries[bi][bj]));
        }
      }
    CHECK(is_bipartite(b.enhanced));
    CHECK(is_connected(b.enhanced));
  }
}

TEST_CASE("double cover of a single vertex with a loop") {
  Built b = build(1, 2, 7);
  CHECK(b.enhanced.vertex_count() == 2);
  // every enhanced edge joins the two sides
  for (const GraphEdge& e : b.enhanced.edges)
    CHECK(((e.from < 1) != (e.to < 1)));
  CHECK(is_bipartite(b.enhanced));
  CHECK(is_connected(b.enhanced));
}

TEST_CASE("big and little graphs are connected and not bipartite") {
  for (auto [g, ell, p] : std::vector<std::tuple<int, long long, long long>>{
           {1, 2, 11}, {1, 3, 13}, {2, 2, 11}, {2, 3, 5}}) {
    CAPTURE(g);
    CAPTURE(ell);
    CAPTURE(p);
    Built b = build(g, ell, p);
    CHECK(is_connected(b.big));
    CHECK(is_connected(b.little));
    CHECK_FALSE(is_bipartite(b.big));
    CHECK_FALSE(is_bipartite(b.little));
  }
}

TEST_CASE("dot and json output are deterministic") {
  Built b = build(1, 2, 11);
  CHECK(graph_to_dot(b.little) == graph_to_dot(little_graph(b.cs, b.B)));
  std::string js = graph_to_json(b.little);
  CHECK(js.find("\"kind\": \"little\"") != std::string::npos);
  CHECK(js.find("\"vertices\"") != std::string::npos);
  std::string dot = graph_to_dot(b.big);
  CHECK(dot.rfind("digraph", 0) == 0);
}
