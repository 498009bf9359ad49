#ifndef QUATGRAPHS_GRAPHS_HPP
#define QUATGRAPHS_GRAPHS_HPP

#include "quatgraphs/brandt.hpp"

#include <string>
#include <vector>

namespace quatgraphs {

struct GraphEdge {
  int from = 0;
  int to = 0;
  long long weight = 1;        // e(U) on little/enhanced edges
  long long multiplicity = 1;  // edge-class count on big-graph records
  int opposite = -1;           // edge id, -1 when the graph has no opposites
  bool half = false;           // opposite(e) = e
};

struct WeightedGraph {
  std::string kind;  // "big", "little", "enhanced"
  int g = 0;
  long long ell = 0;
  long long p = 0;
  bool has_opposites = false;
  std::vector<long long> vertex_weights;
  std::vector<GraphEdge> edges;

  int vertex_count() const { return (int)vertex_weights.size(); }
  IntMat adjacency() const;
  RatMat weighted_adjacency() const;
};

// Adjacency equals the Brandt matrix; vertex weights 1; one edge record per
// ordered pair with positive entry, carrying the multiplicity.
WeightedGraph big_graph(const ClassSet& classes, const BrandtMatrix& B);

// Vertices weighted by e_j; edges are two-sided isometry orbits with weight
// the orbit stabilizer size; opposites via the dual solution
// M -> H_dst^{-1} M^dagger H_src (conjugation of lattice elements for g = 1).
// Checks on construction that the opposite map is a weight-preserving
// involution and that the weighted adjacency reproduces B exactly.
WeightedGraph little_graph(const ClassSet& classes, const BrandtMatrix& B);

// Bipartite double cover of the little graph: every edge lifts to two, the
// lift pairing has no half-edges, weights inherited.
WeightedGraph enhanced_graph(const WeightedGraph& little);

// Undirected reachability through opposites for little/enhanced graphs,
// two-sided reachability for the directed big graph.
bool is_connected(const WeightedGraph& G);
bool is_bipartite(const WeightedGraph& G);

std::string graph_to_dot(const WeightedGraph& G);
std::string graph_to_json(const WeightedGraph& G);

}  // namespace quatgraphs

#endif
