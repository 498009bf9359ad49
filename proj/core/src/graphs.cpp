#include "quatgraphs/graphs.hpp"

#include "quatgraphs/isometry.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace quatgraphs {

IntMat WeightedGraph::adjacency() const {
  int h = vertex_count();
  IntMat a(h, IntVec(h, 0));
  for (const GraphEdge& e : edges) a[e.from][e.to] += e.multiplicity;
  return a;
}

RatMat WeightedGraph::weighted_adjacency() const {
  int h = vertex_count();
  RatMat a(h, std::vector<Rat>(h, 0));
  for (const GraphEdge& e : edges)
    a[e.from][e.to] +=
        Rat(e.multiplicity) * Rat(vertex_weights[e.from], e.weight);
  return a;
}

WeightedGraph big_graph(const ClassSet& classes, const BrandtMatrix& B) {
  QG_REQUIRE(classes.h() == B.h && classes.g == B.g && classes.p == B.p,
             "class set and brandt matrix mismatch");
  WeightedGraph G;
  G.kind = "big";
  G.g = B.g;
  G.ell = B.n;
  G.p = B.p;
  G.has_opposites = false;
  G.vertex_weights.assign(B.h, 1);
  for (int i = 0; i < B.h; ++i)
    for (int j = 0; j < B.h; ++j) {
      if (B.entries[i][j] == 0) continue;
      GraphEdge e;
      e.from = i;
      e.to = j;
      e.weight = 1;
      QG_CHECK(B.entries[i][j] <= Int(1) << 62, "multiplicity overflow");
      e.multiplicity = (long long)B.entries[i][j];
      G.edges.push_back(e);
    }
  return G;
}

namespace {

std::string ratquat_key(const RatQuat& x) {
  std::string s;
  for (int m = 0; m < 4; ++m) {
    s += num(x.c[m]).str();
    s += '/';
    s += den(x.c[m]).str();
    s += ',';
  }
  return s;
}

struct LittleEdgeData {
  int from = 0, to = 0;
  long long stabilizer = 0;
  int orbit_index = 0;  // within the (from, to) pair
};

}  // namespace

WeightedGraph little_graph(const ClassSet& classes, const BrandtMatrix& B) {
  QG_REQUIRE(classes.h() == B.h && classes.g == B.g && classes.p == B.p,
             "class set and brandt matrix mismatch");
  const int h = classes.h();
  const long long n = B.n;

  WeightedGraph G;
  G.kind = "little";
  G.g = classes.g;
  G.ell = n;
  G.p = classes.p;
  G.has_opposites = true;
  G.vertex_weights = classes.aut_counts;

  // Per ordered pair: orbit list and element-key -> orbit index map.
  std::vector<std::vector<LittleEdgeData>> pair_orbits((size_t)h * h);
  std::vector<std::unordered_map<std::string, int>> pair_orbit_of((size_t)h * h);
  // Dual of each orbit representative, resolved to an orbit of the
  // transposed pair after all orbits exist.
  std::vector<std::vector<std::string>> pair_dual_keys((size_t)h * h);

  if (classes.g == 1) {
    const QuaternionAlgebra& A = classes.order->alg;
    std::vector<std::vector<RatQuat>> units(h);
    for (int i = 0; i < h; ++i) units[i] = order_units(*classes.left_orders[i]);
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < h; ++j) {
        IdealLattice L = ideal_product(classes.ideal_reps[i],
                                       ideal_conjugate(classes.ideal_reps[j]));
        std::vector<RatQuat> sols;
        for (auto& v : short_vectors(norm_form(L), Rat(n))) {
          RatQuat x;
          for (int k = 0; k < 4; ++k)
            if (v[k] != 0) x = q_add(x, q_scale(Rat(v[k]), L.basis_ambient(k)));
          sols.push_back(x);
        }
        QG_CHECK((long long)sols.size() ==
                     (long long)classes.aut_counts[j] * (long long)B.entries[i][j],
                 "solution count disagrees with brandt entry");
        auto dec = orbit_decomposition(
            sols, units[i], units[j],
            [&](const RatQuat& l, const RatQuat& x, const RatQuat& r) {
              return q_mul(q_mul(l, x, A), r, A);
            },
            ratquat_key);
        size_t slot = (size_t)i * h + j;
        for (size_t o = 0; o < dec.orbits.size(); ++o) {
          LittleEdgeData d;
          d.from = i;
          d.to = j;
          d.stabilizer = dec.orbits[o].stabilizer;
          d.orbit_index = (int)o;
          pair_orbits[slot].push_back(d);
          // Opposite edge: the conjugate element lies in I_j conj(I_i).
          pair_dual_keys[slot].push_back(
              ratquat_key(q_conj(dec.orbits[o].representative)));
        }
        for (size_t e = 0; e < sols.size(); ++e)
          pair_orbit_of[slot].emplace(ratquat_key(sols[e]), dec.orbit_of[e]);
      }
  } else {
    std::vector<std::vector<OrderMat>> auts(h);
    std::vector<OrderMat> inverses(h);
    for (int i = 0; i < h; ++i) {
      auts[i] = automorphism_group(classes.form_reps[i]);
      QG_CHECK((long long)auts[i].size() == classes.aut_counts[i],
               "automorphism count mismatch");
      inverses[i] = unimodular_inverse(classes.form_reps[i]);
    }
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < h; ++j) {
        std::vector<OrderMat> sols =
            isometry_solutions(classes.form_reps[i], classes.form_reps[j], n);
        QG_CHECK((long long)sols.size() ==
                     (long long)classes.aut_counts[j] * (long long)B.entries[i][j],
                 "solution count disagrees with brandt entry");
        auto dec = orbit_decomposition(
            sols, auts[i], auts[j],
            [](const OrderMat& l, const OrderMat& x, const OrderMat& r) {
              return om_mul(om_mul(l, x), r);
            },
            order_mat_key);
        size_t slot = (size_t)i * h + j;
        for (size_t o = 0; o < dec.orbits.size(); ++o) {
          LittleEdgeData d;
          d.from = i;
          d.to = j;
          d.stabilizer = dec.orbits[o].stabilizer;
          d.orbit_index = (int)o;
          pair_orbits[slot].push_back(d);
          // Dual solution H_j^{-1} M^dagger H_i realizes the opposite edge.
          OrderMat dual = om_mul(om_mul(inverses[j], om_dagger(dec.orbits[o].representative)),
                                 classes.form_reps[i].mat);
          pair_dual_keys[slot].push_back(order_mat_key(dual));
        }
        for (size_t e = 0; e < sols.size(); ++e)
          pair_orbit_of[slot].emplace(order_mat_key(sols[e]), dec.orbit_of[e]);
      }
  }

  // Assign edge ids in (i, j, orbit) order and resolve opposites.
  std::vector<std::vector<int>> edge_id((size_t)h * h);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      size_t slot = (size_t)i * h + j;
      edge_id[slot].resize(pair_orbits[slot].size());
      for (size_t o = 0; o < pair_orbits[slot].size(); ++o) {
        GraphEdge e;
        e.from = i;
        e.to = j;
        e.weight = pair_orbits[slot][o].stabilizer;
        e.multiplicity = 1;
        edge_id[slot][o] = (int)G.edges.size();
        G.edges.push_back(e);
      }
    }
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      size_t slot = (size_t)i * h + j;
      size_t tslot = (size_t)j * h + i;
      for (size_t o = 0; o < pair_orbits[slot].size(); ++o) {
        auto it = pair_orbit_of[tslot].find(pair_dual_keys[slot][o]);
        QG_CHECK(it != pair_orbit_of[tslot].end(),
                 "dual map left the solution set: opposite pairing failed");
        G.edges[edge_id[slot][o]].opposite = edge_id[tslot][it->second];
      }
    }
  for (int id = 0; id < (int)G.edges.size(); ++id) {
    GraphEdge& e = G.edges[id];
    QG_CHECK(e.opposite >= 0, "edge without opposite");
    const GraphEdge& o = G.edges[e.opposite];
    QG_CHECK(o.opposite == id, "opposite pairing is not an involution");
    QG_CHECK(o.weight == e.weight, "opposite pairing does not preserve weights");
    QG_CHECK(o.from == e.to && o.to == e.from, "opposite pairing misdirected");
    e.half = (e.opposite == id);
    // Edge weight divides the origin vertex weight.
    QG_CHECK(G.vertex_weights[e.from] % e.weight == 0,
             "edge weight does not divide origin weight");
  }

  // Weighted adjacency must reproduce the Brandt matrix exactly.
  RatMat aw = G.weighted_adjacency();
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j)
      QG_CHECK(aw[i][j] == Rat(B.entries[i][j]),
               "weighted adjacency of the little graph differs from the brandt matrix");
  return G;
}

WeightedGraph enhanced_graph(const WeightedGraph& little) {
  QG_REQUIRE(little.kind == "little", "enhanced graph is built from the little graph");
  const int h = little.vertex_count();
  WeightedGraph G;
  G.kind = "enhanced";
  G.g = little.g;
  G.ell = little.ell;
  G.p = little.p;
  G.has_opposites = true;
  G.vertex_weights = little.vertex_weights;
  G.vertex_weights.insert(G.vertex_weights.end(), little.vertex_weights.begin(),
                          little.vertex_weights.end());
  // Edge 2k is the lift v_i -> v_{h+j}; edge 2k+1 the lift v_{h+i} -> v_j.
  for (int k = 0; k < (int)little.edges.size(); ++k) {
    const GraphEdge& e = little.edges[k];
    GraphEdge a = e, b = e;
    a.to = e.to + h;
    b.from = e.from + h;
    a.opposite = 2 * e.opposite + 1;
    b.opposite = 2 * e.opposite;
    a.half = b.half = false;
    G.edges.push_back(a);
    G.edges.push_back(b);
  }
  for (int id = 0; id < (int)G.edges.size(); ++id) {
    const GraphEdge& e = G.edges[id];
    QG_CHECK(G.edges[e.opposite].opposite == id, "cover pairing is not an involution");
    QG_CHECK(e.opposite != id, "bipartite double cover produced a half-edge");
  }
  return G;
}

bool is_connected(const WeightedGraph& G) {
  const int h = G.vertex_count();
  if (h == 0) return true;
  auto reach = [&](bool forward) {
    std::vector<char> seen(h, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const GraphEdge& e : G.edges) {
        int a = forward ? e.from : e.to;
        int b = forward ? e.to : e.from;
        if (a == v && !seen[b]) {
          seen[b] = 1;
          stack.push_back(b);
        }
      }
    }
    for (char c : seen)
      if (!c) return false;
    return true;
  };
  if (G.has_opposites) return reach(true);  // opposites make reachability symmetric
  return reach(true) && reach(false);
}

bool is_bipartite(const WeightedGraph& G) {
  const int h = G.vertex_count();
  std::vector<int> color(h, -1);
  for (int start = 0; start < h; ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    std::vector<int> stack = {start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const GraphEdge& e : G.edges) {
        int other = -1;
        if (e.from == v)
          other = e.to;
        else if (e.to == v)
          other = e.from;
        else
          continue;
        if (other == v) return false;  // loop
        if (color[other] < 0) {
          color[other] = 1 - color[v];
          stack.push_back(other);
        } else if (color[other] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::string graph_to_dot(const WeightedGraph& G) {
  std::string s = "digraph \"" + G.kind + "_g" + std::to_string(G.g) + "_l" +
                  std::to_string(G.ell) + "_p" + std::to_string(G.p) + "\" {\n";
  for (int v = 0; v < G.vertex_count(); ++v)
    s += "  v" + std::to_string(v) + " [label=\"v" + std::to_string(v) +
         " w=" + std::to_string(G.vertex_weights[v]) + "\"];\n";
  for (int id = 0; id < (int)G.edges.size(); ++id) {
    const GraphEdge& e = G.edges[id];
    s += "  v" + std::to_string(e.from) + " -> v" + std::to_string(e.to) +
         " [label=\"";
    if (G.has_opposites) {
      s += "w=" + std::to_string(e.weight) + " opp=e" + std::to_string(e.opposite);
      if (e.half) s += " half";
    } else {
      s += "m=" + std::to_string(e.multiplicity);
    }
    s += "\"";
    if (e.half) s += ", style=dashed";
    s += "];\n";
  }
  s += "}\n";
  return s;
}

std::string graph_to_json(const WeightedGraph& G) {
  nlohmann::json j;
  j["format_version"] = 1;
  j["kind"] = G.kind;
  j["g"] = G.g;
  j["l"] = G.ell;
  j["p"] = G.p;
  nlohmann::json verts = nlohmann::json::array();
  for (int v = 0; v < G.vertex_count(); ++v)
    verts.push_back({{"id", v}, {"weight", G.vertex_weights[v]}});
  j["vertices"] = verts;
  nlohmann::json edges = nlohmann::json::array();
  for (int id = 0; id < (int)G.edges.size(); ++id) {
    const GraphEdge& e = G.edges[id];
    nlohmann::json je = {{"id", id},     {"from", e.from},
                         {"to", e.to},   {"weight", e.weight},
                         {"multiplicity", e.multiplicity},
                         {"half", e.half}};
    if (G.has_opposites)
      je["opposite"] = e.opposite;
    else
      je["opposite"] = nullptr;
    edges.push_back(je);
  }
  j["edges"] = edges;
  return j.dump(2) + "\n";
}

}  // namespace quatgraphs
