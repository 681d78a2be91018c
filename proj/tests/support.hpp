#pragma once

#include <random>

#include "oracle.hpp"
#include "wsat/wsat.hpp"

namespace testing_support {

using namespace wsat;

inline oracle::Edge to_edge(Mask e) { return vertices_of(e); }

inline oracle::EdgeSet edge_set(const Hypergraph& g) {
  oracle::EdgeSet out;
  for (Mask e : g.edges()) out.insert(to_edge(e));
  return out;
}

inline oracle::Setting setting_of(const Hypergraph& host, const Pattern& p) {
  oracle::Setting s;
  s.host_vertices = vertices_of(host.vertices());
  for (Mask e : host.edges()) s.host_edges.push_back(to_edge(e));
  for (Mask e : p.graph().edges()) s.pattern_edges.push_back(to_edge(e));
  s.pattern_order = p.order();
  s.directed = p.is_directed();
  if (s.directed) {
    const auto& parts = host.partition()->parts();
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (Vertex v : parts[i]) s.host_class[v] = static_cast<int>(i);
    for (std::size_t i = 0; i < p.profile().size(); ++i)
      for (int k = 0; k < p.profile()[i]; ++k) s.pattern_class.push_back(static_cast<int>(i));
  }
  return s;
}

inline Hypergraph random_subgraph(const Hypergraph& host, std::mt19937_64& rng, double keep) {
  std::bernoulli_distribution coin(keep);
  std::vector<Mask> edges;
  for (Mask e : host.edges())
    if (coin(rng)) edges.push_back(e);
  return host.with_edges(edges);
}

inline oracle::Dense dense_of(const Multivector<Rational>& x) {
  oracle::Dense d(x.ground());
  for (const auto& [set, c] : x.terms()) d.c[set] = c;
  return d;
}

inline Hypergraph graph_from(int q, int n, const std::vector<std::vector<Vertex>>& edges) {
  std::vector<Mask> es;
  for (const auto& e : edges) es.push_back(mask_of(e));
  return Hypergraph(q, low_bits(n), es);
}

// K_{2,2} as a 2-graph on 0..3
inline Hypergraph c4() { return graph_from(2, 4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

}  // namespace testing_support
