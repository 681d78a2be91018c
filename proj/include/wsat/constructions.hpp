#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "wsat/formulas.hpp"
#include "wsat/hypergraph.hpp"
#include "wsat/pattern.hpp"
#include "wsat/rng.hpp"
#include "wsat/saturation.hpp"

namespace wsat {

// ---------------------------------------------------------------------------
// Multipartite upper-bound construction

struct LambdaPolicy {
  enum class Rule { LexLeast, SeededRandom };
  Rule rule = Rule::LexLeast;
  std::uint64_t seed = 0;

  static LambdaPolicy lex_least() { return {}; }
  static LambdaPolicy seeded_random(std::uint64_t seed) { return {Rule::SeededRandom, seed}; }
};

struct ConstructionOutput {
  int q = 0;
  std::vector<int> n, r;
  Hypergraph host;
  Hypergraph graph;
  BigInt predicted_size;
  Mask base_R = 0;
  // (S, λ(S)) for every admissible S, grouped by |S| ascending
  std::vector<std::vector<std::pair<Mask, Mask>>> layers;
};

/// R = first r_i vertices of each class; every partite S ⊆ N\R with |S| ≤ q
/// loses one edge λ(S) = S ∪ T with T ⊆ R.
inline ConstructionOutput upper_bound_construction(int q, const std::vector<int>& n, const std::vector<int>& r,
                                                   const LambdaPolicy& policy = {}) {
  check_partite_params(q, n, r);
  ConstructionOutput out;
  out.q = q;
  out.n = n;
  out.r = r;
  out.host = complete_multipartite(q, n);
  const auto& parts = *out.host.partition();
  const int d = parts.num_classes();

  std::vector<Mask> r_part(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < r[i]; ++j) r_part[i] |= bit(parts.part(i)[j]);
    out.base_R |= r_part[i];
  }

  std::vector<Mask> outside(d);
  for (int i = 0; i < d; ++i) outside[i] = parts.part_mask(i) & ~r_part[i];

  out.layers.assign(q + 1, {});
  std::set<Mask> removed;
  std::size_t index = 0;
  for (int k = 0; k <= q; ++k) {
    auto pick = [&](Mask s) {
      Mask used_classes = 0;
      for (int i = 0; i < d; ++i)
        if (s & parts.part_mask(i)) used_classes |= bit(i);
      std::vector<int> free;
      for (int i = 0; i < d; ++i)
        if (!(used_classes & bit(i))) free.push_back(i);
      const int need = q - k;
      Mask t = 0;
      if (policy.rule == LambdaPolicy::Rule::LexLeast) {
        for (int j = 0; j < need; ++j) t |= bit(lowest(r_part[free[j]]));
      } else {
        Rng rng(derive_seed(policy.seed, {static_cast<std::uint64_t>(index)}));
        shuffle(free, rng);
        for (int j = 0; j < need; ++j) {
          const auto cands = vertices_of(r_part[free[j]]);
          t |= bit(cands[uniform_below(rng, cands.size())]);
        }
      }
      ++index;
      const Mask edge = s | t;
      removed.insert(edge);
      out.layers[k].emplace_back(s, edge);
    };
    std::vector<Mask> outside_sets;
    for (Mask o : outside) outside_sets.push_back(o);
    if (k == 0) {
      pick(0);
    } else {
      auto each = [&](Mask s) {
        pick(s);
        return true;
      };
      detail::for_each_transversal(~Mask{0}, k, outside_sets, 0, 0, each);
    }
  }

  std::vector<Mask> kept;
  for (Mask e : out.host.edges())
    if (!removed.count(e)) kept.push_back(e);
  out.graph = out.host.with_edges(std::move(kept));
  out.predicted_size = mwsat_formula(q, n, r).value;
  return out;
}

/// The layered saturating sequence: λ(S) in order of |S|, each with the copy
/// R ∪ S trimmed back to r_i vertices per class (drop the first R-vertex of
/// every class that S meets).
inline std::vector<SaturationWitness> layered_sequence(const ConstructionOutput& out) {
  const auto& parts = *out.host.partition();
  std::vector<SaturationWitness> seq;
  for (const auto& layer : out.layers)
    for (const auto& [s, edge] : layer) {
      Mask copy = out.base_R | s;
      for (int i = 0; i < parts.num_classes(); ++i)
        if (s & parts.part_mask(i)) copy &= ~bit(lowest(out.base_R & parts.part_mask(i)));
      SaturationWitness w;
      w.edge = edge;
      w.copy = copy;
      for (Mask m : parts.part_masks()) w.part_assignment.push_back(copy & m);
      seq.push_back(std::move(w));
    }
  return seq;
}

// ---------------------------------------------------------------------------
// Base-case catalog: brute-forced minima keyed by (pattern, order)

class BaseCatalog {
 public:
  struct Entry {
    std::size_t value = 0;
    std::vector<Mask> edges;
  };

  static std::string key(const Hypergraph& pattern, int order) {
    std::ostringstream os;
    os << "q=" << pattern.arity() << ";H=";
    bool first = true;
    for (Mask e : pattern.edges()) {
      os << (first ? "" : ",") << "{";
      bool f2 = true;
      for (Vertex v : vertices_of(e)) os << (f2 ? "" : " ") << v, f2 = false;
      os << "}";
      first = false;
    }
    os << ";n=" << order;
    return os.str();
  }

  const Entry* find(const std::string& k) const {
    auto it = entries_.find(k);
    return it == entries_.end() ? nullptr : &it->second;
  }
  void put(const std::string& k, Entry e) { entries_[k] = std::move(e); }
  std::size_t size() const { return entries_.size(); }

  nlohmann::json to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, e] : entries_) {
      nlohmann::json edges = nlohmann::json::array();
      for (Mask m : e.edges) edges.push_back(vertices_of(m));
      j[k] = {{"value", e.value}, {"edges", edges}};
    }
    return j;
  }

  static BaseCatalog from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw InputError("catalog must be a JSON object");
    BaseCatalog c;
    for (auto it = j.begin(); it != j.end(); ++it) {
      Entry e;
      e.value = it->at("value").get<std::size_t>();
      for (const auto& edge : it->at("edges")) e.edges.push_back(mask_of(edge.get<std::vector<Vertex>>()));
      std::sort(e.edges.begin(), e.edges.end());
      if (e.edges.size() != e.value) throw InputError("catalog entry '" + it.key() + "': value differs from edge count");
      c.put(it.key(), std::move(e));
    }
    return c;
  }

  static BaseCatalog load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open catalog " + path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw InputError("catalog " + path + ": " + e.what());
    }
    return from_json(j);
  }

  void save(const std::string& path) const {
    std::ofstream out(path);
    out << to_json().dump(2) << "\n";
  }

 private:
  std::map<std::string, Entry> entries_;
};

/// Minimum weakly H-saturated q-graph in K^q_order (clique host), from the catalog or by brute force.
inline Hypergraph base_minimum(const Hypergraph& h, int order, BaseCatalog& catalog, const BruteForceBudget& budget = {}) {
  const Hypergraph pattern_graph = compact(h);
  const std::string k = BaseCatalog::key(pattern_graph, order);
  const Hypergraph host = complete_clique(pattern_graph.arity(), order);
  if (const auto* e = catalog.find(k)) return host.with_edges(e->edges);
  const auto bf = min_wsat_bruteforce(host, Pattern::explicit_graph(pattern_graph), budget);
  if (!bf.conclusive) throw BudgetExceeded("brute-force base case inconclusive: " + k);
  catalog.put(k, {bf.value, bf.witness.edges()});
  return bf.witness;
}

/// The vertex v1 whose link keeps δ*: lowest vertex of the first (q−1)-set of
/// minimum positive co-degree in colex order.
inline Vertex codegree_pivot(const Hypergraph& h) {
  const std::size_t delta = min_positive_codegree(h);
  for (const auto& [w, c] : positive_codegrees(h))
    if (c == delta) return w ? lowest(w) : lowest(h.vertices());
  throw std::logic_error("codegree_pivot: no minimizer");
}

/// Weakly H-saturated q-graph in K^q_n by the link recursion
/// G(n) = G(n−1) ∪ { e ∪ {n−1} : e ∈ G_link(n−1) }.
inline Hypergraph codegree_construction(const Hypergraph& h_in, int n, BaseCatalog& catalog, const BruteForceBudget& budget = {}) {
  if (h_in.empty()) throw InputError("codegree_construction: pattern has no edges");
  if (has_isolated_vertices(h_in)) throw InputError("codegree_construction: pattern has isolated vertices");
  const Hypergraph h = compact(h_in);
  const int order = h.num_vertices();
  const int q = h.arity();
  if (n < order) throw InputError("codegree_construction: n must be at least |V(H)|");
  if (n > kMaxVertices) throw InputError("codegree_construction: more than 64 vertices");

  const Hypergraph host = complete_clique(q, n);
  const Hypergraph base = base_minimum(h, order, catalog, budget);
  if (q == 1 || n == order) return host.with_edges(base.edges());

  const Hypergraph link_graph = compact(link(h, codegree_pivot(h)));
  const Hypergraph prev = codegree_construction(h, n - 1, catalog, budget);
  const Hypergraph lower = codegree_construction(link_graph, n - 1, catalog, budget);
  std::vector<Mask> edges = prev.edges();
  for (Mask e : lower.edges()) edges.push_back(e | bit(n - 1));
  return host.with_edges(std::move(edges));
}

// ---------------------------------------------------------------------------
// Partite recursion for K^d(r;d) in F^d_n = K^d(n;d)

struct TensorPartiteOutput {
  int d = 0, n = 0, r = 0;
  Hypergraph host;      // F^d_n
  Hypergraph product;   // K^d_[n] × K^d_[d]
  Hypergraph extras;    // E^d(n,H)
  Hypergraph graph;     // product ⊔ extras
};

namespace detail {

using Tuple = std::vector<int>;  // first coordinate per class

inline bool all_distinct(const Tuple& t) {
  std::vector<int> s = t;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

inline void for_each_tuple(int d, int m, const std::function<void(const Tuple&)>& f) {
  if (m <= 0) return;
  Tuple t(d, 0);
  while (true) {
    f(t);
    int i = d - 1;
    while (i >= 0 && ++t[i] == m) t[i--] = 0;
    if (i < 0) return;
  }
}

inline Tuple tuple_of(Mask e, int m) {
  Tuple t;
  for (Vertex v : vertices_of(e)) t.push_back(v % m);
  return t;
}

class ExtrasBuilder {
 public:
  const std::set<Tuple>& extras(int d, int m, int r) {
    const auto key = std::make_tuple(d, m, r);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::set<Tuple> out = compute(d, m, r);
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  // F minus the product part, i.e. every tuple with a repeated coordinate.
  static std::set<Tuple> everything(int d, int m) {
    std::set<Tuple> out;
    for_each_tuple(d, m, [&](const Tuple& t) {
      if (!all_distinct(t)) out.insert(t);
    });
    return out;
  }

  // Upper-bound construction on K^d(m;d) restricted to repeated-coordinate tuples.
  static std::set<Tuple> from_upper_bound(int d, int m, int r) {
    std::set<Tuple> out;
    const auto ub = upper_bound_construction(d, std::vector<int>(d, m), std::vector<int>(d, r));
    for (Mask e : ub.graph.edges()) {
      Tuple t = tuple_of(e, m);
      if (!all_distinct(t)) out.insert(std::move(t));
    }
    return out;
  }

  std::set<Tuple> compute(int d, int m, int r) {
    if (m < r) return everything(d, m);
    if (d == 2) return m >= 2 * r - 1 ? std::set<Tuple>{} : from_upper_bound(2, m, r);
    if (m <= std::max(r, 2)) return from_upper_bound(d, m, r);

    const int top = m - 1;
    std::set<Tuple> out = extras(d, m - 1, r);
    // E_i: a (d−1)-dimensional extras set with (top, i) inserted
    for (int i = 0; i < d; ++i)
      for (const Tuple& t : extras(d - 1, m - 1, r)) {
        Tuple u = t;
        u.insert(u.begin() + i, top);
        out.insert(std::move(u));
      }
    // E_{i1,i2}: a weakly K(r;d−2)-saturated graph on the remaining classes, with (top,i1),(top,i2) inserted
    const int rest = d - 2;
    std::vector<Tuple> link_edges;
    if (rest == 1) {
      for (int v = 0; v < r - 1; ++v) link_edges.push_back({v});
    } else {
      const auto ub = upper_bound_construction(rest, std::vector<int>(rest, m - 1), std::vector<int>(rest, r));
      for (Mask e : ub.graph.edges()) link_edges.push_back(tuple_of(e, m - 1));
    }
    for (int i1 = 0; i1 < d; ++i1)
      for (int i2 = i1 + 1; i2 < d; ++i2)
        for (const Tuple& t : link_edges) {
          Tuple u;
          std::size_t k = 0;
          for (int c = 0; c < d; ++c) u.push_back(c == i1 || c == i2 ? top : t[k++]);
          out.insert(std::move(u));
        }
    // E_0: at least three coordinates equal to top
    for_each_tuple(d, m, [&](const Tuple& t) {
      if (std::count(t.begin(), t.end(), top) >= 3) out.insert(t);
    });
    return out;
  }

  std::map<std::tuple<int, int, int>, std::set<Tuple>> memo_;
};

}  // namespace detail

/// (K^d_[n] × K^d_[d]) ⊔ E^d(n,H) for H = K^d(r;d); vertex (v, i) has id i·n + v.
inline TensorPartiteOutput tensor_partite_construction(int d, int n, int r) {
  if (d < 2) throw InputError("tensor_partite_construction: need d >= 2");
  if (r < 1 || n < r) throw InputError("tensor_partite_construction: need n >= r >= 1");
  if (d * n > kMaxVertices) throw InputError("tensor_partite_construction: more than 64 vertices");
  TensorPartiteOutput out;
  out.d = d;
  out.n = n;
  out.r = r;
  out.host = complete_multipartite(d, std::vector<int>(d, n));
  out.product = n >= d ? tensor_product(complete_clique(d, n), complete_clique(d, d)) : out.host.with_edges({});
  detail::ExtrasBuilder builder;
  std::vector<Mask> extra;
  for (const auto& t : builder.extras(d, n, r)) {
    Mask e = 0;
    for (int i = 0; i < d; ++i) e |= bit(i * n + t[i]);
    extra.push_back(e);
  }
  out.extras = out.host.with_edges(extra);
  std::vector<Mask> all = out.product.edges();
  all.insert(all.end(), extra.begin(), extra.end());
  out.graph = out.host.with_edges(std::move(all));
  return out;
}

// ---------------------------------------------------------------------------
// Doubling and lifting

/// G × K_[2]: vertex (v, w) has id w·n + v. `n` fixes the id span.
inline Hypergraph bipartite_double(const Hypergraph& g, int n) {
  if (g.arity() != 2) throw InputError("bipartite_double: need a 2-graph");
  if (!contains(low_bits(n), g.vertices())) throw InputError("bipartite_double: graph must live on 0..n-1");
  return tensor_product(Hypergraph(2, low_bits(n), g.edges()), complete_clique(2, 2));
}

/// A proper 2-colouring of the pattern graph (colour per pattern vertex).
inline std::vector<int> two_coloring(const Hypergraph& h) {
  if (h.arity() != 2) throw InputError("two_coloring: need a 2-graph");
  const int order = h.vertices() ? highest(h.vertices()) + 1 : 0;
  std::vector<int> colour(order, -1);
  for (Vertex s : vertices_of(h.vertices())) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Mask e : h.edges()) {
        if (!(e & bit(v))) continue;
        const Vertex u = lowest(e & ~bit(v));
        if (colour[u] < 0) {
          colour[u] = 1 - colour[v];
          stack.push_back(u);
        } else if (colour[u] == colour[v]) {
          throw InputError("pattern is not bipartite");
        }
      }
    }
  }
  return colour;
}

/// The doubled sequence f_1, f'_1, ..., f_k, f'_k for G × K_[2], from a
/// sequence of G in K_[n] whose witnesses carry embeddings of `pattern`.
inline std::vector<SaturationWitness> double_sequence(const std::vector<SaturationWitness>& seq, const Hypergraph& pattern, int n) {
  const auto colour = two_coloring(pattern);
  auto id = [n](Vertex v, int side) { return side * n + v; };
  std::vector<SaturationWitness> out;
  for (const auto& w : seq) {
    if (w.embedding.empty()) throw InputError("double_sequence: witness lacks an embedding");
    const auto ends = vertices_of(w.edge);
    const Vertex i = ends.at(0), j = ends.at(1);
    int ci = -1;
    for (std::size_t p = 0; p < w.embedding.size(); ++p)
      if (w.embedding[p] == i) ci = colour[p];
    if (ci < 0) throw InputError("double_sequence: edge endpoint not in the embedding");
    Mask a = 0, b = 0;
    for (std::size_t p = 0; p < w.embedding.size(); ++p) (colour[p] == ci ? a : b) |= bit(w.embedding[p]);
    auto side_copy = [&](int a_side) {
      Mask c = 0;
      for (Vertex v : vertices_of(a)) c |= bit(id(v, a_side));
      for (Vertex v : vertices_of(b)) c |= bit(id(v, 1 - a_side));
      return c;
    };
    SaturationWitness f, f2;
    f.edge = bit(id(i, 0)) | bit(id(j, 1));
    f.copy = side_copy(0);
    f2.edge = bit(id(i, 1)) | bit(id(j, 0));
    f2.copy = side_copy(1);
    out.push_back(std::move(f));
    out.push_back(std::move(f2));
  }
  return out;
}

/// G × K^d_[d].
inline Hypergraph multipartite_lift(const Hypergraph& g, int d, int n) {
  if (g.arity() != d) throw InputError("multipartite_lift: graph must be d-uniform");
  if (!contains(low_bits(n), g.vertices())) throw InputError("multipartite_lift: graph must live on 0..n-1");
  return tensor_product(Hypergraph(d, low_bits(n), g.edges()), complete_clique(d, d));
}

/// G ⊆ K_{n,n} (ids 0..2n−1, part 0 first) placed in K^q_{2n} with complete
/// q-graphs on the first min(n, h_order) vertices of each part.
inline Hypergraph pad_parts_with_cliques(const Hypergraph& g, int n, int h_order) {
  const int q = g.arity();
  if (2 * n > kMaxVertices) throw InputError("pad_parts_with_cliques: more than 64 vertices");
  const Hypergraph host = complete_clique(q, 2 * n);
  std::set<Mask> edges(g.edges().begin(), g.edges().end());
  const int k = std::min(n, h_order);
  for (int side = 0; side < 2; ++side)
    for_each_subset_of_size(low_bits(k) << (side * n), q, [&](Mask e) { edges.insert(e); });
  for (Mask e : edges)
    if (!contains(host.vertices(), e)) throw InputError("pad_parts_with_cliques: edge outside K_{2n}");
  return host.with_edges({edges.begin(), edges.end()});
}

}  // namespace wsat
