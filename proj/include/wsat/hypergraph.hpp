#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wsat/bits.hpp"
#include "wsat/errors.hpp"

namespace wsat {

/// The ground set N = N_1 ⊔ ... ⊔ N_d. Vertex ids double as the total order, so
/// every vertex of class i must precede every vertex of class j > i.
class PartitionedVertexSet {
 public:
  PartitionedVertexSet() = default;

  explicit PartitionedVertexSet(std::vector<std::vector<Vertex>> parts) : parts_(std::move(parts)) {
    Mask seen = 0;
    int prev_max = -1;
    for (auto& part : parts_) {
      std::sort(part.begin(), part.end());
      const Mask m = mask_of(part);
      if (popcount(m) != static_cast<int>(part.size())) throw InputError("duplicate vertex inside a class");
      if (seen & m) throw InputError("partition classes are not disjoint");
      if (!part.empty()) {
        if (part.front() <= prev_max) throw InputError("partition classes must be ordered: class i precedes class i+1");
        prev_max = part.back();
      }
      seen |= m;
      masks_.push_back(m);
    }
    all_ = seen;
  }

  /// Classes of the given sizes on contiguous ids 0..n-1, class-major.
  static PartitionedVertexSet from_sizes(const std::vector<int>& sizes) {
    std::vector<std::vector<Vertex>> parts;
    Vertex next = 0;
    for (int s : sizes) {
      if (s < 0) throw InputError("class size must be non-negative");
      std::vector<Vertex> part;
      for (int j = 0; j < s; ++j) part.push_back(next++);
      parts.push_back(std::move(part));
    }
    if (next > kMaxVertices) throw InputError("more than 64 vertices");
    return PartitionedVertexSet(std::move(parts));
  }

  int num_classes() const { return static_cast<int>(parts_.size()); }
  int size() const { return popcount(all_); }
  Mask all() const { return all_; }
  const std::vector<Vertex>& part(int i) const { return parts_.at(i); }
  const std::vector<std::vector<Vertex>>& parts() const { return parts_; }
  Mask part_mask(int i) const { return masks_.at(i); }
  const std::vector<Mask>& part_masks() const { return masks_; }

  std::vector<int> sizes() const {
    std::vector<int> out;
    for (const auto& p : parts_) out.push_back(static_cast<int>(p.size()));
    return out;
  }

  int class_of(Vertex v) const {
    for (int i = 0; i < num_classes(); ++i)
      if (masks_[i] & bit(v)) return i;
    return -1;
  }

  /// True iff `s` has at most one vertex in every class and lies inside the ground set.
  bool is_transversal(Mask s) const {
    if (!contains(all_, s)) return false;
    for (Mask m : masks_)
      if (popcount(s & m) > 1) return false;
    return true;
  }

  PartitionedVertexSet restricted(Mask keep) const {
    std::vector<std::vector<Vertex>> parts;
    for (Mask m : masks_) parts.push_back(vertices_of(m & keep));
    return PartitionedVertexSet(std::move(parts));
  }

  PartitionedVertexSet without(Vertex v) const { return restricted(all_ & ~bit(v)); }

  bool operator==(const PartitionedVertexSet& o) const { return parts_ == o.parts_; }

 private:
  std::vector<std::vector<Vertex>> parts_;
  std::vector<Mask> masks_;
  Mask all_ = 0;
};

/// A q-uniform hypergraph. Edges are bitmasks kept sorted ascending, which is
/// colexicographic order on the underlying subsets; an edge's index in that
/// order is its EdgeCode.
class Hypergraph {
 public:
  Hypergraph() = default;

  Hypergraph(int q, Mask vertices, std::vector<Mask> edges, std::optional<PartitionedVertexSet> partition = std::nullopt)
      : q_(q), vertices_(vertices), edges_(std::move(edges)), partition_(std::move(partition)) {
    if (q_ < 0) throw InputError("arity must be non-negative");
    if (partition_ && partition_->all() != vertices_) throw InputError("partition does not cover the vertex set exactly");
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Mask e = edges_[i];
      if (popcount(e) != q_) throw InputError("edge of wrong arity");
      if (!contains(vertices_, e)) throw InputError("edge uses a vertex outside the vertex set");
      if (i > 0 && edges_[i - 1] == e) throw InputError("duplicate edge");
    }
  }

  /// Same vertex set and partition, different edges.
  Hypergraph with_edges(std::vector<Mask> edges) const { return Hypergraph(q_, vertices_, std::move(edges), partition_); }

  int arity() const { return q_; }
  Mask vertices() const { return vertices_; }
  int num_vertices() const { return popcount(vertices_); }
  const std::vector<Mask>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const std::optional<PartitionedVertexSet>& partition() const { return partition_; }

  bool has_edge(Mask e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

  std::optional<std::size_t> code_of(Mask e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  bool is_subgraph_of(const Hypergraph& host) const {
    if (q_ != host.q_) return false;
    return std::includes(host.edges_.begin(), host.edges_.end(), edges_.begin(), edges_.end());
  }

  /// Edges of `this` not in `other`, in colex order.
  std::vector<Mask> edges_minus(const Hypergraph& other) const {
    std::vector<Mask> out;
    std::set_difference(edges_.begin(), edges_.end(), other.edges_.begin(), other.edges_.end(), std::back_inserter(out));
    return out;
  }

  bool operator==(const Hypergraph& o) const {
    return q_ == o.q_ && vertices_ == o.vertices_ && edges_ == o.edges_ && partition_ == o.partition_;
  }

 private:
  int q_ = 0;
  Mask vertices_ = 0;
  std::vector<Mask> edges_;
  std::optional<PartitionedVertexSet> partition_;
};

/// K^q_n: every q-subset meeting each class at most once. Yields an empty edge
/// set when q exceeds the number of classes.
inline Hypergraph complete_multipartite(int q, const std::vector<int>& sizes) {
  if (q < 1) throw InputError("arity q must be at least 1");
  for (int s : sizes)
    if (s < 1) throw InputError("class sizes must be at least 1");
  auto parts = PartitionedVertexSet::from_sizes(sizes);
  const int d = parts.num_classes();
  std::vector<Mask> edges;
  if (q <= d) {
    for_each_subset_of_size(low_bits(d), q, [&](Mask classes) {
      std::vector<Mask> partial{0};
      for (Vertex c : vertices_of(classes)) {
        std::vector<Mask> next;
        for (Mask pm : partial)
          for (Vertex v : parts.part(c)) next.push_back(pm | bit(v));
        partial = std::move(next);
      }
      edges.insert(edges.end(), partial.begin(), partial.end());
    });
  }
  const Mask all = parts.all();
  return Hypergraph(q, all, std::move(edges), std::move(parts));
}

/// K^q_{[n]} on vertices 0..n-1.
inline Hypergraph complete_clique(int q, int n) {
  if (q < 1 || n < q) throw InputError("complete_clique requires n >= q >= 1");
  if (n > kMaxVertices) throw InputError("more than 64 vertices");
  std::vector<Mask> edges;
  for_each_subset_of_size(low_bits(n), q, [&](Mask e) { edges.push_back(e); });
  return Hypergraph(q, low_bits(n), std::move(edges));
}

inline Hypergraph induced(const Hypergraph& h, Mask keep) {
  if (!contains(h.vertices(), keep)) throw InputError("induced: vertex not in the hypergraph");
  std::vector<Mask> edges;
  for (Mask e : h.edges())
    if (contains(keep, e)) edges.push_back(e);
  std::optional<PartitionedVertexSet> parts;
  if (h.partition()) parts = h.partition()->restricted(keep);
  return Hypergraph(h.arity(), keep, std::move(edges), std::move(parts));
}

/// L_H(v) = { e \ {v} : v ∈ e ∈ E(H) }, on V(H) \ {v}.
inline Hypergraph link(const Hypergraph& h, Vertex v) {
  if (v < 0 || v >= kMaxVertices || !(h.vertices() & bit(v))) throw InputError("link: vertex not in the hypergraph");
  if (h.arity() < 1) throw InputError("link: arity must be at least 1");
  std::vector<Mask> edges;
  for (Mask e : h.edges())
    if (e & bit(v)) edges.push_back(e & ~bit(v));
  std::optional<PartitionedVertexSet> parts;
  if (h.partition()) parts = h.partition()->without(v);
  return Hypergraph(h.arity() - 1, h.vertices() & ~bit(v), std::move(edges), std::move(parts));
}

/// d_H(W): number of edges containing the (q-1)-set W.
inline std::size_t codegree(const Hypergraph& h, Mask w) {
  if (popcount(w) != h.arity() - 1) throw InputError("codegree: |W| must equal q-1");
  return static_cast<std::size_t>(std::count_if(h.edges().begin(), h.edges().end(), [w](Mask e) { return contains(e, w); }));
}

/// Every (q-1)-set with positive co-degree, with its co-degree.
inline std::map<Mask, std::size_t> positive_codegrees(const Hypergraph& h) {
  std::map<Mask, std::size_t> counts;
  for (Mask e : h.edges())
    for (Mask rest = e; rest; rest &= rest - 1) ++counts[e & ~(rest & (~rest + 1))];
  return counts;
}

/// δ*(H): the least positive co-degree.
inline std::size_t min_positive_codegree(const Hypergraph& h) {
  if (h.empty()) throw InputError("min_positive_codegree: hypergraph has no edges");
  const auto counts = positive_codegrees(h);
  std::size_t best = counts.begin()->second;
  for (const auto& [w, c] : counts) best = std::min(best, c);
  return best;
}

/// G × J on V(G) × V(J). The pair (v, w) gets id w * span(G) + v, where span(G)
/// is one past G's largest vertex id, and the result is partitioned by the
/// J-coordinate (classes are ordered by w).
inline Hypergraph tensor_product(const Hypergraph& g, const Hypergraph& j) {
  if (g.arity() != j.arity()) throw InputError("tensor_product: arity mismatch");
  const int q = g.arity();
  const int span_g = g.vertices() ? highest(g.vertices()) + 1 : 0;
  const int span_j = j.vertices() ? highest(j.vertices()) + 1 : 0;
  if (span_g * span_j > kMaxVertices) throw InputError("tensor_product: more than 64 vertices");
  auto id = [span_g](Vertex v, Vertex w) { return w * span_g + v; };

  std::vector<std::vector<Vertex>> parts;
  Mask all = 0;
  for (Vertex w : vertices_of(j.vertices())) {
    std::vector<Vertex> part;
    for (Vertex v : vertices_of(g.vertices())) part.push_back(id(v, w));
    all |= mask_of(part);
    parts.push_back(std::move(part));
  }

  std::vector<Mask> edges;
  for (Mask ge : g.edges()) {
    const auto gv = vertices_of(ge);
    for (Mask je : j.edges()) {
      auto jv = vertices_of(je);
      do {
        Mask e = 0;
        for (int k = 0; k < q; ++k) e |= bit(id(gv[k], jv[k]));
        if (popcount(e) != q) throw std::logic_error("tensor_product: degenerate pairing");
        edges.push_back(e);
      } while (std::next_permutation(jv.begin(), jv.end()));
    }
  }
  return Hypergraph(q, all, std::move(edges), PartitionedVertexSet(std::move(parts)));
}

/// Relabels the non-isolated vertices of h to 0..k-1 preserving order; drops the partition.
inline Hypergraph compact(const Hypergraph& h) {
  Mask used = 0;
  for (Mask e : h.edges()) used |= e;
  const auto verts = vertices_of(used);
  std::vector<Mask> edges;
  for (Mask e : h.edges()) {
    Mask out = 0;
    for (Vertex v : vertices_of(e)) out |= bit(static_cast<Vertex>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin()));
    edges.push_back(out);
  }
  return Hypergraph(h.arity(), low_bits(static_cast<int>(verts.size())), std::move(edges));
}

inline bool has_isolated_vertices(const Hypergraph& h) {
  Mask used = 0;
  for (Mask e : h.edges()) used |= e;
  return used != h.vertices();
}

}  // namespace wsat
