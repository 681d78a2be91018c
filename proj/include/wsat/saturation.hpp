#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wsat/hypergraph.hpp"
#include "wsat/pattern.hpp"
#include "wsat/rng.hpp"

namespace wsat {

/// One step of a saturating sequence: the added edge and the vertex set of the
/// new pattern copy through it.
struct SaturationWitness {
  Mask edge = 0;
  Mask copy = 0;
  // pattern vertex k -> host vertex; filled by embedding searches, empty in directed mode
  std::vector<Vertex> embedding;
  // pattern class c -> host vertices; filled whenever the pattern is a multipartite profile
  std::vector<Mask> part_assignment;

  bool operator==(const SaturationWitness& o) const { return edge == o.edge && copy == o.copy; }
};

struct ClosureResult {
  Hypergraph final_graph;
  std::vector<SaturationWitness> added;
  bool is_saturated = false;
};

/// Edge presence over a fixed host, indexed by EdgeCode.
class EdgeState {
 public:
  explicit EdgeState(const Hypergraph& host) : host_(&host), present_(host.size(), 0) {}

  EdgeState(const Hypergraph& host, const Hypergraph& sub) : EdgeState(host) {
    for (Mask e : sub.edges()) {
      auto c = host.code_of(e);
      if (!c) throw InputError("graph is not a subgraph of the host");
      present_[*c] = 1;
    }
  }

  const Hypergraph& host() const { return *host_; }

  bool has(Mask e) const {
    auto c = host_->code_of(e);
    return c && present_[*c];
  }
  bool has_code(std::size_t c) const { return present_[c] != 0; }
  void set_code(std::size_t c, bool on) { present_[c] = on ? 1 : 0; }

  std::size_t count() const { return static_cast<std::size_t>(std::count(present_.begin(), present_.end(), 1)); }

  Hypergraph to_graph() const {
    std::vector<Mask> edges;
    for (std::size_t c = 0; c < present_.size(); ++c)
      if (present_[c]) edges.push_back(host_->edges()[c]);
    return host_->with_edges(std::move(edges));
  }

 private:
  const Hypergraph* host_;
  std::vector<std::uint8_t> present_;
};

namespace detail {

// Calls f(T) for every k-subset T of `set` meeting each class mask at most once.
// Stops early and returns false as soon as f does.
template <typename F>
bool for_each_transversal(Mask set, int k, const std::vector<Mask>& classes, std::size_t from, Mask acc, F& f) {
  if (k == 0) return f(acc);
  for (std::size_t j = from; j < classes.size(); ++j) {
    if (static_cast<int>(classes.size() - j) < k) break;
    for (Mask m = set & classes[j]; m; m &= m - 1) {
      if (!for_each_transversal(set, k - 1, classes, j + 1, acc | (m & (~m + 1)), f)) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Searches for a new pattern copy through a candidate edge.
class CopyFinder {
  struct Plan {
    std::vector<Vertex> start;
    std::vector<Vertex> rest;
    std::vector<std::vector<Mask>> completes;
  };

 public:
  CopyFinder(const Hypergraph& host, const Pattern& pattern) : host_(&host), pattern_(pattern) {
    if (pattern.arity() != host.arity()) throw InputError("pattern and host arities differ");
    if (pattern.is_directed()) {
      if (!host.partition()) throw InputError("directed-partite pattern needs a partitioned host");
      const auto& parts = *host.partition();
      if (parts.num_classes() != static_cast<int>(pattern.profile().size()))
        throw InputError("profile length differs from the host's number of classes");
      for (int i = 0; i < parts.num_classes(); ++i)
        if (pattern.profile()[i] > static_cast<int>(parts.part(i).size())) throw InputError("profile entry r_i exceeds class size n_i");
      classes_ = parts.part_masks();
    } else {
      prepare_embedding_search();
    }
  }

  const Hypergraph& host() const { return *host_; }
  const Pattern& pattern() const { return pattern_; }

  /// A copy of the pattern inside `state` (which must already contain e) that
  /// uses e, with all copy vertices inside `allowed`.
  std::optional<SaturationWitness> find(const EdgeState& state, Mask e, Mask allowed) const {
    if (!contains(allowed, e)) return std::nullopt;
    return pattern_.is_directed() ? find_directed(state, e, allowed) : find_embedding(state, e, allowed);
  }

  std::optional<SaturationWitness> find(const EdgeState& state, Mask e) const { return find(state, e, host_->vertices()); }

 private:
  // Directed mode: R ⊇ e with |R ∩ N_i| = r_i, every transversal q-subset of R present.
  std::optional<SaturationWitness> find_directed(const EdgeState& state, Mask e, Mask allowed) const {
    const int d = static_cast<int>(classes_.size());
    std::vector<int> need(d);
    for (int i = 0; i < d; ++i) {
      need[i] = pattern_.profile()[i] - popcount(e & classes_[i]);
      if (need[i] < 0) return std::nullopt;
    }
    std::optional<SaturationWitness> out;
    std::function<bool(int, Mask)> rec = [&](int i, Mask r) -> bool {
      if (i == d) {
        SaturationWitness w;
        w.edge = e;
        w.copy = r;
        for (Mask c : classes_) w.part_assignment.push_back(r & c);
        out = std::move(w);
        return true;
      }
      const Mask cands = classes_[i] & allowed & ~e;
      if (popcount(cands) < need[i]) return false;
      bool found = false;
      for_each_subset_of_size(cands, need[i], [&](Mask add) {
        if (found) return;
        const Mask grown = r | add;
        if (add && !new_edges_present(state, grown, add, i)) return;
        found = rec(i + 1, grown);
      });
      return found;
    };
    rec(0, e);
    return out;
  }

  // All transversal q-subsets of `r` that use a vertex of `added` (all in class i) are present.
  bool new_edges_present(const EdgeState& state, Mask r, Mask added, int cls) const {
    const int q = pattern_.arity();
    const Mask others = r & ~classes_[cls];
    for (Mask a = added; a; a &= a - 1) {
      const Mask x = a & (~a + 1);
      auto check = [&](Mask t) { return state.has(t | x); };
      if (!detail::for_each_transversal(others, q - 1, classes_, 0, 0, check)) return false;
    }
    return true;
  }

  void prepare_embedding_search() {
    const Hypergraph& h = pattern_.graph();
    h_order_ = h.num_vertices();
    h_edges_ = h.edges();
    // Per starting pattern edge: extension order of the remaining vertices and,
    // for each position, the pattern edges completed by placing that vertex.
    for (Mask start : h_edges_) {
      Plan plan;
      plan.start = vertices_of(start);
      Mask placed = start;
      while (popcount(placed) < h_order_) {
        Vertex best = -1;
        int best_score = -1;
        for (Vertex v = 0; v < h_order_; ++v) {
          if (placed & bit(v)) continue;
          int score = 0;
          for (Mask he : h_edges_)
            if ((he & bit(v)) && popcount(he & placed) == pattern_.arity() - 1) ++score;
          if (score > best_score) best_score = score, best = v;
        }
        std::vector<Mask> completed;
        for (Mask he : h_edges_)
          if ((he & bit(best)) && contains(placed | bit(best), he)) completed.push_back(he);
        plan.rest.push_back(best);
        plan.completes.push_back(std::move(completed));
        placed |= bit(best);
      }
      plans_.push_back(std::move(plan));
    }
  }

  Mask image(Mask pattern_edge, const std::vector<Vertex>& emb) const {
    Mask out = 0;
    for (Mask m = pattern_edge; m; m &= m - 1) out |= bit(emb[lowest(m)]);
    return out;
  }

  std::optional<SaturationWitness> find_embedding(const EdgeState& state, Mask e, Mask allowed) const {
    const auto target = vertices_of(e);
    std::vector<Vertex> emb(h_order_, -1);
    for (const Plan& plan : plans_) {
      std::vector<Vertex> perm = target;
      do {
        for (std::size_t k = 0; k < perm.size(); ++k) emb[plan.start[k]] = perm[k];
        if (extend(state, plan, 0, allowed & ~e, emb)) return make_witness(e, emb);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return std::nullopt;
  }

  bool extend(const EdgeState& state, const Plan& plan, std::size_t pos, Mask free, std::vector<Vertex>& emb) const {
    if (pos == plan.rest.size()) return true;
    const Vertex hv = plan.rest[pos];
    for (Mask f = free; f; f &= f - 1) {
      const Vertex v = lowest(f);
      emb[hv] = v;
      bool ok = true;
      for (Mask he : plan.completes[pos])
        if (!state.has(image(he, emb))) {
          ok = false;
          break;
        }
      if (ok && extend(state, plan, pos + 1, free & ~bit(v), emb)) return true;
    }
    emb[hv] = -1;
    return false;
  }

  SaturationWitness make_witness(Mask e, const std::vector<Vertex>& emb) const {
    SaturationWitness w;
    w.edge = e;
    w.embedding = emb;
    for (Vertex v : emb) w.copy |= bit(v);
    if (pattern_.kind() == Pattern::Kind::MultipartiteProfile) {
      const auto& parts = *pattern_.graph().partition();
      for (int c = 0; c < parts.num_classes(); ++c) {
        Mask img = 0;
        for (Vertex hv : parts.part(c)) img |= bit(emb[hv]);
        w.part_assignment.push_back(img);
      }
    }
    return w;
  }

  const Hypergraph* host_;
  Pattern pattern_;
  std::vector<Mask> classes_;
  int h_order_ = 0;
  std::vector<Mask> h_edges_;
  std::vector<Plan> plans_;
};

/// Finds a new copy of the pattern in current ∪ {e} that contains e.
inline std::optional<SaturationWitness> find_new_copy(const Hypergraph& current, Mask e, const Pattern& pattern, const Hypergraph& host) {
  auto code = host.code_of(e);
  if (!code) throw InputError("find_new_copy: edge is not a host edge");
  CopyFinder finder(host, pattern);
  EdgeState state(host, current);
  state.set_code(*code, true);
  return finder.find(state, e);
}

struct ClosureOptions {
  // When set, missing edges are scanned in a seeded random order instead of EdgeCode order.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Greedy closure: sweep the missing host edges (lowest EdgeCode first), adding
/// each one that completes a new copy, until a full sweep adds nothing.
inline ClosureResult closure(const Hypergraph& start, const Hypergraph& host, const Pattern& pattern, const ClosureOptions& opts = {}) {
  CopyFinder finder(host, pattern);
  EdgeState state(host, start);
  std::vector<std::size_t> order;
  for (std::size_t c = 0; c < host.size(); ++c)
    if (!state.has_code(c)) order.push_back(c);
  if (opts.shuffle_seed) {
    Rng rng(derive_seed(*opts.shuffle_seed, {0xc105e}));
    shuffle(order, rng);
  }

  ClosureResult result;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t c : order) {
      if (state.has_code(c)) continue;
      state.set_code(c, true);
      if (auto w = finder.find(state, host.edges()[c])) {
        result.added.push_back(std::move(*w));
        changed = true;
      } else {
        state.set_code(c, false);
      }
    }
  }
  result.final_graph = state.to_graph();
  result.is_saturated = result.final_graph.size() == host.size();
  return result;
}

/// Checks a saturating sequence: it must list exactly host \ start, and each
/// step's copy vertex set must carry a pattern copy through that step's edge.
inline bool verify_sequence(const Hypergraph& start, const Hypergraph& host, const Pattern& pattern,
                            const std::vector<SaturationWitness>& sequence) {
  if (!start.is_subgraph_of(host)) throw InputError("verify_sequence: start graph is not a subgraph of the host");
  for (const auto& w : sequence)
    if (!host.code_of(w.edge)) throw InputError("verify_sequence: witness edge is not a host edge");

  CopyFinder finder(host, pattern);
  EdgeState state(host, start);
  if (sequence.size() != host.size() - start.size()) return false;
  for (const auto& w : sequence) {
    const std::size_t c = *host.code_of(w.edge);
    if (state.has_code(c)) return false;  // repeated, or already in start
    if (!contains(host.vertices(), w.copy)) return false;
    state.set_code(c, true);
    auto found = finder.find(state, w.edge, w.copy);
    if (!found || found->copy != w.copy) return false;
  }
  return state.count() == host.size();
}

/// Replays a sequence (e.g. read from JSON, which stores only edge and copy)
/// and fills in each witness's embedding and part assignment. nullopt if any
/// step fails to validate.
inline std::optional<std::vector<SaturationWitness>> replay_sequence(const Hypergraph& start, const Hypergraph& host, const Pattern& pattern,
                                                                     const std::vector<SaturationWitness>& sequence) {
  if (!verify_sequence(start, host, pattern, sequence)) return std::nullopt;
  CopyFinder finder(host, pattern);
  EdgeState state(host, start);
  std::vector<SaturationWitness> out;
  for (const auto& w : sequence) {
    state.set_code(*host.code_of(w.edge), true);
    out.push_back(*finder.find(state, w.edge, w.copy));
  }
  return out;
}

struct BruteForceBudget {
  std::size_t max_host_edges = 20;
  std::uint64_t max_candidates = 20'000'000;
};

struct BruteForceResult {
  bool conclusive = false;
  std::size_t value = 0;  // meaningful only when conclusive
  Hypergraph witness;     // one minimizer, first in colex order of edge-code sets
  std::uint64_t candidates = 0;
};

/// Exact minimum size of a weakly saturated subgraph, by exhaustive search over
/// edge subsets in increasing size. Exceeding the budget yields an inconclusive result.
inline BruteForceResult min_wsat_bruteforce(const Hypergraph& host, const Pattern& pattern, const BruteForceBudget& budget = {}) {
  BruteForceResult result;
  const std::size_t m = host.size();
  if (m > budget.max_host_edges || m > 63) return result;
  CopyFinder finder(host, pattern);
  EdgeState state(host);

  auto saturates = [&](Mask chosen) {
    for (std::size_t c = 0; c < m; ++c) state.set_code(c, (chosen >> c) & 1);
    std::size_t have = static_cast<std::size_t>(popcount(chosen));
    bool changed = true;
    while (changed && have < m) {
      changed = false;
      for (std::size_t c = 0; c < m; ++c) {
        if (state.has_code(c)) continue;
        state.set_code(c, true);
        if (finder.find(state, host.edges()[c])) {
          ++have;
          changed = true;
        } else {
          state.set_code(c, false);
        }
      }
    }
    return have == m;
  };

  for (std::size_t k = 0; k <= m; ++k) {
    Mask sel = low_bits(static_cast<int>(k));
    while (true) {
      if (++result.candidates > budget.max_candidates) return result;
      if (saturates(sel)) {
        std::vector<Mask> edges;
        for (Mask s = sel; s; s &= s - 1) edges.push_back(host.edges()[lowest(s)]);
        result.conclusive = true;
        result.value = k;
        result.witness = host.with_edges(std::move(edges));
        return result;
      }
      if (k == 0) break;
      sel = next_combination(sel, static_cast<int>(m));
      if (sel == 0) break;
    }
  }
  return result;  // unreachable: the full host always saturates
}

}  // namespace wsat
