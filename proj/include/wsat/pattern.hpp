#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "wsat/hypergraph.hpp"

namespace wsat {

enum class HostMode { DirectedPartite, UndirectedPartite, Clique };

inline std::string to_string(HostMode m) {
  switch (m) {
    case HostMode::DirectedPartite: return "directed-partite";
    case HostMode::UndirectedPartite: return "undirected-partite";
    case HostMode::Clique: return "clique";
  }
  return "?";
}

inline HostMode parse_host_mode(const std::string& s) {
  if (s == "directed-partite" || s == "directed") return HostMode::DirectedPartite;
  if (s == "undirected-partite" || s == "undirected") return HostMode::UndirectedPartite;
  if (s == "clique" || s == "clique-host") return HostMode::Clique;
  throw InputError("unknown host mode '" + s + "'");
}

/// The target H: a complete multipartite profile r = (r_1..r_d) or an explicit q-graph.
class Pattern {
 public:
  enum class Kind { MultipartiteProfile, Explicit };

  static Pattern multipartite(int q, std::vector<int> profile, HostMode mode) {
    if (q < 1) throw InputError("pattern arity must be at least 1");
    if (profile.empty()) throw InputError("empty profile");
    for (int r : profile)
      if (r < 1) throw InputError("profile entries must be at least 1");
    if (static_cast<int>(profile.size()) < q) throw InputError("profile has fewer classes than the arity");
    Pattern p;
    p.kind_ = Kind::MultipartiteProfile;
    p.q_ = q;
    p.mode_ = mode;
    p.graph_ = complete_multipartite(q, profile);
    p.profile_ = std::move(profile);
    return p;
  }

  /// An explicit pattern; copies are arbitrary embeddings (never class-directed).
  static Pattern explicit_graph(const Hypergraph& h, HostMode mode = HostMode::Clique) {
    if (mode == HostMode::DirectedPartite) throw InputError("explicit patterns have no direction; use a multipartite profile");
    if (h.empty()) throw InputError("explicit pattern has no edges");
    Pattern p;
    p.kind_ = Kind::Explicit;
    p.q_ = h.arity();
    p.mode_ = mode;
    p.graph_ = compact(h);
    return p;
  }

  Kind kind() const { return kind_; }
  int arity() const { return q_; }
  HostMode mode() const { return mode_; }
  const std::vector<int>& profile() const { return profile_; }
  bool is_directed() const { return mode_ == HostMode::DirectedPartite; }

  /// The pattern as a concrete graph on 0..|V(H)|-1 (for a profile: K^q_r, class-major).
  const Hypergraph& graph() const { return graph_; }
  int order() const { return graph_.num_vertices(); }

  Pattern with_mode(HostMode mode) const {
    Pattern p = *this;
    if (mode == HostMode::DirectedPartite && kind_ == Kind::Explicit) throw InputError("explicit patterns have no direction");
    p.mode_ = mode;
    return p;
  }

 private:
  Kind kind_ = Kind::Explicit;
  int q_ = 0;
  HostMode mode_ = HostMode::Clique;
  std::vector<int> profile_;
  Hypergraph graph_;
};

}  // namespace wsat
