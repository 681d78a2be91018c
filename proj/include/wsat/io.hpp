#pragma once

// JSON formats.
//   hypergraph: { "q": int, "parts": [[v,...],...] | null, "edges": [[v,...],...], "n": int (optional) }
//   sequence:   { "sequence": [ { "edge": [...], "copy": [...] }, ... ] }
// Edges are written ascending within each edge and colex across edges.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wsat/hypergraph.hpp"
#include "wsat/saturation.hpp"

namespace wsat {

using Json = nlohmann::json;

inline Json edges_to_json(const std::vector<Mask>& edges) {
  Json out = Json::array();
  for (Mask e : edges) out.push_back(vertices_of(e));
  return out;
}

inline Json to_json(const Hypergraph& h) {
  Json j;
  j["q"] = h.arity();
  if (h.partition()) {
    j["parts"] = h.partition()->parts();
  } else {
    j["parts"] = nullptr;
    // vertex set 0..n-1 is implied when it is contiguous
    const int span = h.vertices() ? highest(h.vertices()) + 1 : 0;
    if (h.vertices() == low_bits(span)) j["n"] = span;
    else j["vertices"] = vertices_of(h.vertices());
  }
  j["edges"] = edges_to_json(h.edges());
  return j;
}

namespace detail {

inline Mask edge_from_json(const Json& e) {
  if (!e.is_array()) throw InputError("edge must be an array of vertex ids");
  std::vector<Vertex> vs;
  for (const auto& v : e) {
    if (!v.is_number_integer()) throw InputError("vertex ids must be integers");
    vs.push_back(v.get<Vertex>());
  }
  const Mask m = mask_of(vs);
  if (popcount(m) != static_cast<int>(vs.size())) throw InputError("edge repeats a vertex");
  return m;
}

}  // namespace detail

inline Hypergraph hypergraph_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw InputError("hypergraph JSON must be an object");
    if (!j.contains("q") || !j["q"].is_number_integer()) throw InputError("hypergraph JSON needs integer field 'q'");
    if (!j.contains("edges") || !j["edges"].is_array()) throw InputError("hypergraph JSON needs array field 'edges'");
    const int q = j["q"].get<int>();
    std::vector<Mask> edges;
    Mask used = 0;
    for (const auto& e : j["edges"]) {
      edges.push_back(detail::edge_from_json(e));
      used |= edges.back();
    }
    std::optional<PartitionedVertexSet> parts;
    Mask vertices = used;
    if (j.contains("parts") && !j["parts"].is_null()) {
      parts = PartitionedVertexSet(j["parts"].get<std::vector<std::vector<Vertex>>>());
      vertices = parts->all();
    } else if (j.contains("vertices")) {
      vertices = mask_of(j["vertices"].get<std::vector<Vertex>>());
    } else if (j.contains("n")) {
      const int n = j["n"].get<int>();
      if (n < 0 || n > kMaxVertices) throw InputError("'n' must be in [0,64]");
      vertices = low_bits(n);
    } else {
      vertices = used ? low_bits(highest(used) + 1) : 0;
    }
    return Hypergraph(q, vertices, std::move(edges), std::move(parts));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed hypergraph JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

inline Json to_json(const std::vector<SaturationWitness>& seq) {
  Json arr = Json::array();
  for (const auto& w : seq) arr.push_back({{"edge", vertices_of(w.edge)}, {"copy", vertices_of(w.copy)}});
  return {{"sequence", arr}};
}

inline std::vector<SaturationWitness> sequence_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("sequence") || !j["sequence"].is_array()) throw InputError("sequence JSON needs array field 'sequence'");
    std::vector<SaturationWitness> out;
    for (const auto& item : j["sequence"]) {
      SaturationWitness w;
      w.edge = detail::edge_from_json(item.at("edge"));
      w.copy = detail::edge_from_json(item.at("copy"));
      out.push_back(std::move(w));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed sequence JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    Json j;
    in >> j;
    return j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

}  // namespace wsat
