// wsat: command-line front end.
//
// Exit codes: 0 ok, 1 verification failed, 2 bad input, 3 budget exceeded / inconclusive.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wsat/wsat.hpp"

namespace {

using namespace wsat;

enum Exit { kOk = 0, kFailed = 1, kInput = 2, kBudget = 3 };

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError("not an integer list: '" + s + "'");
    }
  }
  if (out.empty()) throw InputError("empty integer list");
  return out;
}

// "Q:N1,N2,..."
std::pair<int, std::vector<int>> parse_spec(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw InputError("expected Q:N1,N2,... but got '" + s + "'");
  const auto q = parse_ints(s.substr(0, colon));
  if (q.size() != 1) throw InputError("bad arity in '" + s + "'");
  return {q[0], parse_ints(s.substr(colon + 1))};
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) std::cout << text;
  else write_text_file(out_path, text);
}

void emit_json(const Json& j, const std::string& out_path) { emit(j.dump(2) + "\n", out_path); }

Backend backend_or_default(const std::string& s) { return s.empty() ? default_backend() : parse_backend(s); }

// Accepts a bare hypergraph or any of our reports carrying one under "graph".
Hypergraph load_graph_file(const std::string& path) {
  Json j = read_json_file(path);
  if (j.is_object() && j.contains("graph") && j["graph"].is_object()) j = j["graph"];
  return hypergraph_from_json(j);
}

struct HostArgs {
  std::string file, partite, clique;

  void attach(CLI::App* app) {
    app->add_option("--host", file, "host hypergraph JSON");
    app->add_option("--host-partite", partite, "complete partite host Q:N1,N2,...");
    app->add_option("--host-clique", clique, "complete host Q:N");
  }

  Hypergraph load() const {
    const int given = !file.empty() + !partite.empty() + !clique.empty();
    if (given != 1) throw InputError("give exactly one of --host, --host-partite, --host-clique");
    if (!file.empty()) return load_graph_file(file);
    if (!partite.empty()) {
      auto [q, n] = parse_spec(partite);
      return complete_multipartite(q, n);
    }
    auto [q, n] = parse_spec(clique);
    if (n.size() != 1) throw InputError("--host-clique wants Q:N");
    return complete_clique(q, n[0]);
  }
};

struct PatternArgs {
  std::string profile, file, mode;

  void attach(CLI::App* app) {
    app->add_option("--profile", profile, "complete multipartite pattern r1,r2,... (arity taken from the host)");
    app->add_option("--pattern", file, "explicit pattern hypergraph JSON");
    app->add_option("--mode", mode, "directed-partite | undirected-partite | clique");
  }

  Pattern load(const Hypergraph& host) const {
    if (profile.empty() == file.empty()) throw InputError("give exactly one of --profile, --pattern");
    if (!profile.empty()) {
      const HostMode m = mode.empty() ? (host.partition() ? HostMode::DirectedPartite : HostMode::Clique) : parse_host_mode(mode);
      Pattern p = Pattern::multipartite(host.arity(), parse_ints(profile), m);
      return p;
    }
    const HostMode m = mode.empty() ? (host.partition() ? HostMode::UndirectedPartite : HostMode::Clique) : parse_host_mode(mode);
    return Pattern::explicit_graph(hypergraph_from_json(read_json_file(file)), m);
  }
};

Hypergraph load_graph_on(const std::string& path, const Hypergraph& host) {
  const Hypergraph g = load_graph_file(path);
  if (!g.is_subgraph_of(host)) throw InputError(path + " is not a subgraph of the host");
  return host.with_edges(g.edges());
}

// ---------------------------------------------------------------------------

int cmd_formula(const std::optional<int>& q, const std::string& n, const std::string& r, bool itemize, const std::string& lovasz,
                const std::string& ms, const std::string& format) {
  Json j;
  if (!lovasz.empty()) {
    const auto v = parse_ints(lovasz);
    if (v.size() != 3) throw InputError("--lovasz wants N,Q,R");
    j = {{"kind", "lovasz"}, {"n", v[0]}, {"q", v[1]}, {"r", v[2]}, {"value", lovasz_clique(v[0], v[1], v[2]).get_str()}};
  } else if (!ms.empty()) {
    const auto v = parse_ints(ms);
    if (v.size() != 3) throw InputError("--ms wants D,N,R1");
    j = {{"kind", "ms-reference"},
         {"d", v[0]},
         {"n", v[1]},
         {"r1", v[2]},
         {"value", ms_reference(v[0], v[1], v[2]).get_str()},
         {"coefficient", asymptotic_coefficient(v[0], v[2]).get_str()}};
  } else {
    if (!q || n.empty() || r.empty()) throw InputError("formula needs --q, --n and --r");
    const auto nv = parse_ints(n), rv = parse_ints(r);
    const auto res = mwsat_formula(*q, nv, rv);
    j = {{"kind", "mwsat"}, {"q", *q}, {"n", nv}, {"r", rv}, {"value", res.value.get_str()},
         {"first_sum", res.first_sum.get_str()}, {"second_sum", res.second_sum.get_str()}};
    if (itemize) {
      auto terms = [](const std::vector<FormulaTerm>& ts) {
        Json a = Json::array();
        for (const auto& t : ts) a.push_back({{"I", t.classes}, {"product", t.product.get_str()}});
        return a;
      };
      j["first_terms"] = terms(res.first_terms);
      j["second_terms"] = terms(res.second_terms);
    }
  }
  if (format == "pretty") {
    std::cout << j["value"].get<std::string>() << "\n";
    if (j.contains("first_terms")) {
      std::cout << "first sum  " << j["first_sum"].get<std::string>() << "\n";
      for (const auto& t : j["first_terms"]) std::cout << "  I=" << t["I"].dump() << "  " << t["product"].get<std::string>() << "\n";
      std::cout << "second sum " << j["second_sum"].get<std::string>() << "\n";
      for (const auto& t : j["second_terms"]) std::cout << "  I=" << t["I"].dump() << "  " << t["product"].get<std::string>() << "\n";
    }
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return kOk;
}

struct ConstructArgs {
  std::string kind, n, r, policy = "lex", sequence_out, pattern, catalog, graph, sequence_in, out;
  std::optional<int> q, d, order;
  std::uint64_t seed = 1;
  std::size_t max_edges = 20;
  bool save_catalog = false;
};

int cmd_construct(const ConstructArgs& a) {
  if (a.kind == "partite") {
    if (!a.q || a.n.empty() || a.r.empty()) throw InputError("construct partite needs --q, --n, --r");
    LambdaPolicy pol;
    if (a.policy == "random") pol = LambdaPolicy::seeded_random(a.seed);
    else if (a.policy != "lex") throw InputError("--policy is lex or random");
    const auto out = upper_bound_construction(*a.q, parse_ints(a.n), parse_ints(a.r), pol);
    Json layers = Json::array();
    for (const auto& l : out.layers) layers.push_back(l.size());
    emit_json({{"graph", to_json(out.graph)},
               {"size", out.graph.size()},
               {"predicted_size", out.predicted_size.get_str()},
               {"base_R", vertices_of(out.base_R)},
               {"layer_sizes", layers}},
              a.out);
    if (!a.sequence_out.empty()) write_text_file(a.sequence_out, to_json(layered_sequence(out)).dump(2) + "\n");
    return BigInt(static_cast<unsigned long>(out.graph.size())) == out.predicted_size ? kOk : kFailed;
  }
  if (a.kind == "codegree") {
    if (a.pattern.empty() || !a.order) throw InputError("construct codegree needs --pattern and --order");
    const Hypergraph h = hypergraph_from_json(read_json_file(a.pattern));
    BaseCatalog catalog;
    if (!a.catalog.empty() && (std::ifstream(a.catalog) || !a.save_catalog)) catalog = BaseCatalog::load(a.catalog);
    BruteForceBudget budget;
    budget.max_host_edges = a.max_edges;
    const Hypergraph g = codegree_construction(h, *a.order, catalog, budget);
    if (a.save_catalog && !a.catalog.empty()) catalog.save(a.catalog);
    const auto delta = min_positive_codegree(compact(h));
    emit_json({{"graph", to_json(g)},
               {"size", g.size()},
               {"delta_star", delta},
               {"base_value", catalog.find(BaseCatalog::key(compact(h), compact(h).num_vertices()))->value}},
              a.out);
    return kOk;
  }
  if (a.kind == "tensor-partite") {
    if (!a.d || !a.order || a.r.empty()) throw InputError("construct tensor-partite needs --d, --order, --r");
    const auto rv = parse_ints(a.r);
    if (rv.size() != 1) throw InputError("tensor-partite takes a single --r");
    const auto t = tensor_partite_construction(*a.d, *a.order, rv[0]);
    emit_json({{"graph", to_json(t.graph)}, {"size", t.graph.size()}, {"product_size", t.product.size()}, {"extras_size", t.extras.size()},
               {"extras", edges_to_json(t.extras.edges())}},
              a.out);
    return kOk;
  }
  if (a.kind == "double" || a.kind == "lift") {
    if (a.graph.empty()) throw InputError("construct " + a.kind + " needs --graph");
    const Hypergraph g = load_graph_file(a.graph);
    const int n = a.order ? *a.order : (g.vertices() ? highest(g.vertices()) + 1 : 0);
    if (a.kind == "lift") {
      const int d = a.d ? *a.d : g.arity();
      const Hypergraph lifted = multipartite_lift(g, d, n);
      emit_json({{"graph", to_json(lifted)}, {"size", lifted.size()}, {"source_size", g.size()}}, a.out);
      return kOk;
    }
    const Hypergraph doubled = bipartite_double(g, n);
    Json j = {{"graph", to_json(doubled)}, {"size", doubled.size()}, {"source_size", g.size()}};
    if (!a.sequence_in.empty()) {
      if (a.pattern.empty()) throw InputError("--sequence needs --pattern");
      const Hypergraph h = compact(hypergraph_from_json(read_json_file(a.pattern)));
      const Pattern p = Pattern::explicit_graph(h, HostMode::Clique);
      const Hypergraph host = complete_clique(2, n);
      const auto replayed = replay_sequence(host.with_edges(g.edges()), host, p, sequence_from_json(read_json_file(a.sequence_in)));
      if (!replayed) {
        std::cerr << "the given sequence does not verify for the source graph\n";
        return kFailed;
      }
      const auto dbl = double_sequence(*replayed, p.graph(), n);
      const Hypergraph dhost = tensor_product(complete_clique(2, n), complete_clique(2, 2));
      const bool ok = verify_sequence(doubled, dhost, p.with_mode(HostMode::UndirectedPartite), dbl);
      j["sequence"] = to_json(dbl)["sequence"];
      j["sequence_verified"] = ok;
      emit_json(j, a.out);
      return ok ? kOk : kFailed;
    }
    emit_json(j, a.out);
    return kOk;
  }
  throw InputError("--kind must be partite, codegree, tensor-partite, double or lift");
}

int cmd_closure(const HostArgs& host_args, const PatternArgs& pat, const std::string& graph, std::optional<std::uint64_t> shuffle_seed,
                const std::string& out, const std::string& sequence_out) {
  const Hypergraph host = host_args.load();
  const Pattern p = pat.load(host);
  const Hypergraph g = graph.empty() ? host.with_edges({}) : load_graph_on(graph, host);
  ClosureOptions opts;
  opts.shuffle_seed = shuffle_seed;
  const auto res = closure(g, host, p, opts);
  emit_json({{"is_saturated", res.is_saturated},
             {"start_size", g.size()},
             {"added", res.added.size()},
             {"final_size", res.final_graph.size()},
             {"host_size", host.size()},
             {"final", to_json(res.final_graph)},
             {"sequence", to_json(res.added)["sequence"]}},
            out);
  if (!sequence_out.empty()) write_text_file(sequence_out, to_json(res.added).dump(2) + "\n");
  return res.is_saturated ? kOk : kFailed;
}

int cmd_verify(const HostArgs& host_args, const PatternArgs& pat, const std::string& graph, const std::string& sequence) {
  const Hypergraph host = host_args.load();
  const Pattern p = pat.load(host);
  const Hypergraph g = load_graph_on(graph, host);
  const bool ok = verify_sequence(g, host, p, sequence_from_json(read_json_file(sequence)));
  std::cout << Json{{"valid", ok}}.dump() << "\n";
  return ok ? kOk : kFailed;
}

int cmd_certify(int q, const std::string& n, const std::string& r, std::uint64_t seed, const std::string& backend, const std::string& sample,
                int cap, const std::string& j_opt, const std::string& w_opt, bool brief, const std::string& out) {
  CertificateConfig cfg;
  cfg.q = q;
  cfg.n = parse_ints(n);
  cfg.r = parse_ints(r);
  cfg.seed = seed;
  cfg.backend = backend_or_default(backend);
  cfg.all_r_vertex_cap = cap;
  if (sample == "all") cfg.sample = 0;
  else if (!sample.empty() && sample != "auto") {
    const auto k = parse_ints(sample);
    if (k.size() != 1 || k[0] < 1) throw InputError("--sample is all, auto or a positive count");
    cfg.sample = k[0];
  }
  if (!j_opt.empty() || !w_opt.empty()) {
    // --J "0;3,4" lists J_i per class separated by ';' (empty allowed)
    std::stringstream ss(j_opt);
    std::string part;
    while (std::getline(ss, part, ';')) cfg.j_sets.push_back(part.empty() ? 0 : mask_of(parse_ints(part)));
    if (j_opt.empty() || j_opt.back() == ';') cfg.j_sets.push_back(0);
    cfg.w = parse_ints(w_opt);
  }
  const auto rep = certify(cfg);
  Json j = rep.to_json();
  if (brief) j.erase("kernel_checks");
  emit_json(j, out);
  return rep.certified ? kOk : kFailed;
}

int cmd_bruteforce(const HostArgs& host_args, const PatternArgs& pat, std::size_t max_edges, std::uint64_t max_candidates, const std::string& out) {
  const Hypergraph host = host_args.load();
  const Pattern p = pat.load(host);
  BruteForceBudget budget;
  budget.max_host_edges = max_edges;
  budget.max_candidates = max_candidates;
  const auto res = min_wsat_bruteforce(host, p, budget);
  Json j = {{"conclusive", res.conclusive}, {"candidates", res.candidates}, {"host_size", host.size()}};
  if (res.conclusive) {
    j["value"] = res.value;
    j["witness"] = to_json(res.witness);
  } else {
    j["value"] = nullptr;
  }
  emit_json(j, out);
  return res.conclusive ? kOk : kBudget;
}

int cmd_tensor(const std::string& g_path, const std::string& j_path, const std::string& j_clique, const std::string& out) {
  const Hypergraph g = load_graph_file(g_path);
  Hypergraph j;
  if (!j_path.empty()) j = load_graph_file(j_path);
  else if (!j_clique.empty()) {
    auto [q, n] = parse_spec(j_clique);
    if (n.size() != 1) throw InputError("--j-clique wants Q:N");
    j = complete_clique(q, n[0]);
  } else {
    throw InputError("tensor needs --j or --j-clique");
  }
  const Hypergraph t = tensor_product(g, j);
  emit_json({{"graph", to_json(t)}, {"size", t.size()}}, out);
  return kOk;
}

int cmd_grid(GridOptions o, const std::string& backend, const std::string& format, const std::string& out, const std::string& check, bool quiet) {
  o.backend = backend_or_default(backend);
  if (o.q_min < 2 || o.q_max < o.q_min || o.d_max < 2 || o.n_max < 1) throw InputError("grid needs 2 <= q-min <= q-max, d-max >= 2, n-max >= 1");
  if (o.d_max * o.n_max > kMaxVertices) throw InputError("grid host exceeds 64 vertices");
  const auto rows = run_grid(o);
  std::size_t bad = 0;
  for (const auto& row : rows) bad += row.agree ? 0 : 1;
  if (format == "json") emit_json(grid_json(rows, o), out);
  else if (format == "tsv") emit(grid_tsv(rows, o.timings), out);
  else throw InputError("--format is tsv or json");
  int rc = bad ? kFailed : kOk;
  if (!check.empty()) {
    std::ifstream in(check);
    if (!in) throw InputError("cannot open golden file " + check);
    std::stringstream buf;
    buf << in.rdbuf();
    const auto diff = check_against_golden(rows, buf.str());
    for (const auto& m : diff.mismatches) std::cerr << m << "\n";
    if (!quiet) std::cerr << "golden check: " << diff.compared << " rows compared, " << diff.mismatches.size() << " mismatches\n";
    if (!diff.mismatches.empty()) rc = kFailed;
  }
  if (!quiet) std::cerr << rows.size() << " points, " << bad << " disagreeing\n";
  return rc;
}

template <typename S>
int eval_expr(const std::string& text, int ground, const std::string& parts, std::optional<std::uint64_t> basis_seed) {
  std::optional<BasisChange<S>> basis;
  if (basis_seed) {
    const std::vector<int> sizes = parts.empty() ? std::vector<int>{ground} : parse_ints(parts);
    const auto blocks = PartitionedVertexSet::from_sizes(sizes);
    if (blocks.size() != ground) throw InputError("--parts must sum to --n");
    basis = colorful_generic_orthonormal_basis<S>(blocks, *basis_seed);
  }
  ExprEvaluator<S> ev(ground, basis);
  std::cout << ExprEvaluator<S>::to_json(ev.eval(text)).dump() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weak saturation: constructions, closure, exact rank certificates"};
  app.require_subcommand(1);

  // formula
  auto* f = app.add_subcommand("formula", "closed-form values");
  std::optional<int> f_q;
  std::string f_n, f_r, f_lovasz, f_ms, f_format = "json";
  bool f_itemize = false;
  f->add_option("--q", f_q, "arity");
  f->add_option("--n", f_n, "class sizes n1,n2,...");
  f->add_option("--r", f_r, "pattern class sizes r1,r2,...");
  f->add_flag("--itemize", f_itemize, "list every term of both sums");
  f->add_option("--lovasz", f_lovasz, "clique value for N,Q,R instead");
  f->add_option("--ms", f_ms, "partite clique-host reference D,N,R1 instead");
  f->add_option("--format", f_format, "json | pretty");

  // construct
  auto* c = app.add_subcommand("construct", "explicit weakly saturated graphs");
  ConstructArgs ca;
  c->add_option("--kind", ca.kind, "partite | codegree | tensor-partite | double | lift")->required();
  c->add_option("--q", ca.q, "arity (partite)");
  c->add_option("--n", ca.n, "class sizes (partite)");
  c->add_option("--r", ca.r, "profile r1,r2,... (partite) or r (tensor-partite)");
  c->add_option("--policy", ca.policy, "lambda choice: lex | random");
  c->add_option("--seed", ca.seed, "seed for --policy random");
  c->add_option("--sequence-out", ca.sequence_out, "write the layered sequence here (partite)");
  c->add_option("--pattern", ca.pattern, "pattern JSON (codegree, double)");
  c->add_option("--order", ca.order, "number of vertices n");
  c->add_option("--catalog", ca.catalog, "base-case catalog JSON");
  c->add_flag("--save-catalog", ca.save_catalog, "write new base cases back to --catalog");
  c->add_option("--max-edges", ca.max_edges, "brute-force host edge limit for base cases");
  c->add_option("--d", ca.d, "dimension (tensor-partite, lift)");
  c->add_option("--graph", ca.graph, "source graph JSON (double, lift)");
  c->add_option("--sequence", ca.sequence_in, "saturating sequence of the source graph (double)");
  c->add_option("--out", ca.out, "output path");

  // closure
  auto* cl = app.add_subcommand("closure", "greedy weak-saturation closure");
  HostArgs cl_host;
  PatternArgs cl_pat;
  std::string cl_graph, cl_out, cl_seq_out;
  std::optional<std::uint64_t> cl_shuffle;
  cl_host.attach(cl);
  cl_pat.attach(cl);
  cl->add_option("--graph", cl_graph, "start graph JSON (default: empty)");
  cl->add_option("--shuffle-seed", cl_shuffle, "scan missing edges in a seeded random order");
  cl->add_option("--out", cl_out, "output path");
  cl->add_option("--sequence-out", cl_seq_out, "write the saturating sequence here");

  // verify
  auto* v = app.add_subcommand("verify", "check a saturating sequence");
  HostArgs v_host;
  PatternArgs v_pat;
  std::string v_graph, v_seq;
  v_host.attach(v);
  v_pat.attach(v);
  v->add_option("--graph", v_graph, "start graph JSON")->required();
  v->add_option("--sequence", v_seq, "sequence JSON")->required();

  // certify
  auto* ce = app.add_subcommand("certify", "exact rank certificate");
  int ce_q = 2, ce_cap = 14;
  std::string ce_n, ce_r, ce_backend, ce_sample = "auto", ce_j, ce_w, ce_out;
  std::uint64_t ce_seed = 1;
  bool ce_brief = false;
  ce->add_option("--q", ce_q, "arity")->required();
  ce->add_option("--n", ce_n, "class sizes")->required();
  ce->add_option("--r", ce_r, "profile")->required();
  ce->add_option("--seed", ce_seed, "basis seed");
  ce->add_option("--backend", ce_backend, "rat | fp (default from WSAT_BACKEND, else fp)");
  ce->add_option("--sample", ce_sample, "all | auto | K");
  ce->add_option("--cap", ce_cap, "vertex cap for checking every R");
  ce->add_option("--J", ce_j, "J_i per class, e.g. '0;3' (';' between classes)");
  ce->add_option("--w", ce_w, "w_i per class");
  ce->add_flag("--brief", ce_brief, "omit per-R records");
  ce->add_option("--out", ce_out, "output path");

  // bruteforce
  auto* b = app.add_subcommand("bruteforce", "exact minimum by exhaustive search");
  HostArgs b_host;
  PatternArgs b_pat;
  std::size_t b_edges = 20;
  std::uint64_t b_cands = 20'000'000;
  std::string b_out;
  b_host.attach(b);
  b_pat.attach(b);
  b->add_option("--max-edges", b_edges, "refuse hosts with more edges");
  b->add_option("--max-candidates", b_cands, "give up after this many subgraphs");
  b->add_option("--out", b_out, "output path");

  // tensor
  auto* t = app.add_subcommand("tensor", "tensor product G x J");
  std::string t_g, t_j, t_jc, t_out;
  t->add_option("--g", t_g, "G JSON")->required();
  t->add_option("--j", t_j, "J JSON");
  t->add_option("--j-clique", t_jc, "J = complete Q:N");
  t->add_option("--out", t_out, "output path");

  // grid
  auto* g = app.add_subcommand("grid", "parameter sweep report");
  GridOptions go;
  std::string g_backend, g_format = "tsv", g_out, g_check;
  bool g_no_cert = false, g_quiet = false;
  g->add_option("--q-min", go.q_min, "smallest arity");
  g->add_option("--q-max", go.q_max, "largest arity");
  g->add_option("--d-max", go.d_max, "largest number of classes");
  g->add_option("--n-max", go.n_max, "largest class size");
  g->add_option("--seed", go.seed, "root seed");
  g->add_option("--backend", g_backend, "rat | fp");
  g->add_option("--bruteforce-max-edges", go.bruteforce_max_edges, "brute force hosts up to this many edges (0: off)");
  g->add_flag("--no-certify", g_no_cert, "skip certificates");
  g->add_flag("--timings", go.timings, "add a wall-clock column (breaks byte-determinism)");
  g->add_option("--format", g_format, "tsv | json");
  g->add_option("--out", g_out, "output path");
  g->add_option("--check", g_check, "golden TSV to compare against");
  g->add_flag("--quiet", g_quiet, "no summary on stderr");

  // extalg
  auto* x = app.add_subcommand("extalg", "exterior algebra scratchpad");
  x->require_subcommand(1);
  auto* xe = x->add_subcommand("eval", "evaluate an expression");
  std::string x_expr, x_parts, x_backend;
  int x_n = 4;
  std::optional<std::uint64_t> x_seed;
  xe->add_option("expr", x_expr, "expression, e.g. 'lip(e{1}, e{0,1})'")->required();
  xe->add_option("--n", x_n, "ground set size");
  xe->add_option("--parts", x_parts, "block sizes for the f basis");
  xe->add_option("--basis-seed", x_seed, "seed of the colorful orthonormal f basis");
  xe->add_option("--backend", x_backend, "rat | fp");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (f->parsed()) return cmd_formula(f_q, f_n, f_r, f_itemize, f_lovasz, f_ms, f_format);
    if (c->parsed()) return cmd_construct(ca);
    if (cl->parsed()) return cmd_closure(cl_host, cl_pat, cl_graph, cl_shuffle, cl_out, cl_seq_out);
    if (v->parsed()) return cmd_verify(v_host, v_pat, v_graph, v_seq);
    if (ce->parsed()) return cmd_certify(ce_q, ce_n, ce_r, ce_seed, ce_backend, ce_sample, ce_cap, ce_j, ce_w, ce_brief, ce_out);
    if (b->parsed()) return cmd_bruteforce(b_host, b_pat, b_edges, b_cands, b_out);
    if (t->parsed()) return cmd_tensor(t_g, t_j, t_jc, t_out);
    if (g->parsed()) {
      go.certify = !g_no_cert;
      return cmd_grid(go, g_backend, g_format, g_out, g_check, g_quiet);
    }
    if (xe->parsed()) {
      if (x_n < 0 || x_n > kMaxVertices) throw InputError("--n must be in [0,64]");
      return backend_or_default(x_backend) == Backend::Rational ? eval_expr<Rational>(x_expr, x_n, x_parts, x_seed)
                                                                 : eval_expr<Fp61>(x_expr, x_n, x_parts, x_seed);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kInput;
}
