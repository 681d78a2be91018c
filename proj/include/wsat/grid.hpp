#pragma once

// Parameter sweep over (q, d, n, r): formula, construction, closure,
// certificate and (for small hosts) brute force, one row per point.

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wsat/certificate.hpp"
#include "wsat/constructions.hpp"
#include "wsat/formulas.hpp"
#include "wsat/saturation.hpp"

namespace wsat {

struct GridOptions {
  int q_min = 2, q_max = 3;
  int d_max = 3;
  int n_max = 3;
  std::uint64_t seed = 1;
  Backend backend = Backend::PrimeField;
  std::size_t bruteforce_max_edges = 12;  // 0 disables brute force
  bool certify = true;
  bool timings = false;
};

struct GridRow {
  int q = 0;
  std::vector<int> n, r;
  BigInt formula;
  std::size_t construction = 0;
  bool layered_ok = false;
  bool closure_ok = false;
  std::optional<std::size_t> rank_gamma, dim_u;
  bool kernel_ok = false;
  // "-" not run, "?" inconclusive, else the value
  std::string bruteforce = "-";
  bool agree = false;
  double millis = 0;
};

inline std::string join_ints(const std::vector<int>& v, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
  return out;
}

/// Every ordered class-size vector in [1,n_max]^d, then every r ≤ n, lexicographically.
inline void for_each_grid_point(const GridOptions& o, const std::function<void(int, const std::vector<int>&, const std::vector<int>&)>& f) {
  for (int q = o.q_min; q <= o.q_max; ++q)
    for (int d = q; d <= o.d_max; ++d) {
      std::vector<int> n(d, 1);
      while (true) {
        std::vector<int> r(d, 1);
        while (true) {
          f(q, n, r);
          int i = d - 1;
          while (i >= 0 && ++r[i] > n[i]) r[i--] = 1;
          if (i < 0) break;
        }
        int i = d - 1;
        while (i >= 0 && ++n[i] > o.n_max) n[i--] = 1;
        if (i < 0) break;
      }
    }
}

inline GridRow run_grid_point(int q, const std::vector<int>& n, const std::vector<int>& r, const GridOptions& o) {
  const auto t0 = std::chrono::steady_clock::now();
  GridRow row;
  row.q = q;
  row.n = n;
  row.r = r;
  row.formula = mwsat_formula(q, n, r).value;

  const auto built = upper_bound_construction(q, n, r);
  row.construction = built.graph.size();
  const Pattern pattern = Pattern::multipartite(q, r, HostMode::DirectedPartite);
  row.layered_ok = verify_sequence(built.graph, built.host, pattern, layered_sequence(built));
  const auto cl = closure(built.graph, built.host, pattern);
  row.closure_ok = cl.is_saturated && verify_sequence(built.graph, built.host, pattern, cl.added);

  bool ok = row.layered_ok && row.closure_ok && BigInt(static_cast<unsigned long>(row.construction)) == row.formula;
  if (o.certify) {
    CertificateConfig cfg;
    cfg.q = q;
    cfg.n = n;
    cfg.r = r;
    cfg.seed = derive_seed(o.seed, {static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(n.size())});
    cfg.backend = o.backend;
    const auto rep = certify(cfg);
    row.rank_gamma = rep.rank_gamma;
    row.dim_u = rep.dim_u;
    row.kernel_ok = rep.kernel_ok && rep.gsfz_ok;
    ok = ok && rep.certified;
  }
  if (o.bruteforce_max_edges > 0 && built.host.size() <= o.bruteforce_max_edges) {
    BruteForceBudget budget;
    budget.max_host_edges = o.bruteforce_max_edges;
    const auto bf = min_wsat_bruteforce(built.host, pattern, budget);
    if (bf.conclusive) {
      row.bruteforce = std::to_string(bf.value);
      ok = ok && BigInt(static_cast<unsigned long>(bf.value)) == row.formula;
    } else {
      row.bruteforce = "?";
    }
  }
  row.agree = ok;
  row.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

inline std::vector<GridRow> run_grid(const GridOptions& o, const std::function<void(const GridRow&)>& progress = {}) {
  std::vector<GridRow> rows;
  for_each_grid_point(o, [&](int q, const std::vector<int>& n, const std::vector<int>& r) {
    rows.push_back(run_grid_point(q, n, r, o));
    if (progress) progress(rows.back());
  });
  return rows;
}

inline std::string grid_tsv_header(bool timings) {
  std::string h = "q\td\tn\tr\tformula\tconstruction\tlayered\tclosure\trank_gamma\tdim_U\tkernel\tbruteforce\tagree";
  return timings ? h + "\tms" : h;
}

inline std::string grid_tsv_line(const GridRow& row, bool timings) {
  auto opt = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
  std::ostringstream os;
  os << row.q << '\t' << row.n.size() << '\t' << join_ints(row.n) << '\t' << join_ints(row.r) << '\t' << row.formula.get_str() << '\t'
     << row.construction << '\t' << (row.layered_ok ? "ok" : "FAIL") << '\t' << (row.closure_ok ? "ok" : "FAIL") << '\t'
     << opt(row.rank_gamma) << '\t' << opt(row.dim_u) << '\t' << (row.rank_gamma ? (row.kernel_ok ? "ok" : "FAIL") : "-") << '\t'
     << row.bruteforce << '\t' << (row.agree ? "yes" : "NO");
  if (timings) os << '\t' << static_cast<long long>(row.millis);
  return os.str();
}

inline std::string grid_tsv(const std::vector<GridRow>& rows, bool timings) {
  std::string out = grid_tsv_header(timings) + "\n";
  for (const auto& row : rows) out += grid_tsv_line(row, timings) + "\n";
  return out;
}

inline nlohmann::json grid_json(const std::vector<GridRow>& rows, const GridOptions& o) {
  nlohmann::json arr = nlohmann::json::array();
  std::size_t agreeing = 0;
  for (const auto& row : rows) {
    nlohmann::json j = {{"q", row.q},
                        {"d", row.n.size()},
                        {"n", row.n},
                        {"r", row.r},
                        {"formula", row.formula.get_str()},
                        {"construction", row.construction},
                        {"layered_ok", row.layered_ok},
                        {"closure_ok", row.closure_ok},
                        {"rank_gamma", row.rank_gamma ? nlohmann::json(*row.rank_gamma) : nlohmann::json(nullptr)},
                        {"dim_U", row.dim_u ? nlohmann::json(*row.dim_u) : nlohmann::json(nullptr)},
                        {"kernel_ok", row.rank_gamma ? nlohmann::json(row.kernel_ok) : nlohmann::json(nullptr)},
                        {"bruteforce", row.bruteforce},
                        {"agree", row.agree}};
    if (o.timings) j["ms"] = row.millis;
    agreeing += row.agree ? 1 : 0;
    arr.push_back(std::move(j));
  }
  return {{"q_max", o.q_max}, {"d_max", o.d_max},  {"n_max", o.n_max},       {"seed", o.seed},
          {"backend", to_string(o.backend)}, {"rows", arr}, {"points", rows.size()}, {"agreeing", agreeing}};
}

struct GridDiff {
  std::size_t compared = 0;
  std::vector<std::string> mismatches;
};

/// Compares rows against a golden TSV (timing column ignored). Golden rows
/// for parameter points outside the run are skipped; run rows missing from
/// the golden file are mismatches.
inline GridDiff check_against_golden(const std::vector<GridRow>& rows, const std::string& golden_text) {
  auto strip_ms = [](std::string line) {
    auto fields = std::count(line.begin(), line.end(), '\t');
    if (fields == 13) line = line.substr(0, line.rfind('\t'));
    return line;
  };
  std::map<std::string, std::string> golden;
  std::istringstream in(golden_text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    line = strip_ms(line);
    std::istringstream ls(line);
    std::string q, d, n, r;
    std::getline(ls, q, '\t');
    std::getline(ls, d, '\t');
    std::getline(ls, n, '\t');
    std::getline(ls, r, '\t');
    golden[q + "|" + n + "|" + r] = line;
  }
  GridDiff diff;
  for (const auto& row : rows) {
    const std::string key = std::to_string(row.q) + "|" + join_ints(row.n) + "|" + join_ints(row.r);
    const std::string mine = grid_tsv_line(row, false);
    ++diff.compared;
    auto it = golden.find(key);
    if (it == golden.end()) diff.mismatches.push_back("missing in golden: " + mine);
    else if (it->second != mine) diff.mismatches.push_back("golden: " + it->second + "\n   run: " + mine);
  }
  return diff;
}

}  // namespace wsat
