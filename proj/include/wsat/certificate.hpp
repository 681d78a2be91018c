#pragma once

// Exact rank certificate for the directed partite lower bound.

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "wsat/exterior.hpp"
#include "wsat/formulas.hpp"
#include "wsat/hypergraph.hpp"
#include "wsat/linalg.hpp"
#include "wsat/saturation.hpp"

namespace wsat {

struct CertificateConfig {
  int q = 2;
  std::vector<int> n, r;
  // empty = lex-least: J_i the first r_i − 1 vertices of class i, w_i the next one
  std::vector<Mask> j_sets;
  std::vector<Vertex> w;
  std::uint64_t seed = 1;
  Backend backend = Backend::PrimeField;
  // nullopt: all R when Π C(n_i,r_i) <= 200, else 20 seeded samples; 0 = all
  std::optional<int> sample;
  int all_r_vertex_cap = 14;
  int max_resamples = 8;
};

struct KernelCheck {
  Mask r_set = 0;
  bool support_ok = false;
  bool in_u = false;
};

struct CertificateReport {
  int q = 0;
  std::vector<int> n, r;
  Backend backend = Backend::PrimeField;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> seed_trail;  // basis seeds tried, last one used
  std::size_t dim_span = 0;
  std::size_t generator_count = 0;
  std::size_t dim_u = 0;
  std::size_t rank_gamma = 0;
  BigInt formula_value;
  BigInt generator_bound;  // Σ_{|I|<=q} Π (n_i − r_i)
  bool dim_u_tight = false;
  bool gsfz_ok = false;
  std::string sample_mode;
  std::uint64_t r_total = 0;
  std::vector<KernelCheck> kernel_checks;
  bool kernel_ok = false;
  bool certified = false;
  std::string error;

  nlohmann::json to_json() const {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : kernel_checks) checks.push_back({{"R", vertices_of(c.r_set)}, {"support_ok", c.support_ok}, {"in_U", c.in_u}});
    nlohmann::json j = {
        {"q", q},
        {"n", n},
        {"r", r},
        {"backend", to_string(backend)},
        {"seed", seed},
        {"seed_trail", seed_trail},
        {"resamples", seed_trail.empty() ? 0 : seed_trail.size() - 1},
        {"dim_span", dim_span},
        {"generators", generator_count},
        {"generator_bound", generator_bound.get_str()},
        {"dim_U", dim_u},
        {"dim_U_tight", dim_u_tight},
        {"rank_gamma", rank_gamma},
        {"formula", formula_value.get_str()},
        {"gsfz_ok", gsfz_ok},
        {"sample", sample_mode},
        {"R_total", r_total},
        {"R_checked", kernel_checks.size()},
        {"kernel_ok", kernel_ok},
        {"kernel_checks", checks},
        {"certified", certified},
    };
    if (!error.empty()) j["error"] = error;
    return j;
  }
};

namespace detail {

struct CertificateSetup {
  Hypergraph host;
  PartitionedVertexSet parts;
  int d = 0, s = 0;
  std::vector<Mask> j_sets;
  Mask j_all = 0, w_all = 0;
};

inline CertificateSetup make_setup(const CertificateConfig& cfg) {
  check_partite_params(cfg.q, cfg.n, cfg.r);
  CertificateSetup st;
  st.host = complete_multipartite(cfg.q, cfg.n);
  st.parts = *st.host.partition();
  st.d = st.parts.num_classes();
  st.s = st.d - cfg.q;
  if (cfg.j_sets.empty() != cfg.w.empty()) throw InputError("give both J and w, or neither");
  for (int i = 0; i < st.d; ++i) {
    const auto& part = st.parts.part(i);
    Mask ji = 0;
    Vertex wi = -1;
    if (cfg.j_sets.empty()) {
      for (int k = 0; k < cfg.r[i] - 1; ++k) ji |= bit(part[k]);
      wi = part[cfg.r[i] - 1];
    } else {
      if (static_cast<int>(cfg.j_sets.size()) != st.d || static_cast<int>(cfg.w.size()) != st.d)
        throw InputError("need one J_i and one w_i per class");
      ji = cfg.j_sets[i];
      wi = cfg.w[i];
      if (!contains(st.parts.part_mask(i), ji) || popcount(ji) != cfg.r[i] - 1) throw InputError("J_i must be r_i − 1 vertices of class i");
      if (wi < 0 || wi >= kMaxVertices || !(st.parts.part_mask(i) & bit(wi)) || (ji & bit(wi)))
        throw InputError("w_i must be a vertex of class i outside J_i");
    }
    st.j_sets.push_back(ji);
    st.j_all |= ji;
    st.w_all |= bit(wi);
  }
  return st;
}

// Every transversal T with one vertex per class, avoiding J, and |T ∩ W| >= s.
inline std::vector<Mask> u_index_sets(const CertificateSetup& st) {
  std::vector<Mask> out;
  std::vector<Mask> avail;
  for (int i = 0; i < st.d; ++i) avail.push_back(st.parts.part_mask(i) & ~st.j_all);
  auto each = [&](Mask t) {
    if (popcount(t & st.w_all) >= st.s) out.push_back(t);
    return true;
  };
  for_each_transversal(~Mask{0}, st.d, avail, 0, 0, each);
  std::sort(out.begin(), out.end());
  return out;
}

// Every R with |R ∩ N_i| = r_i, in colex order of the per-class choices.
inline void for_each_r_set(const CertificateSetup& st, const std::vector<int>& r, const std::function<void(Mask)>& f) {
  std::function<void(int, Mask)> rec = [&](int i, Mask acc) {
    if (i == st.d) return f(acc);
    for_each_subset_of_size(st.parts.part_mask(i), r[i], [&](Mask sub) { rec(i + 1, acc | sub); });
  };
  rec(0, 0);
}

}  // namespace detail

/// g = Σ_{T ∈ C(W,s)} f_T.
template <typename S>
Multivector<S> build_g(Mask w_all, int s, const BasisChange<S>& basis) {
  Multivector<S> g(basis.size());
  for_each_subset_of_size(w_all, s, [&](Mask t) { g = g + basis.expand_f(t); });
  return g;
}

/// Generators g ⌞ f_T of U, in the standard basis.
template <typename S>
std::vector<Multivector<S>> build_u(const CertificateConfig& cfg, const BasisChange<S>& basis) {
  const auto st = detail::make_setup(cfg);
  const auto g = build_g(st.w_all, st.s, basis);
  std::vector<Multivector<S>> out;
  for (Mask t : detail::u_index_sets(st)) out.push_back(left_interior(g, basis.expand_f(t)));
  return out;
}

/// m = (g ∧ f_J) ⌞ e_R.
template <typename S>
Multivector<S> kernel_element(const Multivector<S>& g, Mask j_all, Mask r_set, const BasisChange<S>& basis) {
  return left_interior(wedge(g, basis.expand_f(j_all)), Multivector<S>::basis(basis.size(), r_set));
}

/// g ⌞ f_Z = 0 for |Z ∩ W| < s (seeded sample of Z, |Z| between s and d), and
/// ⟨g, f_Z⟩ = ±1 for Z ⊆ W, 0 otherwise, over every |Z| = s.
template <typename S>
bool lemma_gsfz_check(const Multivector<S>& g, Mask w_all, int s, int d, const BasisChange<S>& basis, std::uint64_t seed,
                      int samples = 20) {
  using T = ScalarTraits<S>;
  const int n = basis.size();
  bool ok = true;
  for_each_subset_of_size(low_bits(n), s, [&](Mask z) {
    const S c = inner(g, basis.expand_f(z));
    if (contains(w_all, z)) ok = ok && (c == T::one() || c == -T::one());
    else ok = ok && T::is_zero(c);
  });
  if (s == 0) return ok;
  Rng rng(derive_seed(seed, {0x65f2}));
  for (int k = 0; k < samples; ++k) {
    const int z = static_cast<int>(uniform_in(rng, s, d));
    // draw Z with at most s−1 vertices of W
    std::vector<Vertex> pool = vertices_of(low_bits(n));
    shuffle(pool, rng);
    Mask zset = 0;
    int in_w = 0;
    for (Vertex v : pool) {
      if (popcount(zset) == z) break;
      if ((w_all & bit(v)) && in_w >= s - 1) continue;
      in_w += (w_all & bit(v)) ? 1 : 0;
      zset |= bit(v);
    }
    if (popcount(zset) != z) continue;
    ok = ok && left_interior(g, basis.expand_f(zset)).is_zero();
  }
  return ok;
}

template <typename S>
CertificateReport certify_with(const CertificateConfig& cfg) {
  const auto st = detail::make_setup(cfg);
  CertificateReport rep;
  rep.q = cfg.q;
  rep.n = cfg.n;
  rep.r = cfg.r;
  rep.backend = ScalarTraits<S>::backend;
  rep.seed = cfg.seed;
  const auto formula = mwsat_formula(cfg.q, cfg.n, cfg.r);
  rep.formula_value = formula.value;
  rep.generator_bound = formula.second_sum;
  rep.dim_span = st.host.size();

  // R selection
  std::uint64_t total = 1;
  for (int i = 0; i < st.d; ++i) total *= binomial(cfg.n[i], cfg.r[i]);
  rep.r_total = total;
  bool all = cfg.sample ? *cfg.sample == 0 || static_cast<std::uint64_t>(*cfg.sample) >= total : total <= 200;
  const int count = cfg.sample && *cfg.sample > 0 ? *cfg.sample : 20;
  std::vector<Mask> r_sets;
  if (all) {
    if (st.parts.size() > cfg.all_r_vertex_cap)
      throw BudgetExceeded("all-R mode refused: " + std::to_string(st.parts.size()) + " vertices exceed the cap of " +
                           std::to_string(cfg.all_r_vertex_cap));
    rep.sample_mode = "all";
    detail::for_each_r_set(st, cfg.r, [&](Mask m) { r_sets.push_back(m); });
  } else {
    rep.sample_mode = std::to_string(count);
    Rng rng(derive_seed(cfg.seed, {0x5e7}));
    std::set<Mask> seen;
    while (static_cast<int>(r_sets.size()) < count) {
      Mask m = 0;
      for (int i = 0; i < st.d; ++i) {
        std::vector<Vertex> part = st.parts.part(i);
        shuffle(part, rng);
        for (int k = 0; k < cfg.r[i]; ++k) m |= bit(part[k]);
      }
      if (seen.insert(m).second) r_sets.push_back(m);
    }
  }

  const auto index_sets = detail::u_index_sets(st);
  rep.generator_count = index_sets.size();
  auto dense = [&](const Multivector<S>& x) -> std::optional<std::vector<S>> {
    std::vector<S> v(st.host.size(), ScalarTraits<S>::zero());
    for (const auto& [set, c] : x.terms()) {
      auto code = st.host.code_of(set);
      if (!code) return std::nullopt;
      v[*code] = c;
    }
    return v;
  };

  for (int attempt = 0; attempt <= cfg.max_resamples; ++attempt) {
    const std::uint64_t basis_seed = cfg.seed + static_cast<std::uint64_t>(attempt);
    rep.seed_trail.push_back(basis_seed);
    const auto basis = colorful_generic_orthonormal_basis<S>(st.parts, basis_seed);
    if (!basis.is_orthonormal() || !basis.is_block_diagonal()) throw std::logic_error("certify: basis is not colorful orthonormal");
    const auto g = build_g(st.w_all, st.s, basis);

    RowSpace<S> u(st.host.size());
    Matrix<S> rows;
    for (Mask t : index_sets) {
      auto v = dense(left_interior(g, basis.expand_f(t)));
      if (!v) throw std::logic_error("certify: a generator of U escapes the span of the host edges");
      u.insert(*v);
      rows.push_back(std::move(*v));
    }
    rep.dim_u = rank_of(rows);
    if (rep.dim_u != u.dim()) throw std::logic_error("certify: elimination and row-space dimensions disagree");
    rep.rank_gamma = rep.dim_span - rep.dim_u;
    rep.dim_u_tight = rep.dim_u == rep.generator_count;
    rep.gsfz_ok = lemma_gsfz_check(g, st.w_all, st.s, st.d, basis, basis_seed);

    rep.kernel_checks.clear();
    bool all_ok = true;
    for (Mask r_set : r_sets) {
      KernelCheck kc;
      kc.r_set = r_set;
      const auto m = kernel_element(g, st.j_all, r_set, basis);
      kc.support_ok = m.support() == induced(st.host, r_set).edges();
      if (kc.support_ok) {
        auto v = dense(m);
        kc.in_u = v && u.contains(std::move(*v));
      }
      all_ok = all_ok && kc.support_ok && kc.in_u;
      rep.kernel_checks.push_back(kc);
    }
    rep.kernel_ok = all_ok;
    if (all_ok && rep.gsfz_ok) break;
  }
  if (!rep.kernel_ok || !rep.gsfz_ok) rep.error = "basis resampling exhausted; seed trail lists every basis tried";
  rep.certified = rep.kernel_ok && rep.gsfz_ok && BigInt(static_cast<unsigned long>(rep.rank_gamma)) == rep.formula_value;
  return rep;
}

inline CertificateReport certify(const CertificateConfig& cfg) {
  return cfg.backend == Backend::Rational ? certify_with<Rational>(cfg) : certify_with<Fp61>(cfg);
}

}  // namespace wsat
