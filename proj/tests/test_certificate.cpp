#include <gtest/gtest.h>

#include "support.hpp"

using namespace wsat;
using namespace testing_support;

namespace {

CertificateConfig cfg_of(int q, std::vector<int> n, std::vector<int> r, Backend b = Backend::PrimeField, std::uint64_t seed = 1) {
  CertificateConfig c;
  c.q = q;
  c.n = std::move(n);
  c.r = std::move(r);
  c.backend = b;
  c.seed = seed;
  return c;
}

}  // namespace

TEST(Certificate, ThreeByThree) {
  for (auto b : {Backend::Rational, Backend::PrimeField}) {
    const auto rep = certify(cfg_of(2, {3, 3}, {2, 2}, b));
    EXPECT_EQ(rep.generator_count, 4u);
    EXPECT_EQ(rep.dim_u, 4u);
    EXPECT_EQ(rep.rank_gamma, 5u);
    EXPECT_TRUE(rep.dim_u_tight);
    EXPECT_TRUE(rep.certified);
    EXPECT_EQ(rep.sample_mode, "all");
    EXPECT_EQ(rep.kernel_checks.size(), 9u);
  }
}

TEST(Certificate, TriangleProfiles) {
  const auto a = certify(cfg_of(2, {2, 2, 2}, {1, 1, 1}));
  EXPECT_EQ(a.rank_gamma, 5u);
  EXPECT_TRUE(a.certified);
  const auto b = certify(cfg_of(3, {2, 2, 2}, {1, 1, 1}));
  EXPECT_EQ(b.rank_gamma, 0u);
  EXPECT_TRUE(b.certified);
}

TEST(Certificate, BackendsAndSeedsAgree) {
  const std::vector<std::tuple<int, std::vector<int>, std::vector<int>>> cases = {
      {2, {3, 3}, {2, 2}}, {2, {3, 2, 3}, {2, 1, 3}}, {3, {2, 3, 2}, {1, 2, 2}}, {2, {3, 3, 3, 2}, {2, 2, 1, 2}}, {3, {3, 3, 3}, {2, 2, 2}}};
  for (const auto& [q, n, r] : cases) {
    const auto ref = certify(cfg_of(q, n, r, Backend::Rational, 1));
    EXPECT_TRUE(ref.certified);
    for (std::uint64_t seed : {1u, 7u, 99u, 2024u}) {
      const auto f = certify(cfg_of(q, n, r, Backend::PrimeField, seed));
      EXPECT_EQ(f.rank_gamma, ref.rank_gamma);
      EXPECT_EQ(f.dim_u, ref.dim_u);
      EXPECT_TRUE(f.certified);
    }
    const auto r2 = certify(cfg_of(q, n, r, Backend::Rational, 31));
    EXPECT_EQ(r2.rank_gamma, ref.rank_gamma);
  }
}

TEST(Certificate, RankPlusDimUIsSpan) {
  GridOptions o;
  o.q_max = 3;
  o.d_max = 3;
  o.n_max = 3;
  for_each_grid_point(o, [](int q, const std::vector<int>& n, const std::vector<int>& r) {
    const auto rep = certify(cfg_of(q, n, r));
    EXPECT_EQ(rep.rank_gamma + rep.dim_u, rep.dim_span);
    EXPECT_EQ(rep.dim_span, complete_multipartite(q, n).size());
    EXPECT_LE(BigInt(static_cast<unsigned long>(rep.dim_u)), rep.generator_bound);
    EXPECT_TRUE(rep.certified);
  });
}

TEST(Certificate, DimUMatchesOracleRank) {
  // rebuild the generators here and rank them with the independent eliminator
  for (const auto& [q, n, r] : std::vector<std::tuple<int, std::vector<int>, std::vector<int>>>{
           {2, {3, 3}, {2, 2}}, {2, {2, 3, 2}, {1, 2, 2}}, {3, {2, 2, 3}, {1, 2, 2}}}) {
    const auto c = cfg_of(q, n, r, Backend::Rational);
    const auto rep = certify(c);
    const auto host = complete_multipartite(q, n);
    const auto basis = colorful_generic_orthonormal_basis<Rational>(*host.partition(), rep.seed_trail.back());
    const auto gens = build_u<Rational>(c, basis);
    Matrix<Rational> m;
    for (const auto& x : gens) {
      std::vector<Rational> row(host.size(), 0);
      for (const auto& [set, coeff] : x.terms()) {
        auto code = host.code_of(set);
        ASSERT_TRUE(code.has_value());
        row[*code] = coeff;
      }
      m.push_back(row);
    }
    EXPECT_EQ(oracle::rank(m), rep.dim_u);
  }
}

TEST(Certificate, KernelElementsOnRandomR) {
  const auto c = cfg_of(2, {2, 2, 2}, {1, 1, 1}, Backend::Rational);
  const auto host = complete_multipartite(2, {2, 2, 2});
  const auto& parts = *host.partition();
  const auto basis = colorful_generic_orthonormal_basis<Rational>(parts, 3);
  const Mask w_all = mask_of({0, 2, 4});
  const auto g = build_g(w_all, 1, basis);
  std::mt19937_64 rng(12);
  for (int t = 0; t < 5; ++t) {
    Mask rset = 0;
    for (int i = 0; i < 3; ++i) rset |= bit(parts.part(i)[rng() % 2]);
    const auto m = kernel_element(g, 0, rset, basis);
    EXPECT_EQ(m.support(), induced(host, rset).edges());
  }
  EXPECT_TRUE(lemma_gsfz_check(g, w_all, 1, 3, basis, 3));
}

TEST(Certificate, SampledAndExplicitJ) {
  auto c = cfg_of(2, {3, 3, 3}, {2, 2, 2});
  c.sample = 5;
  auto rep = certify(c);
  EXPECT_EQ(rep.kernel_checks.size(), 5u);
  EXPECT_EQ(rep.sample_mode, "5");
  EXPECT_TRUE(rep.certified);
  c.sample.reset();
  c.j_sets = {mask_of({2}), mask_of({5}), mask_of({8})};
  c.w = {0, 3, 6};
  rep = certify(c);
  EXPECT_TRUE(rep.certified);
  c.w = {2, 3, 6};
  EXPECT_THROW(certify(c), InputError);
  c.w = {0, 3};
  EXPECT_THROW(certify(c), InputError);
}

TEST(Certificate, AllRCapAndErrors) {
  auto c = cfg_of(2, {4, 4, 4, 4}, {2, 2, 2, 2});
  c.sample = 0;
  EXPECT_THROW(certify(c), BudgetExceeded);
  EXPECT_THROW(certify(cfg_of(2, {2, 2}, {3, 1})), InputError);
  EXPECT_THROW(certify(cfg_of(3, {2, 2}, {1, 1})), InputError);
}

TEST(Certificate, JsonKeys) {
  const auto j = certify(cfg_of(2, {3, 3}, {2, 2})).to_json();
  for (const char* k : {"q", "n", "r", "backend", "seed", "seed_trail", "resamples", "dim_span", "generators", "dim_U", "rank_gamma",
                        "formula", "gsfz_ok", "sample", "R_total", "R_checked", "kernel_ok", "kernel_checks", "certified"})
    EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_EQ(j["backend"], "fp");
  EXPECT_EQ(j["rank_gamma"], 5);
  EXPECT_EQ(j["formula"], "5");
}
