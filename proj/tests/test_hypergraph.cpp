#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace wsat;
using namespace testing_support;

TEST(Bits, MaskRoundTrip) {
  EXPECT_EQ(mask_of({0, 3, 5}), Mask{0b101001});
  EXPECT_EQ(vertices_of(0b101001), (std::vector<Vertex>{0, 3, 5}));
  EXPECT_EQ(low_bits(64), ~Mask{0});
  EXPECT_EQ(binomial(6, 3), 20u);
  int count = 0;
  for_each_subset_of_size(low_bits(6), 3, [&](Mask) { ++count; });
  EXPECT_EQ(count, 20);
}

TEST(PartitionedVertexSet, RejectsOverlapAndBadOrder) {
  EXPECT_THROW(PartitionedVertexSet({{0, 1}, {1, 2}}), InputError);
  EXPECT_THROW(PartitionedVertexSet({{2, 3}, {0, 1}}), InputError);
  auto p = PartitionedVertexSet::from_sizes({2, 3});
  EXPECT_EQ(p.class_of(4), 1);
  EXPECT_TRUE(p.is_transversal(mask_of({1, 2})));
  EXPECT_FALSE(p.is_transversal(mask_of({2, 3})));
}

TEST(Hypergraph, RejectsMalformedEdges) {
  EXPECT_THROW(Hypergraph(2, low_bits(3), {mask_of({0, 1, 2})}), InputError);
  EXPECT_THROW(Hypergraph(2, low_bits(3), {mask_of({0, 1}), mask_of({0, 1})}), InputError);
  EXPECT_THROW(Hypergraph(2, low_bits(3), {mask_of({0, 5})}), InputError);
}

TEST(CompleteMultipartite, SmallExamples) {
  EXPECT_EQ(complete_multipartite(2, {2, 2}).size(), 4u);
  EXPECT_EQ(complete_multipartite(3, {2, 2, 2}).size(), 8u);
  EXPECT_EQ(complete_multipartite(2, {3, 3, 3}).size(), 27u);
  EXPECT_EQ(complete_multipartite(3, {2, 2}).size(), 0u);
}

TEST(CompleteMultipartite, EdgeCountMatchesEnumeration) {
  // all n-vectors with d <= 4 classes of size <= 3 (d = 5 is exercised by a sample)
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 120; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 5);
    std::vector<int> n(d);
    for (auto& x : n) x = 1 + static_cast<int>(rng() % (d == 5 ? 3 : 5));
    const int q = 1 + static_cast<int>(rng() % d);
    const auto h = complete_multipartite(q, n);
    const auto parts = h.partition()->parts();
    auto brute = oracle::multipartite_edges(q, parts);
    ASSERT_EQ(h.size(), brute.size());
    EXPECT_EQ(edge_set(h), oracle::EdgeSet(brute.begin(), brute.end()));
    // closed sum over q-subsets of classes
    unsigned long sum = 0;
    for_each_subset_of_size(low_bits(d), q, [&](Mask cls) {
      unsigned long p = 1;
      for (Vertex c : vertices_of(cls)) p *= n[c];
      sum += p;
    });
    EXPECT_EQ(h.size(), sum);
  }
}

TEST(CompleteClique, Counts) {
  EXPECT_EQ(complete_clique(2, 4).size(), 6u);
  EXPECT_EQ(complete_clique(3, 5).size(), 10u);
  EXPECT_EQ(complete_clique(2, 2).size(), 1u);
  EXPECT_THROW(complete_clique(3, 2), InputError);
}

TEST(EdgeCode, ColexBijection) {
  const auto h = complete_clique(3, 6);
  for (std::size_t i = 0; i < h.size(); ++i) EXPECT_EQ(h.code_of(h.edges()[i]), i);
  // colex: compare by largest differing element
  for (std::size_t i = 1; i < h.size(); ++i) {
    const Mask a = h.edges()[i - 1], b = h.edges()[i];
    EXPECT_TRUE(highest(a ^ b) == highest(b ^ (a & b)) && (b & bit(highest(a ^ b))));
  }
  EXPECT_FALSE(h.code_of(mask_of({0, 1})).has_value());
}

TEST(Induced, Examples) {
  const auto h22 = complete_multipartite(2, {2, 2});
  EXPECT_EQ(induced(h22, mask_of({0, 1})).size(), 0u);
  const auto h33 = complete_multipartite(2, {3, 3});
  EXPECT_EQ(induced(h33, mask_of({0, 1, 3, 4})).size(), 4u);
  const auto h222 = complete_multipartite(3, {2, 2, 2});
  EXPECT_EQ(induced(h222, mask_of({0, 2, 4})).size(), 1u);
  EXPECT_EQ(induced(h33, h33.vertices()), h33);
  EXPECT_THROW(induced(h22, mask_of({7})), InputError);
}

TEST(Link, Examples) {
  const auto tri = complete_clique(2, 3);
  const auto l = link(tri, 1);
  EXPECT_EQ(l.arity(), 1);
  EXPECT_EQ(l.size(), 2u);
  EXPECT_EQ(link(c4(), 0).size(), 2u);
  const auto single = complete_multipartite(3, {1, 1, 1});
  EXPECT_EQ(link(single, 0).edges(), std::vector<Mask>{mask_of({1, 2})});
  // degree zero vertex: empty link
  EXPECT_EQ(link(Hypergraph(2, low_bits(3), {mask_of({0, 1})}), 2).size(), 0u);
}

TEST(Link, DegreeSumIdentity) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int q = 1 + static_cast<int>(rng() % 3), n = q + static_cast<int>(rng() % 4);
    const auto g = random_subgraph(complete_clique(q, n), rng, 0.5);
    std::size_t total = 0;
    for (Vertex v : vertices_of(g.vertices())) total += link(g, v).size();
    EXPECT_EQ(total, static_cast<std::size_t>(q) * g.size());
  }
}

TEST(Codegree, MinPositive) {
  EXPECT_EQ(min_positive_codegree(c4()), 2u);
  for (int r = 1; r <= 4; ++r) EXPECT_EQ(min_positive_codegree(complete_multipartite(2, {r, r})), static_cast<std::size_t>(r));
  // zero co-degree sets do not count
  const auto path = Hypergraph(2, low_bits(4), {mask_of({0, 1}), mask_of({1, 2})});
  EXPECT_EQ(codegree(path, bit(3)), 0u);
  EXPECT_EQ(min_positive_codegree(path), 1u);
  EXPECT_THROW(min_positive_codegree(Hypergraph(2, low_bits(3), {})), InputError);
  EXPECT_THROW(codegree(path, mask_of({0, 1})), InputError);
}

TEST(TensorProduct, Examples) {
  const auto k2 = complete_clique(2, 2);
  const auto m = tensor_product(k2, k2);
  EXPECT_EQ(m.size(), 2u);
  EXPECT_EQ(m.num_vertices(), 4);
  EXPECT_EQ(tensor_product(complete_clique(2, 3), k2).size(), 6u);
  EXPECT_THROW(tensor_product(complete_clique(2, 3), complete_clique(3, 3)), InputError);
}

TEST(TensorProduct, SizeSymmetric) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int q = 2 + static_cast<int>(rng() % 2);
    const auto g = random_subgraph(complete_clique(q, q + 2), rng, 0.6);
    const auto j = random_subgraph(complete_clique(q, q + 1), rng, 0.6);
    EXPECT_EQ(tensor_product(g, j).size(), tensor_product(j, g).size());
    EXPECT_EQ(tensor_product(g, j).size(), g.size() * j.size() * (q == 2 ? 2 : 6));
  }
}

TEST(Compact, RelabelsInOrder) {
  const auto g = Hypergraph(2, low_bits(8), {mask_of({2, 5}), mask_of({5, 7})});
  const auto c = compact(g);
  EXPECT_EQ(c.edges(), (std::vector<Mask>{mask_of({0, 1}), mask_of({1, 2})}));
  EXPECT_TRUE(has_isolated_vertices(g));
  EXPECT_FALSE(has_isolated_vertices(c));
}
