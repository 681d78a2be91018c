#include <gtest/gtest.h>

#include "identities.hpp"
#include "support.hpp"

using namespace wsat;
using namespace testing_support;

using MV = Multivector<Rational>;

TEST(Signs, Examples) {
  EXPECT_EQ(transpositions(mask_of({3}), mask_of({1, 2})), 2);
  EXPECT_EQ(sgn(mask_of({3}), mask_of({1, 2})), 1);
  EXPECT_EQ(sgn(mask_of({2}), mask_of({1})), -1);
  EXPECT_EQ(sgn(0, mask_of({1, 4})), 1);
  EXPECT_THROW(sgn(mask_of({1}), mask_of({1, 2})), InputError);
  SignCache cache;
  EXPECT_EQ(cache.sign(mask_of({3}), mask_of({1, 2})), 1);
  EXPECT_EQ(cache.profile_parity({1, 0}, {0, 1}), 0);
  EXPECT_EQ(cache.profile_parity({0, 1}, {1, 0}), 1);
}

TEST(Wedge, Examples) {
  const int n = 4;
  EXPECT_EQ(wedge(MV::basis(n, bit(1)), MV::basis(n, bit(2))), MV::basis(n, mask_of({1, 2})));
  EXPECT_EQ(wedge(MV::basis(n, bit(2)), MV::basis(n, bit(1))), -MV::basis(n, mask_of({1, 2})));
  EXPECT_TRUE(wedge(MV::basis(n, bit(1)), MV::basis(n, mask_of({1, 2}))).is_zero());
  const auto s = MV::basis(n, bit(1)) + MV::basis(n, bit(2));
  EXPECT_TRUE(wedge(s, s).is_zero());
  EXPECT_THROW(wedge(MV::basis(3, 1), MV::basis(4, 1)), InputError);
}

TEST(Inner, Examples) {
  EXPECT_EQ(inner(MV::basis(4, 5), MV::basis(4, 5)), 1);
  EXPECT_EQ(inner(MV::basis(4, 5), MV::basis(4, 6)), 0);
  EXPECT_EQ(inner(MV::basis(4, 5), MV(4)), 0);
}

TEST(LeftInterior, Examples) {
  const int n = 4;
  EXPECT_EQ(left_interior(MV::basis(n, bit(2)), MV::basis(n, mask_of({1, 2}))), MV::basis(n, bit(1)));
  EXPECT_EQ(left_interior(MV::basis(n, bit(1)), MV::basis(n, mask_of({1, 2}))), -MV::basis(n, bit(2)));
  EXPECT_TRUE(left_interior(MV::basis(n, bit(3)), MV::basis(n, mask_of({1, 2}))).is_zero());
}

TEST(DenseOracle, OperationsAgree) {
  identities::Gen g(77);
  for (int t = 0; t < 150; ++t) {
    const int n = g.in(1, 6);
    const auto x = g.mv(n, 5), y = g.mv(n, 5);
    const auto dx = dense_of(x), dy = dense_of(y);
    EXPECT_EQ(dense_of(wedge(x, y)).c, oracle::wedge(dx, dy).c);
    EXPECT_EQ(inner(x, y), oracle::inner(dx, dy));
    EXPECT_EQ(dense_of(left_interior(x, y)).c, oracle::left_interior(dx, dy).c);
  }
}

TEST(DenseOracle, ExpandMatchesRowProducts) {
  identities::Gen g(78);
  for (int t = 0; t < 40; ++t) {
    const int n = g.in(1, 6);
    const auto basis = colorful_generic_orthonormal_basis<Rational>(g.blocks(n), 100 + t);
    const Mask s = g.subset(low_bits(n));
    EXPECT_EQ(dense_of(basis.expand_f(s)).c, oracle::expand(basis.matrix(), s).c);
  }
}

TEST(LeftInterior, GradeRule) {
  identities::Gen g(5);
  for (int t = 0; t < 200; ++t) {
    const int n = g.in(1, 7);
    const int a = g.in(0, n), b = g.in(0, n);
    const auto x = g.mv(n, 4, a), y = g.mv(n, 4, b);
    const auto z = left_interior(x, y);
    if (a > b) EXPECT_TRUE(z.is_zero());
    else if (!z.is_zero()) EXPECT_EQ(z.degree(), b - a);
  }
}

TEST(Basis, OrthonormalBlockDiagonal) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto blocks = PartitionedVertexSet::from_sizes({1, 2, 3, static_cast<int>(seed % 4) + 1});
    const auto br = colorful_generic_orthonormal_basis<Rational>(blocks, seed);
    const auto bf = colorful_generic_orthonormal_basis<Fp61>(blocks, seed);
    EXPECT_TRUE(br.is_orthonormal());
    EXPECT_TRUE(br.is_block_diagonal());
    EXPECT_TRUE(bf.is_orthonormal());
    EXPECT_TRUE(bf.is_block_diagonal());
    EXPECT_TRUE(reduce_mod_p(br).is_orthonormal());
    // 1x1 blocks are ±1
    EXPECT_EQ(abs(br.entry(0, 0)), 1);
    // same-block minors used by the certificate are nonzero
    for (int i = 0; i < blocks.num_classes(); ++i)
      for_each_subset_of_size(blocks.part_mask(i), 1, [&](Mask s) {
        for_each_subset_of_size(blocks.part_mask(i), 1, [&](Mask r) { EXPECT_NE(inner(br.expand_f(s), MV::basis(br.size(), r)), 0); });
      });
  }
  const auto id = BasisChange<Rational>::identity(PartitionedVertexSet::from_sizes({3}));
  EXPECT_EQ(id.expand_f(mask_of({0, 2})), MV::basis(3, mask_of({0, 2})));
}

TEST(Basis, ExpandWedgesConsistently) {
  identities::Gen g(9);
  for (int t = 0; t < 60; ++t) {
    const int n = g.in(2, 7);
    const auto b = colorful_generic_orthonormal_basis<Rational>(g.blocks(n), t + 1);
    const Mask s = g.subset(low_bits(n));
    const Mask u = g.subset(low_bits(n) & ~s);
    const auto lhs = wedge(b.expand_f(s), b.expand_f(u));
    auto rhs = b.expand_f(s | u);
    if (sgn(s, u) < 0) rhs = -rhs;
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(ClosedForm, Examples) {
  const auto b = colorful_generic_orthonormal_basis<Rational>(PartitionedVertexSet::from_sizes({2, 2}), 4);
  EXPECT_TRUE(lip_closed_form(mask_of({0}), mask_of({1, 2}), b).is_zero());
  EXPECT_EQ(lip_closed_form(0, mask_of({1, 2}), b), b.expand_f(mask_of({1, 2})));
  EXPECT_EQ(lip_closed_form(mask_of({1}), mask_of({1, 2}), b), -b.expand_f(mask_of({2})));
}

TEST(Factorization, SmallCases) {
  SignCache cache;
  const auto one = PartitionedVertexSet::from_sizes({3});
  const auto v1 = colorful_factorization_check<Rational>({MV::basis(3, bit(1))}, {MV::basis(3, mask_of({0, 1}))}, one, cache);
  EXPECT_TRUE(v1.holds);
  EXPECT_EQ(v1.expected, 1);
  const auto two = PartitionedVertexSet::from_sizes({2, 2});
  for (Vertex a = 0; a < 2; ++a)
    for (Vertex b = 2; b < 4; ++b) {
      const auto v = colorful_factorization_check<Rational>({MV::basis(4, bit(a)), MV::basis(4, bit(b))},
                                                            {MV::basis(4, mask_of({0, 1})), MV::basis(4, mask_of({2, 3}))}, two, cache);
      EXPECT_TRUE(v.holds);
      EXPECT_NE(v.realized, 0);
    }
  EXPECT_THROW(colorful_factorization_check<Rational>({MV::basis(4, mask_of({0, 1})), MV::basis(4, bit(2))},
                                                      {MV::basis(4, bit(0)), MV::basis(4, bit(2))}, two, cache),
               InputError);
  EXPECT_THROW(colorful_factorization_check<Rational>({MV::basis(4, bit(2)), MV::basis(4, bit(2))},
                                                      {MV::basis(4, bit(0)), MV::basis(4, bit(2))}, two, cache),
               InputError);
}

class Identity : public ::testing::TestWithParam<std::string> {};

TEST_P(Identity, HoldsOnBothBackends) {
  const auto st = identities::run(GetParam(), 200, 12345);
  EXPECT_EQ(st.rat_pass, st.instances);
  EXPECT_EQ(st.fp_pass, st.instances);
  EXPECT_EQ(st.native_pass, st.instances);
  EXPECT_EQ(st.agree, st.instances);
}

INSTANTIATE_TEST_SUITE_P(Suite, Identity, ::testing::ValuesIn(identities::names()), [](const auto& info) {
  std::string s = info.param;
  for (auto& c : s)
    if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
  return s;
});

TEST(Expr, Evaluates) {
  ExprEvaluator<Rational> ev(3);
  auto v = ev.eval("lip(e{0}, e{0,1}) + 2*e1");
  EXPECT_EQ(v.mv, MV::basis(3, bit(1)));
  EXPECT_EQ(ev.eval("inner(e01, e{0,1}) * 3").mv.coeff(0), 3);
  EXPECT_TRUE(ev.eval("wedge(e0, e0)").mv.is_zero());
  EXPECT_EQ(ExprEvaluator<Rational>::to_json(ev.eval("-e{2}")).dump(), R"({"ground":3,"terms":[{"coeff":"-1","set":[2]}]})");
  for (const char* bad : {"e{3}", "e{0,0}", "wedge(e0)", "e0 * e1", "e0 + 1", "f{0}", "foo(e0,e1)", "(e0", "e0 )"})
    EXPECT_THROW(ev.eval(bad), InputError) << bad;
  ExprEvaluator<Fp61> fe(4, colorful_generic_orthonormal_basis<Fp61>(PartitionedVertexSet::from_sizes({2, 2}), 3));
  EXPECT_EQ(fe.eval("inner(f{0,2}, f{0,2})").mv.coeff(0), Fp61(1));
  EXPECT_EQ(fe.eval("inner(f{0,2}, f{1,2})").mv.coeff(0), Fp61(0));
}
