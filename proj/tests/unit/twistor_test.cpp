#include "twistor/cech.hpp"

#include <gtest/gtest.h>

using namespace twistlab;
using namespace twistlab::twistor;

TEST(LineBundles, HDims) {
  EXPECT_EQ(h_dims(0).h0, 1u);
  EXPECT_EQ(h_dims(-1).h0 + h_dims(-1).h1, 0u);
  EXPECT_EQ(h_dims(-4).h1, 3u);
  for (long k = -8; k <= 8; ++k) {
    EXPECT_EQ(h_dims(k).h0, h_dims(-k - 2).h1);
    EXPECT_EQ(static_cast<long>(h_dims(k).h0) - static_cast<long>(h_dims(k).h1), k + 1);
    EXPECT_EQ(h_dims(k).h0 * h_dims(k).h1, 0u);
  }
}

TEST(Berezinian, Degrees) {
  EXPECT_EQ(berezinian_cpnm(3, 4).degree, 0);
  EXPECT_TRUE(berezinian_cpnm(3, 4).super_calabi_yau);
  EXPECT_EQ(berezinian_cpnm(3, 0).degree, -4);
  EXPECT_TRUE(berezinian_cpnm(1, 2).super_calabi_yau);
  EXPECT_THROW(berezinian_cpnm(0, 1), twistlab::Error);
}

TEST(TwistorNorm, Signature) {
  EXPECT_TRUE(twistor_norm({1, 0, 0, 0}).is_zero());
  Vector a{1, Scalar::i(), 1, Scalar::i()};
  EXPECT_EQ(twistor_norm(a), Scalar(4));
  auto s = twistor_signature();
  EXPECT_EQ(s.positive, 2u);
  EXPECT_EQ(s.negative, 2u);
}

TEST(Penrose, MapAndScaling) {
  auto p = penrose_map({1, 0, 1, 0});
  EXPECT_TRUE(same_hp1_point(p, {{1, 0}, {1, 0}}));
  auto line = penrose_map({0, 0, 2, Scalar::i()});
  EXPECT_FALSE(line.second.is_zero());
  EXPECT_TRUE(same_hp1_point(line, {{0, 0}, {1, 0}}));
  EXPECT_THROW(penrose_map({0, 0, 0, 0}), twistlab::Error);
  EXPECT_TRUE(penrose_scaling_check(10, 5).ok());
  Quaternion j{0, 1}, i{Scalar::i(), 0};
  EXPECT_EQ(line.first, (Quaternion{0, 0}));
  EXPECT_EQ(i * j, (Quaternion{0, -Scalar::i()}));  // q = a + j b, so i j = j (-i)
  EXPECT_EQ(j * j, (Quaternion{-1, 0}));
}

TEST(FieldContent, LambdaDecompose) {
  EXPECT_EQ(lambda_decompose(0).multiplicity, 1u);
  EXPECT_EQ(lambda_decompose(2).degree, -2);
  EXPECT_EQ(lambda_decompose(2).multiplicity, 6u);
  EXPECT_TRUE(lambda_decompose(3).odd);
  EXPECT_THROW(lambda_decompose(5), twistlab::Error);
}

TEST(FieldContent, Groups) {
  auto g = field_content_groups();
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g[0].content, (FieldContentTable{{Irrep::C, 0, 1},
                                              {Irrep::V, 1, 1},
                                              {Irrep::Sym2Plus, 1, 1},
                                              {Irrep::V, 2, 1},
                                              {Irrep::Sym2Plus, 2, 1},
                                              {Irrep::C, 3, 1}}));
  EXPECT_EQ(g[1].multiplicity, 4u);
  EXPECT_EQ(g[1].content, (FieldContentTable{{Irrep::S, 1, 1}, {Irrep::S, 2, 1}}));
  EXPECT_EQ(g[2].multiplicity, 6u);
  EXPECT_EQ(g[2].content, (FieldContentTable{{Irrep::C, 1, 1}, {Irrep::C, 2, 1}}));
  EXPECT_TRUE(content_dimension_check());
  for (long k = -4; k <= 0; ++k)
    for (const auto& e : pushforward_content(k)) {
      EXPECT_GE(e.degree, 0);
      EXPECT_LE(e.degree, 3);
    }
}

TEST(Dirac, Symbol) {
  auto r = dirac_symbol_check();
  EXPECT_TRUE(r.ok());
  ASSERT_TRUE(r.scalar.has_value());
  EXPECT_FALSE(r.scalar->is_zero());
}

TEST(Cech, SelfCheckAndKoszul) {
  EXPECT_TRUE(cech_self_check(6));
  auto k = koszul_exactness_check(8);
  EXPECT_TRUE(k.ok);
  EXPECT_EQ(k.degrees[0].cokernel, 1u);
  EXPECT_EQ(k.degrees[2].dims, (std::array<size_t, 3>{1, 4, 3}));
  EXPECT_TRUE(k.degrees[2].exact);
  EXPECT_THROW(koszul_exactness_check(1), twistlab::Error);
}

TEST(Cech, E2Laplacian) {
  auto r = e2_laplacian_check(6);
  EXPECT_TRUE(r.ok()) << exact::to_string(r.induced);
  EXPECT_FALSE(r.induced(0, 0).is_zero());
  EXPECT_TRUE(r.induced(0, 1).is_zero());
  EXPECT_EQ(r.diagonal.size(), 4u);
  EXPECT_THROW(e2_laplacian_check(3), twistlab::Error);
}
