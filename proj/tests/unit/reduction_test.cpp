#include "clifford/spinor_model.hpp"
#include "superlie/reduction.hpp"

#include <gtest/gtest.h>

using namespace twistlab;
using namespace twistlab::superlie;

namespace {

void expect_10_to_4(const clifford::SpinorModel& model, const std::vector<size_t>& embedding) {
  auto alg = build_susy_10d(model);
  auto r = reduce_10_to_4(alg, embedding);
  EXPECT_EQ(r.stabilizer_so4, 6u);
  EXPECT_EQ(r.stabilizer_so6, 15u);
  EXPECT_EQ(r.stabilizer_total, 21u);
  EXPECT_EQ(r.translations, 4u);
  EXPECT_EQ(r.splus_multiplicity, 4u);
  EXPECT_EQ(r.sminus_multiplicity, 4u);
  EXPECT_EQ(r.trivial_multiplicity, 0u);
  EXPECT_TRUE(r.gamma_match);
  EXPECT_TRUE(r.brackets_match);
  EXPECT_TRUE(r.bijective);
  for (const auto& f : r.failures) ADD_FAILURE() << f;
  EXPECT_EQ(r.reduced.algebra.dim(), 41u);
  EXPECT_TRUE(jacobi_check(r.reduced.algebra, 4).ok());
}

}  // namespace

TEST(Reduce10to4, Generic) { expect_10_to_4(clifford::build_gamma(10), {0, 1, 2, 3}); }

TEST(Reduce10to4, GenericOtherCoordinates) { expect_10_to_4(clifford::build_gamma(10), {2, 5, 7, 9}); }

TEST(Reduce10to4, Octonionic) { expect_10_to_4(clifford::build_octonionic_cl10(), {0, 1, 2, 3}); }

TEST(Reduce10to4, Errors) {
  auto alg = build_susy_10d(clifford::build_gamma(10));
  EXPECT_THROW(reduce_10_to_4(alg, {0, 1, 2}), twistlab::Error);
  EXPECT_THROW(reduce_10_to_4(alg, {0, 1, 1, 2}), twistlab::Error);
  EXPECT_THROW(reduce_10_to_4(build_susy_4d(4, RSym::SL), {0, 1, 2, 3}), twistlab::Error);
}

TEST(Reduce4to2, WeightSplit) {
  for (int k = 1; k <= 4; ++k) {
    auto r = reduce_4_to_2(build_susy_4d(k, RSym::SL));
    const size_t kk = static_cast<size_t>(k);
    EXPECT_EQ(r.n, std::make_pair(2 * kk, 2 * kk));
    EXPECT_EQ((r.weights["S+"][{1, 1}]), kk);
    EXPECT_EQ((r.weights["S+"][{-1, -1}]), kk);
    EXPECT_EQ((r.weights["S-"][{1, -1}]), kk);
    EXPECT_EQ((r.weights["S-"][{-1, 1}]), kk);
    EXPECT_TRUE(r.transverse_so2_in_r);
    EXPECT_TRUE(r.poincare_match);
    for (const auto& f : r.failures) ADD_FAILURE() << f;
    EXPECT_EQ(r.reduced.algebra.odd_dim(), 4 * kk);
    EXPECT_TRUE(jacobi_check(r.reduced.algebra).ok());
  }
}

TEST(Reduce4to2, WrongFamily) { EXPECT_THROW(reduce_4_to_2(build_susy_2d(1, 1)), twistlab::Error); }
