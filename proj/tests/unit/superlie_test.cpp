#include "superlie/builders.hpp"

#include <gtest/gtest.h>

using namespace twistlab;
using namespace twistlab::superlie;

namespace {

Vector bracket_of(const SuperLieAlgebra& a, const std::string& x, const std::string& y) {
  return a.bracket(a.element(x), a.element(y));
}

}  // namespace

TEST(Jacobi, AbelianPasses) {
  SuperLieAlgebra a("abelian", {{"x", Parity::Even, {}, Block::Translation},
                                {"y", Parity::Even, {}, Block::Translation},
                                {"q", Parity::Odd, {}, Block::Supercharge}});
  auto rep = jacobi_check(a);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.triples_checked, 10u);
}

TEST(Jacobi, DetectsCorruptedConstant) {
  SuperLieAlgebra a = build_susy_4d(4, RSym::SL);
  ASSERT_TRUE(jacobi_check(a).ok());
  size_t h = a.index_of("H+"), q = a.index_of("α1⊗e1");
  // Corrupt [H+, α1⊗e1] consistently on both orderings so only Jacobi can catch it.
  a.set_bracket(h, q, {{q, Scalar(2)}});
  auto rep = jacobi_check(a);
  EXPECT_TRUE(rep.antisymmetry_ok);
  EXPECT_FALSE(rep.jacobi_ok);
  ASSERT_FALSE(rep.failures.empty());
  EXPECT_NE(rep.failures[0].description.find("Jacobi fails"), std::string::npos);
}

TEST(Jacobi, DetectsBrokenAntisymmetry) {
  SuperLieAlgebra a = build_susy_4d(1, RSym::Trivial);
  a.set_bracket_entry(a.index_of("H+"), a.index_of("E+"), {});
  EXPECT_FALSE(jacobi_check(a).antisymmetry_ok);
}

TEST(Jacobi, ThreadCountDoesNotChangeReport) {
  SuperLieAlgebra a = build_susy_4d(2, RSym::GL);
  size_t h = a.index_of("H-"), q = a.index_of("α1∨⊗w1*");
  a.set_bracket(h, q, {{q, Scalar(3)}});
  auto r1 = jacobi_check(a, 1), r8 = jacobi_check(a, 8);
  ASSERT_EQ(r1.failures.size(), r8.failures.size());
  for (size_t k = 0; k < r1.failures.size(); ++k) EXPECT_EQ(r1.failures[k].description, r8.failures[k].description);
  EXPECT_EQ(r1.triples_checked, r8.triples_checked);
}

class Susy4d : public ::testing::TestWithParam<int> {};

TEST_P(Susy4d, JacobiGradingNondegenerate) {
  for (RSym r : {RSym::SL, RSym::GL, RSym::Trivial}) {
    SuperLieAlgebra a = build_susy_4d(GetParam(), r);
    EXPECT_TRUE(jacobi_check(a, 4).ok()) << a.name();
    EXPECT_TRUE(grading_check(a).ok()) << a.name();
    EXPECT_TRUE(gamma_nondegenerate(a)) << a.name();
    const size_t k = GetParam();
    size_t rdim = r == RSym::GL ? k * k : r == RSym::SL ? k * k - 1 : 0;
    EXPECT_EQ(a.even_dim(), 6 + rdim + 4);
    EXPECT_EQ(a.odd_dim(), 4 * k);
  }
}

INSTANTIATE_TEST_SUITE_P(K, Susy4d, ::testing::Range(1, 5));

TEST(Susy4d, RangeChecked) {
  EXPECT_THROW(build_susy_4d(0, RSym::SL), Error);
  EXPECT_THROW(build_susy_4d(5, RSym::SL), Error);
}

TEST(Susy4d, LabelledBrackets) {
  SuperLieAlgebra a = build_susy_4d(4, RSym::SL);
  EXPECT_EQ(a.even_dim(), 25u);
  EXPECT_EQ(a.odd_dim(), 16u);
  EXPECT_EQ(bracket_of(a, "α1⊗e1", "α1∨⊗e1*"), a.element("∂z̄1"));
  EXPECT_EQ(bracket_of(a, "α1⊗e1", "α2∨⊗e1*"), a.element("∂z̄2"));
  EXPECT_EQ(bracket_of(a, "α2⊗e1", "α1∨⊗e1*"), a.element("∂z1"));
  EXPECT_TRUE(exact::is_zero(bracket_of(a, "α1⊗e1", "α1∨⊗f1*")));
  EXPECT_TRUE(exact::is_zero(bracket_of(a, "α1⊗e1", "α1⊗e2")));
  // Odd-odd graded symmetry.
  EXPECT_EQ(bracket_of(a, "α1∨⊗e1*", "α1⊗e1"), a.element("∂z̄1"));
  // R-symmetry acts by the fundamental on W and antifundamental on W*.
  EXPECT_EQ(bracket_of(a, "E[e1,e2]", "α1⊗e2"), a.element("α1⊗e1"));
  EXPECT_EQ(bracket_of(a, "E[e1,e2]", "α1∨⊗e1*"), exact::scale(a.element("α1∨⊗e2*"), -1));
  // The translation metric is invariant and the antiholomorphic plane isotropic.
  const Matrix& g = *a.translation_metric();
  auto t = a.indices(Block::Translation);
  for (size_t r : a.indices(Block::Rotation)) {
    Matrix x(4, 4);
    for (size_t c = 0; c < 4; ++c)
      for (size_t rr = 0; rr < 4; ++rr) x(rr, c) = a.bracket(a.unit(r), a.unit(t[c]))[t[rr]];
    EXPECT_TRUE((x.transpose() * g + g * x).is_zero());
  }
}

TEST(Susy2d, DimsWeightsJacobi) {
  for (auto [n1, n2] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {4, 4}, {2, 0}, {0, 3}}) {
    SuperLieAlgebra a = build_susy_2d(n1, n2);
    EXPECT_TRUE(jacobi_check(a).ok()) << a.name();
    EXPECT_TRUE(grading_check(a).ok());
    EXPECT_TRUE(gamma_nondegenerate(a));
    EXPECT_EQ(a.odd_dim(), static_cast<size_t>(n1 + n2));
    EXPECT_EQ(a.indices(Block::Translation).size(), 2u);
    for (size_t i : a.indices(Parity::Odd))
      for (size_t j : a.indices(Parity::Odd))
        for (const auto& [k, c] : a.bracket(i, j)) EXPECT_EQ(*a.label(k).weight, *a.label(i).weight + *a.label(j).weight);
  }
  SuperLieAlgebra a = build_susy_2d(1, 1);
  EXPECT_EQ(bracket_of(a, "Q+1", "Q+1"), a.element("∂+"));
  EXPECT_EQ(*a.label(a.index_of("∂+")).weight, 2);
  EXPECT_THROW(build_susy_2d(0, 0), Error);
}

TEST(Susy10d, BothModels) {
  for (const auto& model : {clifford::build_gamma(10), clifford::build_octonionic_cl10()}) {
    SuperLieAlgebra a = build_susy_10d(model);
    EXPECT_EQ(a.even_dim(), 55u);
    EXPECT_EQ(a.odd_dim(), 16u);
    EXPECT_TRUE(jacobi_check(a, 4).ok()) << a.name();
    EXPECT_TRUE(grading_check(a).ok());
    EXPECT_TRUE(gamma_nondegenerate(a));
    auto odd = a.indices(Parity::Odd);
    for (size_t i : odd)
      for (size_t j : odd) EXPECT_EQ(a.bracket(i, j), a.bracket(j, i));
  }
  EXPECT_THROW(build_susy_10d(clifford::build_gamma(8)), Error);
}

TEST(Elements, FormatAndParse) {
  SuperLieAlgebra a = build_susy_4d(4, RSym::SL);
  Vector v = a.element("α1⊗e1");
  v[a.index_of("α2⊗e2")] = Scalar(-1, 2);
  v[a.index_of("α1∨⊗f1*")] = Scalar(1) + Scalar(2) * Scalar::i();
  v[a.index_of("α2∨⊗f2*")] = Scalar(3) * Scalar::i();
  std::string s = format_element(a, v);
  EXPECT_EQ(s, "α1⊗e1 - 1/2*α2⊗e2 + (1+2*i)*α1∨⊗f1* + 3*i*α2∨⊗f2*");
  EXPECT_EQ(parse_element(a, s), v);
  EXPECT_EQ(parse_element(a, "alpha1(x)e1 - 1/2 alpha2(x)e2 + (1+2*i) alpha1^v(x)f1* + 3*i*alpha2^v(x)f2*"), v);
  EXPECT_EQ(parse_element(a, "−α1⊗e1"), exact::scale(a.element("α1⊗e1"), -1));
  EXPECT_EQ(parse_element(a, "H+ - H-"), exact::sub(a.element("H+"), a.element("H-")));
  EXPECT_TRUE(exact::is_zero(parse_element(a, "0")));
  EXPECT_THROW(parse_element(a, "α1⊗e9"), Error);
  EXPECT_THROW(parse_element(a, "2"), Error);
  EXPECT_THROW(parse_element(a, "(1 α1⊗e1"), Error);
}

TEST(Elements, JsonRoundTrip) {
  SuperLieAlgebra a = build_susy_2d(2, 2);
  SuperLieAlgebra b = algebra_from_json(to_json(a));
  EXPECT_EQ(to_json(b).dump(), to_json(a).dump());
  EXPECT_THROW(algebra_from_json(Json::parse(R"({"basis": 3})")), Error);
}

TEST(Subquotient, TranslationQuotient) {
  SuperLieAlgebra a = build_susy_4d(1, RSym::Trivial);
  std::vector<Vector> gens = {a.element("H+"), a.element("H-")};
  for (size_t i : a.indices(Block::Translation)) gens.push_back(a.unit(i));
  for (size_t i : a.indices(Block::Supercharge)) gens.push_back(a.unit(i));
  Subspace z = Subspace::span(gens, a.dim());
  Subspace b = Subspace::span({a.element("∂z̄2"), a.element("∂z1")}, a.dim());
  auto sq = subquotient(a, z, b, "quotient");
  EXPECT_EQ(sq.algebra.dim(), 2u + 2u + 4u);
  EXPECT_THROW(subquotient(a, Subspace::full(a.dim()), b, "not an ideal"), Error);
  EXPECT_TRUE(jacobi_check(sq.algebra).ok());
  // Z must be closed.
  Subspace open = Subspace::span({a.element("α1⊗w1"), a.element("α1∨⊗w1*")}, a.dim());
  EXPECT_THROW(subquotient(a, open, Subspace(a.dim()), "bad"), Error);
}
