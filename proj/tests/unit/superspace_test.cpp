#include "superlie/builders.hpp"
#include "superspace/superspace.hpp"
#include "twist/twist.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace twistlab;
using namespace twistlab::superspace;

namespace {

const superlie::SuperLieAlgebra& n4() {
  static const auto alg = superlie::build_susy_4d(4, superlie::RSym::SL);
  return alg;
}

SuperVectorField d(size_t c, const SuperPolynomial& f = SuperPolynomial::constant(1)) { return SuperVectorField::partial(c, f); }
SuperPolynomial x(size_t c) { return SuperPolynomial::variable(c); }

}  // namespace

TEST(SuperPolynomial, OddVariablesAnticommute) {
  EXPECT_EQ(x(2) * x(3), Scalar(-1) * (x(3) * x(2)));
  EXPECT_TRUE((x(3) * x(3)).is_zero());
  EXPECT_EQ((x(2) * x(3) * x(4)).derivative(3), Scalar(-1) * (x(2) * x(4)));
  EXPECT_EQ((x(0) * x(0) * x(1)).derivative(0), Scalar(2) * (x(0) * x(1)));
  EXPECT_EQ(to_string(x(4) * x(2) - Scalar(1, 2) * x(0)), "-ε*ε2 - 1/2*z1");
}

TEST(VectorField, Brackets) {
  EXPECT_EQ(vf_bracket(d(2), d(0, x(2))), d(0));
  EXPECT_TRUE(vf_bracket(d(2), d(2)).is_zero());
  EXPECT_TRUE(vf_bracket(d(0, x(3)), d(1, x(4))).is_zero());
  EXPECT_EQ(to_string(d(0, x(3)) + Scalar(-1) * d(1, x(4))), "ε1 ∂/∂z1 - ε2 ∂/∂z2");
  SuperVectorField bad = d(0) + d(2);
  EXPECT_THROW(bad.parity(), twistlab::Error);
}

TEST(VectorField, GradedJacobiOnRandomMonomials) {
  std::mt19937 rng(3);
  auto random_field = [&] {
    Monomial m{static_cast<unsigned>(rng() % 2), static_cast<unsigned>(rng() % 2), static_cast<unsigned>(rng() % 8)};
    return d(rng() % kCoords, SuperPolynomial::monomial(m, static_cast<long>(rng() % 5) - 2));
  };
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_field(), b = random_field(), c = random_field();
    auto pa = a.parity(), pb = b.parity(), pc = c.parity();
    if (!pa || !pb || !pc) continue;
    // [a,[b,c]] = [[a,b],c] + (−1)^{|a||b|} [b,[a,c]]
    Scalar s = (*pa && *pb) ? Scalar(-1) : Scalar(1);
    auto lhs = vf_bracket(a, vf_bracket(b, c));
    auto rhs = vf_bracket(vf_bracket(a, b), c) + s * vf_bracket(b, vf_bracket(a, c));
    EXPECT_EQ(lhs, rhs) << to_string(a) << " | " << to_string(b) << " | " << to_string(c);
  }
}

TEST(Realize, PrintedAssignments) {
  EXPECT_EQ(to_string(realize(n4(), n4().element("α2⊗f1"))), "∂/∂ε1");
  EXPECT_EQ(to_string(realize(n4(), n4().element("α2⊗f2"))), "-∂/∂ε2");
  EXPECT_EQ(to_string(realize(n4(), n4().element("α1∨⊗e2*"))), "ε ∂/∂z1");
  EXPECT_EQ(to_string(realize(n4(), n4().element("α2∨⊗f2*"))), "-ε2 ∂/∂z2");
  EXPECT_TRUE(realize(n4(), twist::q_hol(n4())).is_zero());
  EXPECT_THROW(realize(n4(), n4().element("E[e1,f1]")), twistlab::Error);
  EXPECT_THROW(realize(n4(), n4().element("F+")), twistlab::Error);
}

TEST(Realize, RepresentationCheck) {
  auto r = check_representation(n4());
  EXPECT_GE(r.pairs.size(), 36u);
  for (const auto& p : r.pairs)
    EXPECT_TRUE(p.ok) << p.x << ", " << p.y << ": " << to_string(p.lhs) << " vs " << to_string(p.rhs);
}

TEST(Realize, Families) {
  for (const auto& [mu, nu] : std::vector<std::pair<long, long>>{{1, 0}, {0, 1}, {2, 3}, {-1, 1}, {5, -2}}) {
    auto f = family_vector_field_kw(mu, nu);
    EXPECT_EQ(realize(n4(), twist::family_kw(n4(), mu, nu)), f);
    EXPECT_TRUE(vf_bracket(f, f).is_zero());
  }
  EXPECT_EQ(to_string(family_vector_field("B")), "ε1 ∂/∂z1 + ε2 ∂/∂z2");
  EXPECT_EQ(to_string(family_vector_field("A")), "∂/∂ε");
  for (long l : {1L, 2L, -1L}) {
    auto f = family_vector_field_ht(l);
    EXPECT_TRUE(vf_bracket(f, f).is_zero());
    // The algebra element realizes with the opposite sign on ε2 ∂/∂z2.
    EXPECT_EQ(realize(n4(), twist::family_ht(n4(), l)), family_vector_field_ht(-l));
  }
}
