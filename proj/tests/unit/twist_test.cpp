#include "superlie/builders.hpp"
#include "twist/twist.hpp"

#include <gtest/gtest.h>

using namespace twistlab;
using namespace twistlab::superlie;
using namespace twistlab::twist;

namespace {

const SuperLieAlgebra& n4() {
  static const SuperLieAlgebra alg = build_susy_4d(4, RSym::SL);
  return alg;
}

Vector el(const std::string& text) { return parse_element(n4(), text); }

std::vector<std::string> names(const std::vector<Vector>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(format_element(n4(), v));
  return out;
}

}  // namespace

TEST(BracketSquare, Examples) {
  EXPECT_TRUE(exact::is_zero(bracket_square(n4(), el("α1⊗e1"))));
  EXPECT_EQ(bracket_square(n4(), el("α1⊗e1 + α1∨⊗e1*")), (Vector{2, 0, 0, 0}));
  EXPECT_TRUE(exact::is_zero(bracket_square(n4(), Vector(n4().dim()))));
  EXPECT_THROW(bracket_square(n4(), el("H+")), twistlab::Error);
}

TEST(Classify, NamedSupercharges) {
  auto hol = classify(n4(), q_hol(n4()));
  EXPECT_EQ(hol.verdict, Verdict::Holomorphic);
  EXPECT_EQ(hol.image, Subspace::span({{1, 0, 0, 0}, {0, 1, 0, 0}}, 4));
  EXPECT_TRUE(hol.isotropic);
  for (const auto& q : {family_a(n4()), family_b(n4())}) {
    auto r = classify(n4(), q);
    EXPECT_EQ(r.verdict, Verdict::Topological);
    EXPECT_EQ(r.image_dim, 4u);
  }
  EXPECT_EQ(classify(n4(), Vector(n4().dim())).verdict, Verdict::Zero);
  EXPECT_THROW(classify(n4(), el("α1⊗e1 + α1∨⊗e1*")), twistlab::Error);
}

TEST(Classify, HtFamilies) {
  for (long l : {1L, 2L, -1L}) {
    auto r = classify(n4(), family_ht(n4(), l));
    EXPECT_TRUE(r.square_zero);
    EXPECT_EQ(r.image_dim, 4u) << l;
    EXPECT_EQ(classify(n4(), family_ht_prime(n4(), l)).image_dim, 3u);
  }
  EXPECT_EQ(family_ht(n4(), 0), family_a(n4()));
  EXPECT_EQ(family_kw(n4(), 1, 0), family_b(n4()));
  EXPECT_THROW(family_kw(n4(), 0, 0), twistlab::Error);
}

TEST(Classify, KwFamilyContainsHolImage) {
  const auto hol = classify(n4(), q_hol(n4())).image;
  const std::vector<std::pair<Scalar, Scalar>> points = {{1, 0}, {0, 1}, {1, 1}, {2, -3}, {Scalar::i(), Scalar(1, 2)}, {-1, 5}};
  for (const auto& [mu, nu] : points) {
    Vector q = family_kw(n4(), mu, nu);
    ASSERT_TRUE(is_square_zero(n4(), q));
    EXPECT_TRUE(ad_square_zero(n4(), q));
    auto r = classify(n4(), q);
    EXPECT_EQ(r.verdict, Verdict::Topological);
    EXPECT_TRUE(r.image.contains(hol));
  }
}

TEST(Classify, InvariantUnderScalingAndRotations) {
  const std::vector<Vector> qs = {q_hol(n4()), family_a(n4()), family_ht(n4(), 1), family_ht_prime(n4(), 2)};
  const Matrix g = exp_nilpotent(n4().ad(el("E+"))) * exp_nilpotent(n4().ad(el("F-"))) *
                   exp_nilpotent(n4().ad(el("2*E[e1,f2]")));
  for (const auto& q : qs) {
    auto base = classify(n4(), q);
    auto scaled = classify(n4(), exact::scale(q, Scalar(3, 2) + Scalar::i()));
    EXPECT_EQ(scaled.verdict, base.verdict);
    EXPECT_EQ(scaled.image_dim, base.image_dim);
    auto moved = classify(n4(), g * q);
    EXPECT_EQ(moved.verdict, base.verdict);
    EXPECT_EQ(moved.image_dim, base.image_dim);
  }
}

TEST(Twisting, KapustinWittenIsHomomorphism) {
  auto phi = kapustin_witten(n4());
  EXPECT_TRUE(phi.is_homomorphism(n4()));
  auto twisted = twisted_action(phi, n4());
  EXPECT_TRUE(jacobi_check(twisted, 4).ok());
  EXPECT_EQ(to_json(twisted_action(zero_hom(n4()), n4()))["brackets"], to_json(n4())["brackets"]);
  TwistingHom bad = phi;
  bad.images[0] = exact::scale(bad.images[0], 2);
  EXPECT_FALSE(bad.is_homomorphism(n4()));
  EXPECT_THROW(twisted_action(bad, n4()), twistlab::Error);
}

TEST(Twisting, InvariantSupercharges) {
  auto phi = kapustin_witten(n4());
  auto inv = invariant_supercharges(n4(), phi, Factor::Iota2);
  EXPECT_EQ(names(inv.basis_vectors()),
            (std::vector<std::string>{"α1⊗e1", "α1⊗e2", "α2⊗e1", "α2⊗e2", "α1∨⊗f1* - α2∨⊗f2*"}));
  EXPECT_TRUE(inv.contains(q_hol(n4())));
  EXPECT_EQ(invariant_supercharges(n4(), zero_hom(n4()), Factor::Diagonal).dim(), 0u);
  EXPECT_EQ(invariant_supercharges(n4(), zero_hom(n4()), Factor::Iota2).dim(), 8u);
  EXPECT_EQ(invariant_supercharges(n4(), phi, Factor::Diagonal).dim(), 2u);
}

TEST(Cohomology, QHol) {
  auto h = q_cohomology(n4(), q_hol(n4()));
  EXPECT_EQ(h.dims(), (std::array<size_t, 3>{16, 9, 2}));
  EXPECT_EQ(h.fermionic.coboundaries, 5u);
  EXPECT_EQ(h.fermionic.cocycles, 14u);
  EXPECT_EQ(h.bosonic.chain_dim, 21u);
  EXPECT_TRUE(h.euler_ok);
  EXPECT_EQ(names(h.translations.basis), (std::vector<std::string>{"∂z1", "∂z2"}));
  EXPECT_EQ(names(h.fermionic.basis),
            (std::vector<std::string>{"α2⊗e2", "α2⊗f1", "α2⊗f2", "α1∨⊗e2*", "α1∨⊗f1*", "α1∨⊗f2*", "α2∨⊗e2*",
                                      "α2∨⊗f1*", "α2∨⊗f2*"}));
}

TEST(Cohomology, KernelSurplus) {
  auto s = qhol_kernel_surplus(n4());
  EXPECT_EQ(s.kernel.size(), 16u);
  EXPECT_EQ(s.reference.size(), 14u);
  EXPECT_EQ(s.surplus.size(), 2u);
}

TEST(Cohomology, InvariantsOnQHolCohomology) {
  auto inv = invariant_cohomology(n4(), q_hol(n4()), kapustin_witten(n4()), Factor::Iota2);
  EXPECT_EQ(names(inv), (std::vector<std::string>{"α2⊗e2", "α1∨⊗f1* - α2∨⊗f2*"}));
}

TEST(SuccessiveTwist, Examples) {
  const Vector hol = q_hol(n4());
  for (const auto& q2 : {el("α2⊗e2"), el("α1∨⊗f1* - α2∨⊗f2*"), Vector(n4().dim())}) {
    auto r = successive_twist_check(n4(), hol, q2, 7);
    EXPECT_TRUE(r.agree) << format_element(n4(), q2);
    EXPECT_TRUE(r.representative_independent);
    EXPECT_EQ(r.inner, (std::array<size_t, 3>{16, 9, 2}));
  }
  EXPECT_THROW(successive_twist_check(n4(), hol, el("α1∨⊗e1*")), twistlab::Error);
}

TEST(NamedFamily, Parse) {
  EXPECT_EQ(named_family(n4(), "kw(1:0)"), family_b(n4()));
  EXPECT_EQ(named_family(n4(), "ht(-1)"), family_ht(n4(), -1));
  EXPECT_EQ(named_family(n4(), "ht_prime(1/2)"), family_ht_prime(n4(), Scalar(1, 2)));
  EXPECT_THROW(named_family(n4(), "zz"), twistlab::Error);
}
