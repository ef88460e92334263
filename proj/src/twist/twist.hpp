#pragma once

#include "superlie/algebra.hpp"

#include <map>

namespace twistlab::twist {

using exact::Matrix;
using exact::Scalar;
using exact::Subspace;
using exact::Vector;
using superlie::SuperLieAlgebra;

/// Supercharges are plain vectors over the algebra basis, supported on the odd block.
void require_supercharge(const SuperLieAlgebra& alg, const Vector& q);

/// [q, q], restricted to the translation block (ordered as alg.indices(Translation)).
Vector bracket_square(const SuperLieAlgebra& alg, const Vector& q);
bool is_square_zero(const SuperLieAlgebra& alg, const Vector& q);
/// ad_q ∘ ad_q = 0 on the whole algebra.
bool ad_square_zero(const SuperLieAlgebra& alg, const Vector& q);

enum class Verdict { Zero, Topological, Holomorphic, Intermediate };
std::string to_string(Verdict v);

struct TwistReport {
  bool square_zero = false;
  Subspace image;  // inside V_C, translation coordinates
  size_t image_dim = 0;
  Verdict verdict = Verdict::Zero;
  bool isotropic = false;
  std::string verdict_text() const;
};
TwistReport classify(const SuperLieAlgebra& alg, const Vector& q);

/// φ: so(4) → g_R, one image in the R-symmetry block per rotation generator.
struct TwistingHom {
  std::string name;
  std::vector<std::string> sources;  // rotation labels
  std::vector<Vector> images;        // algebra vectors in the R-symmetry block
  bool is_homomorphism(const SuperLieAlgebra& alg) const;
  Vector apply(const SuperLieAlgebra& alg, const std::string& rotation) const;
};
TwistingHom zero_hom(const SuperLieAlgebra& alg);
/// Kapustin–Witten block embedding into sl(W), W = <e1,e2> ⊕ <f1,f2>.
TwistingHom kapustin_witten(const SuperLieAlgebra& alg);

/// Same algebra with every rotation X replaced by X + φ(X) (labels unchanged).
SuperLieAlgebra twisted_action(const TwistingHom& phi, const SuperLieAlgebra& alg);

enum class Factor { Iota1, Iota2, Diagonal };
Factor parse_factor(const std::string& s);
std::string to_string(Factor f);
std::vector<std::string> factor_generators(Factor f);

/// Odd elements killed by X + φ(X) for every generator X of the factor.
Subspace invariant_supercharges(const SuperLieAlgebra& alg, const TwistingHom& phi, Factor f);

struct BlockCohomology {
  std::string block;           // "bosonic", "fermionic", "translations"
  size_t chain_dim = 0;
  size_t cocycles = 0;
  size_t coboundaries = 0;
  std::vector<Vector> basis;   // canonical representatives, algebra coordinates
  std::vector<Vector> cocycle_basis;
  size_t dim() const { return basis.size(); }
};

/// Cohomology of (bosonic non-translation) → (odd) → (translations) under [q, -].
struct CohomologyReport {
  BlockCohomology bosonic, fermionic, translations;
  bool euler_ok = false;
  std::array<size_t, 3> dims() const { return {bosonic.dim(), fermionic.dim(), translations.dim()}; }
};
CohomologyReport q_cohomology(const SuperLieAlgebra& alg, const Vector& q);

/// Invariants of X + φ(X), X in the factor, on the fermionic Q-cohomology.
/// Each X + φ(X) must commute with q. Returned as representatives.
std::vector<Vector> invariant_cohomology(const SuperLieAlgebra& alg, const Vector& q, const TwistingHom& phi, Factor f);

/// Bosonic kernel of [q, -] beyond span(so(3)- , Ann(w)) where Ann(w) are the
/// R-symmetries killing the supercharge's W-component. Only for q = α1⊗e1.
struct KernelSurplus {
  std::vector<Vector> kernel;     // full bosonic kernel basis
  std::vector<Vector> reference;  // so(3)- + Ann(e1)
  std::vector<Vector> surplus;    // canonical representatives of kernel / reference
};
KernelSurplus qhol_kernel_surplus(const SuperLieAlgebra& alg);

/// Named supercharges in the N = 4 algebra (W = <e1,e2,f1,f2>).
Vector q_hol(const SuperLieAlgebra& alg);
Vector family_kw(const SuperLieAlgebra& alg, const Scalar& mu, const Scalar& nu);
Vector family_a(const SuperLieAlgebra& alg);
Vector family_b(const SuperLieAlgebra& alg);
Vector family_ht(const SuperLieAlgebra& alg, const Scalar& lambda);
Vector family_ht_prime(const SuperLieAlgebra& alg, const Scalar& lambda);
/// "hol", "A", "B", "kw(mu:nu)", "ht(l)", "ht_prime(l)"; parameters as Q(i) scalars.
Vector named_family(const SuperLieAlgebra& alg, const std::string& spec);

struct SuccessiveTwistReport {
  std::array<size_t, 3> direct{};    // H(A; q1 + q2)
  std::array<size_t, 3> iterated{};  // H(H(A; q1); q2)
  std::array<size_t, 3> inner{};     // H(A; q1)
  bool agree = false;
  bool representative_independent = false;
};
/// seed drives the randomized re-representative test.
SuccessiveTwistReport successive_twist_check(const SuperLieAlgebra& alg, const Vector& q1, const Vector& q2,
                                             unsigned seed = 1);

/// exp(m) for a nilpotent matrix m.
Matrix exp_nilpotent(const Matrix& m);

}  // namespace twistlab::twist
