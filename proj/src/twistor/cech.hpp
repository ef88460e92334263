#pragma once

#include "twistor/twistor.hpp"

namespace twistlab::twistor {

/// Two-chart Čech model of O(k) ⊗ C^rank on P^1 = P(S+), homogeneous
/// coordinates Z2, Z3. Laurent monomials Z2^{k-m} Z3^m with m in [lo, hi];
/// U0 = {Z2 ≠ 0} keeps m >= 0, U1 = {Z3 ≠ 0} keeps m <= k.
struct CechTerm {
  long k = 0;
  size_t rank = 1;
  long lo = 0, hi = 0;

  size_t u0_size() const;
  size_t u1_size() const;
  size_t c0_dim() const { return rank * (u0_size() + u1_size()); }
  size_t c1_dim() const { return rank * static_cast<size_t>(hi - lo + 1); }
  /// Čech differential (f0, f1) ↦ f1 − f0.
  Matrix delta() const;
  HDims cohomology() const;
};

/// A linear form a2 Z2 + a3 Z3.
struct LinearForm {
  Scalar z2, z3;
};

/// Multiplication by a rank_out × rank_in matrix of linear forms, O(k) → O(k+1).
Matrix multiply_c0(const CechTerm& from, const CechTerm& to, const std::vector<std::vector<LinearForm>>& forms);
Matrix multiply_c1(const CechTerm& from, const CechTerm& to, const std::vector<std::vector<LinearForm>>& forms);

/// Čech dims equal h_dims(k) for |k| <= truncation − 2.
bool cech_self_check(long truncation);

struct KoszulDegree {
  long degree = 0;
  std::array<size_t, 3> dims{};  // O(-2), O(-1) ⊗ S-, O ⊗ Λ²S- graded pieces
  size_t rank_first = 0, rank_second = 0;
  bool composition_zero = false;
  bool exact = false;            // injective, exact in the middle, surjective
  size_t cokernel = 0;
  long euler = 0;
};
struct KoszulReport {
  std::vector<KoszulDegree> degrees;
  bool ok = false;  // exact in degrees >= 1; degree 0 has only the 1-dim cokernel C
};
/// Graded pieces of 0 → R(-2) → R(-1) ⊗ S- → R ⊗ Λ²S- → 0 over R = C[Z2, Z3],
/// maps given by the section e = Z2 t1 + Z3 t2.
KoszulReport koszul_exactness_check(long degree_bound);

struct LaplacianReport {
  long truncation = 0;
  Matrix induced;                 // symmetrized (i, j) maps H^1(O(-2)) → H^0(O ⊗ Λ²S-)
  std::vector<Scalar> diagonal;   // unsymmetrized (i, i) entries
  std::optional<Scalar> scalar;   // c with induced = c·δ
  bool model_stable = false;
  bool ok() const { return scalar.has_value() && model_stable; }
};
LaplacianReport e2_laplacian_check(long truncation);

}  // namespace twistlab::twistor
