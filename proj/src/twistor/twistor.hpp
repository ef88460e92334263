#pragma once

#include "clifford/pairing.hpp"
#include "exact/json_io.hpp"

#include <optional>

namespace twistlab::twistor {

using exact::Matrix;
using exact::Scalar;
using exact::Vector;

struct HDims {
  size_t h0 = 0, h1 = 0;
};
/// Cohomology dimensions of O(k) on P^1.
HDims h_dims(long k);

struct BerezinianReport {
  long degree = 0;  // Ber(CP^{n|m}) = O(degree)
  bool super_calabi_yau = false;
};
BerezinianReport berezinian_cpnm(long n, long m);

/// z = (α1, α2, β1, β2) in T = S- ⊕ S+; value Σ α_k conj(β_k) + conj(α_k) β_k.
Scalar twistor_norm(const Vector& z);
/// Hermitian Gram matrix of the twistor norm.
Matrix twistor_gram();
exact::Inertia twistor_signature();

/// a + j b with a, b in Q(i) and j w = conj(w) j.
struct Quaternion {
  Scalar a, b;
  Quaternion conj() const;
  Scalar norm() const;  // a conj(a) + b conj(b), rational
  Quaternion inverse() const;
  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  friend Quaternion operator*(const Quaternion& x, const Quaternion& y);
  friend Quaternion operator+(const Quaternion& x, const Quaternion& y) { return {x.a + y.a, x.b + y.b}; }
  friend bool operator==(const Quaternion& x, const Quaternion& y) { return x.a == y.a && x.b == y.b; }
};
std::string to_string(const Quaternion& q);

/// (Z0 : Z1 : Z2 : Z3) ↦ (Z0 + j Z1 : Z2 + j Z3), right-projective.
std::pair<Quaternion, Quaternion> penrose_map(const Vector& z);
/// Same point of HP^1 under right scaling.
bool same_hp1_point(const std::pair<Quaternion, Quaternion>& p, const std::pair<Quaternion, Quaternion>& q);
/// Holomorphic projection (Z2 : Z3) off the line at infinity.
std::pair<Scalar, Scalar> holomorphic_projection(const Vector& z);

struct PenroseScalingReport {
  size_t points = 0;
  size_t passed = 0;
  bool ok() const { return points > 0 && passed == points; }
};
/// p(λz) = p(z)·λ on random points with random λ ∈ Q(i)^×.
PenroseScalingReport penrose_scaling_check(size_t points, unsigned seed);

struct LineBundleTerm {
  long degree = 0;
  size_t multiplicity = 0;
  bool odd = false;
};
/// Λ^i(O(-1)^4) = O(-i) with multiplicity C(4, i).
LineBundleTerm lambda_decompose(long i);

enum class Irrep { C, V, Sym2Plus, Sym2Minus, SPlus, SMinus, S };
std::string to_string(Irrep r);
size_t irrep_dim(Irrep r);

struct ContentEntry {
  Irrep irrep;
  long degree;
  size_t multiplicity;
  friend bool operator==(const ContentEntry&, const ContentEntry&) = default;
};
using FieldContentTable = std::vector<ContentEntry>;  // sorted by (degree, irrep)

/// E1-page so(4)-content of O(k) ⊗ Λ^•(O(1) ⊗ S-) for k in [-4, 0].
FieldContentTable pushforward_content(long k);

struct FieldGroup {
  std::string name;
  std::vector<long> degrees;  // the O(k) summands in the group
  size_t multiplicity = 0;
  FieldContentTable content;  // per copy; S+ and S- at equal degree merged into S
};
/// Gauge (O ⊕ O(-4)), spinor (O(-1) ⊕ O(-3)) × 4 and scalar O(-2) × 6.
std::vector<FieldGroup> field_content_groups();
/// Per k: Σ_deg dim content == Σ_{i+j=deg} h^i(O(k+j)) dim Λ^j S-.
bool content_dimension_check();

struct DiracSymbolReport {
  std::vector<Matrix> composites;  // S- → S+, one per basis vector
  std::vector<Matrix> clifford;    // ρ(x^i) restricted to S- → S+
  std::optional<Scalar> scalar;    // common ratio, if any
  bool linear = false;
  bool ok() const { return scalar.has_value() && linear; }
};
DiracSymbolReport dirac_symbol_check();

/// Coefficients c_pq with Γ^{-1}(x) = Σ c_pq s_p ⊗ t_q in the 4d model.
Matrix vector_to_spinor_bilinear(const clifford::SpinorModel& model, const clifford::PairingGamma& gamma, const Vector& x);

Json to_json(const FieldContentTable& t);

}  // namespace twistlab::twistor
