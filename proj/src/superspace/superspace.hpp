#pragma once

#include "superlie/algebra.hpp"

#include <array>
#include <map>
#include <tuple>

namespace twistlab::superspace {

using exact::Scalar;
using exact::Vector;
using superlie::SuperLieAlgebra;

/// Coordinates of C^{2|3}: z1, z2 even; ε, ε1, ε2 odd (in this order).
inline constexpr size_t kCoords = 5;
bool coordinate_is_odd(size_t c);
std::string coordinate_name(size_t c);

/// z1^a z2^b times a sorted product of odd variables (bit 0 = ε, 1 = ε1, 2 = ε2).
struct Monomial {
  unsigned a = 0, b = 0;
  unsigned odd = 0;
  bool is_odd() const;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class SuperPolynomial {
public:
  SuperPolynomial() = default;
  static SuperPolynomial constant(const Scalar& c);
  static SuperPolynomial variable(size_t coord);
  static SuperPolynomial monomial(const Monomial& m, const Scalar& c);

  const std::map<Monomial, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// nullopt for the zero polynomial; throws if inhomogeneous.
  std::optional<bool> parity() const;
  /// Left derivative along a coordinate.
  SuperPolynomial derivative(size_t coord) const;

  SuperPolynomial& operator+=(const SuperPolynomial& o);
  SuperPolynomial& operator-=(const SuperPolynomial& o);
  friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { return a += b; }
  friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { return a -= b; }
  friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b);
  friend SuperPolynomial operator*(const Scalar& s, const SuperPolynomial& a);
  friend bool operator==(const SuperPolynomial& a, const SuperPolynomial& b) { return a.terms_ == b.terms_; }

private:
  void add_term(const Monomial& m, const Scalar& c);
  std::map<Monomial, Scalar> terms_;
};

std::string to_string(const SuperPolynomial& p);

/// Σ coeff[i] ∂/∂x_i with coefficients on the left.
struct SuperVectorField {
  std::array<SuperPolynomial, kCoords> coeff;

  static SuperVectorField partial(size_t coord, const SuperPolynomial& f = SuperPolynomial::constant(1));
  bool is_zero() const;
  /// nullopt for zero; throws InvalidArgument if inhomogeneous.
  std::optional<bool> parity() const;
  SuperPolynomial apply(const SuperPolynomial& g) const;

  SuperVectorField& operator+=(const SuperVectorField& o);
  friend SuperVectorField operator+(SuperVectorField a, const SuperVectorField& b) { return a += b; }
  friend SuperVectorField operator-(const SuperVectorField& a, const SuperVectorField& b);
  friend SuperVectorField operator*(const Scalar& s, const SuperVectorField& a);
  friend bool operator==(const SuperVectorField& a, const SuperVectorField& b) { return a.coeff == b.coeff; }
};

/// "ε1 ∂/∂z1 + ε2 ∂/∂z2" style.
std::string to_string(const SuperVectorField& x);
Json to_json(const SuperVectorField& x);

/// Graded commutator x∘y − (−1)^{|x||y|} y∘x.
SuperVectorField vf_bracket(const SuperVectorField& x, const SuperVectorField& y);

/// Generators of H(A; Q_hol) that are realized, with their fields.
struct RealizedGenerator {
  std::string name;
  Vector element;  // in the N = 4 algebra
  SuperVectorField field;
};
std::vector<RealizedGenerator> realized_generators(const SuperLieAlgebra& n4);

/// Field of a Q_hol-cocycle modulo coboundaries. Throws Precondition for
/// elements outside the realized span (e.g. the nilradical of p).
SuperVectorField realize(const SuperLieAlgebra& n4, const Vector& element);

struct RepresentationPair {
  std::string x, y;
  SuperVectorField lhs, rhs;
  bool ok = false;
};
struct RepresentationReport {
  std::vector<RepresentationPair> pairs;
  size_t passed = 0;
  bool ok() const { return passed == pairs.size(); }
};
RepresentationReport check_representation(const SuperLieAlgebra& n4);

/// Literal superspace fields for "kw(mu:nu)" and "ht(l)".
SuperVectorField family_vector_field(const std::string& spec);
SuperVectorField family_vector_field_kw(const Scalar& mu, const Scalar& nu);
SuperVectorField family_vector_field_ht(const Scalar& lambda);

}  // namespace twistlab::superspace
