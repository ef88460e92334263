#pragma once

#include "clifford/spinor_model.hpp"

namespace twistlab::clifford {

enum class Pattern { PlusPlus, PlusMinus, MinusMinus, Dirac };

std::string to_string(Pattern p);
Pattern parse_pattern(const std::string& s);

/// Gamma(s,t)^a = s^T components[a] t with s in the left summand, t in the
/// right summand (coordinates along left_indices / right_indices).
struct PairingGamma {
  Pattern pattern = Pattern::Dirac;
  std::vector<size_t> left_indices;
  std::vector<size_t> right_indices;
  std::vector<Matrix> components;
  int epsilon = 1;  // sign in rho_a^T C = epsilon C rho_a
  Matrix charge_conjugation;

  /// Vector coordinates of Gamma(s,t) for s, t given in summand coordinates.
  Vector apply(const Vector& s, const Vector& t) const;
};

/// Unique (up to scale) symmetric equivariant pairing for the pattern; the
/// first nonzero entry (in (a, i, j) order) is normalized to 1.
PairingGamma build_pairing(const SpinorModel& model, Pattern pattern);

struct PairingReport {
  bool symmetric = true;
  bool equivariant = true;
  bool nondegenerate = true;
  bool ok() const { return symmetric && equivariant && nondegenerate; }
};
PairingReport check_pairing(const SpinorModel& model, const PairingGamma& g);

/// Restriction of a full spinor matrix to the given index blocks.
Matrix restrict(const Matrix& m, const std::vector<size_t>& rows, const std::vector<size_t>& cols);

}  // namespace twistlab::clifford
