#pragma once

#include "exact/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twistlab::clifford {

using exact::Matrix;
using exact::Scalar;
using exact::Subspace;
using exact::Vector;

struct QuadraticSpace {
  size_t dim = 0;
  Matrix gram;  // B(v,w) with B(v,v) = Q(v)
  std::vector<std::string> labels;
};

/// A Clifford module. Weyl summands are coordinate subspaces in every model
/// built here, so they are also kept as index lists.
struct SpinorModel {
  std::string name;
  QuadraticSpace space;
  size_t spinor_dim = 0;
  std::vector<Matrix> gammas;
  std::optional<Matrix> chirality;
  std::vector<size_t> plus_indices;
  std::vector<size_t> minus_indices;
  Subspace weyl_plus;
  Subspace weyl_minus;

  size_t n() const noexcept { return space.dim; }
  bool even() const noexcept { return chirality.has_value(); }
  /// rho(v) = sum_a v_a gamma_a
  Matrix rho(const Vector& v) const;
};

/// Jordan-Wigner tensor construction with identity Gram matrix, 2 <= n <= 10.
SpinorModel build_gamma(int n);

/// Cl(10) on O + <e,f>, Q(w + a e + b f) = w conj(w) - ab, S = O^4 with
/// S+ = first two octonion slots. Vector coordinates: e0..e7, e, f.
SpinorModel build_octonionic_cl10();

struct CliffordReport {
  bool clifford_relation = true;
  bool chirality_ok = true;
  bool weyl_dims_ok = true;
  std::vector<std::string> failures;
  bool ok() const { return clifford_relation && chirality_ok && weyl_dims_ok; }
};
CliffordReport check_model(const SpinorModel& model);

struct SoAction {
  std::vector<std::pair<size_t, size_t>> pairs;  // (a,b) with a < b
  std::vector<Matrix> spinor;  // 1/4 [rho_a, rho_b]
  std::vector<Matrix> vector;  // u -> B(e_b,u) e_a - B(e_a,u) e_b
};
SoAction so_action(const SpinorModel& model);

/// dim { v : rho(v) q = 0 } for a nonzero Weyl spinor q.
size_t purity_nullspace(const SpinorModel& model, const Vector& q);

/// An orthogonal basis (rows) for a nondegenerate symmetric form.
Matrix orthogonal_basis(const Matrix& gram);

/// T with T rho[a] = rho2[a] T for all a, where rho and rho2 are Clifford
/// modules for the same form gram. nullopt if the two modules are not
/// isomorphic (odd n, opposite central character).
std::optional<Matrix> intertwiner(const std::vector<Matrix>& rho, const std::vector<Matrix>& rho2, const Matrix& gram);

/// Isometry from the standard 10d space (identity Gram) into the octonionic
/// vector space: e1..e8 -> octonion units, e9 -> e - f, e10 -> i(e + f).
Matrix octonionic_isometry();

/// Intertwiner between build_gamma(10) and the octonionic model along
/// octonionic_isometry(); verified before returning.
Matrix generic_to_octonionic_intertwiner(const SpinorModel& generic, const SpinorModel& octonionic);

}  // namespace twistlab::clifford
