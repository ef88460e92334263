#pragma once

#include "exact/matrix.hpp"

#include <optional>
#include <vector>

namespace twistlab::exact {

struct RrefResult {
  Matrix matrix;
  size_t rank = 0;
  std::vector<size_t> pivots;
};

/// Reduced row-echelon form: leftmost nonzero pivot, leading coefficient 1,
/// pivot columns cleared above and below.
RrefResult rref(const Matrix& m);
size_t rank(const Matrix& m);

/// A linear subspace of Q(i)^n held by its canonical RREF basis (rows).
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span(const std::vector<Vector>& vectors, size_t ambient);
  static Subspace row_space(const Matrix& m);
  static Subspace full(size_t ambient);

  size_t ambient_dim() const noexcept { return ambient_; }
  size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  std::vector<Vector> basis_vectors() const { return basis_.row_list(); }
  const std::vector<size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& s) const;
  /// Canonical representative of v modulo this subspace (pivot coordinates zeroed).
  Vector reduce(const Vector& v) const;
  /// Coordinates of v in the canonical basis. Throws if v is not in the span.
  Vector coordinates(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

private:
  size_t ambient_ = 0;
  Matrix basis_;
  std::vector<size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

struct KernelImage {
  Subspace kernel;  // inside the source, dimension cols
  Subspace image;   // inside the target, dimension rows
};

/// For m viewed as a map Q(i)^cols -> Q(i)^rows.
KernelImage kernel_image(const Matrix& m);
Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);

/// Canonical representatives of a basis of outer/inner. inner must lie in outer.
std::vector<Vector> quotient_basis(const Subspace& outer, const Subspace& inner);

/// Some x with a*x = b, or nullopt.
std::optional<Vector> solve(const Matrix& a, const Vector& b);
/// Some X with a*X = b, or nullopt.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
Matrix inverse(const Matrix& m);

/// Precondition: gram symmetric and nonsingular of size s.ambient_dim().
bool is_maximal_isotropic(const Subspace& s, const Matrix& gram);

struct Inertia {
  size_t positive = 0;
  size_t negative = 0;
  size_t zero = 0;
};

/// Sylvester inertia of a Hermitian matrix (real symmetric is the special case).
Inertia inertia(const Matrix& hermitian);

}  // namespace twistlab::exact
