#pragma once

#include "exact/matrix.hpp"

#include <array>

namespace twistlab::clifford {

using exact::Matrix;
using exact::Scalar;

/// Complexified octonion, coordinates on the units e0 = 1, e1..e7.
struct Octonion {
  std::array<Scalar, 8> c{};

  static Octonion unit(size_t k);
  Octonion conj() const;
  /// Bilinear norm: sum of squares of the coordinates.
  Scalar norm() const;
  /// Real part of (conj(x) * y), i.e. the bilinear inner product.
  static Scalar inner(const Octonion& x, const Octonion& y);

  friend Octonion operator*(const Octonion& a, const Octonion& b);
  friend Octonion operator+(const Octonion& a, const Octonion& b);
  friend bool operator==(const Octonion& a, const Octonion& b) { return a.c == b.c; }
};

/// Unit product e_i e_j = sign * e_k from Cayley-Dickson doubling
/// (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)), starting from R.
struct UnitProduct {
  int sign;
  size_t index;
};
UnitProduct unit_product(size_t i, size_t j);

/// Matrix of left multiplication x -> w x on the coordinate basis.
Matrix left_mult(const Octonion& w);

}  // namespace twistlab::clifford
