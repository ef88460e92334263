#include "clifford/octonion.hpp"

#include <vector>

namespace twistlab::clifford {

namespace {

using Coeffs = std::vector<Scalar>;

Coeffs cd_conj(const Coeffs& a) {
  Coeffs r(a.size());
  r[0] = a[0];
  for (size_t k = 1; k < a.size(); ++k) r[k] = -a[k];
  return r;
}

Coeffs cd_mult(const Coeffs& x, const Coeffs& y) {
  const size_t n = x.size();
  if (n == 1) return {x[0] * y[0]};
  const size_t h = n / 2;
  Coeffs a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
  Coeffs c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
  Coeffs ac = cd_mult(a, c), db = cd_mult(cd_conj(d), b);
  Coeffs da = cd_mult(d, a), bc = cd_mult(b, cd_conj(c));
  Coeffs r(n);
  for (size_t k = 0; k < h; ++k) {
    r[k] = ac[k] - db[k];
    r[h + k] = da[k] + bc[k];
  }
  return r;
}

struct Table {
  UnitProduct entries[8][8];
  Table() {
    for (size_t i = 0; i < 8; ++i)
      for (size_t j = 0; j < 8; ++j) {
        Coeffs x(8), y(8);
        x[i] = 1;
        y[j] = 1;
        Coeffs p = cd_mult(x, y);
        for (size_t k = 0; k < 8; ++k)
          if (!p[k].is_zero()) entries[i][j] = {p[k].is_one() ? 1 : -1, k};
      }
  }
};

const Table& table() {
  static const Table t;
  return t;
}

}  // namespace

UnitProduct unit_product(size_t i, size_t j) { return table().entries[i][j]; }

Octonion Octonion::unit(size_t k) {
  Octonion o;
  o.c.at(k) = 1;
  return o;
}

Octonion Octonion::conj() const {
  Octonion o = *this;
  for (size_t k = 1; k < 8; ++k) o.c[k] = -o.c[k];
  return o;
}

Scalar Octonion::norm() const { return inner(*this, *this); }

Scalar Octonion::inner(const Octonion& x, const Octonion& y) {
  Scalar s;
  for (size_t k = 0; k < 8; ++k) s += x.c[k] * y.c[k];
  return s;
}

Octonion operator*(const Octonion& a, const Octonion& b) {
  Octonion r;
  for (size_t i = 0; i < 8; ++i) {
    if (a.c[i].is_zero()) continue;
    for (size_t j = 0; j < 8; ++j) {
      if (b.c[j].is_zero()) continue;
      UnitProduct u = unit_product(i, j);
      Scalar t = a.c[i] * b.c[j];
      if (u.sign > 0)
        r.c[u.index] += t;
      else
        r.c[u.index] -= t;
    }
  }
  return r;
}

Octonion operator+(const Octonion& a, const Octonion& b) {
  Octonion r = a;
  for (size_t k = 0; k < 8; ++k) r.c[k] += b.c[k];
  return r;
}

Matrix left_mult(const Octonion& w) {
  Matrix m(8, 8);
  for (size_t j = 0; j < 8; ++j) {
    Octonion p = w * Octonion::unit(j);
    for (size_t i = 0; i < 8; ++i) m(i, j) = p.c[i];
  }
  return m;
}

}  // namespace twistlab::clifford
