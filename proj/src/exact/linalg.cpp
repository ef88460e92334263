#include "exact/linalg.hpp"

#include <utility>

namespace twistlab::exact {

namespace {

// In-place RREF on a list of rows; returns pivot columns.
std::vector<size_t> rref_rows(std::vector<Vector>& rows, size_t cols) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Vector& pr = rows[r];
    if (!pr[c].is_one()) {
      Scalar inv = pr[c].inverse();
      for (size_t j = c; j < cols; ++j)
        if (!pr[j].is_zero()) pr[j] *= inv;
    }
    std::vector<size_t> support;
    for (size_t j = c; j < cols; ++j)
      if (!pr[j].is_zero()) support.push_back(j);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Scalar f = rows[i][c];
      for (size_t j : support) rows[i][j] -= f * pr[j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

RrefResult rref(const Matrix& m) {
  std::vector<Vector> rows = m.row_list();
  RrefResult out;
  out.pivots = rref_rows(rows, m.cols());
  out.rank = out.pivots.size();
  out.matrix = Matrix(m.rows(), m.cols());
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < m.cols(); ++c) out.matrix(r, c) = rows[r][c];
  return out;
}

size_t rank(const Matrix& m) {
  std::vector<Vector> rows = m.row_list();
  return rref_rows(rows, m.cols()).size();
}

Subspace Subspace::span(const std::vector<Vector>& vectors, size_t ambient) {
  std::vector<Vector> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != ambient) fail(ErrorKind::InvalidArgument, "span: vector length differs from ambient dimension");
    if (!is_zero(v)) rows.push_back(v);
  }
  Subspace s(ambient);
  s.pivots_ = rref_rows(rows, ambient);
  s.basis_ = Matrix::from_rows(rows, ambient);
  return s;
}

Subspace Subspace::row_space(const Matrix& m) { return span(m.row_list(), m.cols()); }

Subspace Subspace::full(size_t ambient) { return row_space(Matrix::identity(ambient)); }

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) fail(ErrorKind::InvalidArgument, "reduce: ambient dimension mismatch");
  Vector out = v;
  for (size_t r = 0; r < pivots_.size(); ++r) {
    Scalar f = out[pivots_[r]];
    if (f.is_zero()) continue;
    for (size_t c = 0; c < ambient_; ++c)
      if (!basis_(r, c).is_zero()) out[c] -= f * basis_(r, c);
  }
  return out;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& s) const {
  if (s.ambient_ != ambient_) fail(ErrorKind::InvalidArgument, "contains: ambient dimension mismatch");
  for (size_t r = 0; r < s.dim(); ++r)
    if (!contains(s.basis_.row_vector(r))) return false;
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) fail(ErrorKind::Precondition, "vector is not in the subspace");
  Vector coords(pivots_.size());
  for (size_t r = 0; r < pivots_.size(); ++r) coords[r] = v[pivots_[r]];
  return coords;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) fail(ErrorKind::InvalidArgument, "subspace ambient dimension mismatch");
  std::vector<Vector> rows = a.basis_vectors();
  for (auto& v : b.basis_vectors()) rows.push_back(std::move(v));
  return Subspace::span(rows, a.ambient_dim());
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) fail(ErrorKind::InvalidArgument, "subspace ambient dimension mismatch");
  const size_t n = a.ambient_dim(), da = a.dim(), db = b.dim();
  if (da == 0 || db == 0) return Subspace(n);
  // Solve x·A = y·B, i.e. the kernel of [A^T | -B^T].
  Matrix m(n, da + db);
  for (size_t i = 0; i < da; ++i)
    for (size_t c = 0; c < n; ++c) m(c, i) = a.basis()(i, c);
  for (size_t j = 0; j < db; ++j)
    for (size_t c = 0; c < n; ++c) m(c, da + j) = -b.basis()(j, c);
  std::vector<Vector> out;
  for (const auto& k : kernel(m).basis_vectors()) {
    Vector v(n);
    for (size_t i = 0; i < da; ++i)
      if (!k[i].is_zero())
        for (size_t c = 0; c < n; ++c) v[c] += k[i] * a.basis()(i, c);
    out.push_back(std::move(v));
  }
  return Subspace::span(out, n);
}

Subspace kernel(const Matrix& m) {
  RrefResult r = rref(m);
  const size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = 1;
    for (size_t row = 0; row < r.rank; ++row) v[r.pivots[row]] = -r.matrix(row, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(basis, n);
}

Subspace image(const Matrix& m) { return Subspace::row_space(m.transpose()); }

KernelImage kernel_image(const Matrix& m) { return {kernel(m), image(m)}; }

std::vector<Vector> quotient_basis(const Subspace& outer, const Subspace& inner) {
  if (!outer.contains(inner)) fail(ErrorKind::Precondition, "quotient: inner subspace not contained in outer");
  std::vector<Vector> reduced;
  for (const auto& v : outer.basis_vectors()) reduced.push_back(inner.reduce(v));
  return Subspace::span(reduced, outer.ambient_dim()).basis_vectors();
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) fail(ErrorKind::InvalidArgument, "solve: shape mismatch");
  Matrix aug(a.rows(), a.cols() + b.cols());
  aug.set_block(0, 0, a);
  aug.set_block(0, a.cols(), b);
  RrefResult r = rref(aug);
  Matrix x(a.cols(), b.cols());
  for (size_t row = 0; row < r.rank; ++row) {
    size_t p = r.pivots[row];
    if (p >= a.cols()) return std::nullopt;
    for (size_t c = 0; c < b.cols(); ++c) x(p, c) = r.matrix(row, a.cols() + c);
  }
  return x;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  auto x = solve(a, Matrix::from_columns({b}, b.size()));
  if (!x) return std::nullopt;
  return x->column(0);
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) fail(ErrorKind::InvalidArgument, "inverse of a non-square matrix");
  if (rank(m) != m.rows()) fail(ErrorKind::Precondition, "matrix is singular");
  return *solve(m, Matrix::identity(m.rows()));
}

bool is_maximal_isotropic(const Subspace& s, const Matrix& gram) {
  const size_t n = s.ambient_dim();
  if (gram.rows() != n || gram.cols() != n) fail(ErrorKind::InvalidArgument, "gram size does not match ambient dimension");
  if (!gram.is_symmetric()) fail(ErrorKind::InvalidArgument, "gram matrix is not symmetric");
  if (rank(gram) != n) fail(ErrorKind::InvalidArgument, "gram matrix is singular");
  if (n % 2 != 0 || 2 * s.dim() != n) return false;
  const auto b = s.basis_vectors();
  for (size_t i = 0; i < b.size(); ++i) {
    Vector gi = gram * b[i];
    for (size_t j = i; j < b.size(); ++j)
      if (!dot(gi, b[j]).is_zero()) return false;
  }
  return true;
}

Inertia inertia(const Matrix& hermitian) {
  if (!hermitian.is_square() || hermitian.conj().transpose() != hermitian)
    fail(ErrorKind::InvalidArgument, "inertia needs a Hermitian matrix");
  Matrix h = hermitian;
  const size_t n = h.rows();
  Inertia out;
  // Congruence H -> P H P^*, one pivot at a time on the trailing block.
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && h(p, p).is_zero()) ++p;
    if (p == n) {
      size_t i = n, j = n;
      for (size_t a = k; a < n && i == n; ++a)
        for (size_t b = a + 1; b < n; ++b)
          if (!h(a, b).is_zero()) {
            i = a;
            j = b;
            break;
          }
      if (i == n) {
        out.zero += n - k;
        break;
      }
      // row_i += c row_j, col_i += conj(c) col_j with c = h(i,j): new diagonal 2|h_ij|^2.
      Scalar c = h(i, j);
      for (size_t t = 0; t < n; ++t) h(i, t) += c * h(j, t);
      for (size_t t = 0; t < n; ++t) h(t, i) += c.conj() * h(t, j);
      p = i;
    }
    if (p != k) {
      for (size_t t = 0; t < n; ++t) std::swap(h(p, t), h(k, t));
      for (size_t t = 0; t < n; ++t) std::swap(h(t, p), h(t, k));
    }
    Scalar d = h(k, k);
    for (size_t r = k + 1; r < n; ++r) {
      if (h(r, k).is_zero()) continue;
      Scalar f = h(r, k) / d;
      for (size_t t = k; t < n; ++t) h(r, t) -= f * h(k, t);
      for (size_t t = k; t < n; ++t) h(t, r) -= f.conj() * h(t, k);
    }
    if (sgn(d.re()) > 0)
      ++out.positive;
    else
      ++out.negative;
  }
  return out;
}

}  // namespace twistlab::exact
