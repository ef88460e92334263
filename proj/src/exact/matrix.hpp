#pragma once

#include "exact/gaussian_rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace twistlab::exact {

using Scalar = GaussianRational;
using Vector = std::vector<Scalar>;

/// Dense row-major matrix over Q(i). 0xn and nx0 shapes are legal.
class Matrix {
public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> init);

  static Matrix identity(size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, size_t cols);
  static Matrix from_columns(const std::vector<Vector>& columns, size_t rows);
  static Matrix diagonal(const Vector& d);

  size_t rows() const noexcept { return rows_; }
  size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Scalar& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(size_t r) const;
  Vector column(size_t c) const;
  std::vector<Vector> row_list() const;

  Matrix transpose() const;
  Matrix conj() const;
  Matrix block(size_t r0, size_t c0, size_t nr, size_t nc) const;
  void set_block(size_t r0, size_t c0, const Matrix& m);

  bool is_zero() const;
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;
  size_t nonzeros() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  Matrix operator-() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix commutator(const Matrix& a, const Matrix& b);
Matrix anticommutator(const Matrix& a, const Matrix& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);
/// Matrix unit E_ij of the given size.
Matrix unit_matrix(size_t n, size_t i, size_t j);

Vector zero_vector(size_t n);
Vector unit_vector(size_t n, size_t i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Vector& a, const Scalar& s);
/// Bilinear (not Hermitian) dot product.
Scalar dot(const Vector& a, const Vector& b);
/// Bilinear form a^T g b.
Scalar bilinear(const Vector& a, const Matrix& g, const Vector& b);
/// Row-major flattening, used to compare matrices as vectors.
Vector flatten(const Matrix& m);

std::string to_string(const Matrix& m);

}  // namespace twistlab::exact
