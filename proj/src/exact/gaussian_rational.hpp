#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace twistlab {

enum class ErrorKind { InvalidArgument, Precondition, Internal };

/// Error raised by every module. The kind maps onto the CLI exit-code contract
/// (2 usage, 3 mathematical precondition, 4 internal check failure).
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

namespace exact {

/// An element re + im*i of Q(i). Both parts are GMP rationals kept in
/// canonical form (lowest terms, positive denominator).
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0);
  GaussianRational(long num, long den);

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2 = re^2 + im^2, a rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// Canonical text form: "0", "-3/2", "1/2*i", "1-2/3*i".
  std::string to_string() const;
  /// Inverse of to_string; also accepts whitespace, a bare "i", "-i", "2i"
  /// and parenthesised input.
  static GaussianRational parse(std::string_view text);

  /// Square root inside Q(i) when one exists (the one with positive real
  /// part, or positive imaginary part when the real part is zero).
  std::optional<GaussianRational> sqrt() const;

private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// Exact rational square root, if the argument is a perfect square in Q.
std::optional<mpq_class> rational_sqrt(const mpq_class& q);

}  // namespace exact

using exact::GaussianRational;

}  // namespace twistlab
