#include "exact/gaussian_rational.hpp"

#include <cctype>
#include <ostream>

namespace twistlab::exact {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational::GaussianRational(long num, long den) : re_(num, den), im_(0) {
  if (den == 0) fail(ErrorKind::InvalidArgument, "zero denominator");
  re_.canonicalize();
}

GaussianRational GaussianRational::inverse() const {
  mpq_class n = norm();
  if (sgn(n) == 0) fail(ErrorKind::Precondition, "division by zero in Q(i)");
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class s = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(s);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (sgn(o.im_) == 0) {
    if (sgn(o.re_) == 0) fail(ErrorKind::Precondition, "division by zero in Q(i)");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string GaussianRational::to_string() const {
  const bool has_re = sgn(re_) != 0;
  const bool has_im = sgn(im_) != 0;
  if (!has_re && !has_im) return "0";
  std::string out;
  if (has_re) out = re_.get_str();
  if (has_im) {
    mpq_class mag = abs(im_);
    if (sgn(im_) < 0)
      out += "-";
    else if (has_re)
      out += "+";
    out += mag.get_str() + "*i";
  }
  return out;
}

namespace {

struct Cursor {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
};

// term := [digits ['/' digits]] ['*'] ['i']  (at least one of number or i)
GaussianRational parse_term(Cursor& c, std::string_view whole) {
  c.skip_ws();
  size_t start = c.pos;
  while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
  mpq_class value(1);
  bool have_number = c.pos > start;
  if (have_number) {
    std::string num(c.s.substr(start, c.pos - start));
    std::string den = "1";
    if (c.pos < c.s.size() && c.s[c.pos] == '/') {
      ++c.pos;
      size_t dstart = c.pos;
      while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
      if (c.pos == dstart) fail(ErrorKind::InvalidArgument, "malformed rational in '" + std::string(whole) + "'");
      den = std::string(c.s.substr(dstart, c.pos - dstart));
    }
    mpz_class d(den);
    if (d == 0) fail(ErrorKind::InvalidArgument, "zero denominator in '" + std::string(whole) + "'");
    value = mpq_class(mpz_class(num), d);
    value.canonicalize();
  }
  c.skip_ws();
  size_t save = c.pos;
  if (c.pos < c.s.size() && c.s[c.pos] == '*') {
    ++c.pos;
    c.skip_ws();
  }
  if (c.pos < c.s.size() && c.s[c.pos] == 'i') {
    ++c.pos;
    return {0, value};
  }
  c.pos = save;
  if (!have_number) fail(ErrorKind::InvalidArgument, "malformed Gaussian rational '" + std::string(whole) + "'");
  return {value, 0};
}

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string_view t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  Cursor c{t};
  if (c.done()) fail(ErrorKind::InvalidArgument, "empty Gaussian rational");
  GaussianRational total;
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    char ch = c.peek();
    if (ch == '+' || ch == '-') {
      sign = ch == '-' ? -1 : 1;
      ++c.pos;
    } else if (!first) {
      fail(ErrorKind::InvalidArgument, "malformed Gaussian rational '" + std::string(text) + "'");
    }
    GaussianRational term = parse_term(c, text);
    total += sign < 0 ? -term : term;
    first = false;
  }
  return total;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  mpq_class r(rn, rd);
  r.canonicalize();
  return r;
}

std::optional<GaussianRational> GaussianRational::sqrt() const {
  if (is_zero()) return GaussianRational{};
  // (x + yi)^2 = a + bi  =>  x^2 = (a + |z|)/2, y^2 = (|z| - a)/2, 2xy = b.
  auto modulus = rational_sqrt(norm());
  if (!modulus) return std::nullopt;
  auto x = rational_sqrt((re_ + *modulus) / 2);
  auto y = rational_sqrt((*modulus - re_) / 2);
  if (!x || !y) return std::nullopt;
  mpq_class yy = *y;
  if (sgn(im_) < 0) yy = -yy;
  GaussianRational root(*x, yy);
  if (root * root != *this) return std::nullopt;
  return root;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace twistlab::exact
