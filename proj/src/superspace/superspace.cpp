#include "superspace/superspace.hpp"

#include "twist/twist.hpp"

#include <bit>

namespace twistlab::superspace {

using exact::Matrix;
using superlie::Block;
using superlie::Parity;

bool coordinate_is_odd(size_t c) { return c >= 2; }

std::string coordinate_name(size_t c) {
  static const char* names[kCoords] = {"z1", "z2", "ε", "ε1", "ε2"};
  if (c >= kCoords) fail(ErrorKind::InvalidArgument, "coordinate index out of range");
  return names[c];
}

bool Monomial::is_odd() const { return std::popcount(odd) % 2 == 1; }

SuperPolynomial SuperPolynomial::constant(const Scalar& c) { return monomial(Monomial{}, c); }

SuperPolynomial SuperPolynomial::variable(size_t coord) {
  Monomial m;
  if (coord == 0)
    m.a = 1;
  else if (coord == 1)
    m.b = 1;
  else if (coord < kCoords)
    m.odd = 1u << (coord - 2);
  else
    fail(ErrorKind::InvalidArgument, "coordinate index out of range");
  return monomial(m, 1);
}

SuperPolynomial SuperPolynomial::monomial(const Monomial& m, const Scalar& c) {
  SuperPolynomial p;
  p.add_term(m, c);
  return p;
}

void SuperPolynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::optional<bool> SuperPolynomial::parity() const {
  std::optional<bool> p;
  for (const auto& [m, c] : terms_) {
    if (p && *p != m.is_odd()) fail(ErrorKind::InvalidArgument, "inhomogeneous super polynomial");
    p = m.is_odd();
  }
  return p;
}

SuperPolynomial SuperPolynomial::derivative(size_t coord) const {
  SuperPolynomial out;
  for (const auto& [m, c] : terms_) {
    Monomial d = m;
    if (coord == 0) {
      if (!m.a) continue;
      d.a = m.a - 1;
      out.add_term(d, c * Scalar(static_cast<long>(m.a)));
    } else if (coord == 1) {
      if (!m.b) continue;
      d.b = m.b - 1;
      out.add_term(d, c * Scalar(static_cast<long>(m.b)));
    } else {
      const unsigned bit = 1u << (coord - 2);
      if (!(m.odd & bit)) continue;
      d.odd = m.odd & ~bit;
      const bool flip = std::popcount(m.odd & (bit - 1)) % 2 == 1;
      out.add_term(d, flip ? -c : c);
    }
  }
  return out;
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) {
  SuperPolynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      if (ma.odd & mb.odd) continue;
      // Move each odd factor of b left past the larger factors of a.
      int swaps = 0;
      for (unsigned j = 0; j < 3; ++j)
        if (mb.odd & (1u << j)) swaps += std::popcount(ma.odd >> (j + 1));
      Monomial m{ma.a + mb.a, ma.b + mb.b, ma.odd | mb.odd};
      Scalar c = ca * cb;
      out.add_term(m, swaps % 2 ? -c : c);
    }
  return out;
}

SuperPolynomial operator*(const Scalar& s, const SuperPolynomial& a) { return SuperPolynomial::constant(s) * a; }

namespace {

std::string monomial_text(const Monomial& m) {
  std::string out;
  auto add = [&](const std::string& s) { out += (out.empty() ? "" : "*") + s; };
  if (m.a) add(m.a == 1 ? "z1" : "z1^" + std::to_string(m.a));
  if (m.b) add(m.b == 1 ? "z2" : "z2^" + std::to_string(m.b));
  for (size_t k = 0; k < 3; ++k)
    if (m.odd & (1u << k)) add(coordinate_name(k + 2));
  return out;
}

// Term body without its sign, plus whether the sign is negative.
std::pair<std::string, bool> term_text(const Scalar& c, const std::string& body) {
  bool negative = false;
  Scalar v = c;
  if ((v.is_real() && sgn(v.re()) < 0) || (sgn(v.re()) == 0 && sgn(v.im()) < 0)) {
    negative = true;
    v = -v;
  }
  if (v.is_one()) return {body.empty() ? "1" : body, negative};
  std::string coef = v.to_string();
  if (sgn(v.re()) != 0 && sgn(v.im()) != 0) coef = "(" + coef + ")";
  return {body.empty() ? coef : coef + "*" + body, negative};
}

void append_term(std::string& out, const std::pair<std::string, bool>& t) {
  if (out.empty())
    out = (t.second ? "-" : "") + t.first;
  else
    out += (t.second ? " - " : " + ") + t.first;
}

}  // namespace

std::string to_string(const SuperPolynomial& p) {
  std::string out;
  for (const auto& [m, c] : p.terms()) append_term(out, term_text(c, monomial_text(m)));
  return out.empty() ? "0" : out;
}

SuperVectorField SuperVectorField::partial(size_t coord, const SuperPolynomial& f) {
  if (coord >= kCoords) fail(ErrorKind::InvalidArgument, "coordinate index out of range");
  SuperVectorField x;
  x.coeff[coord] = f;
  return x;
}

bool SuperVectorField::is_zero() const {
  for (const auto& c : coeff)
    if (!c.is_zero()) return false;
  return true;
}

std::optional<bool> SuperVectorField::parity() const {
  std::optional<bool> p;
  for (size_t i = 0; i < kCoords; ++i) {
    auto q = coeff[i].parity();
    if (!q) continue;
    bool total = *q != coordinate_is_odd(i);
    if (p && *p != total) fail(ErrorKind::InvalidArgument, "inhomogeneous super vector field");
    p = total;
  }
  return p;
}

SuperPolynomial SuperVectorField::apply(const SuperPolynomial& g) const {
  SuperPolynomial out;
  for (size_t i = 0; i < kCoords; ++i)
    if (!coeff[i].is_zero()) out += coeff[i] * g.derivative(i);
  return out;
}

SuperVectorField& SuperVectorField::operator+=(const SuperVectorField& o) {
  for (size_t i = 0; i < kCoords; ++i) coeff[i] += o.coeff[i];
  return *this;
}

SuperVectorField operator-(const SuperVectorField& a, const SuperVectorField& b) {
  SuperVectorField x = a;
  for (size_t i = 0; i < kCoords; ++i) x.coeff[i] -= b.coeff[i];
  return x;
}

SuperVectorField operator*(const Scalar& s, const SuperVectorField& a) {
  SuperVectorField x;
  for (size_t i = 0; i < kCoords; ++i) x.coeff[i] = s * a.coeff[i];
  return x;
}

std::string to_string(const SuperVectorField& x) {
  std::string out;
  for (size_t i = 0; i < kCoords; ++i)
    for (const auto& [m, c] : x.coeff[i].terms()) {
      auto [body, negative] = term_text(c, monomial_text(m));
      std::string d = "∂/∂" + coordinate_name(i);
      append_term(out, {body == "1" ? d : body + " " + d, negative});
    }
  return out.empty() ? "0" : out;
}

Json to_json(const SuperVectorField& x) {
  Json j;
  auto p = x.parity();
  j["parity"] = p ? (*p ? "odd" : "even") : "zero";
  j["text"] = to_string(x);
  Json terms = Json::array();
  for (size_t i = 0; i < kCoords; ++i)
    for (const auto& [m, c] : x.coeff[i].terms()) {
      std::string mono = monomial_text(m);
      terms.push_back({{"coefficient", c.to_string()}, {"monomial", mono.empty() ? "1" : mono}, {"direction", "∂/∂" + coordinate_name(i)}});
    }
  j["terms"] = terms;
  return j;
}

SuperVectorField vf_bracket(const SuperVectorField& x, const SuperVectorField& y) {
  auto px = x.parity(), py = y.parity();
  SuperVectorField out;
  if (!px || !py) return out;
  const bool minus = !(*px && *py);  // (−1)^{|x||y|} = −1 only for two odd fields
  for (size_t j = 0; j < kCoords; ++j) {
    SuperPolynomial a = x.apply(y.coeff[j]), b = y.apply(x.coeff[j]);
    out.coeff[j] = minus ? a - b : a + b;
  }
  return out;
}

namespace {

size_t theta_index(const std::string& w) {
  if (w == "e2") return 2;
  if (w == "f1") return 3;
  if (w == "f2") return 4;
  fail(ErrorKind::Internal, "no fermionic coordinate for " + w);
}

// (−1)^{i+1} for f_i, +1 for e2.
Scalar theta_sign(const std::string& w) { return w == "f2" ? Scalar(-1) : Scalar(1); }

}  // namespace

std::vector<RealizedGenerator> realized_generators(const SuperLieAlgebra& n4) {
  twist::q_hol(n4);  // validates the algebra
  const std::vector<std::string> ws = {"e2", "f1", "f2"};
  std::vector<RealizedGenerator> out;
  auto add = [&](const std::string& name, SuperVectorField f) { out.push_back({name, n4.element(name), std::move(f)}); };

  for (const auto& w : ws) add("α2⊗" + w, theta_sign(w) * SuperVectorField::partial(theta_index(w)));
  for (size_t j = 0; j < 2; ++j)
    for (const auto& w : ws)
      add("α" + std::to_string(j + 1) + "∨⊗" + w + "*",
          theta_sign(w) * SuperVectorField::partial(j, SuperPolynomial::variable(theta_index(w))));
  add("∂z1", SuperVectorField::partial(0));
  add("∂z2", SuperVectorField::partial(1));

  // so(3)-: X ↦ −Σ x_lj z_j ∂/∂z_l with x read off the action on ∂z1, ∂z2.
  const std::vector<std::string> dz = {"∂z1", "∂z2"};
  for (const char* name : {"H-", "E-", "F-"}) {
    SuperVectorField f;
    for (size_t j = 0; j < 2; ++j) {
      Vector br = n4.bracket(n4.element(name), n4.element(dz[j]));
      for (size_t l = 0; l < 2; ++l) {
        Scalar x = br[n4.index_of(dz[l])];
        if (!x.is_zero()) f += SuperVectorField::partial(l, -x * SuperPolynomial::variable(j));
      }
    }
    add(name, f);
  }

  // sl(3) on <e2, f1, f2>: r ↦ −Σ r_ab c_a c_b θ_b ∂/∂θ_a, with r read off α2⊗W.
  std::vector<std::string> levi;
  for (size_t a = 0; a < 3; ++a)
    for (size_t b = 0; b < 3; ++b)
      if (a != b) levi.push_back("E[" + ws[a] + "," + ws[b] + "]");
  levi.push_back("h(e2,f1)");
  levi.push_back("h(f1,f2)");
  for (const auto& name : levi) {
    SuperVectorField f;
    for (const auto& wb : ws) {
      Vector br = n4.bracket(n4.element(name), n4.element("α2⊗" + wb));
      for (const auto& wa : ws) {
        Scalar r = br[n4.index_of("α2⊗" + wa)];
        if (r.is_zero()) continue;
        Scalar c = -r * theta_sign(wa) * theta_sign(wb);
        f += SuperVectorField::partial(theta_index(wa), c * SuperPolynomial::variable(theta_index(wb)));
      }
    }
    add(name, f);
  }
  return out;
}

SuperVectorField realize(const SuperLieAlgebra& n4, const Vector& element) {
  const Vector qhol = twist::q_hol(n4);
  if (element.size() != n4.dim()) fail(ErrorKind::InvalidArgument, "realize: element has the wrong length");
  if (!exact::is_zero(n4.bracket(qhol, element))) fail(ErrorKind::Precondition, "realize: element is not a Q_hol-cocycle");
  const auto gens = realized_generators(n4);
  std::vector<Vector> cols;
  for (const auto& g : gens) cols.push_back(g.element);
  for (const auto& v : exact::image(n4.ad(qhol)).basis_vectors()) cols.push_back(v);
  auto c = exact::solve(Matrix::from_columns(cols, n4.dim()), element);
  if (!c) fail(ErrorKind::Precondition, "realize: element lies outside the realized span (" + superlie::format_element(n4, element) + ")");
  SuperVectorField out;
  for (size_t k = 0; k < gens.size(); ++k)
    if (!(*c)[k].is_zero()) out += (*c)[k] * gens[k].field;
  return out;
}

RepresentationReport check_representation(const SuperLieAlgebra& n4) {
  const auto gens = realized_generators(n4);
  RepresentationReport r;
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i; j < gens.size(); ++j) {
      RepresentationPair p;
      p.x = gens[i].name;
      p.y = gens[j].name;
      p.lhs = vf_bracket(gens[i].field, gens[j].field);
      p.rhs = realize(n4, n4.bracket(gens[i].element, gens[j].element));
      p.ok = p.lhs == p.rhs;
      r.passed += p.ok ? 1 : 0;
      r.pairs.push_back(std::move(p));
    }
  return r;
}

SuperVectorField family_vector_field_kw(const Scalar& mu, const Scalar& nu) {
  SuperVectorField d = SuperVectorField::partial(0, SuperPolynomial::variable(3)) +
                       SuperVectorField::partial(1, SuperPolynomial::variable(4));
  return mu * d + nu * SuperVectorField::partial(2);
}

SuperVectorField family_vector_field_ht(const Scalar& lambda) {
  return lambda * SuperVectorField::partial(1, SuperPolynomial::variable(4)) + SuperVectorField::partial(2);
}

SuperVectorField family_vector_field(const std::string& spec) {
  if (spec == "hol") return {};
  if (spec == "A") return family_vector_field_kw(0, 1);
  if (spec == "B") return family_vector_field_kw(1, 0);
  auto open = spec.find('(');
  if (open == std::string::npos || spec.back() != ')') fail(ErrorKind::InvalidArgument, "unknown family '" + spec + "'");
  const std::string head = spec.substr(0, open), args = spec.substr(open + 1, spec.size() - open - 2);
  if (head == "kw") {
    auto sep = args.find_first_of(":,");
    if (sep == std::string::npos) fail(ErrorKind::InvalidArgument, "kw needs two parameters, e.g. kw(1:0)");
    return family_vector_field_kw(Scalar::parse(args.substr(0, sep)), Scalar::parse(args.substr(sep + 1)));
  }
  if (head == "ht") return family_vector_field_ht(Scalar::parse(args));
  fail(ErrorKind::InvalidArgument, "unknown family '" + spec + "'");
}

}  // namespace twistlab::superspace
