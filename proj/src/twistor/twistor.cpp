#include "twistor/twistor.hpp"

#include "clifford/pairing.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace twistlab::twistor {

HDims h_dims(long k) {
  return {static_cast<size_t>(std::max(k + 1, 0L)), static_cast<size_t>(std::max(-k - 1, 0L))};
}

BerezinianReport berezinian_cpnm(long n, long m) {
  if (n < 1 || m < 0) fail(ErrorKind::InvalidArgument, "berezinian_cpnm needs n >= 1 and m >= 0");
  // K_{CP^n} ⊗ Λ^m(O(1) ⊗ C^m) = O(-n-1) ⊗ O(m)
  BerezinianReport r;
  r.degree = m - n - 1;
  r.super_calabi_yau = r.degree == 0;
  return r;
}

Matrix twistor_gram() {
  Matrix g(4, 4);
  for (size_t k = 0; k < 2; ++k) g(k, k + 2) = g(k + 2, k) = 1;
  return g;
}

Scalar twistor_norm(const Vector& z) {
  if (z.size() != 4) fail(ErrorKind::InvalidArgument, "twistor_norm needs 4 coordinates");
  Scalar s;
  for (size_t k = 0; k < 2; ++k) s += z[k] * z[k + 2].conj() + z[k].conj() * z[k + 2];
  return s;
}

exact::Inertia twistor_signature() { return exact::inertia(twistor_gram()); }

Quaternion Quaternion::conj() const { return {a.conj(), -b}; }

Scalar Quaternion::norm() const { return a * a.conj() + b * b.conj(); }

Quaternion Quaternion::inverse() const {
  if (is_zero()) fail(ErrorKind::InvalidArgument, "inverse of the zero quaternion");
  Scalar n = norm().inverse();
  Quaternion c = conj();
  return {c.a * n, c.b * n};
}

Quaternion operator*(const Quaternion& x, const Quaternion& y) {
  // (a + jb)(c + jd) = (ac − conj(b) d) + j(conj(a) d + bc)
  return {x.a * y.a - x.b.conj() * y.b, x.a.conj() * y.b + x.b * y.a};
}

std::string to_string(const Quaternion& q) {
  if (q.b.is_zero()) return q.a.to_string();
  return (q.a.is_zero() ? "" : q.a.to_string() + " + ") + "j*(" + q.b.to_string() + ")";
}

std::pair<Quaternion, Quaternion> penrose_map(const Vector& z) {
  if (z.size() != 4) fail(ErrorKind::InvalidArgument, "penrose_map needs 4 coordinates");
  if (exact::is_zero(z)) fail(ErrorKind::InvalidArgument, "penrose_map of the zero vector");
  return {{z[0], z[1]}, {z[2], z[3]}};
}

bool same_hp1_point(const std::pair<Quaternion, Quaternion>& p, const std::pair<Quaternion, Quaternion>& q) {
  if (p.second.is_zero() || q.second.is_zero()) return p.second.is_zero() && q.second.is_zero();
  return p.first * p.second.inverse() == q.first * q.second.inverse();
}

std::pair<Scalar, Scalar> holomorphic_projection(const Vector& z) {
  if (z.size() != 4) fail(ErrorKind::InvalidArgument, "holomorphic_projection needs 4 coordinates");
  if (z[2].is_zero() && z[3].is_zero()) fail(ErrorKind::Precondition, "point lies on the twistor line at infinity");
  return {z[2], z[3]};
}

PenroseScalingReport penrose_scaling_check(size_t points, unsigned seed) {
  std::mt19937 rng(seed);
  auto small = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)); };
  PenroseScalingReport r;
  while (r.points < points) {
    Vector z(4);
    for (auto& c : z) c = Scalar(small(-3, 3)) + Scalar(small(-3, 3)) * Scalar::i();
    Scalar lambda = (Scalar(small(-4, 4)) + Scalar(small(-4, 4)) * Scalar::i()) / Scalar(small(1, 5));
    if (exact::is_zero(z) || lambda.is_zero()) continue;
    auto p = penrose_map(z), q = penrose_map(exact::scale(z, lambda));
    const Quaternion l{lambda, 0};
    bool ok = q.first == p.first * l && q.second == p.second * l && same_hp1_point(p, q);
    ++r.points;
    r.passed += ok ? 1 : 0;
  }
  return r;
}

LineBundleTerm lambda_decompose(long i) {
  if (i < 0 || i > 4) fail(ErrorKind::InvalidArgument, "lambda_decompose needs 0 <= i <= 4");
  static const size_t binom[5] = {1, 4, 6, 4, 1};
  return {-i, binom[i], i % 2 == 1};
}

std::string to_string(Irrep r) {
  switch (r) {
    case Irrep::C: return "C";
    case Irrep::V: return "V";
    case Irrep::Sym2Plus: return "Sym²S+";
    case Irrep::Sym2Minus: return "Sym²S-";
    case Irrep::SPlus: return "S+";
    case Irrep::SMinus: return "S-";
    case Irrep::S: return "S";
  }
  return "?";
}

size_t irrep_dim(Irrep r) {
  switch (r) {
    case Irrep::C: return 1;
    case Irrep::V: return 4;
    case Irrep::Sym2Plus:
    case Irrep::Sym2Minus: return 3;
    case Irrep::SPlus:
    case Irrep::SMinus: return 2;
    case Irrep::S: return 4;
  }
  return 0;
}

namespace {

FieldContentTable canonical(const std::map<std::pair<long, Irrep>, size_t>& m) {
  FieldContentTable t;
  for (const auto& [key, mult] : m)
    if (mult) t.push_back({key.second, key.first, mult});
  return t;
}

std::map<std::pair<long, Irrep>, size_t> as_map(const FieldContentTable& t) {
  std::map<std::pair<long, Irrep>, size_t> m;
  for (const auto& e : t) m[{e.degree, e.irrep}] += e.multiplicity;
  return m;
}

}  // namespace

FieldContentTable pushforward_content(long k) {
  if (k < -4 || k > 0) fail(ErrorKind::InvalidArgument, "pushforward_content needs -4 <= k <= 0");
  std::map<std::pair<long, Irrep>, size_t> m;
  for (long j = 0; j <= 2; ++j) {
    const long d = k + j;
    // H^0(O(d)) = Sym^d S+, H^1(O(d)) = Sym^{-d-2} S+ (Serre duality, S+ self-dual).
    for (long i = 0; i <= 1; ++i) {
      long sym = i == 0 ? d : -d - 2;
      if (sym < 0) continue;
      Irrep r;
      if (j == 1) {
        if (sym == 0)
          r = Irrep::SMinus;
        else if (sym == 1)
          r = Irrep::V;
        else
          fail(ErrorKind::Internal, "pushforward_content: Sym^2 S+ ⊗ S- does not occur in range");
      } else {
        r = sym == 0 ? Irrep::C : sym == 1 ? Irrep::SPlus : Irrep::Sym2Plus;
        if (sym > 2) fail(ErrorKind::Internal, "pushforward_content: unexpected symmetric power");
      }
      m[{i + j, r}] += 1;
    }
  }
  return canonical(m);
}

std::vector<FieldGroup> field_content_groups() {
  auto merged = [](std::vector<long> ks) {
    std::map<std::pair<long, Irrep>, size_t> m;
    for (long k : ks)
      for (const auto& [key, mult] : as_map(pushforward_content(k))) m[key] += mult;
    return m;
  };
  std::vector<FieldGroup> out;
  out.push_back({"gauge", {0, -4}, lambda_decompose(0).multiplicity, canonical(merged({0, -4}))});
  auto spin = merged({-1, -3});
  std::map<std::pair<long, Irrep>, size_t> joined;
  for (const auto& [key, mult] : spin) {
    if (key.second == Irrep::SPlus || key.second == Irrep::SMinus) {
      Irrep partner = key.second == Irrep::SPlus ? Irrep::SMinus : Irrep::SPlus;
      auto it = spin.find({key.first, partner});
      size_t pair = it == spin.end() ? 0 : std::min(mult, it->second);
      if (key.second == Irrep::SPlus) joined[{key.first, Irrep::S}] += pair;
      joined[key] += mult - pair;
    } else {
      joined[key] += mult;
    }
  }
  out.push_back({"spinor", {-1, -3}, lambda_decompose(1).multiplicity, canonical(joined)});
  out.push_back({"scalar", {-2}, lambda_decompose(2).multiplicity, canonical(merged({-2}))});
  return out;
}

bool content_dimension_check() {
  static const size_t wedge[3] = {1, 2, 1};
  for (long k = -4; k <= 0; ++k) {
    std::map<long, size_t> lhs, rhs;
    for (const auto& e : pushforward_content(k)) lhs[e.degree] += irrep_dim(e.irrep) * e.multiplicity;
    for (long j = 0; j <= 2; ++j) {
      HDims h = h_dims(k + j);
      if (h.h0) rhs[j] += h.h0 * wedge[j];
      if (h.h1) rhs[1 + j] += h.h1 * wedge[j];
    }
    if (lhs != rhs) return false;
  }
  return true;
}

Matrix vector_to_spinor_bilinear(const clifford::SpinorModel& model, const clifford::PairingGamma& gamma, const Vector& x) {
  const size_t np = gamma.left_indices.size(), nm = gamma.right_indices.size(), n = model.n();
  Matrix phi(n, np * nm);
  for (size_t a = 0; a < n; ++a)
    for (size_t p = 0; p < np; ++p)
      for (size_t q = 0; q < nm; ++q) phi(a, p * nm + q) = gamma.components[a](p, q);
  auto c = exact::solve(phi, x);
  if (!c || exact::rank(phi) != np * nm) fail(ErrorKind::Internal, "Γ: S+ ⊗ S- → V is not an isomorphism");
  Matrix out(np, nm);
  for (size_t p = 0; p < np; ++p)
    for (size_t q = 0; q < nm; ++q) out(p, q) = (*c)[p * nm + q];
  return out;
}

DiracSymbolReport dirac_symbol_check() {
  const auto model = clifford::build_gamma(4);
  const auto gamma = clifford::build_pairing(model, clifford::Pattern::PlusMinus);
  const Matrix omega{{0, 1}, {-1, 0}};  // Λ²S- ≅ C
  DiracSymbolReport r;
  auto composite = [&](const Vector& x) {
    // t ↦ Σ c_pq s_p ⊗ (t_q ∧ t)
    return vector_to_spinor_bilinear(model, gamma, x) * omega;
  };
  for (size_t a = 0; a < 4; ++a) {
    Vector x = exact::unit_vector(4, a);
    r.composites.push_back(composite(x));
    r.clifford.push_back(clifford::restrict(model.rho(x), model.plus_indices, model.minus_indices));
  }
  // One common scalar for all four directions.
  for (size_t i = 0; i < 2 && !r.scalar; ++i)
    for (size_t j = 0; j < 2 && !r.scalar; ++j)
      if (!r.clifford[0](i, j).is_zero()) r.scalar = r.composites[0](i, j) / r.clifford[0](i, j);
  if (r.scalar && r.scalar->is_zero()) r.scalar.reset();
  for (size_t a = 0; a < 4 && r.scalar; ++a)
    if (r.composites[a] != *r.scalar * r.clifford[a]) r.scalar.reset();
  Vector sum = exact::add(exact::unit_vector(4, 0), exact::unit_vector(4, 2));
  r.linear = composite(sum) == r.composites[0] + r.composites[2];
  return r;
}

Json to_json(const FieldContentTable& t) {
  Json j = Json::array();
  for (const auto& e : t) j.push_back({{"irrep", to_string(e.irrep)}, {"degree", e.degree}, {"multiplicity", e.multiplicity}});
  return j;
}

}  // namespace twistlab::twistor
