#include "twist/twist.hpp"

#include <random>

namespace twistlab::twist {

using superlie::Block;
using superlie::Parity;

namespace {

Matrix submatrix(const Matrix& m, const std::vector<size_t>& rows, const std::vector<size_t>& cols) {
  Matrix out(rows.size(), cols.size());
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < cols.size(); ++c) out(r, c) = m(rows[r], cols[c]);
  return out;
}

Vector embed(const Vector& local, const std::vector<size_t>& idx, size_t dim) {
  Vector v(dim);
  for (size_t k = 0; k < idx.size(); ++k) v[idx[k]] = local[k];
  return v;
}

std::vector<Vector> embed_all(const std::vector<Vector>& local, const std::vector<size_t>& idx, size_t dim) {
  std::vector<Vector> out;
  for (const auto& v : local) out.push_back(embed(v, idx, dim));
  return out;
}

std::vector<size_t> bosonic_chain(const SuperLieAlgebra& alg) {
  std::vector<size_t> out;
  for (size_t i = 0; i < alg.dim(); ++i)
    if (!alg.is_odd(i) && alg.label(i).block != Block::Translation) out.push_back(i);
  return out;
}

}  // namespace

void require_supercharge(const SuperLieAlgebra& alg, const Vector& q) {
  if (q.size() != alg.dim()) fail(ErrorKind::InvalidArgument, "supercharge has the wrong length");
  for (size_t i = 0; i < q.size(); ++i)
    if (!q[i].is_zero() && !alg.is_odd(i))
      fail(ErrorKind::InvalidArgument, "supercharge has a component on the even basis element " + alg.label(i).name);
}

Vector bracket_square(const SuperLieAlgebra& alg, const Vector& q) {
  require_supercharge(alg, q);
  Vector sq = alg.bracket(q, q);
  const auto trans = alg.indices(Block::Translation);
  Vector out;
  for (size_t t : trans) out.push_back(sq[t]);
  return out;
}

bool is_square_zero(const SuperLieAlgebra& alg, const Vector& q) {
  require_supercharge(alg, q);
  return exact::is_zero(alg.bracket(q, q));
}

bool ad_square_zero(const SuperLieAlgebra& alg, const Vector& q) {
  Matrix a = alg.ad(q);
  return (a * a).is_zero();
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Zero: return "zero";
    case Verdict::Topological: return "topological";
    case Verdict::Holomorphic: return "holomorphic";
    case Verdict::Intermediate: return "intermediate";
  }
  return "?";
}

std::string TwistReport::verdict_text() const {
  if (verdict == Verdict::Intermediate) return "intermediate(" + std::to_string(image_dim) + ")";
  return to_string(verdict);
}

TwistReport classify(const SuperLieAlgebra& alg, const Vector& q) {
  require_supercharge(alg, q);
  if (!is_square_zero(alg, q)) fail(ErrorKind::Precondition, "classify: supercharge is not square-zero");
  const auto trans = alg.indices(Block::Translation);
  const auto odd = alg.indices(Parity::Odd);
  TwistReport r;
  r.square_zero = true;
  r.image = exact::image(submatrix(alg.ad(q), trans, odd));
  r.image_dim = r.image.dim();
  if (exact::is_zero(q)) {
    r.verdict = Verdict::Zero;
    return r;
  }
  const size_t n = trans.size();
  r.isotropic = true;
  if (alg.translation_metric()) {
    const Matrix& g = *alg.translation_metric();
    const auto b = r.image.basis_vectors();
    for (size_t i = 0; i < b.size() && r.isotropic; ++i)
      for (size_t j = i; j < b.size(); ++j)
        if (!exact::bilinear(b[i], g, b[j]).is_zero()) {
          r.isotropic = false;
          break;
        }
  } else {
    r.isotropic = r.image_dim == 0;
  }
  if (r.image_dim == n)
    r.verdict = Verdict::Topological;
  else if (2 * r.image_dim == n && r.isotropic)
    r.verdict = Verdict::Holomorphic;
  else
    r.verdict = Verdict::Intermediate;
  return r;
}

bool TwistingHom::is_homomorphism(const SuperLieAlgebra& alg) const {
  for (const auto& v : images)
    for (size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero() && alg.label(k).block != Block::RSymmetry) return false;
  for (size_t a = 0; a < sources.size(); ++a)
    for (size_t b = a + 1; b < sources.size(); ++b) {
      Vector xy = alg.bracket(alg.element(sources[a]), alg.element(sources[b]));
      Vector mapped(alg.dim());
      for (size_t k = 0; k < xy.size(); ++k) {
        if (xy[k].is_zero()) continue;
        if (alg.label(k).block != Block::Rotation) return false;
        mapped = exact::add(mapped, exact::scale(apply(alg, alg.label(k).name), xy[k]));
      }
      if (mapped != alg.bracket(images[a], images[b])) return false;
    }
  return true;
}

Vector TwistingHom::apply(const SuperLieAlgebra& alg, const std::string& rotation) const {
  for (size_t k = 0; k < sources.size(); ++k)
    if (sources[k] == rotation) return images[k];
  return Vector(alg.dim());
}

TwistingHom zero_hom(const SuperLieAlgebra& alg) {
  TwistingHom phi;
  phi.name = "zero";
  for (size_t r : alg.indices(Block::Rotation)) {
    phi.sources.push_back(alg.label(r).name);
    phi.images.emplace_back(alg.dim());
  }
  return phi;
}

TwistingHom kapustin_witten(const SuperLieAlgebra& alg) {
  for (const char* l : {"H+", "E+", "F+", "H-", "E-", "F-", "h(e1,e2)", "h(f1,f2)", "E[e1,e2]", "E[f2,f1]"})
    if (!alg.find(l)) fail(ErrorKind::InvalidArgument, "kapustin_witten needs the N=4 algebra with sl(W) R-symmetry");
  TwistingHom phi;
  phi.name = "kapustin-witten";
  auto add = [&](const std::string& src, const Vector& img) {
    phi.sources.push_back(src);
    phi.images.push_back(img);
  };
  add("H+", alg.element("h(e1,e2)"));
  add("E+", alg.element("E[e1,e2]"));
  add("F+", alg.element("E[e2,e1]"));
  add("H-", alg.element("h(f1,f2)"));
  add("E-", exact::scale(alg.element("E[f1,f2]"), -1));
  add("F-", exact::scale(alg.element("E[f2,f1]"), -1));
  return phi;
}

SuperLieAlgebra twisted_action(const TwistingHom& phi, const SuperLieAlgebra& alg) {
  if (!phi.is_homomorphism(alg)) fail(ErrorKind::InvalidArgument, "twisted_action: φ is not a Lie algebra homomorphism into g_R");
  const size_t n = alg.dim();
  std::vector<Vector> basis;
  for (size_t i = 0; i < n; ++i) {
    Vector v = alg.unit(i);
    if (alg.label(i).block == Block::Rotation) v = exact::add(v, phi.apply(alg, alg.label(i).name));
    basis.push_back(v);
  }
  const Matrix inv = exact::inverse(Matrix::from_columns(basis, n));
  SuperLieAlgebra out(alg.name() + "^" + phi.name, alg.basis());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) out.set_bracket(i, j, superlie::to_sparse(inv * alg.bracket(basis[i], basis[j])));
  if (alg.translation_metric()) out.set_translation_metric(*alg.translation_metric());
  return out;
}

Factor parse_factor(const std::string& s) {
  if (s == "iota1" || s == "ι1") return Factor::Iota1;
  if (s == "iota2" || s == "ι2") return Factor::Iota2;
  if (s == "diagonal" || s == "so4") return Factor::Diagonal;
  fail(ErrorKind::InvalidArgument, "unknown factor '" + s + "' (iota1, iota2, diagonal)");
}

std::string to_string(Factor f) {
  switch (f) {
    case Factor::Iota1: return "iota1";
    case Factor::Iota2: return "iota2";
    case Factor::Diagonal: return "diagonal";
  }
  return "?";
}

std::vector<std::string> factor_generators(Factor f) {
  switch (f) {
    case Factor::Iota1: return {"H+", "E+", "F+"};
    case Factor::Iota2: return {"H-", "E-", "F-"};
    case Factor::Diagonal: return {"H+", "E+", "F+", "H-", "E-", "F-"};
  }
  return {};
}

namespace {

std::vector<Vector> twisted_generators(const SuperLieAlgebra& alg, const TwistingHom& phi, Factor f) {
  std::vector<Vector> out;
  for (const auto& name : factor_generators(f)) {
    if (!alg.find(name)) fail(ErrorKind::InvalidArgument, "algebra has no rotation generator " + name);
    out.push_back(exact::add(alg.element(name), phi.apply(alg, name)));
  }
  return out;
}

}  // namespace

Subspace invariant_supercharges(const SuperLieAlgebra& alg, const TwistingHom& phi, Factor f) {
  const auto odd = alg.indices(Parity::Odd);
  const auto gens = twisted_generators(alg, phi, f);
  Matrix stacked(gens.size() * odd.size(), odd.size());
  for (size_t g = 0; g < gens.size(); ++g) stacked.set_block(g * odd.size(), 0, submatrix(alg.ad(gens[g]), odd, odd));
  return Subspace::span(embed_all(exact::kernel(stacked).basis_vectors(), odd, alg.dim()), alg.dim());
}

CohomologyReport q_cohomology(const SuperLieAlgebra& alg, const Vector& q) {
  require_supercharge(alg, q);
  if (!is_square_zero(alg, q)) fail(ErrorKind::Precondition, "q_cohomology: supercharge is not square-zero");
  const size_t n = alg.dim();
  const auto c0 = bosonic_chain(alg);
  const auto c1 = alg.indices(Parity::Odd);
  const auto c2 = alg.indices(Block::Translation);
  const Matrix m = alg.ad(q);
  auto check_lands = [&](const std::vector<size_t>& from, const std::vector<size_t>& to) {
    std::vector<bool> allowed(n, false);
    for (size_t t : to) allowed[t] = true;
    for (size_t j : from)
      for (size_t i = 0; i < n; ++i)
        if (!m(i, j).is_zero() && !allowed[i]) fail(ErrorKind::Internal, "q_cohomology: [q,-] does not respect the three-term complex");
  };
  check_lands(c0, c1);
  check_lands(c1, c2);
  check_lands(c2, {});
  const Matrix d0 = submatrix(m, c1, c0), d1 = submatrix(m, c2, c1);

  CohomologyReport r;
  auto fill = [&](BlockCohomology& b, const std::string& name, const std::vector<size_t>& idx, const Subspace& cocycles,
                  const Subspace& coboundaries) {
    b.block = name;
    b.chain_dim = idx.size();
    b.cocycles = cocycles.dim();
    b.coboundaries = coboundaries.dim();
    b.cocycle_basis = embed_all(cocycles.basis_vectors(), idx, n);
    b.basis = embed_all(exact::quotient_basis(cocycles, coboundaries), idx, n);
  };
  fill(r.bosonic, "bosonic", c0, exact::kernel(d0), Subspace(c0.size()));
  fill(r.fermionic, "fermionic", c1, exact::kernel(d1), exact::image(d0));
  fill(r.translations, "translations", c2, Subspace::full(c2.size()), exact::image(d1));
  const long euler_chain = static_cast<long>(c0.size()) - static_cast<long>(c1.size()) + static_cast<long>(c2.size());
  const long euler_h = static_cast<long>(r.bosonic.dim()) - static_cast<long>(r.fermionic.dim()) + static_cast<long>(r.translations.dim());
  r.euler_ok = euler_chain == euler_h;
  return r;
}

std::vector<Vector> invariant_cohomology(const SuperLieAlgebra& alg, const Vector& q, const TwistingHom& phi, Factor f) {
  const auto h = q_cohomology(alg, q);
  const auto odd = alg.indices(Parity::Odd);
  const size_t n = alg.dim(), k = h.fermionic.dim();
  // Columns: representatives, then a basis of the coboundaries.
  std::vector<Vector> frame = h.fermionic.basis;
  const Matrix d0 = submatrix(alg.ad(q), odd, bosonic_chain(alg));
  for (const auto& v : exact::image(d0).basis_vectors()) frame.push_back(embed(v, odd, n));
  const Matrix fm = Matrix::from_columns(frame, n);

  const auto gens = twisted_generators(alg, phi, f);
  Matrix stacked(gens.size() * k, k);
  for (size_t g = 0; g < gens.size(); ++g) {
    if (!exact::is_zero(alg.bracket(gens[g], q)))
      fail(ErrorKind::Precondition, "invariant_cohomology: twisted generator does not commute with q");
    for (size_t c = 0; c < k; ++c) {
      auto coords = exact::solve(fm, alg.bracket(gens[g], h.fermionic.basis[c]));
      if (!coords) fail(ErrorKind::Internal, "invariant_cohomology: image left the cocycles");
      for (size_t r = 0; r < k; ++r) stacked(g * k + r, c) = (*coords)[r];
    }
  }
  std::vector<Vector> out;
  for (const auto& c : exact::kernel(stacked).basis_vectors()) {
    Vector v(n);
    for (size_t r = 0; r < k; ++r)
      if (!c[r].is_zero()) v = exact::add(v, exact::scale(h.fermionic.basis[r], c[r]));
    out.push_back(v);
  }
  return Subspace::span(out, n).basis_vectors();
}

KernelSurplus qhol_kernel_surplus(const SuperLieAlgebra& alg) {
  const Vector q = q_hol(alg);
  const auto h = q_cohomology(alg, q);
  const size_t n = alg.dim();
  KernelSurplus out;
  out.kernel = h.bosonic.cocycle_basis;
  std::vector<Vector> ref;
  for (const char* l : {"H-", "E-", "F-"}) ref.push_back(alg.element(l));
  // Ann(e1): R-symmetries r with r·e1 = 0, read off from [r, α1⊗e1].
  const auto rs = alg.indices(Block::RSymmetry);
  const auto odd = alg.indices(Parity::Odd);
  Matrix cond(odd.size(), rs.size());
  for (size_t c = 0; c < rs.size(); ++c) {
    Vector br = alg.bracket(alg.unit(rs[c]), q);
    for (size_t r = 0; r < odd.size(); ++r) cond(r, c) = br[odd[r]];
  }
  for (const auto& v : exact::kernel(cond).basis_vectors()) ref.push_back(embed(v, rs, n));
  const Subspace rspan = Subspace::span(ref, n);
  out.reference = rspan.basis_vectors();
  out.surplus = exact::quotient_basis(Subspace::span(out.kernel, n), rspan);
  return out;
}

Vector q_hol(const SuperLieAlgebra& alg) {
  if (!alg.find("α1⊗e1") || !alg.find("α2∨⊗f2*"))
    fail(ErrorKind::InvalidArgument, "named supercharges need the N=4 algebra with W = <e1,e2,f1,f2>");
  return alg.element("α1⊗e1");
}

Vector family_kw(const SuperLieAlgebra& alg, const Scalar& mu, const Scalar& nu) {
  if (mu.is_zero() && nu.is_zero()) fail(ErrorKind::InvalidArgument, "kw(μ:ν) needs (μ, ν) ≠ (0, 0)");
  Vector q = q_hol(alg);
  Vector s = exact::sub(alg.element("α1∨⊗f1*"), alg.element("α2∨⊗f2*"));
  q = exact::add(q, exact::scale(s, mu));
  return exact::add(q, exact::scale(alg.element("α2⊗e2"), nu));
}

Vector family_a(const SuperLieAlgebra& alg) { return family_kw(alg, 0, 1); }
Vector family_b(const SuperLieAlgebra& alg) { return family_kw(alg, 1, 0); }

Vector family_ht(const SuperLieAlgebra& alg, const Scalar& lambda) {
  return exact::add(family_ht_prime(alg, lambda), alg.element("α2⊗e2"));
}

Vector family_ht_prime(const SuperLieAlgebra& alg, const Scalar& lambda) {
  return exact::add(q_hol(alg), exact::scale(alg.element("α2∨⊗f2*"), lambda));
}

Vector named_family(const SuperLieAlgebra& alg, const std::string& spec) {
  if (spec == "hol") return q_hol(alg);
  if (spec == "A") return family_a(alg);
  if (spec == "B") return family_b(alg);
  auto open = spec.find('(');
  if (open == std::string::npos || spec.back() != ')') fail(ErrorKind::InvalidArgument, "unknown family '" + spec + "'");
  const std::string head = spec.substr(0, open), args = spec.substr(open + 1, spec.size() - open - 2);
  if (head == "kw") {
    auto sep = args.find_first_of(":,");
    if (sep == std::string::npos) fail(ErrorKind::InvalidArgument, "kw needs two parameters, e.g. kw(1:0)");
    return family_kw(alg, Scalar::parse(args.substr(0, sep)), Scalar::parse(args.substr(sep + 1)));
  }
  if (head == "ht") return family_ht(alg, Scalar::parse(args));
  if (head == "ht_prime") return family_ht_prime(alg, Scalar::parse(args));
  fail(ErrorKind::InvalidArgument, "unknown family '" + spec + "'");
}

SuccessiveTwistReport successive_twist_check(const SuperLieAlgebra& alg, const Vector& q1, const Vector& q2, unsigned seed) {
  require_supercharge(alg, q1);
  require_supercharge(alg, q2);
  const Vector sum = exact::add(q1, q2);
  if (!is_square_zero(alg, q1) || !is_square_zero(alg, q2) || !is_square_zero(alg, sum))
    fail(ErrorKind::Precondition, "successive_twist_check: q1, q2 and q1+q2 must be square-zero");
  if (!exact::is_zero(alg.bracket(q1, q2))) fail(ErrorKind::Precondition, "successive_twist_check: [q1, q2] ≠ 0");

  SuccessiveTwistReport out;
  out.direct = q_cohomology(alg, sum).dims();
  const Matrix a1 = alg.ad(q1);
  const auto ki = exact::kernel_image(a1);
  const auto inner = superlie::subquotient(alg, ki.kernel, ki.image, "H(" + alg.name() + ")");
  out.inner = q_cohomology(alg, q1).dims();
  const Vector q2bar = inner.project(q2);
  out.iterated = q_cohomology(inner.algebra, q2bar).dims();
  out.agree = out.direct == out.iterated;

  // Shift every representative (and q2) by a random coboundary and recompute brackets.
  std::mt19937 rng(seed);
  auto random_vector = [&](Parity p) {
    Vector y(alg.dim());
    for (size_t i = 0; i < alg.dim(); ++i)
      if (alg.label(i).parity == p) y[i] = static_cast<long>(rng() % 5) - 2;
    return y;
  };
  auto flip = [](Parity p) { return p == Parity::Odd ? Parity::Even : Parity::Odd; };
  std::vector<Vector> reps;
  for (size_t p = 0; p < inner.representatives.size(); ++p)
    reps.push_back(exact::add(inner.representatives[p], alg.bracket(q1, random_vector(flip(inner.algebra.label(p).parity)))));
  const Vector q2shift = exact::add(q2, alg.bracket(q1, random_vector(Parity::Even)));
  bool same = true;
  const size_t m = reps.size();
  for (size_t p = 0; p < m && same; ++p) {
    Vector dq = inner.project(alg.bracket(q2shift, reps[p]));
    same = dq == inner.algebra.bracket(q2bar, inner.algebra.unit(p));
    for (size_t q = p; q < m && same; ++q)
      same = inner.project(alg.bracket(reps[p], reps[q])) == superlie::to_dense(inner.algebra.bracket(p, q), m);
  }
  out.representative_independent = same;
  return out;
}

Matrix exp_nilpotent(const Matrix& m) {
  if (!m.is_square()) fail(ErrorKind::InvalidArgument, "exp of a non-square matrix");
  Matrix result = Matrix::identity(m.rows()), term = Matrix::identity(m.rows());
  for (size_t k = 1; k <= m.rows() + 1; ++k) {
    term = term * m * (Scalar(1) / Scalar(static_cast<long>(k)));
    if (term.is_zero()) return result;
    result += term;
  }
  fail(ErrorKind::InvalidArgument, "exp_nilpotent: matrix is not nilpotent");
}

}  // namespace twistlab::twist
