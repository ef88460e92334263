#include "superlie/reduction.hpp"

#include "clifford/spinor_model.hpp"

#include <set>

namespace twistlab::superlie {

using twistlab::ErrorKind;
using twistlab::fail;

namespace {

// Action of alg element x on the translation block, as a matrix in translation coordinates.
Matrix action_on_translations(const SuperLieAlgebra& alg, const std::vector<size_t>& trans, const Vector& x) {
  const size_t n = trans.size();
  Matrix a(n, n);
  for (size_t c = 0; c < n; ++c) {
    Vector y = alg.bracket(x, alg.unit(trans[c]));
    for (size_t r = 0; r < n; ++r) a(r, c) = y[trans[r]];
  }
  return a;
}

Matrix restrict_ad(const SuperLieAlgebra& alg, const Vector& x, const std::vector<size_t>& idx) {
  Matrix full = alg.ad(x);
  Matrix out(idx.size(), idx.size());
  for (size_t r = 0; r < idx.size(); ++r)
    for (size_t c = 0; c < idx.size(); ++c) out(r, c) = full(idx[r], idx[c]);
  return out;
}

Vector embed(const Vector& local, const std::vector<size_t>& idx, size_t dim) {
  Vector v(dim);
  for (size_t k = 0; k < idx.size(); ++k) v[idx[k]] = local[k];
  return v;
}

Vector combine(const std::vector<Vector>& images, const Vector& coeffs, size_t dim) {
  Vector v(dim);
  for (size_t k = 0; k < coeffs.size(); ++k)
    if (!coeffs[k].is_zero())
      for (size_t j = 0; j < dim; ++j)
        if (!images[k][j].is_zero()) v[j] += coeffs[k] * images[k][j];
  return v;
}

// Joint eigenspace of commuting matrices a, b with eigenvalues (x, y).
Subspace joint_eigenspace(const Matrix& a, const Matrix& b, int x, int y) {
  const size_t n = a.rows();
  Matrix stacked(2 * n, n);
  stacked.set_block(0, 0, a - Scalar(x) * Matrix::identity(n));
  stacked.set_block(n, 0, b - Scalar(y) * Matrix::identity(n));
  return exact::kernel(stacked);
}

}  // namespace

Reduction10to4 reduce_10_to_4(const SuperLieAlgebra& alg, const std::vector<size_t>& embedding) {
  if (embedding.size() != 4) fail(ErrorKind::InvalidArgument, "reduce_10_to_4: embedding must list 4 coordinates");
  const auto rot = alg.indices(Block::Rotation);
  const auto trans = alg.indices(Block::Translation);
  const auto odd = alg.indices(Parity::Odd);
  if (trans.size() != 10 || rot.size() != 45 || odd.size() != 16 || !alg.translation_metric())
    fail(ErrorKind::Precondition, "reduce_10_to_4 needs an algebra from build_susy_10d");
  std::set<size_t> distinct(embedding.begin(), embedding.end());
  if (distinct.size() != 4 || *distinct.rbegin() >= 10)
    fail(ErrorKind::InvalidArgument, "reduce_10_to_4: embedding indices must be 4 distinct values in [0, 10)");

  const Matrix& g = *alg.translation_metric();
  const size_t dim = alg.dim();
  Reduction10to4 out;

  // C^4 = span of the chosen coordinates, C^6 = its orthogonal complement.
  std::vector<Vector> c4;
  for (size_t e : embedding) c4.push_back(exact::unit_vector(10, e));
  Matrix rows(4, 10);
  for (size_t k = 0; k < 4; ++k) rows.set_block(k, 0, Matrix::from_rows({g.row_vector(embedding[k])}, 10));
  auto c6 = exact::kernel(rows).basis_vectors();
  std::vector<Vector> frame = c4;
  frame.insert(frame.end(), c6.begin(), c6.end());
  Matrix u = Matrix::from_columns(frame, 10);
  if (exact::rank(u) != 10) fail(ErrorKind::InvalidArgument, "reduce_10_to_4: chosen coordinates span a degenerate subspace");
  const Matrix uinv = exact::inverse(u);

  std::vector<Matrix> rot_action;
  for (size_t r : rot) rot_action.push_back(action_on_translations(alg, trans, alg.unit(r)));

  // Linear conditions on c in C^45 for Σ c_r A_r in the adapted frame.
  auto conditions = [&](bool off_diag, bool kill4, bool kill6) {
    std::vector<Vector> cols;
    for (const auto& a : rot_action) {
      Matrix ap = uinv * a * u;
      Vector col;
      for (size_t i = 0; i < 10; ++i)
        for (size_t j = 0; j < 10; ++j) {
          bool in4i = i < 4, in4j = j < 4;
          if ((in4i != in4j && off_diag) || (in4i && in4j && kill4) || (!in4i && !in4j && kill6)) col.push_back(ap(i, j));
        }
      cols.push_back(col);
    }
    return exact::kernel(Matrix::from_columns(cols, cols[0].size()));
  };
  auto to_alg = [&](const Subspace& s) {
    std::vector<Vector> vs;
    for (const auto& c : s.basis_vectors()) vs.push_back(embed(c, rot, dim));
    return vs;
  };
  const auto stab = to_alg(conditions(true, false, false));
  const auto so4 = to_alg(conditions(true, false, true));
  const auto so6 = to_alg(conditions(true, true, false));
  out.stabilizer_total = stab.size();
  out.stabilizer_so4 = so4.size();
  out.stabilizer_so6 = so6.size();
  out.translations = 4;

  std::vector<Vector> zgen = stab, bgen;
  for (size_t t : trans) zgen.push_back(alg.unit(t));
  for (size_t o : odd) zgen.push_back(alg.unit(o));
  for (const auto& v : c6) bgen.push_back(embed(v, trans, dim));
  const Subspace z = Subspace::span(zgen, dim), b = Subspace::span(bgen, dim);
  out.reduced = subquotient(alg, z, b, "reduce10to4(" + alg.name() + ")");

  // Hyperbolic frame p1..p4 of C^4 matching the 4d metric ε⊗ε.
  Matrix g4(4, 4);
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) g4(i, j) = g(embedding[i], embedding[j]);
  const auto ob = clifford::orthogonal_basis(g4).row_list();
  std::vector<Scalar> q;
  for (const auto& v : ob) q.push_back(exact::bilinear(v, g4, v));
  auto root = [](const Scalar& x) {
    auto s = x.sqrt();
    if (!s) fail(ErrorKind::Internal, "reduce_10_to_4: no square root of " + x.to_string() + " in Q(i)");
    return *s;
  };
  const Scalar s = root(-q[0] / q[1]), t = root(-q[2] / q[3]);
  std::vector<Vector> p4 = {
      exact::add(ob[0], exact::scale(ob[1], s)),
      exact::add(ob[2], exact::scale(ob[3], t)),
      exact::scale(exact::sub(ob[2], exact::scale(ob[3], t)), Scalar(-1) / (Scalar(2) * q[2])),
      exact::scale(exact::sub(ob[0], exact::scale(ob[1], s)), Scalar(1) / (Scalar(2) * q[0])),
  };
  std::vector<Vector> p10;
  for (const auto& v : p4) {
    Vector w(10);
    for (size_t k = 0; k < 4; ++k) w[embedding[k]] = v[k];
    p10.push_back(w);
  }

  out.target = build_susy_4d(4, RSym::SL);
  const SuperLieAlgebra& tgt = out.target;
  out.phi.assign(tgt.dim(), Vector(dim));

  const auto trans4 = tgt.indices(Block::Translation);
  for (size_t k = 0; k < 4; ++k) out.phi[trans4[k]] = embed(p10[k], trans, dim);

  // Rotations: transport the 4d action on C^4 through the p-frame, zero on C^6.
  std::vector<Vector> pframe = p10;
  pframe.insert(pframe.end(), c6.begin(), c6.end());
  const Matrix pm = Matrix::from_columns(pframe, 10), pminv = exact::inverse(pm);
  std::vector<Vector> rot_cols;
  for (const auto& a : rot_action) rot_cols.push_back(exact::flatten(a));
  const Matrix rot_system = Matrix::from_columns(rot_cols, 100);
  for (size_t r4 : tgt.indices(Block::Rotation)) {
    Matrix m4 = action_on_translations(tgt, trans4, tgt.unit(r4));
    Matrix local(10, 10);
    local.set_block(0, 0, m4);
    auto c = exact::solve(rot_system, exact::flatten(pm * local * pminv));
    if (!c) fail(ErrorKind::Internal, "reduce_10_to_4: 4d rotation does not lift to so(10)");
    out.phi[r4] = embed(*c, rot, dim);
  }
  const Vector hp = out.phi[tgt.index_of("H+")], hm = out.phi[tgt.index_of("H-")];
  const Matrix adp = restrict_ad(alg, hp, odd), adm = restrict_ad(alg, hm, odd);
  size_t counted = 0;
  for (int x = -2; x <= 2; ++x)
    for (int y = -2; y <= 2; ++y) {
      size_t d = joint_eigenspace(adp, adm, x, y).dim();
      if (d) out.odd_weights[{x, y}] = d;
      counted += d;
    }
  if (counted != odd.size()) out.failures.push_back("odd module is not diagonalized by (H+, H-) with small integer weights");
  auto weight_dim = [&](int x, int y) {
    auto it = out.odd_weights.find({x, y});
    return it == out.odd_weights.end() ? size_t{0} : it->second;
  };
  out.splus_multiplicity = weight_dim(1, 0);
  out.sminus_multiplicity = weight_dim(0, 1);
  out.trivial_multiplicity = weight_dim(0, 0);
  if (weight_dim(-1, 0) != out.splus_multiplicity || weight_dim(0, -1) != out.sminus_multiplicity)
    out.failures.push_back("S± weight lines have unequal multiplicities");

  // Supercharges: u_a spans weight (1,0), ξ_b in weight (0,1) dual under [u, ξ] = δ p1.
  auto uloc = joint_eigenspace(adp, adm, 1, 0).basis_vectors();
  auto yloc = joint_eigenspace(adp, adm, 0, 1).basis_vectors();
  if (uloc.size() != 4 || yloc.size() != 4) fail(ErrorKind::Internal, "reduce_10_to_4: weight spaces are not 4-dimensional");
  std::vector<Vector> uvec, yvec;
  for (const auto& v : uloc) uvec.push_back(embed(v, odd, dim));
  for (const auto& v : yloc) yvec.push_back(embed(v, odd, dim));
  const Vector p1 = out.phi[trans4[0]];
  const size_t p1_pivot = [&] {
    for (size_t k = 0; k < dim; ++k)
      if (!p1[k].is_zero()) return k;
    return dim;
  }();
  Matrix pair(4, 4);
  for (size_t a = 0; a < 4; ++a)
    for (size_t c = 0; c < 4; ++c) {
      Vector br = alg.bracket(uvec[a], yvec[c]);
      Scalar f = br[p1_pivot] / p1[p1_pivot];
      if (!exact::is_zero(exact::sub(br, exact::scale(p1, f))))
        out.failures.push_back("[u, ξ] leaves the ∂z̄1 line");
      pair(a, c) = f;
    }
  const Matrix n = exact::inverse(pair);
  std::vector<Vector> xi;
  for (size_t c = 0; c < 4; ++c) xi.push_back(combine(yvec, n.column(c), dim));

  const Vector fp = out.phi[tgt.index_of("F+")], fm = out.phi[tgt.index_of("F-")];
  const auto w = w_names(4);
  for (size_t a = 0; a < 4; ++a) {
    out.phi[tgt.index_of("α1⊗" + w[a])] = uvec[a];
    out.phi[tgt.index_of("α2⊗" + w[a])] = alg.bracket(fp, uvec[a]);
    out.phi[tgt.index_of("α1∨⊗" + w[a] + "*")] = xi[a];
    out.phi[tgt.index_of("α2∨⊗" + w[a] + "*")] = alg.bracket(fm, xi[a]);
  }

  // R-symmetry: so(6) combinations acting on the u-frame like the sl(4) generator.
  const Subspace uspan = Subspace::span(uvec, dim);
  std::vector<Vector> so6_cols;
  for (const auto& y : so6) {
    Matrix m(4, 4);
    for (size_t c = 0; c < 4; ++c) {
      Vector br = alg.bracket(y, uvec[c]);
      Vector coords = uspan.coordinates(br);
      for (size_t r = 0; r < 4; ++r) m(r, c) = coords[r];
    }
    so6_cols.push_back(exact::flatten(m));
  }
  const Matrix so6_system = Matrix::from_columns(so6_cols, 16);
  const size_t first_odd4 = tgt.index_of("α1⊗" + w[0]);
  for (size_t r4 : tgt.indices(Block::RSymmetry)) {
    Matrix m(4, 4);
    for (size_t c = 0; c < 4; ++c) {
      Vector br = tgt.bracket_basis(r4, tgt.unit(first_odd4 + c));
      for (size_t r = 0; r < 4; ++r) m(r, c) = br[first_odd4 + r];
    }
    auto c = exact::solve(so6_system, exact::flatten(m));
    if (!c) fail(ErrorKind::Internal, "reduce_10_to_4: R-symmetry generator has no so(6) preimage");
    out.phi[r4] = combine(so6, *c, dim);
  }

  // Bracket comparison modulo the transverse translations.
  bool all_ok = true, gamma_ok = true;
  for (size_t i = 0; i < tgt.dim(); ++i)
    for (size_t j = i; j < tgt.dim(); ++j) {
      Vector lhs(dim);
      for (const auto& [k, c] : tgt.bracket(i, j))
        lhs = exact::add(lhs, exact::scale(out.phi[k], c));
      Vector diff = exact::sub(lhs, alg.bracket(out.phi[i], out.phi[j]));
      if (b.contains(diff)) continue;
      all_ok = false;
      if (tgt.is_odd(i) && tgt.is_odd(j)) gamma_ok = false;
      if (out.failures.size() < 10)
        out.failures.push_back("[" + tgt.label(i).name + ", " + tgt.label(j).name + "] does not match");
    }
  out.brackets_match = all_ok;
  out.gamma_match = gamma_ok;

  std::vector<Vector> images = out.phi;
  bool inside = true;
  for (const auto& v : images) inside = inside && z.contains(v);
  images.insert(images.end(), bgen.begin(), bgen.end());
  out.bijective = inside && Subspace::span(images, dim).dim() == tgt.dim() + bgen.size() && z.dim() == tgt.dim() + bgen.size();
  return out;
}

Reduction4to2 reduce_4_to_2(const SuperLieAlgebra& alg) {
  const auto odd = alg.indices(Parity::Odd);
  for (const char* l : {"H+", "H-", "∂z̄1", "∂z̄2", "∂z1", "∂z2"})
    if (!alg.find(l)) fail(ErrorKind::InvalidArgument, "reduce_4_to_2 needs an algebra from build_susy_4d");
  if (odd.empty() || odd.size() % 4 != 0) fail(ErrorKind::InvalidArgument, "reduce_4_to_2 needs an algebra from build_susy_4d");
  const size_t k = odd.size() / 4, dim = alg.dim();
  const auto w = w_names(k);
  for (const auto& name : w)
    if (!alg.find("α1⊗" + name) || !alg.find("α2∨⊗" + name + "*"))
      fail(ErrorKind::InvalidArgument, "reduce_4_to_2 needs an algebra from build_susy_4d");

  Reduction4to2 out;
  out.k = k;
  const Vector hp = alg.element("H+"), hm = alg.element("H-");
  const Vector j1 = exact::add(hp, hm), j2 = exact::sub(hp, hm);
  std::vector<Vector> zgen = {j1, j2};
  for (size_t r : alg.indices(Block::RSymmetry)) zgen.push_back(alg.unit(r));
  for (size_t t : alg.indices(Block::Translation)) zgen.push_back(alg.unit(t));
  for (size_t o : odd) zgen.push_back(alg.unit(o));
  const Subspace z = Subspace::span(zgen, dim);
  const Subspace b = Subspace::span({alg.element("∂z̄2"), alg.element("∂z1")}, dim);
  out.reduced = subquotient(alg, z, b, "reduce4to2(" + alg.name() + ")");

  // Each odd basis vector is a joint eigenvector of (J1, J2).
  size_t plus = 0, minus = 0;
  for (size_t o : odd) {
    Vector x1 = alg.bracket(j1, alg.unit(o)), x2 = alg.bracket(j2, alg.unit(o));
    Scalar a = x1[o], c = x2[o];
    if (!exact::is_zero(exact::sub(x1, exact::scale(alg.unit(o), a))) || !exact::is_zero(exact::sub(x2, exact::scale(alg.unit(o), c))))
      fail(ErrorKind::Internal, "reduce_4_to_2: odd basis is not a weight basis");
    const std::string& name = alg.label(o).name;
    const std::string side = name.find("∨") == std::string::npos ? "S+" : "S-";
    out.weights[side][{static_cast<int>(a.re().get_d()), static_cast<int>(c.re().get_d())}] += 1;
    if (a == Scalar(1)) ++plus;
    if (a == Scalar(-1)) ++minus;
  }
  out.n = {plus, minus};

  // J2 commutes with J1, kills the surviving translations, and acts on odd with nonzero weights.
  bool so2 = exact::is_zero(alg.bracket(j2, j1));
  so2 = so2 && exact::is_zero(alg.bracket(j2, alg.element("∂z̄1"))) && exact::is_zero(alg.bracket(j2, alg.element("∂z2")));
  for (size_t r : alg.indices(Block::RSymmetry)) so2 = so2 && exact::is_zero(alg.bracket(j2, alg.unit(r)));
  for (size_t o : odd) so2 = so2 && !exact::is_zero(alg.bracket(j2, alg.unit(o)));
  out.transverse_so2_in_r = so2;

  out.target = build_susy_2d(static_cast<int>(2 * k), static_cast<int>(2 * k));
  const SuperLieAlgebra& tgt = out.target;
  std::vector<std::optional<Vector>> phi(tgt.dim());
  phi[tgt.index_of("J")] = j1;
  phi[tgt.index_of("∂+")] = alg.element("∂z̄1");
  phi[tgt.index_of("∂-")] = alg.element("∂z2");
  const Scalar half = Scalar(1) / Scalar(2), i = Scalar::i();
  for (size_t a = 0; a < k; ++a)
    for (int side = 1; side <= 2; ++side) {
      const std::string alpha = "α" + std::to_string(side);
      Vector x = alg.element(alpha + "⊗" + w[a]), y = alg.element(alpha + "∨⊗" + w[a] + "*");
      const std::string q = side == 1 ? "Q+" : "Q-";
      phi[tgt.index_of(q + std::to_string(a + 1))] = exact::add(x, exact::scale(y, half));
      phi[tgt.index_of(q + std::to_string(k + a + 1))] = exact::scale(exact::sub(x, exact::scale(y, half)), i);
    }

  bool ok = true;
  for (size_t p = 0; p < tgt.dim(); ++p) {
    if (!phi[p]) continue;
    out.matched_labels.push_back(tgt.label(p).name);
    for (size_t q = p; q < tgt.dim(); ++q) {
      if (!phi[q]) continue;
      Vector lhs(dim);
      bool defined = true;
      for (const auto& [m, c] : tgt.bracket(p, q)) {
        if (!phi[m]) {
          defined = false;
          break;
        }
        lhs = exact::add(lhs, exact::scale(*phi[m], c));
      }
      if (!defined || !b.contains(exact::sub(lhs, alg.bracket(*phi[p], *phi[q])))) {
        ok = false;
        if (out.failures.size() < 10)
          out.failures.push_back("[" + tgt.label(p).name + ", " + tgt.label(q).name + "] does not match");
      }
    }
  }
  out.poincare_match = ok;
  return out;
}

}  // namespace twistlab::superlie
