#include "clifford/spinor_model.hpp"

#include "clifford/octonion.hpp"

namespace twistlab::clifford {

using exact::kron;

namespace {

const Scalar I = Scalar::i();

Matrix sigma(int k) {
  switch (k) {
    case 1: return Matrix{{0, 1}, {1, 0}};
    case 2: return Matrix{{0, -I}, {I, 0}};
    default: return Matrix{{1, 0}, {0, -1}};
  }
}

Matrix tensor_power_sigma3(size_t k) {
  Matrix m = Matrix::identity(1);
  for (size_t j = 0; j < k; ++j) m = kron(m, sigma(3));
  return m;
}

void set_weyl(SpinorModel& m) {
  const Matrix& g = *m.chirality;
  std::vector<Vector> plus, minus;
  for (size_t k = 0; k < m.spinor_dim; ++k) {
    for (size_t j = 0; j < m.spinor_dim; ++j)
      if (j != k && !g(k, j).is_zero()) fail(ErrorKind::Internal, "chirality is not diagonal");
    if (g(k, k) == Scalar(1)) {
      m.plus_indices.push_back(k);
      plus.push_back(exact::unit_vector(m.spinor_dim, k));
    } else if (g(k, k) == Scalar(-1)) {
      m.minus_indices.push_back(k);
      minus.push_back(exact::unit_vector(m.spinor_dim, k));
    } else {
      fail(ErrorKind::Internal, "chirality eigenvalue is not +-1");
    }
  }
  m.weyl_plus = Subspace::span(plus, m.spinor_dim);
  m.weyl_minus = Subspace::span(minus, m.spinor_dim);
}

}  // namespace

Matrix SpinorModel::rho(const Vector& v) const {
  if (v.size() != gammas.size()) fail(ErrorKind::InvalidArgument, "vector has wrong dimension for this model");
  Matrix r(spinor_dim, spinor_dim);
  for (size_t a = 0; a < v.size(); ++a)
    if (!v[a].is_zero()) r += gammas[a] * v[a];
  return r;
}

SpinorModel build_gamma(int n) {
  if (n < 2 || n > 10) fail(ErrorKind::InvalidArgument, "build_gamma: n must be in [2, 10]");
  const size_t m = static_cast<size_t>(n) / 2;
  SpinorModel model;
  model.name = "generic-" + std::to_string(n);
  model.space.dim = n;
  model.space.gram = Matrix::identity(n);
  for (int a = 1; a <= n; ++a) model.space.labels.push_back("e" + std::to_string(a));
  model.spinor_dim = size_t{1} << m;
  for (size_t k = 0; k < m; ++k) {
    Matrix tail = Matrix::identity(size_t{1} << (m - k - 1));
    model.gammas.push_back(kron(kron(tensor_power_sigma3(k), sigma(1)), tail));
    model.gammas.push_back(kron(kron(tensor_power_sigma3(k), sigma(2)), tail));
  }
  Matrix chi = Matrix::identity(model.spinor_dim);
  for (size_t a = 0; a < 2 * m; ++a) chi = chi * model.gammas[a];
  Scalar phase = 1;
  for (size_t k = 0; k < m; ++k) phase *= I;
  chi *= phase;
  if (n % 2 == 1) {
    model.gammas.push_back(chi);
  } else {
    model.chirality = chi;
    set_weyl(model);
  }
  return model;
}

SpinorModel build_octonionic_cl10() {
  SpinorModel model;
  model.name = "octonionic-10";
  model.space.dim = 10;
  model.space.gram = Matrix(10, 10);
  for (size_t k = 0; k < 8; ++k) model.space.gram(k, k) = 1;
  model.space.gram(8, 9) = model.space.gram(9, 8) = Scalar(-1, 2);
  model.space.labels = {"1", "e1", "e2", "e3", "e4", "e5", "e6", "e7", "e", "f"};
  model.spinor_dim = 32;

  const Matrix id8 = Matrix::identity(8);
  auto assemble = [](const Matrix& x, const Matrix& xt) {
    // rho(v)(s+, s-) = (xt s-, x s+)
    Matrix r(32, 32);
    r.set_block(0, 16, xt);
    r.set_block(16, 0, x);
    return r;
  };
  for (size_t k = 0; k < 8; ++k) {
    Octonion w = Octonion::unit(k);
    Matrix l = left_mult(w), lb = left_mult(w.conj());
    Matrix x(16, 16);
    x.set_block(0, 8, l);
    x.set_block(8, 0, lb);
    model.gammas.push_back(assemble(x, x));
  }
  {
    Matrix x(16, 16), xt(16, 16);
    x.set_block(0, 0, id8);
    xt.set_block(8, 8, -id8);
    model.gammas.push_back(assemble(x, xt));  // e: a = 1
  }
  {
    Matrix x(16, 16), xt(16, 16);
    x.set_block(8, 8, id8);
    xt.set_block(0, 0, -id8);
    model.gammas.push_back(assemble(x, xt));  // f: b = 1
  }
  Matrix chi(32, 32);
  for (size_t k = 0; k < 32; ++k) chi(k, k) = k < 16 ? 1 : -1;
  model.chirality = chi;
  set_weyl(model);
  return model;
}

CliffordReport check_model(const SpinorModel& model) {
  CliffordReport rep;
  const size_t n = model.n();
  const Matrix id = Matrix::identity(model.spinor_dim);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a; b < n; ++b) {
      Matrix lhs = exact::anticommutator(model.gammas[a], model.gammas[b]);
      if (lhs != id * (Scalar(2) * model.space.gram(a, b))) {
        rep.clifford_relation = false;
        rep.failures.push_back("clifford relation fails for (" + model.space.labels[a] + "," + model.space.labels[b] + ")");
      }
    }
  if (model.chirality) {
    const Matrix& g = *model.chirality;
    if (g * g != id) {
      rep.chirality_ok = false;
      rep.failures.push_back("chirality does not square to 1");
    }
    for (size_t a = 0; a < n; ++a)
      if (!exact::anticommutator(g, model.gammas[a]).is_zero()) {
        rep.chirality_ok = false;
        rep.failures.push_back("chirality does not anticommute with " + model.space.labels[a]);
      }
    const size_t expected = size_t{1} << (n / 2 - 1);
    if (model.weyl_plus.dim() != expected || model.weyl_minus.dim() != expected) {
      rep.weyl_dims_ok = false;
      rep.failures.push_back("Weyl dimensions differ from 2^(n/2-1)");
    }
  }
  return rep;
}

SoAction so_action(const SpinorModel& model) {
  SoAction act;
  const size_t n = model.n();
  const Matrix& g = model.space.gram;
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b) {
      act.pairs.emplace_back(a, b);
      act.spinor.push_back(exact::commutator(model.gammas[a], model.gammas[b]) * Scalar(1, 4));
      Matrix v(n, n);
      for (size_t c = 0; c < n; ++c) {
        v(a, c) += g(b, c);
        v(b, c) -= g(a, c);
      }
      act.vector.push_back(v);
    }
  return act;
}

size_t purity_nullspace(const SpinorModel& model, const Vector& q) {
  if (q.size() != model.spinor_dim) fail(ErrorKind::InvalidArgument, "spinor has wrong dimension");
  if (exact::is_zero(q)) fail(ErrorKind::Precondition, "purity test needs a nonzero spinor");
  if (!model.even() || !(model.weyl_plus.contains(q) || model.weyl_minus.contains(q)))
    fail(ErrorKind::Precondition, "purity test needs a Weyl spinor");
  std::vector<Vector> cols;
  for (const auto& g : model.gammas) cols.push_back(g * q);
  return model.n() - exact::rank(Matrix::from_columns(cols, model.spinor_dim));
}

Matrix orthogonal_basis(const Matrix& gram) {
  const size_t n = gram.rows();
  std::vector<Vector> pending;
  for (size_t k = 0; k < n; ++k) pending.push_back(exact::unit_vector(n, k));
  std::vector<Vector> out;
  while (!pending.empty()) {
    size_t pick = pending.size();
    for (size_t k = 0; k < pending.size(); ++k)
      if (!exact::bilinear(pending[k], gram, pending[k]).is_zero()) {
        pick = k;
        break;
      }
    if (pick == pending.size()) {
      for (size_t k = 1; k < pending.size() && pick == pending.size(); ++k)
        if (!exact::bilinear(pending[0], gram, pending[k]).is_zero()) {
          pending[0] = exact::add(pending[0], pending[k]);
          pick = 0;
        }
      if (pick == pending.size()) fail(ErrorKind::InvalidArgument, "quadratic form is degenerate");
    }
    Vector u = pending[pick];
    pending.erase(pending.begin() + static_cast<long>(pick));
    Scalar q = exact::bilinear(u, gram, u);
    for (auto& w : pending) {
      Scalar c = exact::bilinear(w, gram, u) / q;
      if (!c.is_zero()) w = exact::sub(w, exact::scale(u, c));
    }
    out.push_back(std::move(u));
  }
  return Matrix::from_rows(out, n);
}

namespace {

Matrix combine(const std::vector<Matrix>& rho, const Vector& coeffs) {
  Matrix r(rho[0].rows(), rho[0].cols());
  for (size_t a = 0; a < rho.size(); ++a)
    if (!coeffs[a].is_zero()) r += rho[a] * coeffs[a];
  return r;
}

struct WeightFrame {
  Matrix basis;                  // columns: monomials in the odd frame vectors applied to v0
  std::optional<Scalar> central;  // odd n: scalar of the unpaired frame vector on v0
};

WeightFrame weight_frame(const std::vector<Matrix>& rho, const Matrix& frame, const std::vector<Scalar>& lambdas) {
  const size_t n = rho.size(), dim = rho[0].rows(), m = n / 2;
  std::vector<Matrix> r;
  for (size_t k = 0; k < n; ++k) r.push_back(combine(rho, frame.row_vector(k)));
  Matrix stacked(m * dim, dim);
  for (size_t k = 0; k < m; ++k) {
    Matrix h = r[2 * k] * r[2 * k + 1] - Matrix::identity(dim) * lambdas[k];
    stacked.set_block(k * dim, 0, h);
  }
  auto joint = exact::kernel(stacked);
  if (joint.dim() != 1) fail(ErrorKind::Internal, "Clifford module is not irreducible");
  Vector v0 = joint.basis_vectors()[0];
  WeightFrame wf;
  if (n % 2 == 1) {
    Vector w = r[n - 1] * v0;
    size_t p = 0;
    while (v0[p].is_zero()) ++p;
    Scalar c = w[p] / v0[p];
    if (w != exact::scale(v0, c)) fail(ErrorKind::Internal, "central element does not act by a scalar");
    wf.central = c;
  }
  std::vector<Vector> cols;
  for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
    Vector b = v0;
    for (size_t k = m; k-- > 0;)
      if (mask & (size_t{1} << k)) b = r[2 * k] * b;
    cols.push_back(std::move(b));
  }
  wf.basis = Matrix::from_columns(cols, dim);
  return wf;
}

}  // namespace

std::optional<Matrix> intertwiner(const std::vector<Matrix>& rho, const std::vector<Matrix>& rho2, const Matrix& gram) {
  const size_t n = rho.size();
  if (n == 0 || rho2.size() != n || gram.rows() != n) fail(ErrorKind::InvalidArgument, "intertwiner: size mismatch");
  const size_t dim = rho[0].rows();
  if (rho2[0].rows() != dim) return std::nullopt;
  Matrix frame = orthogonal_basis(gram);
  std::vector<Scalar> lambdas;
  for (size_t k = 0; k + 1 < n; k += 2) {
    Scalar q1 = exact::bilinear(frame.row_vector(k), gram, frame.row_vector(k));
    Scalar q2 = exact::bilinear(frame.row_vector(k + 1), gram, frame.row_vector(k + 1));
    auto l = (-(q1 * q2)).sqrt();
    if (!l) fail(ErrorKind::Internal, "frame eigenvalue is not in Q(i)");
    lambdas.push_back(*l);
  }
  WeightFrame a = weight_frame(rho, frame, lambdas);
  WeightFrame b = weight_frame(rho2, frame, lambdas);
  if (a.central != b.central) return std::nullopt;
  if (exact::rank(a.basis) != dim) return std::nullopt;
  Matrix t = b.basis * exact::inverse(a.basis);
  for (size_t k = 0; k < n; ++k)
    if (t * rho[k] != rho2[k] * t) return std::nullopt;
  return t;
}

Matrix octonionic_isometry() {
  Matrix phi(10, 10);
  for (size_t k = 0; k < 8; ++k) phi(k, k) = 1;
  phi(8, 8) = 1;
  phi(9, 8) = -1;
  phi(8, 9) = I;
  phi(9, 9) = I;
  return phi;
}

Matrix generic_to_octonionic_intertwiner(const SpinorModel& generic, const SpinorModel& octonionic) {
  Matrix phi = octonionic_isometry();
  if (phi.transpose() * octonionic.space.gram * phi != generic.space.gram)
    fail(ErrorKind::Internal, "octonionic embedding is not an isometry");
  std::vector<Matrix> pulled;
  for (size_t a = 0; a < 10; ++a) pulled.push_back(octonionic.rho(phi.column(a)));
  auto t = intertwiner(generic.gammas, pulled, generic.space.gram);
  if (!t) fail(ErrorKind::Internal, "no intertwiner between the generic and octonionic models");
  return *t;
}

}  // namespace twistlab::clifford
