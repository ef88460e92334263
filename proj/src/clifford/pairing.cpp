#include "clifford/pairing.hpp"

namespace twistlab::clifford {

std::string to_string(Pattern p) {
  switch (p) {
    case Pattern::PlusPlus: return "++";
    case Pattern::PlusMinus: return "+-";
    case Pattern::MinusMinus: return "--";
    case Pattern::Dirac: return "dirac";
  }
  return "?";
}

Pattern parse_pattern(const std::string& s) {
  if (s == "++") return Pattern::PlusPlus;
  if (s == "+-") return Pattern::PlusMinus;
  if (s == "--") return Pattern::MinusMinus;
  if (s == "dirac") return Pattern::Dirac;
  fail(ErrorKind::InvalidArgument, "unknown chirality pattern '" + s + "'");
}

Matrix restrict(const Matrix& m, const std::vector<size_t>& rows, const std::vector<size_t>& cols) {
  Matrix r(rows.size(), cols.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) r(i, j) = m(rows[i], cols[j]);
  return r;
}

Vector PairingGamma::apply(const Vector& s, const Vector& t) const {
  Vector out(components.size());
  for (size_t a = 0; a < components.size(); ++a) out[a] = exact::dot(s, components[a] * t);
  return out;
}

namespace {

std::vector<size_t> all_indices(size_t n) {
  std::vector<size_t> v(n);
  for (size_t k = 0; k < n; ++k) v[k] = k;
  return v;
}

}  // namespace

PairingGamma build_pairing(const SpinorModel& model, Pattern pattern) {
  const size_t n = model.n();
  if (pattern != Pattern::Dirac && !model.even())
    fail(ErrorKind::Precondition, "chiral pairings need an even-dimensional model");
  std::vector<size_t> left, right;
  switch (pattern) {
    case Pattern::PlusPlus: left = right = model.plus_indices; break;
    case Pattern::MinusMinus: left = right = model.minus_indices; break;
    case Pattern::PlusMinus:
      left = model.plus_indices;
      right = model.minus_indices;
      break;
    case Pattern::Dirac: left = right = all_indices(model.spinor_dim); break;
  }
  const Matrix binv = exact::inverse(model.space.gram);
  for (int eps : {1, -1}) {
    std::vector<Matrix> transposed;
    for (const auto& g : model.gammas) transposed.push_back(g.transpose() * Scalar(eps));
    auto c = intertwiner(model.gammas, transposed, model.space.gram);
    if (!c) continue;
    // B(Gamma(s,t), v) = s^T rho(v)^T C t
    std::vector<Matrix> m;
    for (const auto& g : model.gammas) m.push_back(g.transpose() * *c);
    bool symmetric = true, nonzero = false;
    std::vector<Matrix> comps;
    for (size_t a = 0; a < n; ++a) {
      Matrix full(model.spinor_dim, model.spinor_dim);
      for (size_t b = 0; b < n; ++b)
        if (!binv(a, b).is_zero()) full += m[b] * binv(a, b);
      Matrix block = restrict(full, left, right);
      if (restrict(full, right, left) != block.transpose()) symmetric = false;
      if (!block.is_zero()) nonzero = true;
      comps.push_back(std::move(block));
    }
    if (!symmetric || !nonzero) continue;
    Scalar lead;
    for (const auto& comp : comps) {
      for (size_t i = 0; i < comp.rows() && lead.is_zero(); ++i)
        for (size_t j = 0; j < comp.cols() && lead.is_zero(); ++j) lead = comp(i, j);
      if (!lead.is_zero()) break;
    }
    Scalar inv = lead.inverse();
    for (auto& comp : comps) comp *= inv;
    PairingGamma g;
    g.pattern = pattern;
    g.left_indices = left;
    g.right_indices = right;
    g.components = std::move(comps);
    g.epsilon = eps;
    g.charge_conjugation = *c * inv;
    return g;
  }
  fail(ErrorKind::Precondition,
       "no symmetric pairing with pattern " + to_string(pattern) + " in dimension " + std::to_string(n));
}

PairingReport check_pairing(const SpinorModel& model, const PairingGamma& g) {
  PairingReport rep;
  const size_t n = model.n();
  if (g.left_indices == g.right_indices)
    for (const auto& c : g.components)
      if (c != c.transpose()) rep.symmetric = false;
  SoAction act = so_action(model);
  for (size_t x = 0; x < act.pairs.size(); ++x) {
    Matrix xl = restrict(act.spinor[x], g.left_indices, g.left_indices);
    Matrix xr = restrict(act.spinor[x], g.right_indices, g.right_indices);
    for (size_t a = 0; a < n; ++a) {
      Matrix lhs(g.components[a].rows(), g.components[a].cols());
      for (size_t b = 0; b < n; ++b)
        if (!act.vector[x](a, b).is_zero()) lhs += g.components[b] * act.vector[x](a, b);
      Matrix rhs = xl.transpose() * g.components[a] + g.components[a] * xr;
      if (lhs != rhs) rep.equivariant = false;
    }
  }
  // s -> (t, a) -> Gamma(s,t)^a must be injective, and likewise in t.
  const size_t nl = g.left_indices.size(), nr = g.right_indices.size();
  Matrix left_map(nr * n, nl), right_map(nl * n, nr);
  for (size_t a = 0; a < n; ++a)
    for (size_t i = 0; i < nl; ++i)
      for (size_t j = 0; j < nr; ++j) {
        left_map(a * nr + j, i) = g.components[a](i, j);
        right_map(a * nl + i, j) = g.components[a](i, j);
      }
  rep.nondegenerate = exact::rank(left_map) == nl && exact::rank(right_map) == nr;
  return rep;
}

}  // namespace twistlab::clifford
