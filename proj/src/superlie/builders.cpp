#include "superlie/builders.hpp"

namespace twistlab::superlie {

using exact::kron;

SuperLieAlgebra assemble(const AssemblyInput& in) {
  const size_t ne = in.even.size(), nv = in.translations.size(), no = in.odd.size();
  if (in.gamma.size() != nv) fail(ErrorKind::InvalidArgument, "assemble: one gamma matrix per translation");
  std::vector<BasisLabel> basis;
  for (const auto& g : in.even) basis.push_back(g.label);
  for (const auto& t : in.translations) basis.push_back(t);
  for (const auto& q : in.odd) basis.push_back(q);
  SuperLieAlgebra alg(in.name, basis);
  const size_t v0 = ne, o0 = ne + nv;

  // Faithful representation of the even part on V ⊕ Σ, flattened.
  std::vector<Vector> flat;
  for (const auto& g : in.even) {
    if (g.on_vector.rows() != nv || g.on_odd.rows() != no) fail(ErrorKind::InvalidArgument, "assemble: generator size mismatch");
    flat.push_back(exact::flatten(exact::direct_sum(g.on_vector, g.on_odd)));
  }
  const size_t len = (nv + no) * (nv + no);
  Matrix reps = Matrix::from_columns(flat, len);
  if (ne && exact::rank(reps) != ne) fail(ErrorKind::InvalidArgument, "assemble: even generators are not independent");
  // Pick rows that determine the coefficients.
  auto row_pivots = exact::rref(reps.transpose()).pivots;
  Matrix square(ne, ne);
  for (size_t r = 0; r < ne; ++r)
    for (size_t c = 0; c < ne; ++c) square(r, c) = reps(row_pivots[r], c);
  Matrix square_inv = ne ? exact::inverse(square) : Matrix();

  for (size_t i = 0; i < ne; ++i)
    for (size_t j = i + 1; j < ne; ++j) {
      Matrix cv = exact::commutator(in.even[i].on_vector, in.even[j].on_vector);
      Matrix co = exact::commutator(in.even[i].on_odd, in.even[j].on_odd);
      Vector target = exact::flatten(exact::direct_sum(cv, co));
      Vector rhs(ne);
      for (size_t r = 0; r < ne; ++r) rhs[r] = target[row_pivots[r]];
      Vector coeffs = square_inv * rhs;
      if (reps * coeffs != target)
        fail(ErrorKind::InvalidArgument, "assemble: even generators do not close under commutators");
      alg.set_bracket(i, j, to_sparse(coeffs));
    }
  for (size_t i = 0; i < ne; ++i) {
    for (size_t a = 0; a < nv; ++a) {
      SparseVec v;
      for (size_t b = 0; b < nv; ++b)
        if (!in.even[i].on_vector(b, a).is_zero()) v.emplace_back(v0 + b, in.even[i].on_vector(b, a));
      alg.set_bracket(i, v0 + a, v);
    }
    for (size_t a = 0; a < no; ++a) {
      SparseVec v;
      for (size_t b = 0; b < no; ++b)
        if (!in.even[i].on_odd(b, a).is_zero()) v.emplace_back(o0 + b, in.even[i].on_odd(b, a));
      alg.set_bracket(i, o0 + a, v);
    }
  }
  for (size_t p = 0; p < no; ++p)
    for (size_t q = p; q < no; ++q) {
      SparseVec v;
      for (size_t a = 0; a < nv; ++a)
        if (!in.gamma[a](p, q).is_zero()) v.emplace_back(v0 + a, in.gamma[a](p, q));
      alg.set_bracket(o0 + p, o0 + q, v);
    }
  if (in.metric) alg.set_translation_metric(*in.metric);
  return alg;
}

RSym parse_rsym(const std::string& s) {
  if (s == "gl") return RSym::GL;
  if (s == "sl") return RSym::SL;
  if (s == "trivial" || s == "none") return RSym::Trivial;
  fail(ErrorKind::InvalidArgument, "r-symmetry must be gl, sl or trivial");
}

std::string to_string(RSym r) {
  switch (r) {
    case RSym::GL: return "gl";
    case RSym::SL: return "sl";
    case RSym::Trivial: return "trivial";
  }
  return "?";
}

std::vector<std::string> w_names(size_t k) {
  if (k == 4) return {"e1", "e2", "f1", "f2"};
  std::vector<std::string> out;
  for (size_t a = 1; a <= k; ++a) out.push_back("w" + std::to_string(a));
  return out;
}

Matrix sl2_matrix(char which) {
  switch (which) {
    case 'H': return Matrix{{1, 0}, {0, -1}};
    case 'E': return Matrix{{0, 1}, {0, 0}};
    case 'F': return Matrix{{0, 0}, {1, 0}};
  }
  fail(ErrorKind::Internal, "unknown sl2 generator");
}

namespace {

BasisLabel even_label(const std::string& name, Block b, std::optional<int> w = std::nullopt) {
  return {name, Parity::Even, w, b};
}
BasisLabel odd_label(const std::string& name, std::optional<int> w = std::nullopt) {
  return {name, Parity::Odd, w, Block::Supercharge};
}

}  // namespace

SuperLieAlgebra build_susy_4d(int w_dim, RSym r) {
  if (w_dim < 1 || w_dim > 4) fail(ErrorKind::InvalidArgument, "build_susy_4d: W dimension must be in [1, 4]");
  const size_t k = static_cast<size_t>(w_dim);
  const auto w = w_names(k);
  const Matrix i2 = Matrix::identity(2), ik = Matrix::identity(k);
  const size_t no = 4 * k;

  AssemblyInput in;
  in.name = "susy4d(W=" + std::to_string(k) + "," + to_string(r) + ")";
  for (char side : {'+', '-'})
    for (char g : {'H', 'E', 'F'}) {
      Matrix x = sl2_matrix(g);
      EvenGenerator gen;
      gen.label = even_label(std::string(1, g) + side, Block::Rotation);
      gen.on_vector = side == '+' ? kron(x, i2) : kron(i2, x);
      gen.on_odd = Matrix(no, no);
      gen.on_odd.set_block(side == '+' ? 0 : 2 * k, side == '+' ? 0 : 2 * k, kron(x, ik));
      in.even.push_back(std::move(gen));
    }
  auto r_generator = [&](const std::string& name, const Matrix& m) {
    EvenGenerator gen;
    gen.label = even_label(name, Block::RSymmetry);
    gen.on_vector = Matrix(4, 4);
    gen.on_odd = exact::direct_sum(kron(i2, m), kron(i2, -m.transpose()));
    in.even.push_back(std::move(gen));
  };
  if (r != RSym::Trivial) {
    for (size_t a = 0; a < k; ++a)
      for (size_t b = 0; b < k; ++b) {
        if (a == b && r == RSym::SL) continue;
        r_generator("E[" + w[a] + "," + w[b] + "]", exact::unit_matrix(k, a, b));
      }
    if (r == RSym::SL)
      for (size_t a = 0; a + 1 < k; ++a)
        r_generator("h(" + w[a] + "," + w[a + 1] + ")", exact::unit_matrix(k, a, a) - exact::unit_matrix(k, a + 1, a + 1));
  }
  for (const char* t : {"∂z̄1", "∂z̄2", "∂z1", "∂z2"}) in.translations.push_back(even_label(t, Block::Translation));
  for (int i = 1; i <= 2; ++i)
    for (size_t a = 0; a < k; ++a) in.odd.push_back(odd_label("α" + std::to_string(i) + "⊗" + w[a]));
  for (int i = 1; i <= 2; ++i)
    for (size_t a = 0; a < k; ++a) in.odd.push_back(odd_label("α" + std::to_string(i) + "∨⊗" + w[a] + "*"));
  // [α_i⊗w_a, α_j∨⊗w_b*] = δ_ab α_i⊗α_j∨
  in.gamma.assign(4, Matrix(no, no));
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j)
      for (size_t a = 0; a < k; ++a) {
        size_t p = i * k + a, q = 2 * k + j * k + a;
        in.gamma[i * 2 + j](p, q) = 1;
        in.gamma[i * 2 + j](q, p) = 1;
      }
  Matrix eps{{0, 1}, {-1, 0}};
  in.metric = kron(eps, eps);
  return assemble(in);
}

SuperLieAlgebra build_susy_2d(int n1, int n2) {
  if (n1 < 0 || n2 < 0 || n1 > 16 || n2 > 16) fail(ErrorKind::InvalidArgument, "build_susy_2d: N1, N2 must be in [0, 16]");
  if (n1 == 0 && n2 == 0) fail(ErrorKind::InvalidArgument, "build_susy_2d: N1 and N2 cannot both be zero");
  const size_t a = static_cast<size_t>(n1), b = static_cast<size_t>(n2), no = a + b;
  AssemblyInput in;
  in.name = "susy2d(" + std::to_string(n1) + "," + std::to_string(n2) + ")";
  EvenGenerator j;
  j.label = even_label("J", Block::Rotation, 0);
  j.on_vector = Matrix::diagonal({2, -2});
  Vector d;
  for (size_t k = 0; k < a; ++k) d.push_back(1);
  for (size_t k = 0; k < b; ++k) d.push_back(-1);
  j.on_odd = Matrix::diagonal(d);
  in.even.push_back(std::move(j));
  auto add_so = [&](size_t offset, size_t n, const std::string& tag) {
    for (size_t p = 0; p < n; ++p)
      for (size_t q = p + 1; q < n; ++q) {
        EvenGenerator g;
        g.label = even_label("R" + tag + "[" + std::to_string(p + 1) + "," + std::to_string(q + 1) + "]", Block::RSymmetry, 0);
        g.on_vector = Matrix(2, 2);
        g.on_odd = Matrix(no, no);
        g.on_odd(offset + p, offset + q) = 1;
        g.on_odd(offset + q, offset + p) = -1;
        in.even.push_back(std::move(g));
      }
  };
  add_so(0, a, "+");
  add_so(a, b, "-");
  in.translations = {even_label("∂+", Block::Translation, 2), even_label("∂-", Block::Translation, -2)};
  for (size_t k = 0; k < a; ++k) in.odd.push_back(odd_label("Q+" + std::to_string(k + 1), 1));
  for (size_t k = 0; k < b; ++k) in.odd.push_back(odd_label("Q-" + std::to_string(k + 1), -1));
  in.gamma.assign(2, Matrix(no, no));
  for (size_t k = 0; k < a; ++k) in.gamma[0](k, k) = 1;
  for (size_t k = 0; k < b; ++k) in.gamma[1](a + k, a + k) = 1;
  in.metric = Matrix{{0, 1}, {1, 0}};
  return assemble(in);
}

SuperLieAlgebra build_susy_10d(const clifford::SpinorModel& model) {
  if (model.n() != 10 || !model.even()) fail(ErrorKind::Precondition, "build_susy_10d needs a 10-dimensional spinor model");
  clifford::PairingGamma g = clifford::build_pairing(model, clifford::Pattern::PlusPlus);
  clifford::SoAction act = clifford::so_action(model);
  const auto& labels = model.space.labels;
  AssemblyInput in;
  in.name = "susy10d(" + model.name + ")";
  for (size_t x = 0; x < act.pairs.size(); ++x) {
    auto [a, b] = act.pairs[x];
    EvenGenerator gen;
    gen.label = even_label("M[" + labels[a] + "," + labels[b] + "]", Block::Rotation);
    gen.on_vector = act.vector[x];
    gen.on_odd = clifford::restrict(act.spinor[x], model.plus_indices, model.plus_indices);
    in.even.push_back(std::move(gen));
  }
  for (const auto& l : labels) in.translations.push_back(even_label("P[" + l + "]", Block::Translation));
  for (size_t k = 0; k < model.plus_indices.size(); ++k) in.odd.push_back(odd_label("s" + std::to_string(k + 1)));
  in.gamma = g.components;
  in.metric = model.space.gram;
  return assemble(in);
}

}  // namespace twistlab::superlie
