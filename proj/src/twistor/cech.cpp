#include "twistor/cech.hpp"

#include "clifford/pairing.hpp"

#include <algorithm>

namespace twistlab::twistor {

size_t CechTerm::u0_size() const { return hi >= 0 ? static_cast<size_t>(hi + 1) : 0; }

size_t CechTerm::u1_size() const { return k >= lo ? static_cast<size_t>(k - lo + 1) : 0; }

namespace {

// Column index of (component, m) in C^0, split as all U0 blocks then all U1 blocks.
size_t c0_u0(const CechTerm& t, size_t comp, long m) { return comp * t.u0_size() + static_cast<size_t>(m); }
size_t c0_u1(const CechTerm& t, size_t comp, long m) {
  return t.rank * t.u0_size() + comp * t.u1_size() + static_cast<size_t>(m - t.lo);
}
size_t c1_index(const CechTerm& t, size_t comp, long m) {
  return comp * static_cast<size_t>(t.hi - t.lo + 1) + static_cast<size_t>(m - t.lo);
}

void check_forms(const CechTerm& from, const CechTerm& to, const std::vector<std::vector<LinearForm>>& forms) {
  if (to.k != from.k + 1) fail(ErrorKind::InvalidArgument, "linear forms raise the twist by one");
  if (forms.size() != to.rank) fail(ErrorKind::InvalidArgument, "form matrix has the wrong number of rows");
  for (const auto& row : forms)
    if (row.size() != from.rank) fail(ErrorKind::InvalidArgument, "form matrix has the wrong number of columns");
  if (to.lo > from.lo || to.hi < from.hi + 1) fail(ErrorKind::InvalidArgument, "target truncation window too small");
}

}  // namespace

Matrix CechTerm::delta() const {
  Matrix d(c1_dim(), c0_dim());
  for (size_t c = 0; c < rank; ++c) {
    for (long m = 0; m <= hi; ++m) d(c1_index(*this, c, m), c0_u0(*this, c, m)) = -1;
    for (long m = lo; m <= k; ++m) d(c1_index(*this, c, m), c0_u1(*this, c, m)) = 1;
  }
  return d;
}

HDims CechTerm::cohomology() const {
  const size_t r = exact::rank(delta());
  return {c0_dim() - r, c1_dim() - r};
}

Matrix multiply_c0(const CechTerm& from, const CechTerm& to, const std::vector<std::vector<LinearForm>>& forms) {
  check_forms(from, to, forms);
  Matrix out(to.c0_dim(), from.c0_dim());
  for (size_t r = 0; r < to.rank; ++r)
    for (size_t c = 0; c < from.rank; ++c) {
      const LinearForm& f = forms[r][c];
      // Z2 keeps m, Z3 raises it; both stay inside each chart's window.
      for (long m = 0; m <= from.hi; ++m) {
        if (!f.z2.is_zero()) out(c0_u0(to, r, m), c0_u0(from, c, m)) += f.z2;
        if (!f.z3.is_zero()) out(c0_u0(to, r, m + 1), c0_u0(from, c, m)) += f.z3;
      }
      for (long m = from.lo; m <= from.k; ++m) {
        if (!f.z2.is_zero()) out(c0_u1(to, r, m), c0_u1(from, c, m)) += f.z2;
        if (!f.z3.is_zero()) out(c0_u1(to, r, m + 1), c0_u1(from, c, m)) += f.z3;
      }
    }
  return out;
}

Matrix multiply_c1(const CechTerm& from, const CechTerm& to, const std::vector<std::vector<LinearForm>>& forms) {
  check_forms(from, to, forms);
  Matrix out(to.c1_dim(), from.c1_dim());
  for (size_t r = 0; r < to.rank; ++r)
    for (size_t c = 0; c < from.rank; ++c) {
      const LinearForm& f = forms[r][c];
      for (long m = from.lo; m <= from.hi; ++m) {
        if (!f.z2.is_zero()) out(c1_index(to, r, m), c1_index(from, c, m)) += f.z2;
        if (!f.z3.is_zero()) out(c1_index(to, r, m + 1), c1_index(from, c, m)) += f.z3;
      }
    }
  return out;
}

bool cech_self_check(long truncation) {
  for (long k = -(truncation - 2); k <= truncation - 2; ++k) {
    HDims h = CechTerm{k, 1, -truncation, truncation}.cohomology(), e = h_dims(k);
    if (h.h0 != e.h0 || h.h1 != e.h1) return false;
  }
  return true;
}

KoszulReport koszul_exactness_check(long degree_bound) {
  if (degree_bound < 2) fail(ErrorKind::InvalidArgument, "koszul_exactness_check needs degree_bound >= 2");
  auto rdim = [](long n) { return n >= 0 ? static_cast<size_t>(n + 1) : size_t{0}; };
  KoszulReport rep;
  rep.ok = true;
  for (long d = 0; d <= degree_bound; ++d) {
    KoszulDegree g;
    g.degree = d;
    const size_t a = rdim(d - 2), b1 = rdim(d - 1), c = rdim(d);
    g.dims = {a, 2 * b1, c};
    // Monomial Z2^{n-m} Z3^m has index m. Z2 keeps m, Z3 raises it.
    Matrix first(2 * b1, a), second(c, 2 * b1);
    for (size_t m = 0; m < a; ++m) {
      first(m, m) = 1;            // t1: Z2 f
      first(b1 + m + 1, m) = 1;   // t2: Z3 f
    }
    for (size_t m = 0; m < b1; ++m) {
      second(m + 1, m) = -1;      // −Z3 g1
      second(m, b1 + m) = 1;      // +Z2 g2
    }
    g.rank_first = exact::rank(first);
    g.rank_second = exact::rank(second);
    g.composition_zero = (second * first).is_zero();
    g.cokernel = c - g.rank_second;
    g.exact = g.rank_first == a && g.rank_first + g.rank_second == 2 * b1 && g.cokernel == 0;
    g.euler = static_cast<long>(a) - static_cast<long>(2 * b1) + static_cast<long>(c);
    const bool expected = d == 0 ? (g.cokernel == 1 && g.rank_first == a && g.rank_first + g.rank_second == 2 * b1)
                                 : (g.exact && g.euler == 0);
    rep.ok = rep.ok && g.composition_zero && expected;
    rep.degrees.push_back(g);
  }
  return rep;
}

LaplacianReport e2_laplacian_check(long truncation) {
  if (truncation < 4) fail(ErrorKind::InvalidArgument, "e2_laplacian_check needs truncation >= 4");
  const long n = truncation;
  const CechTerm t0{-2, 1, -n, n}, t1{-1, 2, -n, n + 1}, t2{0, 1, -n, n + 2};
  LaplacianReport rep;
  rep.truncation = n;
  rep.model_stable = cech_self_check(n) && t0.cohomology().h1 == 1 && t1.cohomology().h0 == 0 &&
                     t1.cohomology().h1 == 0 && t2.cohomology().h0 == 1;

  // x^i ∈ V ≅ S+ ⊗ S- ≅ H^0(O(1) ⊗ S-), with s1, s2 ↦ Z2, Z3.
  const auto model = clifford::build_gamma(4);
  const auto gamma = clifford::build_pairing(model, clifford::Pattern::PlusMinus);
  std::vector<std::array<LinearForm, 2>> x;
  for (size_t i = 0; i < 4; ++i) {
    Matrix c = vector_to_spinor_bilinear(model, gamma, exact::unit_vector(4, i));
    x.push_back({LinearForm{c(0, 0), c(1, 0)}, LinearForm{c(0, 1), c(1, 1)}});
  }

  Vector cls(t0.c1_dim());
  cls[static_cast<size_t>(-1 - t0.lo)] = 1;  // Z2^{-1} Z3^{-1} spans H^1(O(-2))
  const Matrix d1 = t1.delta(), d2 = t2.delta();
  std::vector<Vector> b;
  for (size_t j = 0; j < 4; ++j) {
    Matrix up = multiply_c1(t0, t1, {{x[j][0]}, {x[j][1]}});
    auto sol = exact::solve(d1, up * cls);
    if (!sol) fail(ErrorKind::Internal, "e2_laplacian_check: x^j·c is not a Čech coboundary");
    b.push_back(*sol);
  }
  std::vector<Matrix> wedge;
  for (size_t i = 0; i < 4; ++i) {
    LinearForm minus{-x[i][1].z2, -x[i][1].z3};
    wedge.push_back(multiply_c0(t1, t2, {{minus, x[i][0]}}));
  }
  // Global constant section of O: m = 0 on both charts.
  Vector one(t2.c0_dim());
  one[c0_u0(t2, 0, 0)] = 1;
  one[c0_u1(t2, 0, 0)] = 1;
  auto constant_value = [&](const Vector& s) -> std::optional<Scalar> {
    if (!exact::is_zero(d2 * s)) return std::nullopt;
    Scalar v = s[c0_u0(t2, 0, 0)];
    if (exact::scale(one, v) != s) return std::nullopt;
    return v;
  };

  rep.induced = Matrix(4, 4);
  bool all_defined = true;
  const Scalar half = Scalar(1, 2);
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) {
      Vector s = exact::scale(exact::add(wedge[i] * b[j], wedge[j] * b[i]), half);
      auto v = constant_value(s);
      if (!v) {
        all_defined = false;
        continue;
      }
      rep.induced(i, j) = *v;
      if (i == j) rep.diagonal.push_back(*constant_value(wedge[i] * b[i]));
    }
  if (all_defined && !rep.induced(0, 0).is_zero() && rep.induced == rep.induced(0, 0) * Matrix::identity(4))
    rep.scalar = rep.induced(0, 0);
  return rep;
}

}  // namespace twistlab::twistor
