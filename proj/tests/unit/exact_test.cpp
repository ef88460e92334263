#include "exact/json_io.hpp"
#include "exact/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace twistlab;
using namespace twistlab::exact;

namespace {

Scalar gr(const char* s) { return Scalar::parse(s); }
const Scalar I = Scalar::i();

Scalar random_scalar(std::mt19937& rng, int bound = 5) {
  std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
  return Scalar(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
}

Matrix random_matrix(std::mt19937& rng, size_t r, size_t c, int density = 2) {
  Matrix m(r, c);
  std::uniform_int_distribution<int> pick(0, density);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j)
      if (pick(rng) == 0) m(i, j) = random_scalar(rng);
  return m;
}

}  // namespace

TEST(GaussianRational, CanonicalStrings) {
  EXPECT_EQ(Scalar().to_string(), "0");
  EXPECT_EQ(Scalar(-3, 2).to_string(), "-3/2");
  EXPECT_EQ((Scalar(1, 2) * I).to_string(), "1/2*i");
  EXPECT_EQ((Scalar(1) - Scalar(2, 3) * I).to_string(), "1-2/3*i");
  EXPECT_EQ(Scalar(4, 6).to_string(), "2/3");
  EXPECT_EQ(Scalar(3, -6).to_string(), "-1/2");
}

TEST(GaussianRational, ParseRoundTrip) {
  for (const char* s : {"0", "-3/2", "1/2*i", "1-2/3*i", "-7/5+1/3*i", "12*i"}) EXPECT_EQ(gr(s).to_string(), s);
  EXPECT_EQ(gr("-i"), -I);
  EXPECT_EQ(gr(" (1 + 2*i) "), Scalar(1) + Scalar(2) * I);
  EXPECT_EQ(gr("2i"), Scalar(2) * I);
  EXPECT_EQ(gr("i"), I);
  EXPECT_EQ(gr("3/2*i"), Scalar(3, 2) * I);
  EXPECT_THROW(gr(""), Error);
  EXPECT_THROW(gr("1/0"), Error);
  EXPECT_THROW(gr("1//2"), Error);
  EXPECT_THROW(gr("x"), Error);
}

TEST(GaussianRational, FieldAxiomsRandom) {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a * b, b * a);
    if (!a.is_zero() && !b.is_zero()) {
      EXPECT_TRUE(((a / b) * (b / a)).is_one());
      EXPECT_TRUE((a * a.inverse()).is_one());
    }
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
  }
  EXPECT_EQ(I * I, Scalar(-1));
  EXPECT_THROW(Scalar(1) / Scalar(0), Error);
}

TEST(GaussianRational, Sqrt) {
  EXPECT_EQ(*Scalar(-1).sqrt(), I);
  EXPECT_EQ(*Scalar(9, 4).sqrt(), Scalar(3, 2));
  EXPECT_EQ(*(Scalar(2) * I).sqrt(), Scalar(1) + I);
  EXPECT_FALSE(Scalar(2).sqrt().has_value());
  EXPECT_TRUE(Scalar(0).sqrt()->is_zero());
}

TEST(Rref, Examples) {
  auto r = rref(Matrix::identity(2));
  EXPECT_EQ(r.matrix, Matrix::identity(2));
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.pivots, (std::vector<size_t>{0, 1}));

  auto z = rref(Matrix(3, 4));
  EXPECT_EQ(z.matrix, Matrix(3, 4));
  EXPECT_EQ(z.rank, 0u);
  EXPECT_TRUE(z.pivots.empty());

  Matrix m{{1, I}, {I, -1}};
  auto s = rref(m);
  EXPECT_EQ(s.matrix, (Matrix{{1, I}, {0, 0}}));
  EXPECT_EQ(s.rank, 1u);
  EXPECT_EQ(s.pivots, (std::vector<size_t>{0}));
}

TEST(Rref, DegenerateShapes) {
  auto r = rref(Matrix(0, 5));
  EXPECT_EQ(r.rank, 0u);
  EXPECT_EQ(r.matrix.cols(), 5u);
  EXPECT_EQ(kernel(Matrix(0, 3)).dim(), 3u);
  EXPECT_EQ(image(Matrix(0, 3)).dim(), 0u);
  EXPECT_EQ(kernel(Matrix(2, 0)).dim(), 0u);
}

TEST(Rref, IdempotentRandom) {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    Matrix m = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6);
    auto once = rref(m);
    auto twice = rref(once.matrix);
    EXPECT_EQ(once.matrix, twice.matrix);
    EXPECT_EQ(once.rank, twice.rank);
  }
}

TEST(KernelImage, Examples) {
  auto z = kernel_image(Matrix(2, 3));
  EXPECT_EQ(z.kernel.dim(), 3u);
  EXPECT_EQ(z.image.dim(), 0u);
  auto id = kernel_image(Matrix::identity(4));
  EXPECT_EQ(id.kernel.dim(), 0u);
  EXPECT_EQ(id.image.dim(), 4u);
  auto u = kernel_image(Matrix{{Scalar(1) + I}});
  EXPECT_EQ(u.kernel.dim(), 0u);
  EXPECT_EQ(u.image.dim(), 1u);
}

TEST(KernelImage, RankNullityAndKernelIsKernel) {
  std::mt19937 rng(3);
  for (int t = 0; t < 40; ++t) {
    Matrix m = random_matrix(rng, 1 + rng() % 7, 1 + rng() % 7);
    auto ki = kernel_image(m);
    EXPECT_EQ(ki.kernel.dim() + ki.image.dim(), m.cols());
    for (const auto& v : ki.kernel.basis_vectors()) EXPECT_TRUE(is_zero(m * v));
    for (size_t c = 0; c < m.cols(); ++c) EXPECT_TRUE(ki.image.contains(m.column(c)));
  }
}

TEST(Subspace, Ops) {
  Subspace a = Subspace::span({unit_vector(2, 0)}, 2);
  Subspace b = Subspace::span({unit_vector(2, 1)}, 2);
  EXPECT_EQ(sum(a, b).dim(), 2u);
  EXPECT_EQ(intersection(a, b).dim(), 0u);
  EXPECT_EQ(sum(a, a), a);
  EXPECT_EQ(intersection(a, a), a);

  Subspace c = Subspace::span({Vector{1, 1, 0}, Vector{0, 0, 1}}, 3);
  Subspace d = Subspace::span({Vector{0, 1, 0}}, 3);
  EXPECT_EQ(intersection(c, d).dim(), 0u);
  EXPECT_EQ(sum(c, d).dim(), 3u);
  EXPECT_TRUE(c.contains(Vector{2, 2, 5}));
  EXPECT_FALSE(c.contains(Vector{1, 0, 0}));
  EXPECT_THROW(sum(a, c), Error);
}

TEST(Subspace, DimensionFormulaRandom) {
  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    size_t n = 2 + rng() % 5;
    Subspace a = Subspace::row_space(random_matrix(rng, rng() % (n + 1), n, 1));
    Subspace b = Subspace::row_space(random_matrix(rng, rng() % (n + 1), n, 1));
    // Make overlaps likely.
    if (t % 3 == 0) b = sum(b, Subspace::span(a.dim() ? std::vector<Vector>{a.basis_vectors()[0]} : std::vector<Vector>{}, n));
    EXPECT_EQ(sum(a, b).dim() + intersection(a, b).dim(), a.dim() + b.dim());
    EXPECT_TRUE(a.contains(intersection(a, b)));
    EXPECT_TRUE(sum(a, b).contains(b));
  }
}

TEST(Subspace, CanonicalUnderScrambling) {
  std::mt19937 rng(9);
  for (int t = 0; t < 20; ++t) {
    Matrix m = random_matrix(rng, 3, 5, 1);
    Subspace s = Subspace::row_space(m);
    // Random invertible recombination of the rows.
    Matrix g = random_matrix(rng, 3, 3, 0);
    if (rank(g) != 3) continue;
    EXPECT_EQ(Subspace::row_space(g * m), s);
  }
}

TEST(Subspace, ReduceAndCoordinates) {
  Subspace s = Subspace::span({Vector{1, 0, 1}, Vector{0, 1, I}}, 3);
  Vector v{2, 3, 2 + 3 * I};
  EXPECT_EQ(s.coordinates(v), (Vector{2, 3}));
  EXPECT_TRUE(is_zero(s.reduce(v)));
  EXPECT_THROW(s.coordinates(Vector{0, 0, 1}), Error);
  auto q = quotient_basis(Subspace::full(3), s);
  ASSERT_EQ(q.size(), 1u);
  EXPECT_EQ(q[0], (Vector{0, 0, 1}));
}

TEST(Solve, AndInverse) {
  Matrix a{{1, I}, {0, 2}};
  auto x = solve(a, Vector{1, 4});
  ASSERT_TRUE(x);
  EXPECT_EQ(a * *x, (Vector{1, 4}));
  EXPECT_EQ(a * inverse(a), Matrix::identity(2));
  EXPECT_FALSE(solve(Matrix{{1, 1}, {1, 1}}, Vector{1, 0}).has_value());
  EXPECT_THROW(inverse(Matrix{{1, 1}, {1, 1}}), Error);
}

TEST(Isotropy, SplitForm) {
  // Coordinates (z1, z2, zb1, zb2) with the split form pairing zi <-> zbi.
  Matrix g(4, 4);
  g(0, 2) = g(2, 0) = g(1, 3) = g(3, 1) = 1;
  Subspace anti = Subspace::span({unit_vector(4, 2), unit_vector(4, 3)}, 4);
  EXPECT_TRUE(is_maximal_isotropic(anti, g));
  Subspace mixed = Subspace::span({unit_vector(4, 0), unit_vector(4, 2)}, 4);
  EXPECT_FALSE(is_maximal_isotropic(mixed, g));
  EXPECT_FALSE(is_maximal_isotropic(Subspace::span({unit_vector(4, 2)}, 4), g));
  Matrix bad = g;
  bad(0, 1) = 1;
  EXPECT_THROW(is_maximal_isotropic(anti, bad), Error);
  EXPECT_THROW(is_maximal_isotropic(anti, Matrix(4, 4)), Error);
}

TEST(Inertia, RealAndHermitian) {
  auto d = inertia(Matrix::diagonal({1, -2, 0, 3}));
  EXPECT_EQ(d.positive, 2u);
  EXPECT_EQ(d.negative, 1u);
  EXPECT_EQ(d.zero, 1u);
  auto h = inertia(Matrix{{0, 1}, {1, 0}});
  EXPECT_EQ(h.positive, 1u);
  EXPECT_EQ(h.negative, 1u);
  auto c = inertia(Matrix{{0, I}, {-I, 0}});
  EXPECT_EQ(c.positive, 1u);
  EXPECT_EQ(c.negative, 1u);
  EXPECT_THROW(inertia(Matrix{{0, 1}, {2, 0}}), Error);
}

TEST(JsonIo, RoundTrip) {
  Matrix m{{1, Scalar(1, 2) * I}, {Scalar(-3, 2), Scalar(1) - Scalar(2, 3) * I}};
  Json j = to_json(m);
  EXPECT_EQ(j.dump(), R"([["1","1/2*i"],["-3/2","1-2/3*i"]])");
  EXPECT_EQ(matrix_from_json(j), m);
  Json s = to_json(Subspace::span({Vector{2, 0}}, 2));
  EXPECT_EQ(s.dump(), R"({"ambient_dim":2,"dim":1,"basis":[["1","0"]]})");
}
