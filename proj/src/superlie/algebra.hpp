#pragma once

#include "exact/json_io.hpp"
#include "exact/linalg.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace twistlab::superlie {

using exact::Matrix;
using exact::Scalar;
using exact::Subspace;
using exact::Vector;

enum class Parity { Even, Odd };
enum class Block { Rotation, RSymmetry, Translation, Supercharge };

std::string to_string(Parity p);
std::string to_string(Block b);
Block parse_block(const std::string& s);

struct BasisLabel {
  std::string name;
  Parity parity = Parity::Even;
  std::optional<int> weight;
  Block block = Block::Rotation;
};

/// Sparse vector: (index, coefficient) pairs sorted by index, no zeros.
using SparseVec = std::vector<std::pair<size_t, Scalar>>;

SparseVec to_sparse(const Vector& v);
Vector to_dense(const SparseVec& v, size_t dim);

class SuperLieAlgebra {
public:
  SuperLieAlgebra() = default;
  SuperLieAlgebra(std::string name, std::vector<BasisLabel> basis);

  const std::string& name() const noexcept { return name_; }
  size_t dim() const noexcept { return basis_.size(); }
  size_t even_dim() const;
  size_t odd_dim() const;
  const std::vector<BasisLabel>& basis() const noexcept { return basis_; }
  const BasisLabel& label(size_t i) const { return basis_.at(i); }
  std::optional<size_t> find(const std::string& name) const;
  size_t index_of(const std::string& name) const;
  std::vector<size_t> indices(Block b) const;
  std::vector<size_t> indices(Parity p) const;
  bool is_odd(size_t i) const { return basis_[i].parity == Parity::Odd; }

  /// Sets [b_i, b_j] and the graded-antisymmetric partner [b_j, b_i].
  void set_bracket(size_t i, size_t j, const SparseVec& value);
  /// Raw table entry, used by fault-injection tests.
  void set_bracket_entry(size_t i, size_t j, const SparseVec& value);
  const SparseVec& bracket(size_t i, size_t j) const { return table_[i * dim() + j]; }
  Vector bracket(const Vector& x, const Vector& y) const;
  Vector bracket_basis(size_t i, const Vector& y) const;
  /// Matrix of ad_x: column j = [x, b_j].
  Matrix ad(const Vector& x) const;

  const std::optional<Matrix>& translation_metric() const noexcept { return metric_; }
  void set_translation_metric(Matrix m) { metric_ = std::move(m); }

  Vector unit(size_t i) const { return exact::unit_vector(dim(), i); }
  Vector element(const std::string& label) const { return unit(index_of(label)); }

private:
  std::string name_;
  std::vector<BasisLabel> basis_;
  std::vector<SparseVec> table_;
  std::unordered_map<std::string, size_t> lookup_;
  std::optional<Matrix> metric_;
};

struct JacobiFailure {
  size_t i, j, k;
  std::string description;
};

struct JacobiReport {
  bool antisymmetry_ok = true;
  bool jacobi_ok = true;
  size_t triples_checked = 0;
  std::vector<JacobiFailure> failures;  // first few, in triple order
  bool ok() const { return antisymmetry_ok && jacobi_ok; }
};

/// Exhaustive graded antisymmetry and Jacobi check over sorted triples.
/// threads only affects speed; the report is identical for any value.
JacobiReport jacobi_check(const SuperLieAlgebra& alg, unsigned threads = 1);

struct GradingReport {
  bool parity_ok = true;
  bool blocks_ok = true;
  std::vector<std::string> failures;
  bool ok() const { return parity_ok && blocks_ok; }
};
/// Parity additivity plus [Q,Q] in translations, [P,P] = 0, [P,Q] = 0.
GradingReport grading_check(const SuperLieAlgebra& alg);

/// Every nonzero odd q has some odd q' with [q, q'] != 0.
bool gamma_nondegenerate(const SuperLieAlgebra& alg);

/// Z/B for a subalgebra Z and an ideal B of Z (both homogeneous). Basis are
/// the canonical representatives of quotient_basis(Z, B).
struct Subquotient {
  SuperLieAlgebra algebra;
  std::vector<Vector> representatives;  // in the ambient algebra
  Subspace z, b;
  Subspace reps_span;
  /// Quotient coordinates of an element of Z.
  Vector project(const Vector& v) const;
};
Subquotient subquotient(const SuperLieAlgebra& alg, const Subspace& z, const Subspace& b, const std::string& name);

/// "α1⊗e1 - 1/2*α2⊗e2" style rendering with canonical coefficients.
std::string format_element(const SuperLieAlgebra& alg, const Vector& v);
/// Inverse of format_element. Accepts ASCII aliases, see README.
Vector parse_element(const SuperLieAlgebra& alg, const std::string& text);
/// Replace ASCII aliases ("alpha", "^v", "(x)", "dzb", "dz") by the symbols.
std::string normalize_label_text(const std::string& text);

Json to_json(const SuperLieAlgebra& alg);
SuperLieAlgebra algebra_from_json(const Json& j);

}  // namespace twistlab::superlie
