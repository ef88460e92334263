#pragma once

#include "clifford/pairing.hpp"
#include "superlie/algebra.hpp"

namespace twistlab::superlie {

struct EvenGenerator {
  BasisLabel label;
  Matrix on_vector;  // action on the translations
  Matrix on_odd;     // action on the supercharges
};

/// Data for (g ⋉ V) ⊕ Π(Σ) with [X,Y] read off the faithful action on V ⊕ Σ.
struct AssemblyInput {
  std::string name;
  std::vector<EvenGenerator> even;
  std::vector<BasisLabel> translations;
  std::vector<BasisLabel> odd;
  std::vector<Matrix> gamma;  // [q_i, q_j] = sum_a gamma[a](i,j) P_a
  std::optional<Matrix> metric;
};

/// Basis order: even generators, translations, supercharges.
SuperLieAlgebra assemble(const AssemblyInput& in);

enum class RSym { GL, SL, Trivial };
RSym parse_rsym(const std::string& s);
std::string to_string(RSym r);

/// Names of the W basis: e1,e2,f1,f2 for dim 4, w1..wk otherwise.
std::vector<std::string> w_names(size_t k);

/// 4d algebra on Π(S+⊗W ⊕ S-⊗W*). Rotations H+,E+,F+,H-,E-,F-; translations
/// ∂z̄1 = α1⊗α1∨, ∂z̄2 = α1⊗α2∨, ∂z1 = α2⊗α1∨, ∂z2 = α2⊗α2∨.
SuperLieAlgebra build_susy_4d(int w_dim, RSym r);

/// 2d algebra with N = (n1, n2): J, ∂+ (weight 2), ∂- (weight -2), Q+a, Q-b,
/// R-symmetry so(W+) ⊕ so(W-).
SuperLieAlgebra build_susy_2d(int n1, int n2);

/// (so(10) ⋉ C^10) ⊕ Π(S+) from a 10d model and its ++ pairing.
SuperLieAlgebra build_susy_10d(const clifford::SpinorModel& model);

/// sl2 matrices on C^2 = <α1, α2>: H α1 = α1, E α2 = α1, F α1 = α2.
Matrix sl2_matrix(char which);

}  // namespace twistlab::superlie
