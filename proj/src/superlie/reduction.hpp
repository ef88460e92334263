#pragma once

#include "superlie/builders.hpp"

#include <map>

namespace twistlab::superlie {

using Weight2 = std::pair<int, int>;

struct Reduction10to4 {
  Subquotient reduced;          // stabilizer ⋉ C^10 ⊕ Π(S+) modulo transverse translations
  size_t stabilizer_so4 = 0;    // rotations of C^4 (acting trivially on C^6)
  size_t stabilizer_so6 = 0;    // rotations of C^6
  size_t stabilizer_total = 0;  // all rotations preserving C^4 ⊕ C^6
  size_t translations = 0;
  std::map<Weight2, size_t> odd_weights;  // (H+, H-) weight -> multiplicity
  size_t splus_multiplicity = 0;
  size_t sminus_multiplicity = 0;
  size_t trivial_multiplicity = 0;
  SuperLieAlgebra target;        // build_susy_4d(4, sl)
  std::vector<Vector> phi;       // image in the 10d algebra of each target basis element
  bool brackets_match = false;   // all brackets, modulo transverse translations
  bool gamma_match = false;      // odd-odd brackets only
  bool bijective = false;
  std::vector<std::string> failures;
  bool ok() const { return brackets_match && gamma_match && bijective && failures.empty(); }
};

/// alg must come from build_susy_10d; embedding lists 4 translation indices.
Reduction10to4 reduce_10_to_4(const SuperLieAlgebra& alg, const std::vector<size_t>& embedding);

struct Reduction4to2 {
  Subquotient reduced;
  size_t k = 0;
  std::pair<size_t, size_t> n;  // (N+, N-) counted by J weight
  std::map<std::string, std::map<Weight2, size_t>> weights;  // "S+"/"S-" -> (J1, J2) -> count
  bool transverse_so2_in_r = false;
  SuperLieAlgebra target;       // build_susy_2d(2k, 2k)
  std::vector<std::string> matched_labels;  // target labels checked
  bool poincare_match = false;
  std::vector<std::string> failures;
  bool ok() const { return poincare_match && transverse_so2_in_r && failures.empty(); }
};

/// alg must come from build_susy_4d(k, .).
Reduction4to2 reduce_4_to_2(const SuperLieAlgebra& alg);

}  // namespace twistlab::superlie
