#pragma once

#include <map>
#include <string>
#include <vector>

#include "lff/frac.hpp"

namespace lff {

// Orbit datum for the double cosets of the block-upper-triangular subgroup
// against the symmetric pair subgroup: a symmetric refinement n_{i,j} of the
// composition with signed diagonal masses n_{k,k}^{+/-}.
struct Subpartition {
  std::vector<int> nbar;
  std::vector<std::vector<int>> blocks;  // symmetric; blocks[i][i] = n_{i,i}
  std::vector<int> diag_plus, diag_minus;

  int n() const;
  std::string str() const;
};

// All subpartitions with row sums nbar and balanced signed diagonal mass
// (the plus side exceeds by one when n is odd), deterministically ordered.
std::vector<Subpartition> enumerate_relevant(const std::vector<int>& nbar);

// A positive character of the fixed-point Levi's connected center, stored as
// exponents on the block-scalar coordinates: "l(i,j)" for the glued pair
// blocks (i < j), "l(i,i)+" and "l(i,i)-" for the signed diagonal blocks.
struct TorusCharacter {
  std::map<std::string, Frac> exps;  // zero entries dropped

  TorusCharacter operator*(const TorusCharacter& o) const;
  TorusCharacter inverse() const;
  TorusCharacter scaled(Frac c) const;
  bool trivial() const { return exps.empty(); }
  bool operator==(const TorusCharacter& o) const { return exps == o.exps; }
  std::string str() const;

  void add(const std::string& coord, Frac e);
};

enum class CosetGroup { P, P_s, P_s_theta, P_prime_s };

// Modulus character of the chosen subgroup restricted to the fixed-point
// center, computed as the determinant of the adjoint action on the matching
// nilradical: plain block counts for the parabolic cases, theta-orbit counts
// for the fixed-point case (orbits of size two count once, self-paired
// entry blocks survive only with positive sign).
TorusCharacter modulus_character(CosetGroup which, const Subpartition& s);

// Exponents of the period character on the center: +1 on each plus diagonal
// determinant, -1 on each minus diagonal determinant.
TorusCharacter chi_alpha_restriction(const Subpartition& s);

}  // namespace lff
