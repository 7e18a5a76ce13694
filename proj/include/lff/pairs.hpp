#pragma once

#include "lff/euler.hpp"
#include "lff/reps.hpp"

namespace lff {

// Rankin-Selberg pair factor split into its derivative part and its
// exceptional part: L = L0 * Lradex, Lradex squarefree, L0 divides L.
struct PairLResult {
  Euler L;
  Euler L0;
  Euler Lex;
  Euler Lradex;
};

// Solutions u of  b ~ a^vee (x) chi_u  for two segments, as a torsion pack
// (possibly enlarged by declared pair data); empty when the shapes differ.
std::vector<Monomial> segment_dual_twist_roots(const Segment& a, const Segment& b);

// Exceptional pole roots of L(pi, pi', s): one simple root u = q^{s_0} per
// solution of pi' ~ |.|^{-s_0} pi^vee. Nonempty only for generic products of
// equal dimension; self-twisting cuspidals contribute whole torsion packs.
// Returns 1 when the dimensions differ or no twist of the dual matches.
Euler exceptional_pole_roots(const GLRep& pi, const GLRep& pip);

// L0 = lcm of exceptional factors over all pairs of nonzero derivative
// components except the underived pair itself; Lex = exceptional factor of
// the full pair; L = L0 * Lex. Bottoms out at cuspidal pairs, where the
// poles are the twist-equation solutions plus declared pair data.
PairLResult pair_L(const Segment& a, const Segment& b);

// Same recursion with components ranging over derivative_components of each
// side. Requires generic inputs with completely reducible derivatives.
PairLResult pair_L_rep(const GLRep& pi, const GLRep& pip);

}  // namespace lff
