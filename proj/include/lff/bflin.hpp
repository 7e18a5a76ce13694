#pragma once

#include <array>
#include <string>
#include <vector>

#include "lff/euler.hpp"
#include "lff/pairs.hpp"
#include "lff/reps.hpp"

namespace lff {

// Linear-period L-factor split as L = L0 * Lradex with Lradex squarefree,
// carrying the period character it was computed against.
struct LinLResult {
  Euler L;
  Euler L0;
  Euler Lradex;
  Cuspidal alpha = Cuspidal::unramified_char(Monomial::one());
};

// Roots x = q^{s_0} at which the period integrals acquire an exceptional
// pole: |.|^{s_0} pi is distinguished. Even dimension: partitions of the
// segments into dual pairs (x^2 solves the dual-twist equation) and
// criterion-passing singletons (x^2 in the cuspidal wedge/sym pole set);
// constraints on x^2 intersect within a partition and union over
// partitions. Odd dimension: a character factor chi with |.|^{s_0} chi =
// alpha^{-1} |.|^{-1/2} pins x, and the rest must admit the same x.
std::vector<Monomial> lin_exceptional_roots(const GLRep& pi, const Cuspidal& alpha);

// Discrete-series recursion: L(d) = Lradex(d) * L(d^{(r)}), where Lradex is
// the cuspidal wedge (k odd) or sym (k even) square factor at 2s, bottoming
// at L(chi) = L(chi alpha, s + 1/2) for characters and at Lradex alone for
// r >= 2 cuspidals. Nontrivial alpha is only supported for characters.
LinLResult lin_L_discrete(const Segment& d, const Cuspidal& alpha);

// Product formula for Langlands-type products (sorted internally):
// L = prod_k L(Delta_k) * prod_{i<j} pair_L(Delta_i, Delta_j) at 2s.
// Lradex = exceptional roots of the full product, L0 the exact quotient.
// Requires Re(alpha) in [-1/2, 0].
LinLResult lin_L_langlands(const GLRep& pi, const Cuspidal& alpha);

// Independent second path: lcm of the exceptional factors over all
// derivative components of all orders. Requires completely reducible
// derivatives.
Euler lin_L_via_derivatives(const GLRep& pi, const Cuspidal& alpha);

// Conditions 1-7 on the twists u for the product formula to be provable:
// irreducible twisted derivatives, distinct equal-depth central characters,
// and pairwise pole disjointness between the segment, pair, and shifted
// standard factors. Condition 8 (a Hom-space dimension bound) is not
// machine-checkable and is reported as unchecked.
struct GeneralPositionReport {
  std::array<bool, 7> cond{};

  bool all() const {
    for (bool b : cond)
      if (!b) return false;
    return true;
  }
  std::string str() const;
};

GeneralPositionReport is_general_position(const GLRep& pi, const std::vector<Frac>& u,
                                          const Cuspidal& alpha);

// Functional-equation bookkeeping: the quotient
//   L(dual data, 1/2 - s) / L(direct data, s)
// of the assembled product equals the product of the segment- and pair-level
// quotients up to a unit. Verified as an exact root-multiset identity after
// normalizing the s -> 1/2 - s substitution on both sides the same way.
bool gamma_ratio_check(const GLRep& pi, const Cuspidal& alpha);

struct MainTheoremReport {
  Euler lhs;  // linear-period side
  Euler rhs;  // standard factor at s + 1/2 times the wedge-square factor at 2s
  bool pass = false;

  std::string str() const;
};

// Checks L^lin(x, s) = L(phi(x), s + 1/2) * L(phi(x), wedge^2, 2s) with the
// two sides computed along independent recursions.
MainTheoremReport verify_main_theorem(const Segment& d);
MainTheoremReport verify_main_theorem(const GLRep& pi);

}  // namespace lff
