#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lff/euler.hpp"
#include "lff/reps.hpp"

namespace lff {

// One summand phi(atom) (x) Sp(k) of a semisimple Weil-Deligne representation.
// The atom is the parameter-side mirror of a cuspidal datum.
struct WDSummand {
  Cuspidal atom;
  int k = 1;

  int dim() const { return atom.r() * k; }
  WDSummand dual() const { return {atom.dual(), k}; }
  auto key() const { return std::pair{atom.key(), k}; }
  std::string str() const;
};

struct WDRep {
  std::vector<WDSummand> summands;  // kept sorted by key: multiset equality is ==

  WDRep() = default;
  explicit WDRep(std::vector<WDSummand> s);

  int dim() const;
  WDRep dual() const;
  WDRep direct_sum(const WDRep& o) const;
  bool operator==(const WDRep& o) const;

  std::string str() const;
  // The resolver receives the rendering of any atom that is not a bare
  // unramified-character monomial (ramified characters, abstract bases) and
  // returns the matching declared datum; bare monomials parse directly.
  static WDRep parse(const std::string& text,
                     const std::function<Cuspidal(const std::string&)>& resolve_base = nullptr);
};

// Sp(a) (x) Sp(b) = (+)_{j=0}^{min(a,b)-1} Sp(a+b-1-2j).
std::vector<int> clebsch_gordan(int a, int b);
// wedge^2 Sp(k) = Sp(2k-3) (+) Sp(2k-7) (+) ...
std::vector<int> wedge2_sp(int k);
// Sym^2 Sp(k) = Sp(2k-1) (+) Sp(2k-5) (+) ...
std::vector<int> sym2_sp(int k);

// phi(Delta_1 x ... x Delta_t) = (+)_i phi(rho_i at its center) (x) Sp(k_i).
WDRep langlands_param(const GLRep& pi);
WDRep langlands_param(const Segment& d);

// Bilinear over direct sums; atom pairs must be derivable, which holds
// whenever one side is a character.
WDRep tensor(const WDRep& a, const WDRep& b);

// Representation-level wedge/sym squares, defined for character atoms only;
// for r >= 2 atoms only the L-factors below exist.
WDRep wedge2(const WDRep& a);
WDRep sym2(const WDRep& a);

// L(a, s) = prod over summands; a summand contributes L(atom standard data,
// s + (k-1)/2): Sp(k) twists the atom by |.|^{(k-1)/2} on the inertia-fixed line.
Euler artin_L(const WDRep& a);

// L(a, wedge^2, s) and L(a, Sym^2, s) through the decomposition
//   wedge^2(+ V_i) = (+)_i wedge^2 V_i (+)_{i<j} V_i (x) V_j
// and wedge^2(V (x) Sp(k)) = Sym^2 V (x) wedge^2 Sp(k) (+) wedge^2 V (x) Sym^2 Sp(k).
// Works for abstract atoms, whose wedge/sym/tensor pole sets are data.
Euler wedge2_L(const WDRep& a);
Euler sym2_L(const WDRep& a);
// L(phi_i (x) phi_j, s) for two summands.
Euler tensor_L(const WDSummand& a, const WDSummand& b);

// Whether the summand multiset admits a perfect pairing V <-> V^vee, with
// self-pairings only for irreducible symplectic summands: atom symplectic
// and k odd, or atom orthogonal and k even (Sp(k) is symplectic for even k,
// orthogonal for odd k, and parities multiply).
bool fixes_symplectic_form(const WDRep& a);

bool atom_selfdual_symplectic(const Cuspidal& atom);
bool atom_selfdual_orthogonal(const Cuspidal& atom);

}  // namespace lff
