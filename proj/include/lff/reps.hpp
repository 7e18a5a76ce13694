#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lff/euler.hpp"
#include "lff/frac.hpp"
#include "lff/monomial.hpp"

namespace lff {

// Ramification label: an element of a finitely generated abelian group with
// declared generator orders. A character is unramified iff its label is
// trivial; two labels multiply by adding exponents modulo the orders.
struct Label {
  std::map<std::string, std::pair<int, int>> gens;  // name -> (exponent in [0,order), order)

  bool trivial() const { return gens.empty(); }
  Label operator*(const Label& o) const;
  Label inverse() const;
  Label pow(int k) const;
  auto operator<=>(const Label& o) const = default;
  std::string str() const;

  static Label generator(const std::string& name, int order, int exp = 1);
};

struct SelfDual {
  enum Kind { symplectic, orthogonal };
  Kind kind;
  Monomial at;  // base^vee ~ base twisted by the unramified character with this value
};

// A cuspidal representation of GL(r), given as an abstract base twisted by an
// unramified character. `twist` is the twisting character's value at a
// uniformizer; for r = 1 it is the Satake value itself. The engine never
// sees Whittaker models: everything downstream consumes r, the twist, the
// label, the self-twist torsion, self-duality and a few declared pole sets.
class Cuspidal {
 public:
  // Unramified character with the given Satake value.
  static Cuspidal unramified_char(const Monomial& satake);
  // r = 1 character with a ramification label.
  static Cuspidal ramified_char(const Monomial& satake, const Label& label);
  // Abstract cuspidal base on GL(r), r >= 2.
  static Cuspidal abstract(std::string base, int r, const Monomial& twist, int torsion,
                           std::optional<SelfDual> selfdual, const Monomial& base_central = Monomial::one());

  const std::string& base() const { return base_; }
  int r() const { return r_; }
  const Monomial& twist() const { return twist_; }
  const Label& label() const { return label_; }
  int torsion() const { return torsion_; }
  const std::optional<SelfDual>& selfdual() const { return selfdual_; }

  bool is_char() const { return r_ == 1; }
  bool is_unramified_char() const { return r_ == 1 && label_.trivial(); }

  // Central character value at (uniformizer) * Id_r.
  Monomial central() const;
  Cuspidal dual() const;
  // Twist by |.|^c: multiplies the twisting character by q^{-c}.
  Cuspidal twisted(Frac c) const;
  // Twist by an r=1 character (label multiplies in for characters; for
  // abstract bases only an unramified chi is allowed).
  Cuspidal twisted_by_char(const Cuspidal& chi) const;

  // Same isomorphism class. The twist is compared modulo the torsion pack.
  bool operator==(const Cuspidal& o) const { return key() == o.key(); }
  bool same_base(const Cuspidal& o) const { return base_ == o.base_ && r_ == o.r_ && label_ == o.label_; }

  // All solutions x of  *this ~ o (x) unramified-twist-by-x, i.e. the x with
  // base (x) chi_x (x) twist(o) ~ *this; empty if the bases differ.
  std::vector<Monomial> twist_solutions(const Cuspidal& o) const;

  // Pole roots of L(phi(rho) (x) phi(rho'), s): the x = q^{s_0} solving
  // rho' ~ rho^vee |.|^{-s_0}, a torsion pack; plus declared extra data.
  std::vector<Monomial> tensor_pole_roots(const Cuspidal& o) const;

  // Pole roots of L(phi(rho), wedge^2, s) resp. L(phi(rho), Sym^2, s).
  // Characters: wedge empty, sym = {twist^2} when the squared character is
  // unramified. Abstract selfdual bases with torsion 1 put the single pack
  // root on the side declared by the pairing parity; anything else must be
  // declared explicitly.
  std::vector<Monomial> wedge_pole_roots() const;
  std::vector<Monomial> sym_pole_roots() const;

  // Roots of the standard L(phi(rho), s): the Satake value for unramified
  // characters, declared data (default none) for r >= 2.
  std::vector<Monomial> standard_roots() const;

  void declare_wedge_sym(std::vector<Monomial> wedge, std::vector<Monomial> sym);
  void declare_standard(std::vector<Monomial> roots);
  void declare_pair_atoms(const std::string& other_base, std::vector<Monomial> roots);

  std::string str() const;
  using Key = std::tuple<std::string, int, Label, Monomial>;
  Key key() const { return {base_, r_, label_, twist_}; }
  bool operator<(const Cuspidal& o) const { return key() < o.key(); }

 private:
  std::string base_;
  int r_ = 1;
  Monomial twist_;
  Label label_;
  int torsion_ = 1;
  std::optional<SelfDual> selfdual_;
  Monomial base_central_;
  bool declared_wedge_sym_ = false;
  std::vector<Monomial> wedge_decl_, sym_decl_, std_decl_;
  std::map<std::string, std::vector<Monomial>> pair_decl_;

  void normalize_twist();
};

// The segment [ |.|^e rho, |.|^{e+1} rho, ..., |.|^{e+k-1} rho ], a discrete
// series of GL(k r) when rho is unitary. Centered form: St_k(rho |.|^{e+(k-1)/2}).
struct Segment {
  Cuspidal rho;
  int k = 1;
  Frac e = 0;

  int dim() const { return k * rho.r(); }
  Frac center() const { return e + Frac(k - 1, 2); }
  Cuspidal leading() const { return rho.twisted(e); }     // |.|^e rho
  Cuspidal centered_cuspidal() const { return rho.twisted(center()); }
  Segment twisted(Frac u) const { return {rho, k, e + u}; }

  Monomial central_character() const;
  Segment dual() const;

  bool operator==(const Segment& o) const { return key() == o.key(); }
  using Key = std::pair<int, Cuspidal::Key>;
  Key key() const { return {k, leading().key()}; }
  bool operator<(const Segment& o) const { return key() < o.key(); }

  std::string str() const;
};

// Derivative of a segment: zero unless the order is a multiple of r.
struct SegDerivative {
  enum Kind { zero, unit, segment };
  Kind kind = zero;
  std::optional<Segment> seg;
};
SegDerivative derivative(const Segment& d, int l);

// An ordered product of segments: a representation of Whittaker type. The
// empty product is the unit representation of GL(0).
struct GLRep {
  std::vector<Segment> segs;

  GLRep() = default;
  GLRep(std::vector<Segment> s) : segs(std::move(s)) {}
  GLRep(const Segment& s) : segs{s} {}

  int dim() const;
  bool is_unit() const { return segs.empty(); }
  Monomial central_character() const;
  GLRep dual() const;
  GLRep twisted(Frac u) const;

  // Isomorphism of products of unlinked segments: multiset segment equality.
  bool isomorphic(const GLRep& o) const;

  std::string str() const;
  std::vector<Segment::Key> sorted_keys() const;
};

bool are_linked(const Segment& a, const Segment& b);
bool is_generic(const GLRep& pi);

// Decreasing real part of the central character; ties broken by segment
// length descending, then by canonical text.
GLRep langlands_sort(const GLRep& pi);
bool is_langlands_ordered(const GLRep& pi);

// All nonzero products Delta_1^{(a_1)} x ... x Delta_t^{(a_t)} with
// sum a_i = l, in tuple enumeration order (duplicates kept).
std::vector<GLRep> derivative_components(const GLRep& pi, int l);

// Central characters of the l-th derivative components.
std::vector<Monomial> exponents(const GLRep& pi, int l);

// True when every nonzero derivative component product is irreducible
// (pairwise unlinked segments), the hypothesis "completely reducible
// derivatives" of the factorization propositions.
bool has_completely_reducible_derivatives(const GLRep& pi);

}  // namespace lff
