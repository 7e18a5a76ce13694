#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lff/monomial.hpp"

namespace lff {

// An Euler factor prod_u (1 - u X)^{-mult(u)} with X = q^{-s}, stored as the
// multiset of its inverse roots u. Kept factored at all times; expansion into
// polynomial coefficients exists only inside test oracles. The empty multiset
// is the constant factor 1.
class Euler {
 public:
  Euler() = default;

  static Euler one() { return Euler(); }
  // 1/(1 - u X), the Tate factor of an unramified character with value u.
  static Euler tate(const Monomial& u);
  static Euler from_roots(const std::vector<Monomial>& roots);

  bool is_one() const { return roots_.empty(); }
  std::int64_t degree() const;  // total root count with multiplicity
  std::int64_t multiplicity(const Monomial& u) const;
  const std::map<Monomial, std::int64_t>& roots() const { return roots_; }
  std::vector<Monomial> root_list() const;  // with multiplicity, sorted

  // L(tau (+) tau', s) = L(tau, s) L(tau', s): multiset union.
  Euler operator*(const Euler& o) const;
  friend bool operator==(const Euler& a, const Euler& b) { return a.roots_ == b.roots_; }

  // Pointwise max of multiplicities: the lcm of inverse polynomials.
  static Euler lcm(const Euler& a, const Euler& b);
  static Euler gcd(const Euler& a, const Euler& b);
  // 1/P divides 1/Q iff P divides Q iff every multiplicity of *this is <= o's.
  bool divides(const Euler& o) const;
  // Exact quotient: requires o.divides(*this).
  Euler operator/(const Euler& o) const;

  // Substitution s -> s + c: every inverse root is multiplied by q^{-c}.
  Euler shift(Frac c) const;
  // Substitution s -> 2s: 1 - u X^2 = (1 - sqrt(u) X)(1 + sqrt(u) X), so each
  // root u is replaced by the conjugate pair {sqrt(u), -sqrt(u)}. Only
  // dilation by 2 exists; the recursions never substitute other multiples.
  Euler dilate2() const;
  // Substitution s -> c - s, normalized back to an Euler factor in X. The
  // true substitution produces a unit (monomial times a power of X) times the
  // returned factor; callers compare both sides transformed the same way.
  Euler reflect(Frac c) const;

  bool has_common_root(const Euler& o) const;

  std::string str() const;          // "prod (1 - <monomial> X)^-<mult> ..."
  std::string root_list_str() const;  // machine form "[m] root; [m] root; ..."
  static Euler parse(const std::string& text);  // inverse of str()

 private:
  std::map<Monomial, std::int64_t> roots_;
};

}  // namespace lff
