#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lff/frac.hpp"

namespace lff {

// An element of the multiplicative coefficient group
//
//   zeta_{den}^{num} * q^(q4/4) * prod_i z_i^(sym[i]/4)
//
// where zeta_d = e^{2 pi i / d} and the z_i are formal unitary Satake symbols.
// All inverse roots of Euler factors, Satake values and pole locations live
// here. Exponents are stored in quarter steps: the public lattice is (1/2)Z,
// and the extra resolution is only reached by square roots taken while
// factoring 1 - u X^2 during dilation s -> 2s.
class Monomial {
 public:
  Monomial() = default;

  static Monomial one() { return Monomial(); }
  static Monomial q(Frac e);                 // q^e
  static Monomial symbol(int id, Frac e = 1);  // z_id^e
  static Monomial zeta(std::int64_t num, std::int64_t den);  // e^{2 pi i num/den}
  static Monomial minus_one() { return zeta(1, 2); }

  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;
  Monomial pow(std::int64_t k) const;

  // Canonical square root: halves every exponent and the root-of-unity angle.
  // sqrt(a) * sqrt(a) == a always holds; sqrt is not a two-sided inverse of
  // squaring (sqrt(zeta_2^2) = 1).
  Monomial sqrt() const;

  bool is_one() const { return zeta_num_ == 0 && q4_ == 0 && sym_.empty(); }

  // Symbols are unitary by convention, so the real part of the character with
  // value *this at a uniformizer is carried by the q-exponent alone.
  Frac real_part() const { return Frac(-q4_, 4); }

  Frac q_exp() const { return Frac(q4_, 4); }
  std::int64_t zeta_num() const { return zeta_num_; }
  std::int64_t zeta_den() const { return zeta_den_; }
  const std::vector<std::pair<int, std::int64_t>>& symbol_exps() const { return sym_; }

  std::strong_ordering operator<=>(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return (*this <=> o) == 0; }

  std::string str() const;
  // Parses the canonical rendering: factors joined by '*', each one of
  // "1", "zeta(n/d)", "q", "q^e", "zK", "zK^e" with e an integer or "(a/b)",
  // b in {1,2,4}. Inverse of str().
  static Monomial parse(const std::string& text);

 private:
  std::int64_t zeta_num_ = 0;  // 0 <= zeta_num_ < zeta_den_, gcd = 1
  std::int64_t zeta_den_ = 1;
  std::int64_t q4_ = 0;  // exponent of q in quarter steps
  std::vector<std::pair<int, std::int64_t>> sym_;  // sorted by id, no zero exponents

  void set_zeta(std::int64_t num, std::int64_t den);
};

inline Monomial operator/(const Monomial& a, const Monomial& b) { return a * b.inverse(); }

// All f-th roots of unity times u: the "torsion pack" contributed by a
// cuspidal with f unramified self-twists.
std::vector<Monomial> torsion_pack(const Monomial& u, int f);

}  // namespace lff
