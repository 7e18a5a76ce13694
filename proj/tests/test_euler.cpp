#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>

#include "lff/euler.hpp"

using lff::Euler;
using lff::Frac;
using lff::Monomial;

namespace {

// Independent oracle: expand prod (1 - u X)^m as an honest polynomial with
// coefficients in the group ring of the monomial group modulo zeta_2 = -1
// (each coefficient monomial is normalized to the smaller of {m, -m} with a
// sign), and decide divisibility by synthetic division from the constant
// term (always 1).
using Coef = std::map<Monomial, long long>;
using Poly = std::map<int, Coef>;

void add_term(Poly& p, int deg, const Monomial& m, long long c) {
  if (c == 0) return;
  Monomial neg = m * Monomial::minus_one();
  const Monomial& rep = neg < m ? neg : m;
  if (neg < m) c = -c;
  auto& coef = p[deg];
  coef[rep] += c;
  if (coef[rep] == 0) coef.erase(rep);
  if (coef.empty()) p.erase(deg);
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [da, ca] : a)
    for (const auto& [db, cb] : b)
      for (const auto& [ma, xa] : ca)
        for (const auto& [mb, xb] : cb) add_term(out, da + db, ma * mb, xa * xb);
  return out;
}

Poly expand(const Euler& e) {
  Poly out;
  add_term(out, 0, Monomial::one(), 1);
  for (const auto& [root, mult] : e.roots()) {
    Poly lin;
    add_term(lin, 0, Monomial::one(), 1);
    add_term(lin, 1, root, -1);
    for (long long i = 0; i < mult; ++i) out = poly_mul(out, lin);
  }
  return out;
}

bool poly_divides(const Poly& a, const Poly& b) {
  // Ascending synthetic division of b by a; both have constant term 1.
  Poly rem = b, quot;
  int guard = 0;
  while (!rem.empty()) {
    if (++guard > 200) return false;
    int d = rem.begin()->first;
    Coef lead = rem.begin()->second;
    if (d > (b.empty() ? 0 : b.rbegin()->first)) return false;
    for (const auto& [m, c] : lead) add_term(quot, d, m, c);
    for (const auto& [da, ca] : a)
      for (const auto& [ma, xa] : ca)
        for (const auto& [m, c] : lead) add_term(rem, d + da, ma * m, -c * xa);
  }
  return true;
}

Monomial rnd_mon(std::mt19937& g) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); };
  Monomial m = Monomial::zeta(pick(0, 3), 4);
  m = m * Monomial::q(Frac(pick(-3, 3), 2));
  if (pick(0, 1)) m = m * Monomial::symbol(pick(1, 2), Frac(pick(-2, 2)));
  return m;
}

Euler rnd_euler(std::mt19937& g) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); };
  Euler e = Euler::one();
  int n = pick(0, 3);
  for (int i = 0; i < n; ++i) {
    Monomial m = rnd_mon(g);
    int mult = pick(1, 2);
    while (mult--) e = e * Euler::tate(m);
  }
  return e;
}

}  // namespace

TEST_CASE("tate factor and multiplicities") {
  Euler e = Euler::tate(Monomial::symbol(1)) * Euler::tate(Monomial::symbol(1));
  CHECK(e.degree() == 2);
  CHECK(e.multiplicity(Monomial::symbol(1)) == 2);
  CHECK(e.multiplicity(Monomial::symbol(2)) == 0);
  CHECK(Euler::one().is_one());
}

TEST_CASE("lcm and gcd against the polynomial oracle") {
  std::mt19937 g(7);
  for (int trial = 0; trial < 300; ++trial) {
    Euler a = rnd_euler(g), b = rnd_euler(g);
    Euler l = Euler::lcm(a, b), d = Euler::gcd(a, b);
    CHECK(poly_divides(expand(a), expand(l)));
    CHECK(poly_divides(expand(b), expand(l)));
    CHECK(poly_divides(expand(d), expand(a)));
    CHECK(poly_divides(expand(d), expand(b)));
    CHECK(l.degree() + d.degree() == a.degree() + b.degree());
    CHECK(a.divides(b) == poly_divides(expand(a), expand(b)));
  }
}

TEST_CASE("exact quotients expand back to the numerator") {
  std::mt19937 g(11);
  for (int trial = 0; trial < 200; ++trial) {
    Euler a = rnd_euler(g), b = rnd_euler(g);
    Euler q = (a * b) / b;
    CHECK(q == a);
    CHECK(poly_mul(expand(q), expand(b)) == expand(a * b));
  }
  Euler a = Euler::tate(Monomial::symbol(1));
  Euler b = Euler::tate(Monomial::symbol(2));
  CHECK_THROWS(a / b);
}

TEST_CASE("shift multiplies roots by q^-c") {
  Euler e = Euler::tate(Monomial::symbol(1)) * Euler::tate(Monomial::q(Frac(1)));
  Euler s = e.shift(Frac(1, 2));
  CHECK(s.multiplicity(Monomial::symbol(1) * Monomial::q(Frac(-1, 2))) == 1);
  CHECK(s.multiplicity(Monomial::q(Frac(1, 2))) == 1);
  CHECK(e.shift(Frac(0)) == e);
}

TEST_CASE("dilate2 substitutes X^2 for X") {
  Euler e = Euler::tate(Monomial::symbol(1, Frac(2)));
  Euler d = e.dilate2();
  CHECK(d.degree() == 2);
  CHECK(d.multiplicity(Monomial::symbol(1)) == 1);
  CHECK(d.multiplicity(Monomial::symbol(1) * Monomial::minus_one()) == 1);
  // (1 - u X^2) = (1 - sqrt(u) X)(1 + sqrt(u) X): check by expansion.
  Poly target;
  add_term(target, 0, Monomial::one(), 1);
  add_term(target, 2, Monomial::symbol(1, Frac(2)), -1);
  CHECK(expand(d) == target);
}

TEST_CASE("reflect swaps u for u^-1 q^c") {
  Euler e = Euler::tate(Monomial::symbol(1) * Monomial::q(Frac(-1, 2)));
  Euler r = e.reflect(Frac(1, 2));
  CHECK(r.multiplicity(Monomial::symbol(1, Frac(-1)) * Monomial::q(Frac(1))) == 1);
  CHECK(r.reflect(Frac(1, 2)) == e);
}

TEST_CASE("common root detection") {
  Euler a = Euler::tate(Monomial::symbol(1)) * Euler::tate(Monomial::symbol(2));
  Euler b = Euler::tate(Monomial::symbol(2) * Monomial::q(Frac(-1)));
  CHECK_FALSE(a.has_common_root(b));
  CHECK(a.has_common_root(b.shift(Frac(-1))));
}

TEST_CASE("text forms round trip") {
  std::mt19937 g(13);
  for (int trial = 0; trial < 100; ++trial) {
    Euler e = rnd_euler(g);
    CHECK(Euler::parse(e.str()) == e);
  }
  CHECK(Euler::parse(Euler::one().str()).is_one());
}
