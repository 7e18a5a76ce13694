#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lff/monomial.hpp"

using lff::Frac;
using lff::Monomial;

TEST_CASE("quarter-step exponent lattice") {
  Monomial a = Monomial::q(Frac(1, 4)) * Monomial::symbol(1, Frac(-3, 4));
  CHECK(a.q_exp() == Frac(1, 4));
  CHECK(a.real_part() == Frac(-1, 4));
  CHECK_THROWS(Monomial::q(Frac(1, 8)));
  CHECK_THROWS(Monomial::symbol(2, Frac(1, 3)));
}

TEST_CASE("roots of unity reduce") {
  CHECK(Monomial::zeta(2, 4) == Monomial::zeta(1, 2));
  CHECK(Monomial::zeta(5, 3) == Monomial::zeta(2, 3));
  CHECK(Monomial::zeta(1, 2) * Monomial::zeta(1, 2) == Monomial::one());
  CHECK(Monomial::zeta(1, 3).pow(3).is_one());
  CHECK(Monomial::minus_one().pow(2).is_one());
}

TEST_CASE("group structure") {
  Monomial a = Monomial::zeta(1, 6) * Monomial::q(Frac(-2)) * Monomial::symbol(1, Frac(1, 2));
  Monomial b = Monomial::symbol(2) * Monomial::q(Frac(3, 4));
  CHECK(a * b == b * a);
  CHECK((a * a.inverse()).is_one());
  CHECK(a.pow(0).is_one());
  CHECK(a.pow(3) == a * a * a);
  CHECK(a.pow(-2) == (a * a).inverse());
}

TEST_CASE("real part ignores the unitary data") {
  Monomial a = Monomial::zeta(3, 8) * Monomial::symbol(1) * Monomial::symbol(2, Frac(-5, 2));
  CHECK(a.real_part() == Frac(0));
  CHECK((a * Monomial::q(Frac(-3, 2))).real_part() == Frac(3, 2));
}

TEST_CASE("square root halves even exponents") {
  Monomial a = Monomial::q(Frac(-1)) * Monomial::symbol(1, Frac(2));
  CHECK(a.sqrt() == Monomial::q(Frac(-1, 2)) * Monomial::symbol(1));
  CHECK(a.sqrt() * a.sqrt() == a);
  // -1 gains a well-defined square root, so sqrt is a section, not an inverse.
  CHECK(Monomial::minus_one().sqrt() == Monomial::zeta(1, 4));
  CHECK(Monomial::q(Frac(-1, 2)).sqrt() == Monomial::q(Frac(-1, 4)));
  CHECK_THROWS(Monomial::q(Frac(-1, 4)).sqrt());
  CHECK_THROWS(Monomial::symbol(1, Frac(1, 4)).sqrt());
}

TEST_CASE("ordering is a strict total order compatible with equality") {
  Monomial a = Monomial::symbol(1);
  Monomial b = Monomial::symbol(1) * Monomial::q(Frac(-1));
  CHECK(((a < b) || (b < a)));
  CHECK_FALSE(a < a);
}

TEST_CASE("text round trip") {
  for (const char* text : {"1", "q^(-1/2)", "z1", "zeta(1/3) * q * z2^(-5/4)",
                           "zeta(1/2) * z1^(1/2) * z3^2"}) {
    Monomial m = Monomial::parse(text);
    CHECK(Monomial::parse(m.str()) == m);
  }
  CHECK(Monomial::parse("q^2 * q^(-2)").is_one());
  CHECK_THROWS(Monomial::parse(""));
  CHECK_THROWS(Monomial::parse("w3"));
}

TEST_CASE("torsion pack lists the twist orbit") {
  auto pack = lff::torsion_pack(Monomial::symbol(1), 3);
  REQUIRE(pack.size() == 3);
  CHECK(pack[0] == Monomial::symbol(1));
  bool has = false;
  for (const auto& m : pack) has = has || m == Monomial::zeta(1, 3) * Monomial::symbol(1);
  CHECK(has);
  CHECK(lff::torsion_pack(Monomial::one(), 1).size() == 1);
}
