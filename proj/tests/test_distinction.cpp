#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lff/distinction.hpp"

using namespace lff;

namespace {
Cuspidal uchar(const Monomial& m) { return Cuspidal::unramified_char(m); }
Cuspidal triv = uchar(Monomial::one());
Monomial z1 = Monomial::symbol(1);
Segment st(const Cuspidal& rho, int k, Frac u = Frac(0)) {
  return Segment{rho, k, u - Frac(k - 1, 2)};
}
}  // namespace

TEST_CASE("discrete criterion") {
  CHECK(is_distinguished_discrete(st(triv, 2), triv));
  CHECK_FALSE(is_distinguished_discrete(st(uchar(z1), 2), triv));
  // Quadratic central twist brings the sym-square pole back.
  CHECK(is_distinguished_discrete(st(uchar(Monomial::zeta(1, 2)), 2), triv));
  // Odd dimension and non-unitary centers never qualify.
  CHECK_FALSE(is_distinguished_discrete(st(triv, 3), triv));
  CHECK_FALSE(is_distinguished_discrete(st(triv, 1), triv));
  CHECK_FALSE(is_distinguished_discrete(st(triv, 2, Frac(1, 2)), triv));
  CHECK_THROWS_AS(is_distinguished_discrete(st(triv, 2), uchar(z1)), std::domain_error);
}

TEST_CASE("even products pair up or pass the rest criterion") {
  GLRep pair{{st(uchar(z1), 1), st(uchar(z1).dual(), 1)}};
  auto cert = classify_generic(pair, triv);
  REQUIRE(cert.has_value());
  REQUIRE(cert->pairing.size() == 1);
  CHECK(cert->pairing[0] == std::make_pair(std::size_t{0}, std::size_t{1}));
  CHECK(cert->rest.empty());
  CHECK_FALSE(cert->odd_tail.has_value());

  auto steinberg = classify_generic(GLRep{st(triv, 2)}, triv);
  REQUIRE(steinberg.has_value());
  CHECK(steinberg->pairing.empty());
  REQUIRE(steinberg->rest.size() == 1);
  CHECK(steinberg->rest[0].k == 2);
  CHECK_FALSE(steinberg->rest[0].wedge_side);

  CHECK_FALSE(classify_generic(GLRep{st(uchar(z1), 2)}, triv).has_value());
}

TEST_CASE("odd products must split off the shifted period character") {
  Segment tail{triv, 1, Frac(-1, 2)};
  GLRep pi{{st(uchar(z1), 1), st(uchar(z1).dual(), 1), tail}};
  auto cert = classify_generic(pi, triv);
  REQUIRE(cert.has_value());
  REQUIRE(cert->odd_tail.has_value());
  CHECK(*cert->odd_tail == 2);
  REQUIRE(cert->pairing.size() == 1);
  CHECK(cert->pairing[0] == std::make_pair(std::size_t{0}, std::size_t{1}));
  CHECK(cert->str(pi).find("split character") != std::string::npos);

  CHECK_FALSE(classify_generic(GLRep{st(uchar(z1), 1)}, triv).has_value());
  // The tail must sit at exactly |.|^{-1/2}.
  GLRep off{{st(uchar(z1), 1), st(uchar(z1).dual(), 1), Segment{triv, 1, Frac(1, 2)}}};
  CHECK_FALSE(classify_generic(off, triv).has_value());
}

TEST_CASE("domain checks") {
  GLRep linked{{Segment{triv, 2, Frac(0)}, Segment{triv, 2, Frac(1)}}};
  CHECK_THROWS_AS(classify_generic(linked, triv), std::invalid_argument);
  Cuspidal rho = Cuspidal::abstract("rho", 2, Monomial::one(), 1, std::nullopt);
  CHECK_THROWS_AS(classify_generic(GLRep{st(triv, 2)}, rho), std::invalid_argument);
  CHECK_THROWS_AS(classify_generic(GLRep{st(triv, 2)}, uchar(Monomial::q(Frac(-1)))),
                  std::invalid_argument);
}

TEST_CASE("nontrivial unitary period characters decide pairings only") {
  Cuspidal quad = uchar(Monomial::zeta(1, 2));
  GLRep pair{{st(uchar(z1), 1), st(uchar(z1).dual(), 1)}};
  CHECK(classify_generic(pair, quad).has_value());
  CHECK_THROWS_AS(classify_generic(GLRep{st(triv, 2)}, quad), std::domain_error);
}

TEST_CASE("classifier agrees with the symplectic form test") {
  CHECK(symplectic_equivalence_check(GLRep{st(triv, 2)}));
  CHECK(symplectic_equivalence_check(GLRep{st(uchar(z1), 2)}));
  CHECK(symplectic_equivalence_check(GLRep{{st(uchar(z1), 1), st(uchar(z1).dual(), 1)}}));
  CHECK(symplectic_equivalence_check(GLRep{{st(uchar(z1), 3), st(uchar(z1).dual(), 3)}}));
  CHECK(symplectic_equivalence_check(GLRep{st(triv, 4)}));
  CHECK_THROWS_AS(symplectic_equivalence_check(GLRep{st(triv, 3)}), std::invalid_argument);
  CHECK_THROWS_AS(symplectic_equivalence_check(GLRep{st(triv, 2, Frac(1, 2))}),
                  std::invalid_argument);
}
