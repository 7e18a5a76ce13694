#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lff/bflin.hpp"

using namespace lff;

namespace {
Cuspidal uchar(const Monomial& m) { return Cuspidal::unramified_char(m); }
Cuspidal triv = uchar(Monomial::one());
Monomial z1 = Monomial::symbol(1);
Monomial z2 = Monomial::symbol(2);
Monomial qc(Frac c) { return Monomial::q(c); }
Segment st(const Cuspidal& rho, int k, Frac u = Frac(0)) {
  return Segment{rho, k, u - Frac(k - 1, 2)};
}
Euler roots(std::vector<Monomial> v) { return Euler::from_roots(v); }
}  // namespace

TEST_CASE("character base case") {
  CHECK(lin_L_discrete(Segment{uchar(z1), 1, Frac(0)}, triv).L == roots({z1 * qc(Frac(-1, 2))}));
  // The period character enters multiplicatively.
  Cuspidal quad = uchar(Monomial::zeta(1, 2));
  CHECK(lin_L_discrete(Segment{uchar(z1), 1, Frac(0)}, quad).L ==
        roots({z1 * Monomial::zeta(1, 2) * qc(Frac(-1, 2))}));
  // Ramified characters contribute nothing.
  Cuspidal ram = Cuspidal::ramified_char(z1, Label::generator("eta", 2));
  CHECK(lin_L_discrete(Segment{ram, 1, Frac(0)}, triv).L.is_one());
}

TEST_CASE("discrete recursion for unramified twists of Steinberg") {
  auto l2 = lin_L_discrete(st(uchar(z1), 2), triv);
  CHECK(l2.L == roots({z1 * qc(Frac(-1)), z1, z1 * Monomial::zeta(1, 2)}));
  CHECK(l2.Lradex == roots({z1, z1 * Monomial::zeta(1, 2)}));
  auto l3 = lin_L_discrete(st(uchar(z1), 3), triv);
  CHECK(l3.L == roots({z1 * qc(Frac(-3, 2)), z1 * qc(Frac(-1, 2)),
                       z1 * qc(Frac(-1, 2)) * Monomial::zeta(1, 2)}));
}

TEST_CASE("discrete recursion for a symplectic cuspidal of rank two") {
  Cuspidal rho = Cuspidal::abstract("rho", 2, Monomial::one(), 1,
                                    SelfDual{SelfDual::symplectic, Monomial::one()});
  auto l2 = lin_L_discrete(st(rho, 2), triv);
  CHECK(l2.L == roots({qc(Frac(-1, 2)), qc(Frac(-1, 2)) * Monomial::zeta(1, 2)}));
  auto l3 = lin_L_discrete(st(rho, 3), triv);
  CHECK(l3.L == roots({Monomial::one(), Monomial::zeta(1, 2), qc(Frac(-1)),
                       qc(Frac(-1)) * Monomial::zeta(1, 2)}));
}

TEST_CASE("product formula for a pair of characters") {
  GLRep pi{{Segment{uchar(z1), 1, Frac(0)}, Segment{uchar(z2), 1, Frac(0)}}};
  auto l = lin_L_langlands(pi, triv);
  Monomial half = (z1 * z2).sqrt();
  CHECK(l.L == roots({z1 * qc(Frac(-1, 2)), z2 * qc(Frac(-1, 2)), half,
                      half * Monomial::zeta(1, 2)}));
  CHECK(l.Lradex == roots({half, half * Monomial::zeta(1, 2)}));
  CHECK(l.L == l.L0 * l.Lradex);
}

TEST_CASE("the two independent recursions agree") {
  std::vector<GLRep> cases = {
      GLRep{st(uchar(z1), 2)},
      GLRep{{Segment{uchar(z1), 1, Frac(0)}, Segment{uchar(z2), 1, Frac(0)}}},
      GLRep{{st(uchar(z1), 2, Frac(10)), st(uchar(z2), 3)}},
      GLRep{{Segment{uchar(z1), 1, Frac(0)}, Segment{uchar(z1).dual(), 1, Frac(0)}}},
  };
  for (auto& pi : cases) {
    auto direct = lin_L_langlands(pi, triv);
    CHECK(lin_L_via_derivatives(pi, triv) == direct.L);
  }
}

TEST_CASE("main identity on small inputs") {
  CHECK(verify_main_theorem(st(uchar(z1), 2)).pass);
  CHECK(verify_main_theorem(st(uchar(z1), 3)).pass);
  auto rep = verify_main_theorem(GLRep{{st(uchar(z1), 2, Frac(10)), st(uchar(z2), 3)}});
  CHECK(rep.pass);
  CHECK(rep.lhs == rep.rhs);
  CHECK(rep.str().find("equal: yes") != std::string::npos);
}

TEST_CASE("gamma factor quotient") {
  CHECK(gamma_ratio_check(GLRep{st(uchar(z1), 2)}, triv));
  CHECK(gamma_ratio_check(GLRep{{Segment{uchar(z1), 1, Frac(0)},
                                 Segment{uchar(z2), 1, Frac(0)}}}, triv));
}

TEST_CASE("general position flags twist collisions") {
  GLRep pi{{Segment{uchar(z1), 1, Frac(0)}, Segment{uchar(z2), 1, Frac(0)}}};
  auto good = is_general_position(pi, {Frac(0), Frac(10)}, triv);
  CHECK(good.all());
  CHECK(good.str().find("8:unchecked") != std::string::npos);

  GLRep twin{{Segment{uchar(z1), 1, Frac(0)}, Segment{uchar(z1), 1, Frac(0)}}};
  auto bad = is_general_position(twin, {Frac(0), Frac(0)}, triv);
  CHECK_FALSE(bad.all());
  CHECK_FALSE(bad.cond[1]);
  // Separating the twists repairs every condition.
  CHECK(is_general_position(twin, {Frac(0), Frac(10)}, triv).all());
}
