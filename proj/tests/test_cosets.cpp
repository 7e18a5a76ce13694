#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "lff/cosets.hpp"

using namespace lff;

namespace {

std::string coord(size_t i, size_t j, int sign = 0) {
  std::string s = "l(" + std::to_string(std::min(i, j) + 1) + "," +
                  std::to_string(std::max(i, j) + 1) + ")";
  if (sign > 0) s += "+";
  if (sign < 0) s += "-";
  return s;
}

struct TSlot {
  size_t ps;
  int size;
  std::string c;
};

std::vector<TSlot> tslots(const Subpartition& s) {
  const size_t t = s.nbar.size();
  std::vector<TSlot> v;
  for (size_t i = 0; i < t; ++i) {
    for (size_t j = 0; j < t; ++j) {
      const size_t ps = i * t + j;
      if (i == j) {
        if (s.diag_plus[i] > 0) v.push_back({ps, s.diag_plus[i], coord(i, i, +1)});
        if (s.diag_minus[i] > 0) v.push_back({ps, s.diag_minus[i], coord(i, i, -1)});
      } else if (s.blocks[i][j] > 0) {
        v.push_back({ps, s.blocks[i][j], coord(i, j)});
      }
    }
  }
  return v;
}

// Independent computation of the two modulus characters: peel one glued pair
// block at a time (the det of everything before it goes up by the block
// size, everything after down, the block itself by the size difference;
// plain modulus doubles all three), down to the purely diagonal base case
// whose exponents are the signed products of the diagonal masses.
TorusCharacter delta_oracle(Subpartition s, bool theta) {
  const size_t t = s.nbar.size();
  for (size_t k = 0; k < t; ++k) {
    for (size_t l = k + 1; l < t; ++l) {
      const int d = s.blocks[k][l];
      if (d == 0) continue;
      Subpartition sp = s;
      sp.blocks[k][l] = sp.blocks[l][k] = 0;
      sp.nbar[k] -= d;
      sp.nbar[l] -= d;
      TorusCharacter out = delta_oracle(sp, theta);
      const int f = theta ? d : 2 * d;
      const size_t pkl = k * t + l, plk = l * t + k;
      long a1 = 0, a3 = 0;
      for (const auto& slot : tslots(s)) {
        if (slot.ps < pkl) {
          out.add(slot.c, Frac(f * slot.size));
          a1 += slot.size;
        } else if (slot.ps > plk) {
          out.add(slot.c, Frac(-f * slot.size));
          a3 += slot.size;
        }
      }
      out.add(coord(k, l), Frac(f * (a3 - a1)));
      return out;
    }
  }
  TorusCharacter out;
  for (size_t i = 0; i < t; ++i) {
    for (size_t j = i + 1; j < t; ++j) {
      const int pi = s.diag_plus[i], mi = s.diag_minus[i];
      const int pj = s.diag_plus[j], mj = s.diag_minus[j];
      if (theta) {
        out.add(coord(i, i, +1), Frac(pi * pj));
        out.add(coord(j, j, +1), Frac(-pi * pj));
        out.add(coord(i, i, -1), Frac(mi * mj));
        out.add(coord(j, j, -1), Frac(-mi * mj));
      } else {
        out.add(coord(i, i, +1), Frac(pi * (pj + mj)));
        out.add(coord(i, i, -1), Frac(mi * (pj + mj)));
        out.add(coord(j, j, +1), Frac(-pj * (pi + mi)));
        out.add(coord(j, j, -1), Frac(-mj * (pi + mi)));
      }
    }
  }
  return out;
}

// Closed form of the quotient delta^{<theta>} / delta^{1/2}: only signed
// diagonal coordinates survive, weighted by the sign imbalance of the other
// diagonal blocks.
TorusCharacter quotient_closed_form(const Subpartition& s) {
  const size_t t = s.nbar.size();
  TorusCharacter out;
  for (size_t i = 0; i < t; ++i) {
    for (size_t j = i + 1; j < t; ++j) {
      const Frac imbal_j(s.diag_plus[j] - s.diag_minus[j], 2);
      const Frac imbal_i(s.diag_plus[i] - s.diag_minus[i], 2);
      out.add(coord(i, i, +1), Frac(s.diag_plus[i]) * imbal_j);
      out.add(coord(i, i, -1), Frac(-s.diag_minus[i]) * imbal_j);
      out.add(coord(j, j, +1), Frac(-s.diag_plus[j]) * imbal_i);
      out.add(coord(j, j, -1), Frac(s.diag_minus[j]) * imbal_i);
    }
  }
  return out;
}

std::vector<std::vector<int>> sweep_compositions() {
  return {{1}, {2}, {3}, {4}, {1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1},
          {1, 3}, {1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2}, {1, 1, 1, 1}};
}

}  // namespace

TEST_CASE("enumeration counts and invariants") {
  CHECK(enumerate_relevant({2}).size() == 1);
  auto two = enumerate_relevant({2})[0];
  CHECK(two.diag_plus[0] == 1);
  CHECK(two.diag_minus[0] == 1);

  auto i11 = enumerate_relevant({1, 1});
  CHECK(i11.size() == 3);
  int offdiag = 0, diag = 0;
  for (auto& s : i11) (s.blocks[0][1] == 1 ? offdiag : diag)++;
  CHECK(offdiag == 1);
  CHECK(diag == 2);

  auto odd = enumerate_relevant({1});
  REQUIRE(odd.size() == 1);
  CHECK(odd[0].diag_plus[0] == 1);
  CHECK(odd[0].diag_minus[0] == 0);

  for (auto& nbar : sweep_compositions()) {
    auto list = enumerate_relevant(nbar);
    auto rev = nbar;
    std::reverse(rev.begin(), rev.end());
    CHECK(list.size() == enumerate_relevant(rev).size());
    int total_plus_excess = 0;
    for (auto& s : list) {
      CHECK(s.n() == std::accumulate(nbar.begin(), nbar.end(), 0));
      int p = 0, q = 0;
      for (size_t i = 0; i < nbar.size(); ++i) {
        p += s.diag_plus[i];
        q += s.diag_minus[i];
        int row = 0;
        for (size_t j = 0; j < nbar.size(); ++j) row += s.blocks[i][j];
        CHECK(row == nbar[i]);
      }
      CHECK(p - q == (s.n() % 2));
      total_plus_excess += p - q;
    }
    (void)total_plus_excess;
  }

  CHECK_THROWS_AS(enumerate_relevant({}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_relevant({1, -1}), std::invalid_argument);
}

TEST_CASE("torus character algebra") {
  TorusCharacter a, b;
  a.add("l(1,1)+", Frac(1));
  a.add("l(2,2)-", Frac(-1, 2));
  b.add("l(1,1)+", Frac(-1));
  CHECK((a * a.inverse()).trivial());
  CHECK((a * b).exps.size() == 1);
  CHECK(a.scaled(Frac(2)).exps.at("l(1,1)+") == Frac(2));
  CHECK(a.scaled(Frac(0)).trivial());
  CHECK(a.str().find("l(2,2)-") != std::string::npos);
}

TEST_CASE("parabolic modulus on the split torus of GL(2)") {
  Subpartition s{{1, 1}, {{1, 0}, {0, 1}}, {1, 0}, {0, 1}};
  auto d = modulus_character(CosetGroup::P, s);
  CHECK(d.exps.at("l(1,1)+") == Frac(1));
  CHECK(d.exps.at("l(2,2)-") == Frac(-1));
  // The glued pair subpartition restricts the Borel modulus to nothing.
  Subpartition g{{1, 1}, {{0, 1}, {1, 0}}, {0, 0}, {0, 0}};
  CHECK(modulus_character(CosetGroup::P_s, g).trivial());
  CHECK(modulus_character(CosetGroup::P_s_theta, g).trivial());
}

TEST_CASE("quotient for the split rank one case") {
  Subpartition s{{1, 1}, {{1, 0}, {0, 1}}, {1, 0}, {0, 1}};
  auto q = modulus_character(CosetGroup::P_s_theta, s) *
           modulus_character(CosetGroup::P_s, s).scaled(Frac(-1, 2));
  TorusCharacter want;
  want.add("l(1,1)+", Frac(-1, 2));
  want.add("l(2,2)-", Frac(1, 2));
  CHECK(q == want);
}

TEST_CASE("modulus factors through the refinement") {
  for (auto& nbar : sweep_compositions()) {
    for (auto& s : enumerate_relevant(nbar)) {
      auto lhs = modulus_character(CosetGroup::P, s) *
                 modulus_character(CosetGroup::P_prime_s, s);
      CHECK(lhs == modulus_character(CosetGroup::P_s, s));
    }
  }
}

TEST_CASE("adjoint counts match the peel off recursion") {
  for (auto& nbar : sweep_compositions()) {
    for (auto& s : enumerate_relevant(nbar)) {
      CHECK(modulus_character(CosetGroup::P_s, s) == delta_oracle(s, false));
      CHECK(modulus_character(CosetGroup::P_s_theta, s) == delta_oracle(s, true));
    }
  }
}

TEST_CASE("quotient matches the closed form") {
  for (auto& nbar : sweep_compositions()) {
    for (auto& s : enumerate_relevant(nbar)) {
      auto q = modulus_character(CosetGroup::P_s_theta, s) *
               modulus_character(CosetGroup::P_s, s).scaled(Frac(-1, 2));
      CHECK(q == quotient_closed_form(s));
    }
  }
}

TEST_CASE("period character restriction") {
  Subpartition g{{1, 1}, {{0, 1}, {1, 0}}, {0, 0}, {0, 0}};
  CHECK(chi_alpha_restriction(g).trivial());
  Subpartition s{{2}, {{2}}, {1}, {1}};
  auto c = chi_alpha_restriction(s);
  CHECK(c.exps.at("l(1,1)+") == Frac(1));
  CHECK(c.exps.at("l(1,1)-") == Frac(-1));
  CHECK(c.inverse().exps.at("l(1,1)+") == Frac(-1));
}

TEST_CASE("malformed subpartitions are rejected") {
  Subpartition bad{{2}, {{1}}, {1, 0}, {0, 0}};
  CHECK_THROWS_AS(modulus_character(CosetGroup::P, bad), std::invalid_argument);
  Subpartition split{{2}, {{2}}, {2}, {1}};
  CHECK_THROWS_AS(modulus_character(CosetGroup::P, split), std::invalid_argument);
}
