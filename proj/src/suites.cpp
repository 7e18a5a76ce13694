#include "lff/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lff/bflin.hpp"
#include "lff/cosets.hpp"
#include "lff/distinction.hpp"
#include "lff/galois.hpp"
#include "lff/pairs.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace lff {

namespace {

using Verdict = std::pair<bool, std::string>;

struct Pending {
  std::string name;
  std::function<Verdict()> eval;
};

Verdict pass() { return {true, ""}; }
Verdict fail(const std::string& why) { return {false, why}; }

Verdict expect_equal(const Euler& got, const Euler& want, const std::string& what) {
  if (got == want) return pass();
  return fail(what + ": got " + got.str() + ", want " + want.str());
}

Monomial zsym(int i) { return Monomial::symbol(i); }
Cuspidal uchar(const Monomial& m) { return Cuspidal::unramified_char(m); }
Cuspidal trivial_alpha() { return uchar(Monomial::one()); }

// Centered Steinberg-type segment St_k(rho) |.|^u.
Segment centered(const Cuspidal& rho, int k, Frac u = Frac(0)) {
  return Segment{rho, k, u - Frac(k - 1, 2)};
}

std::string frs(Frac f) { return f.str(); }

// ---------------------------------------------------------------- suite 1

std::vector<Pending> build_main_theorem(int cap) {
  std::vector<Pending> out;
  const std::vector<std::pair<std::string, Monomial>> satakes = {
      {"z1", zsym(1)},
      {"zeta3*z1", Monomial::zeta(1, 3) * zsym(1)},
      {"z1*z2", zsym(1) * zsym(2)},
  };
  const std::vector<Frac> us = {Frac(0), Frac(1, 2), Frac(-1, 2), Frac(1), Frac(-1)};
  for (const auto& [cname, m] : satakes) {
    Cuspidal chi = uchar(m);
    for (int k = 1; k <= std::min(cap, 6); ++k) {
      for (Frac u : us) {
        Segment d = centered(chi, k, u);
        out.push_back({"St_" + std::to_string(k) + "(" + cname + ")|.|^" + frs(u),
                       [d]() -> Verdict {
                         auto r = verify_main_theorem(d);
                         return r.pass ? pass() : fail(r.str());
                       }});
      }
    }
  }
  Cuspidal rho = Cuspidal::abstract("rho0", 2, Monomial::one(), 1,
                                    SelfDual{SelfDual::symplectic, Monomial::one()});
  for (int k = 1; k <= std::min(3, std::max(1, cap / 2)); ++k) {
    for (Frac u : us) {
      Segment d = centered(rho, k, u);
      out.push_back({"St_" + std::to_string(k) + "(rho0)|.|^" + frs(u), [d]() -> Verdict {
                       auto r = verify_main_theorem(d);
                       return r.pass ? pass() : fail(r.str());
                     }});
    }
  }
  return out;
}

// ---------------------------------------------------------------- suite 2

// Partitions of at most `maxparts` parts and sum <= `maxsum`, descending.
std::vector<std::vector<int>> partitions_upto(int maxsum, int maxparts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (!cur.empty()) out.push_back(cur);
    if ((int)cur.size() == maxparts) return;
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(maxsum, maxsum);
  return out;
}

// Twists with pairwise sums in (1/2)Z (square factors stay on the exponent
// lattice) and pairwise gaps larger than any span sum plus one, so same
// symbol segments stay unlinked at every derivative order.
const std::vector<Frac>& twist_pool() {
  static const std::vector<Frac> u = {Frac(0), Frac(10), Frac(41, 2), Frac(32)};
  return u;
}

std::vector<Pending> build_products(int cap) {
  std::vector<Pending> out;
  const int maxn = cap > 0 ? std::min(cap, 8) : 8;
  for (const auto& shape : partitions_upto(maxn, 4)) {
    for (int variant = 0; variant < 2; ++variant) {
      std::vector<Segment> segs;
      std::string name = variant ? "same-symbol" : "mixed-symbols";
      for (size_t i = 0; i < shape.size(); ++i) {
        int sid = variant ? 1 : 1 + (int)(i % 3);
        segs.push_back(centered(uchar(zsym(sid)), shape[i], twist_pool()[i]));
        name += (i ? " x " : ": ") + segs.back().str();
      }
      GLRep pi{segs};
      out.push_back({name, [pi]() -> Verdict {
                       auto r = verify_main_theorem(pi);
                       return r.pass ? pass() : fail(r.str());
                     }});
    }
  }
  return out;
}

// ---------------------------------------------------------------- suite 3

GLRep twisted_product(const GLRep& pi, const std::vector<Frac>& u) {
  GLRep tw = pi;
  for (size_t i = 0; i < tw.segs.size(); ++i) tw.segs[i] = tw.segs[i].twisted(u[i]);
  return tw;
}

std::vector<Pending> build_two_path(int cap) {
  std::vector<Pending> out;
  const int maxn = cap > 0 ? std::min(cap, 6) : 6;
  const std::map<size_t, std::vector<std::vector<Frac>>> pools = {
      {1, {{Frac(0)}, {Frac(1, 2)}, {Frac(10)}}},
      {2,
       {{Frac(0), Frac(1, 2)},
        {Frac(0), Frac(21, 2)},
        {Frac(1, 2), Frac(10)},
        {Frac(10), Frac(41, 2)},
        {Frac(0), Frac(10)},
        {Frac(1, 2), Frac(41, 2)}}},
      {3,
       {{Frac(0), Frac(1, 2), Frac(10)},
        {Frac(0), Frac(21, 2), Frac(41, 2)},
        {Frac(1, 2), Frac(10), Frac(41, 2)},
        {Frac(0), Frac(1, 2), Frac(41, 2)},
        {Frac(0), Frac(10), Frac(41, 2)}}},
  };
  for (const auto& shape : partitions_upto(maxn, 3)) {
    std::vector<Segment> segs;
    for (size_t i = 0; i < shape.size(); ++i)
      segs.push_back(centered(uchar(zsym(1 + (int)i)), shape[i]));
    GLRep pi{segs};
    for (const auto& u : pools.at(shape.size())) {
      std::string name = pi.str() + " @ (";
      for (size_t i = 0; i < u.size(); ++i) name += (i ? "," : "") + frs(u[i]);
      name += ")";
      out.push_back({name, [pi, u]() -> Verdict {
                       auto rep = is_general_position(pi, u, trivial_alpha());
                       if (!rep.all())
                         return fail("unexpectedly not in general position: " + rep.str());
                       GLRep tw = twisted_product(pi, u);
                       Euler a = lin_L_via_derivatives(tw, trivial_alpha());
                       Euler b = lin_L_langlands(tw, trivial_alpha()).L;
                       return expect_equal(a, b, "derivative path vs product path");
                     }});
    }
  }
  // Degenerate instances: the report must flag a violated condition.
  {
    GLRep pi{{centered(uchar(zsym(1)), 1), centered(uchar(zsym(1)), 1)}};
    std::vector<Frac> u = {Frac(0), Frac(0)};
    out.push_back({"violation: duplicate characters", [pi, u]() -> Verdict {
                     auto rep = is_general_position(pi, u, trivial_alpha());
                     if (rep.all()) return fail("duplicate characters not flagged");
                     return pass();
                   }});
  }
  {
    GLRep pi{{Segment{uchar(zsym(1)), 2, Frac(-1, 2)}, Segment{uchar(zsym(1)), 2, Frac(-1, 2)}}};
    std::vector<Frac> u = {Frac(0), Frac(1)};
    out.push_back({"violation: linked segments", [pi, u]() -> Verdict {
                     auto rep = is_general_position(pi, u, trivial_alpha());
                     if (rep.cond[0]) return fail("linked derivative product not flagged");
                     return pass();
                   }});
  }
  {
    GLRep pi{{Segment{uchar(zsym(1)), 2, Frac(-1, 2)}, Segment{uchar(zsym(1)), 2, Frac(-1, 2)}}};
    std::vector<Frac> u = {Frac(0), Frac(0)};
    out.push_back({"violation: duplicate segments", [pi, u]() -> Verdict {
                     auto rep = is_general_position(pi, u, trivial_alpha());
                     if (rep.all()) return fail("duplicate segments not flagged");
                     return pass();
                   }});
  }
  return out;
}

// ---------------------------------------------------------------- suite 4

// Weight multiset of Sp(k): k-1, k-3, ..., -(k-1).
std::multiset<int> sp_weights(int k) {
  std::multiset<int> w;
  for (int i = 0; i < k; ++i) w.insert(k - 1 - 2 * i);
  return w;
}

// Brute-force SL2 decomposition: repeatedly strip the chain of the largest
// weight.
std::vector<int> sl2_decompose(std::multiset<int> w) {
  std::vector<int> ks;
  while (!w.empty()) {
    int top = *w.rbegin();
    int k = top + 1;
    for (int v = top; v >= -top; v -= 2) {
      auto it = w.find(v);
      if (it == w.end()) throw std::logic_error("weight multiset is not a sum of chains");
      w.erase(it);
    }
    ks.push_back(k);
  }
  std::sort(ks.begin(), ks.end(), std::greater<int>());
  return ks;
}

std::vector<int> cg_oracle(int a, int b) {
  std::multiset<int> w;
  for (int x : sp_weights(a))
    for (int y : sp_weights(b)) w.insert(x + y);
  return sl2_decompose(w);
}

std::vector<std::pair<std::string, Cuspidal>> square_atoms() {
  std::vector<std::pair<std::string, Cuspidal>> atoms;
  atoms.push_back({"z1", uchar(zsym(1))});
  atoms.push_back({"ram(z1,eta^2)",
                   Cuspidal::ramified_char(zsym(1), Label::generator("eta", 2))});
  atoms.push_back({"gl2-sympl", Cuspidal::abstract("sp2", 2, Monomial::one(), 1,
                                                   SelfDual{SelfDual::symplectic,
                                                            Monomial::one()})});
  atoms.push_back({"gl2-orth", Cuspidal::abstract("or2", 2, Monomial::one(), 1,
                                                  SelfDual{SelfDual::orthogonal,
                                                           Monomial::one()})});
  atoms.push_back({"gl3-orth", Cuspidal::abstract("or3", 3, Monomial::one(), 1,
                                                  SelfDual{SelfDual::orthogonal,
                                                           Monomial::one()})});
  atoms.push_back({"gl2-sympl@z3",
                   Cuspidal::abstract("sp2z", 2, zsym(3), 1,
                                      SelfDual{SelfDual::symplectic, zsym(3).pow(2)})});
  return atoms;
}

Euler atom_wedge_L(const Cuspidal& c) { return wedge2_L(WDRep({WDSummand{c, 1}})); }
Euler atom_sym_L(const Cuspidal& c) { return sym2_L(WDRep({WDSummand{c, 1}})); }

std::vector<Pending> build_tensor_square(int cap) {
  std::vector<Pending> out;
  const int maxdim = cap > 0 ? std::min(cap, 6) : 6;

  // (a) tensor-square law over character-atom parameters.
  const std::vector<Cuspidal> chars = {uchar(zsym(1)), uchar(zsym(2)),
                                       uchar(Monomial::zeta(1, 3) * zsym(1))};
  std::vector<WDSummand> items;
  for (int k = 1; k <= maxdim; ++k)
    for (const auto& c : chars) items.push_back(WDSummand{c, k});
  std::vector<WDSummand> cur;
  std::function<void(size_t, int)> rec = [&](size_t from, int left) {
    if (!cur.empty()) {
      WDRep tau(cur);
      out.push_back({"tensor-square dim " + std::to_string(tau.dim()) + ": " + tau.str(),
                     [tau]() -> Verdict {
                       Euler lhs = artin_L(tensor(tau, tau));
                       Euler rhs = artin_L(wedge2(tau)) * artin_L(sym2(tau));
                       return expect_equal(lhs, rhs, "L(tau x tau) vs wedge*sym");
                     }});
    }
    for (size_t i = from; i < items.size(); ++i) {
      if (items[i].k > left) continue;
      cur.push_back(items[i]);
      rec(i, left - items[i].k);
      cur.pop_back();
    }
  };
  rec(0, maxdim);

  // (b) Clebsch-Gordan against the weight-multiset oracle.
  for (int a = 1; a <= 8; ++a)
    for (int b = 1; b <= 8; ++b)
      out.push_back({"CG " + std::to_string(a) + "x" + std::to_string(b), [a, b]() -> Verdict {
                       auto got = clebsch_gordan(a, b);
                       auto want = cg_oracle(a, b);
                       if (got == want) return pass();
                       return fail("clebsch_gordan disagrees with the weight oracle");
                     }});

  // (c) wedge-square recursion and the literal product expansion.
  const int kcap = cap > 0 ? std::min(cap, 6) : 6;
  for (const auto& [aname, atom] : square_atoms()) {
    for (int k = 2; k * atom.r() <= std::max(kcap, 2 * atom.r()) && k <= kcap; ++k) {
      for (Frac u : {Frac(0), Frac(1, 2)}) {
        Segment d = centered(atom, k, u);
        out.push_back(
            {"wedge2 recursion k=" + std::to_string(k) + " " + aname + " u=" + frs(u),
             [d]() -> Verdict {
               Cuspidal rc = d.centered_cuspidal();
               Euler lhs = wedge2_L(langlands_param(d));
               auto der = derivative(d, d.rho.r());
               Euler tail = wedge2_L(langlands_param(*der.seg));
               Euler head = (d.k % 2 == 1) ? atom_wedge_L(rc) : atom_sym_L(rc);
               return expect_equal(lhs, head * tail, "wedge2 derivative recursion");
             }});
        out.push_back(
            {"wedge2 expansion k=" + std::to_string(k) + " " + aname + " u=" + frs(u),
             [d]() -> Verdict {
               Cuspidal rc = d.centered_cuspidal();
               Euler lhs = wedge2_L(langlands_param(d));
               Euler rhs = Euler::one();
               for (int i = 0; i <= (d.k - 1) / 2; ++i)
                 rhs = rhs * atom_wedge_L(rc).shift(Frac(d.k - 2 * i - 1));
               for (int j = 0; j <= d.k / 2 - 1; ++j)
                 rhs = rhs * atom_sym_L(rc).shift(Frac(d.k - 2 * j - 2));
               return expect_equal(lhs, rhs, "wedge2 literal expansion");
             }});
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------- suite 5

Euler pair_oracle(const Segment& a, const Segment& b) {
  Monomial zw = a.centered_cuspidal().twist() * b.centered_cuspidal().twist();
  Euler out = Euler::one();
  for (int i = 0; i < std::min(a.k, b.k); ++i)
    out = out * Euler::tate(zw * Monomial::q(Frac(0) - (Frac(a.k + b.k, 2) - 1 - i)));
  return out;
}

std::vector<Pending> build_pair_product(int cap) {
  std::vector<Pending> out;
  const int kmax = cap > 0 ? std::min(cap, 4) : 4;
  struct Inst {
    Monomial z, w;
    Frac u, v;
    std::string tag;
  };
  const std::vector<Inst> insts = {
      {zsym(1), zsym(2), Frac(0), Frac(0), "z1,z2"},
      {zsym(1), zsym(2), Frac(1, 2), Frac(0), "z1|.|^1/2,z2"},
      {zsym(1), zsym(2), Frac(10), Frac(1, 2), "z1|.|^10,z2|.|^1/2"},
      {zsym(1), zsym(1), Frac(0), Frac(21, 2), "z1,z1|.|^21/2"},
  };
  for (const auto& inst : insts) {
    for (int a = 1; a <= kmax; ++a) {
      for (int b = 1; b <= kmax; ++b) {
        Segment da = centered(uchar(inst.z), a, inst.u);
        Segment db = centered(uchar(inst.w), b, inst.v);
        out.push_back({"pair St_" + std::to_string(a) + " x St_" + std::to_string(b) + " (" +
                           inst.tag + ")",
                       [da, db]() -> Verdict {
                         Euler got = pair_L(da, db).L;
                         return expect_equal(got, pair_oracle(da, db), "pair product formula");
                       }});
        out.push_back({"pair divisibility St_" + std::to_string(a) + " x St_" +
                           std::to_string(b) + " (" + inst.tag + ")",
                       [da, db]() -> Verdict {
                         Euler full = pair_L(da, db).L;
                         for (int i = 0; i <= da.k; ++i) {
                           for (int j = 0; j <= db.k; ++j) {
                             if (i == 0 && j == 0) continue;
                             auto xa = derivative(da, i), xb = derivative(db, j);
                             if (xa.kind == SegDerivative::zero ||
                                 xb.kind == SegDerivative::zero)
                               continue;
                             if (xa.kind == SegDerivative::unit ||
                                 xb.kind == SegDerivative::unit)
                               continue;
                             Euler part = pair_L(*xa.seg, *xb.seg).L;
                             if (!part.divides(full))
                               return fail("derivative pair (" + std::to_string(i) + "," +
                                           std::to_string(j) + ") does not divide: " +
                                           part.str() + " vs " + full.str());
                           }
                         }
                         return pass();
                       }});
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------- suite 6

std::vector<std::pair<std::string, Cuspidal>> distinction_pool() {
  return {
      {"z1", uchar(zsym(1))},
      {"z1^-1", uchar(Monomial::symbol(1, Frac(-1)))},
      {"triv", uchar(Monomial::one())},
      {"quad", uchar(Monomial::minus_one())},
      {"ram", Cuspidal::ramified_char(Monomial::one(), Label::generator("eta", 2))},
      {"z2", uchar(zsym(2))},
  };
}

std::vector<Pending> build_distinction(int cap) {
  std::vector<Pending> out;
  const int maxn = cap > 0 ? std::min(cap, 6) : 6;
  auto pool = distinction_pool();
  struct Item {
    size_t ci;
    int k;
  };
  std::vector<Item> items;
  for (size_t ci = 0; ci < pool.size(); ++ci)
    for (int k = 1; k <= maxn; ++k) items.push_back({ci, k});
  std::vector<Item> cur;
  std::function<void(size_t, int)> rec = [&](size_t from, int left) {
    int total = 0;
    for (const auto& it : cur) total += it.k;
    // The symplectic comparison is an even-dimension statement.
    if (!cur.empty() && total % 2 == 0) {
      std::vector<Segment> segs;
      std::string name;
      for (const auto& it : cur) {
        segs.push_back(centered(pool[it.ci].second, it.k));
        name += (name.empty() ? "" : " x ") + std::string("St_") + std::to_string(it.k) + "(" +
                pool[it.ci].first + ")";
      }
      GLRep pi{segs};
      out.push_back({name, [pi]() -> Verdict {
                       return symplectic_equivalence_check(pi)
                                  ? pass()
                                  : fail("distinction and symplectic parameter disagree");
                     }});
    }
    for (size_t i = from; i < items.size(); ++i) {
      if (items[i].k > left) continue;
      cur.push_back(items[i]);
      rec(i, left - items[i].k);
      cur.pop_back();
    }
  };
  rec(0, maxn);
  return out;
}

// ---------------------------------------------------------------- suite 7

void compositions_rec(int left, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = 1; p <= left; ++p) {
    cur.push_back(p);
    compositions_rec(left - p, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> compositions_upto(int maxn) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  for (int n = 1; n <= maxn; ++n) compositions_rec(n, cur, out);
  return out;
}

// Closed form for delta(P_s^theta) * delta(P_s)^{-1/2} on the center.
TorusCharacter modulus_quotient_closed_form(const Subpartition& s) {
  TorusCharacter out;
  const size_t t = s.nbar.size();
  auto coord = [](size_t i, int sign) {
    return "l(" + std::to_string(i + 1) + "," + std::to_string(i + 1) + ")" +
           (sign > 0 ? "+" : "-");
  };
  for (size_t i = 0; i < t; ++i) {
    for (size_t j = i + 1; j < t; ++j) {
      Frac dj = Frac(s.diag_plus[j] - s.diag_minus[j], 2);
      Frac di = Frac(s.diag_plus[i] - s.diag_minus[i], 2);
      out.add(coord(i, +1), Frac(s.diag_plus[i]) * dj);
      out.add(coord(i, -1), Frac(-s.diag_minus[i]) * dj);
      out.add(coord(j, +1), Frac(-s.diag_plus[j]) * di);
      out.add(coord(j, -1), Frac(s.diag_minus[j]) * di);
    }
  }
  return out;
}

std::string comp_str(const std::vector<int>& nbar) {
  std::string out = "(";
  for (size_t i = 0; i < nbar.size(); ++i) out += (i ? "," : "") + std::to_string(nbar[i]);
  return out + ")";
}

std::vector<Pending> build_cosets(int cap) {
  std::vector<Pending> out;
  const int maxn = cap > 0 ? std::min(cap, 6) : 6;
  out.push_back({"|I((2))| = 1", []() -> Verdict {
                   auto v = enumerate_relevant({2});
                   return v.size() == 1 ? pass()
                                        : fail("got " + std::to_string(v.size()) + " elements");
                 }});
  out.push_back({"|I((1,1))| = 3", []() -> Verdict {
                   auto v = enumerate_relevant({1, 1});
                   return v.size() == 3 ? pass()
                                        : fail("got " + std::to_string(v.size()) + " elements");
                 }});
  for (const auto& nbar : compositions_upto(maxn)) {
    out.push_back({"modulus identities " + comp_str(nbar), [nbar]() -> Verdict {
                     for (const auto& s : enumerate_relevant(nbar)) {
                       auto lhs = modulus_character(CosetGroup::P, s) *
                                  modulus_character(CosetGroup::P_prime_s, s);
                       auto rhs = modulus_character(CosetGroup::P_s, s);
                       if (!(lhs == rhs))
                         return fail("factorization fails at s = " + s.str() + ": " +
                                     (lhs * rhs.inverse()).str());
                       auto quot = modulus_character(CosetGroup::P_s_theta, s) *
                                   modulus_character(CosetGroup::P_s, s).scaled(Frac(-1, 2));
                       auto closed = modulus_quotient_closed_form(s);
                       if (!(quot == closed))
                         return fail("quotient closed form fails at s = " + s.str() + ": got " +
                                     quot.str() + ", want " + closed.str());
                     }
                     return pass();
                   }});
    out.push_back({"reversal invariance " + comp_str(nbar), [nbar]() -> Verdict {
                     auto rev = nbar;
                     std::reverse(rev.begin(), rev.end());
                     size_t a = enumerate_relevant(nbar).size();
                     size_t b = enumerate_relevant(rev).size();
                     return a == b ? pass()
                                   : fail("counts differ: " + std::to_string(a) + " vs " +
                                          std::to_string(b));
                   }});
  }
  return out;
}

// ---------------------------------------------------------------- suite 8

std::vector<Pending> build_gamma(int cap) {
  std::vector<Pending> out;
  auto add_rep = [&](const std::string& name, const GLRep& pi) {
    out.push_back({"gamma " + name, [pi]() -> Verdict {
                     return gamma_ratio_check(pi, trivial_alpha())
                                ? pass()
                                : fail("gamma ratio is not a unit");
                   }});
  };
  const std::vector<Frac> us = {Frac(0), Frac(1, 2), Frac(-1, 2), Frac(1), Frac(-1)};
  for (int k = 1; k <= std::min(cap > 0 ? cap : 6, 6); ++k)
    for (Frac u : us) add_rep("St_" + std::to_string(k) + "(z1)|.|^" + frs(u),
                              GLRep{centered(uchar(zsym(1)), k, u)});
  Cuspidal rho = Cuspidal::abstract("rho0", 2, Monomial::one(), 1,
                                    SelfDual{SelfDual::symplectic, Monomial::one()});
  for (int k = 1; k <= 3; ++k) add_rep("St_" + std::to_string(k) + "(rho0)", GLRep{centered(rho, k)});
  const int maxn = cap > 0 ? std::min(cap, 8) : 8;
  for (const auto& shape : partitions_upto(maxn, 4)) {
    std::vector<Segment> segs;
    for (size_t i = 0; i < shape.size(); ++i)
      segs.push_back(centered(uchar(zsym(1 + (int)(i % 3))), shape[i], twist_pool()[i]));
    add_rep("product " + GLRep{segs}.str(), GLRep{segs});
  }
  for (const auto& shape : partitions_upto(std::min(maxn, 6), 3)) {
    std::vector<Segment> segs;
    for (size_t i = 0; i < shape.size(); ++i)
      segs.push_back(centered(uchar(zsym(1 + (int)i)), shape[i], Frac(i ? 10 * (int)i : 0) +
                                                                      Frac((int)i, 2)));
    add_rep("general " + GLRep{segs}.str(), GLRep{segs});
  }
  return out;
}

// ---------------------------------------------------------------- suite 9

struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}
  std::int64_t pick(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen);
  }
};

Monomial random_monomial(Rng& r, bool even) {
  static const int dens[] = {1, 2, 3, 4, 6};
  std::int64_t den = dens[r.pick(0, 4)];
  Monomial m = Monomial::zeta(r.pick(0, den - 1), den);
  std::int64_t step = even ? 2 : 1;
  m = m * Monomial::q(Frac(step * r.pick(-4, 4), 4));
  for (int id = 1; id <= 3; ++id)
    if (r.pick(0, 1)) m = m * Monomial::symbol(id, Frac(step * r.pick(-3, 3), 4));
  return m;
}

Euler random_euler(Rng& r, bool even) {
  Euler e = Euler::one();
  std::int64_t roots = r.pick(0, 4);
  for (std::int64_t i = 0; i < roots; ++i) {
    Monomial m = random_monomial(r, even);
    std::int64_t mult = r.pick(1, 3);
    for (std::int64_t j = 0; j < mult; ++j) e = e * Euler::tate(m);
  }
  return e;
}

Pending law(const std::string& name, unsigned seed, int trials,
            std::function<Verdict(Rng&)> one) {
  return {name + " (" + std::to_string(trials) + " trials)", [=]() -> Verdict {
            Rng r(seed);
            for (int i = 0; i < trials; ++i) {
              auto v = one(r);
              if (!v.first) return fail("trial " + std::to_string(i) + ": " + v.second);
            }
            return pass();
          }};
}

Verdict check(bool ok, const std::string& why) { return ok ? pass() : fail(why); }

std::vector<Pending> build_laws(int cap) {
  const int trials = cap > 0 && cap < 6 ? 200 : 1000;
  std::vector<Pending> out;
  unsigned seed = 20260826;
  auto next_seed = [&]() { return seed += 101; };

  out.push_back(law("monomial associativity", next_seed(), trials, [](Rng& r) {
    Monomial a = random_monomial(r, false), b = random_monomial(r, false),
             c = random_monomial(r, false);
    return check((a * b) * c == a * (b * c), "(ab)c != a(bc)");
  }));
  out.push_back(law("monomial commutativity", next_seed(), trials, [](Rng& r) {
    Monomial a = random_monomial(r, false), b = random_monomial(r, false);
    return check(a * b == b * a, "ab != ba");
  }));
  out.push_back(law("monomial inverse", next_seed(), trials, [](Rng& r) {
    Monomial a = random_monomial(r, false);
    return check((a * a.inverse()).is_one(), "a a^-1 != 1");
  }));
  out.push_back(law("monomial power", next_seed(), trials, [](Rng& r) {
    Monomial a = random_monomial(r, false);
    Monomial p = Monomial::one();
    for (int i = 0; i < 5; ++i) p = p * a;
    return check(a.pow(5) == p && a.pow(-3) * a.pow(3) == Monomial::one(), "power law fails");
  }));
  out.push_back(law("monomial sqrt section", next_seed(), trials, [](Rng& r) {
    Monomial a = random_monomial(r, true);
    return check(a.sqrt() * a.sqrt() == a, "sqrt(a)^2 != a");
  }));
  out.push_back(law("monomial real part additive", next_seed(), trials, [](Rng& r) {
    Monomial a = random_monomial(r, false), b = random_monomial(r, false);
    return check((a * b).real_part() == a.real_part() + b.real_part(), "Re not additive");
  }));
  out.push_back(law("monomial parse round-trip", next_seed(), trials, [](Rng& r) {
    Monomial a = random_monomial(r, false);
    return check(Monomial::parse(a.str()) == a, "parse(str(a)) != a for " + a.str());
  }));

  out.push_back(law("euler lcm laws", next_seed(), trials, [](Rng& r) {
    Euler a = random_euler(r, false), b = random_euler(r, false), c = random_euler(r, false);
    bool ok = Euler::lcm(a, b) == Euler::lcm(b, a) &&
              Euler::lcm(a, Euler::lcm(b, c)) == Euler::lcm(Euler::lcm(a, b), c) &&
              Euler::lcm(a, Euler::gcd(a, b)) == a;
    return check(ok, "lcm lattice law fails");
  }));
  out.push_back(law("euler gcd*lcm = product", next_seed(), trials, [](Rng& r) {
    Euler a = random_euler(r, false), b = random_euler(r, false);
    return check(Euler::gcd(a, b) * Euler::lcm(a, b) == a * b, "gcd*lcm != ab");
  }));
  out.push_back(law("euler divisibility", next_seed(), trials, [](Rng& r) {
    Euler a = random_euler(r, false), b = random_euler(r, false);
    bool ok = Euler::gcd(a, b).divides(a) && a.divides(Euler::lcm(a, b)) &&
              a.divides(a * b) && (a * b) / b == a;
    return check(ok, "divisibility law fails");
  }));
  out.push_back(law("euler shift homomorphism", next_seed(), trials, [](Rng& r) {
    Euler a = random_euler(r, false), b = random_euler(r, false);
    Frac c(r.pick(-6, 6), 2), d(r.pick(-6, 6), 2);
    bool ok = a.shift(c).shift(d) == a.shift(c + d) &&
              (a * b).shift(c) == a.shift(c) * b.shift(c) &&
              Euler::lcm(a, b).shift(c) == Euler::lcm(a.shift(c), b.shift(c));
    return check(ok, "shift homomorphism fails");
  }));
  out.push_back(law("euler dilate2 multiplicative", next_seed(), trials, [](Rng& r) {
    Euler a = random_euler(r, true), b = random_euler(r, true);
    return check((a * b).dilate2() == a.dilate2() * b.dilate2(), "dilate2 not multiplicative");
  }));
  out.push_back(law("euler dilate2 root pairing", next_seed(), trials, [](Rng& r) {
    Euler a = random_euler(r, true);
    Euler d = a.dilate2();
    if (d.degree() != 2 * a.degree()) return fail("dilate2 degree");
    for (const auto& [u, m] : a.roots()) {
      Monomial s = u.sqrt();
      if (d.multiplicity(s) < m || d.multiplicity(s * Monomial::minus_one()) < m)
        return fail("missing +-sqrt pair");
    }
    return pass();
  }));
  out.push_back(law("euler reflect involution", next_seed(), trials, [](Rng& r) {
    Euler a = random_euler(r, false);
    Frac c(r.pick(-4, 4));
    return check(a.reflect(c).reflect(c) == a, "reflect not involutive");
  }));
  out.push_back(law("euler parse round-trip", next_seed(), trials, [](Rng& r) {
    Euler a = random_euler(r, false);
    return check(Euler::parse(a.str()) == a, "parse(str(a)) != a for " + a.str());
  }));
  return out;
}

std::vector<Pending> build(const std::string& name, int max_n) {
  if (name == "main-theorem") return build_main_theorem(max_n > 0 ? max_n : 6);
  if (name == "products") return build_products(max_n);
  if (name == "two-path") return build_two_path(max_n);
  if (name == "tensor-square") return build_tensor_square(max_n);
  if (name == "pair-product") return build_pair_product(max_n);
  if (name == "distinction") return build_distinction(max_n);
  if (name == "cosets") return build_cosets(max_n);
  if (name == "gamma") return build_gamma(max_n);
  if (name == "laws") return build_laws(max_n);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

SuiteCase evaluate(const Pending& p) {
  SuiteCase c;
  c.name = p.name;
  try {
    auto [ok, detail] = p.eval();
    c.pass = ok;
    c.detail = detail;
  } catch (const std::exception& ex) {
    c.pass = false;
    c.detail = std::string("exception: ") + ex.what();
  }
  return c;
}

}  // namespace

bool SuiteResult::pass() const {
  for (const auto& c : cases)
    if (!c.pass) return false;
  return true;
}

std::size_t SuiteResult::failures() const {
  std::size_t n = 0;
  for (const auto& c : cases)
    if (!c.pass) ++n;
  return n;
}

std::string SuiteResult::summary() const {
  std::ostringstream os;
  os << suite << ": " << cases.size() << " cases, " << failures() << " failures";
  return os.str();
}

std::vector<std::string> suite_names() {
  return {"main-theorem", "products",    "two-path", "tensor-square", "pair-product",
          "distinction",  "cosets",      "gamma",    "laws"};
}

SuiteResult run_suite_serial(const std::string& name, int max_n) {
  auto pending = build(name, max_n);
  SuiteResult res;
  res.suite = name;
  res.cases.reserve(pending.size());
  for (const auto& p : pending) res.cases.push_back(evaluate(p));
  return res;
}

SuiteResult run_suite_parallel(const std::string& name, int max_n, int jobs) {
  auto pending = build(name, max_n);
  SuiteResult res;
  res.suite = name;
  res.cases.resize(pending.size());
#if defined(_OPENMP)
  int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long i = 0; i < (long)pending.size(); ++i) res.cases[i] = evaluate(pending[i]);
#else
  (void)jobs;
  for (std::size_t i = 0; i < pending.size(); ++i) res.cases[i] = evaluate(pending[i]);
#endif
  return res;
}

}  // namespace lff
