#include "lff/distinction.hpp"

#include <algorithm>
#include <stdexcept>

namespace lff {

namespace {

bool trivial_alpha(const Cuspidal& alpha) {
  return alpha.is_unramified_char() && alpha.twist().is_one();
}

bool contains_one(const std::vector<Monomial>& roots) {
  return std::find(roots.begin(), roots.end(), Monomial::one()) != roots.end();
}

}  // namespace

bool is_distinguished_discrete(const Segment& d, const Cuspidal& alpha) {
  if (d.dim() % 2 != 0) return false;
  if (d.central_character().real_part() != Frac(0)) return false;
  if (!trivial_alpha(alpha))
    throw std::domain_error("no distinction criterion is known for a nontrivial period character");
  Cuspidal c = d.centered_cuspidal();
  return d.k % 2 == 1 ? contains_one(c.wedge_pole_roots()) : contains_one(c.sym_pole_roots());
}

namespace {

struct Search {
  const GLRep& pi;
  const Cuspidal& alpha;
  bool alpha_trivial;
  bool needed_unavailable_criterion = false;
  DistinctionCertificate cert;

  explicit Search(const GLRep& p, const Cuspidal& a)
      : pi(p), alpha(a), alpha_trivial(trivial_alpha(a)) {}

  bool run(std::vector<bool>& used) {
    std::size_t i = 0;
    while (i < used.size() && used[i]) ++i;
    if (i == used.size()) return true;
    used[i] = true;
    Segment dual_i = pi.segs[i].dual();
    for (std::size_t j = i + 1; j < used.size(); ++j) {
      if (used[j] || !(pi.segs[j] == dual_i)) continue;
      used[j] = true;
      cert.pairing.push_back({i, j});
      if (run(used)) return true;
      cert.pairing.pop_back();
      used[j] = false;
    }
    if (alpha_trivial) {
      if (is_distinguished_discrete(pi.segs[i], alpha)) {
        cert.rest.push_back({i, pi.segs[i].k, pi.segs[i].k % 2 == 1});
        if (run(used)) return true;
        cert.rest.pop_back();
      }
    } else {
      needed_unavailable_criterion = true;
    }
    used[i] = false;
    return false;
  }
};

}  // namespace

std::optional<DistinctionCertificate> classify_generic(const GLRep& pi, const Cuspidal& alpha) {
  if (!is_generic(pi)) throw std::invalid_argument("classification needs a generic product");
  if (!alpha.is_char()) throw std::invalid_argument("the period character must live on GL(1)");
  Frac re = alpha.twist().real_part();
  if (re < Frac(-1, 2) || Frac(1, 2) < re)
    throw std::invalid_argument("period character real part out of [-1/2, 1/2]");

  if (pi.dim() % 2 == 1) {
    // A product of odd dimension is distinguished (under chi_{alpha |.|^{-1/2}})
    // exactly when it splits off the character alpha |.|^{-1/2}.
    Cuspidal tail = alpha.twisted(Frac(-1, 2));
    for (std::size_t i = 0; i < pi.segs.size(); ++i) {
      const Segment& s = pi.segs[i];
      if (s.k != 1 || !(s.leading() == tail)) continue;
      GLRep rest;
      for (std::size_t j = 0; j < pi.segs.size(); ++j)
        if (j != i) rest.segs.push_back(pi.segs[j]);
      auto sub = classify_generic(rest, alpha);
      if (!sub) continue;
      DistinctionCertificate cert;
      cert.odd_tail = i;
      auto lift = [&](std::size_t idx) { return idx < i ? idx : idx + 1; };
      for (auto& [a, b] : sub->pairing) cert.pairing.push_back({lift(a), lift(b)});
      for (auto& r : sub->rest) cert.rest.push_back({lift(r.index), r.k, r.wedge_side});
      return cert;
    }
    return std::nullopt;
  }

  Search search(pi, alpha);
  std::vector<bool> used(pi.segs.size(), false);
  if (search.run(used)) return search.cert;
  if (search.needed_unavailable_criterion)
    throw std::domain_error("classification under this period character needs an undeclared criterion");
  return std::nullopt;
}

bool symplectic_equivalence_check(const GLRep& pi) {
  if (!is_generic(pi)) throw std::invalid_argument("symplectic comparison needs a generic product");
  if (pi.dim() % 2 != 0) throw std::invalid_argument("symplectic comparison needs even dimension");
  for (auto& s : pi.segs)
    if (s.central_character().real_part() != Frac(0))
      throw std::invalid_argument("symplectic comparison needs unitary segments");
  Cuspidal triv = Cuspidal::unramified_char(Monomial::one());
  bool dist = classify_generic(pi, triv).has_value();
  return dist == fixes_symplectic_form(langlands_param(pi));
}

std::string DistinctionCertificate::str(const GLRep& pi) const {
  std::string out;
  for (auto& [i, j] : pairing) {
    if (!out.empty()) out += "; ";
    out += "dual pair (" + pi.segs[i].str() + ", " + pi.segs[j].str() + ")";
  }
  for (auto& r : rest) {
    if (!out.empty()) out += "; ";
    out += pi.segs[r.index].str();
    out += r.wedge_side ? " [k odd, wedge-square pole at 0]" : " [k even, sym-square pole at 0]";
  }
  if (odd_tail) {
    if (!out.empty()) out += "; ";
    out += "split character " + pi.segs[*odd_tail].str();
  }
  if (out.empty()) out = "empty product";
  return out;
}

}  // namespace lff
