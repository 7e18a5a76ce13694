#include "lff/pairs.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lff {

// Comparing leading cuspidals of b and of a^vee (x) chi_u reduces the
// segment equation to the trailing cuspidal of a, i.e. rho |.|^{e+k-1}.
std::vector<Monomial> segment_dual_twist_roots(const Segment& a, const Segment& b) {
  if (a.k != b.k || a.rho.r() != b.rho.r()) return {};
  Cuspidal trailing = a.rho.twisted(a.e + Frac(a.k - 1));
  return trailing.tensor_pole_roots(b.leading());
}

namespace {

void collect_bijection_roots(const GLRep& pi, const GLRep& pip, size_t idx,
                             std::vector<bool>& used, std::vector<Monomial>& current,
                             std::set<Monomial>& out) {
  if (idx == pi.segs.size()) {
    out.insert(current.begin(), current.end());
    return;
  }
  for (size_t j = 0; j < pip.segs.size(); ++j) {
    if (used[j]) continue;
    std::vector<Monomial> roots = segment_dual_twist_roots(pi.segs[idx], pip.segs[j]);
    if (roots.empty()) continue;
    std::vector<Monomial> next;
    if (idx == 0) {
      next = roots;
    } else {
      for (auto& u : current)
        if (std::find(roots.begin(), roots.end(), u) != roots.end()) next.push_back(u);
    }
    if (next.empty()) continue;
    used[j] = true;
    std::swap(current, next);
    collect_bijection_roots(pi, pip, idx + 1, used, current, out);
    std::swap(current, next);
    used[j] = false;
  }
}

}  // namespace

Euler exceptional_pole_roots(const GLRep& pi, const GLRep& pip) {
  if (!is_generic(pi) || !is_generic(pip))
    throw std::invalid_argument("exceptional poles are only defined for generic products here");
  if (pi.dim() != pip.dim() || pi.dim() == 0) return Euler::one();
  if (pi.segs.size() != pip.segs.size()) return Euler::one();
  std::set<Monomial> roots;
  std::vector<bool> used(pip.segs.size(), false);
  std::vector<Monomial> current;
  collect_bijection_roots(pi, pip, 0, used, current, roots);
  Euler out = Euler::one();
  for (auto& u : roots) out = out * Euler::tate(u);
  return out;
}

namespace {

PairLResult assemble(const GLRep& pi, const GLRep& pip) {
  Euler L0 = Euler::one();
  int n = pi.dim(), m = pip.dim();
  for (int a = 0; a <= n; ++a) {
    auto left = derivative_components(pi, a);
    for (int b = 0; b <= m; ++b) {
      if (a == 0 && b == 0) continue;
      auto right = derivative_components(pip, b);
      for (auto& tau : left)
        for (auto& taup : right)
          L0 = Euler::lcm(L0, exceptional_pole_roots(tau, taup));
    }
  }
  PairLResult res;
  res.L0 = L0;
  res.Lex = exceptional_pole_roots(pi, pip);
  res.Lradex = res.Lex;
  res.L = res.L0 * res.Lradex;
  return res;
}

}  // namespace

PairLResult pair_L(const Segment& a, const Segment& b) { return assemble(GLRep(a), GLRep(b)); }

PairLResult pair_L_rep(const GLRep& pi, const GLRep& pip) {
  if (!is_generic(pi) || !is_generic(pip))
    throw std::invalid_argument("pair factor needs generic products");
  if (!has_completely_reducible_derivatives(pi) || !has_completely_reducible_derivatives(pip))
    throw std::domain_error("pair factor recursion needs completely reducible derivatives");
  return assemble(pi, pip);
}

}  // namespace lff
