#include "lff/galois.hpp"

#include <algorithm>
#include <stdexcept>

namespace lff {

std::string WDSummand::str() const {
  return "(" + atom.str() + ") (x) Sp(" + std::to_string(k) + ")";
}

WDRep::WDRep(std::vector<WDSummand> s) : summands(std::move(s)) {
  std::sort(summands.begin(), summands.end(),
            [](const WDSummand& a, const WDSummand& b) { return a.key() < b.key(); });
}

int WDRep::dim() const {
  int n = 0;
  for (auto& s : summands) n += s.dim();
  return n;
}

WDRep WDRep::dual() const {
  std::vector<WDSummand> out;
  for (auto& s : summands) out.push_back(s.dual());
  return WDRep(std::move(out));
}

WDRep WDRep::direct_sum(const WDRep& o) const {
  std::vector<WDSummand> out = summands;
  out.insert(out.end(), o.summands.begin(), o.summands.end());
  return WDRep(std::move(out));
}

bool WDRep::operator==(const WDRep& o) const {
  if (summands.size() != o.summands.size()) return false;
  for (size_t i = 0; i < summands.size(); ++i)
    if (summands[i].key() != o.summands[i].key()) return false;
  return true;
}

std::string WDRep::str() const {
  if (summands.empty()) return "0";
  std::string out = summands[0].str();
  for (size_t i = 1; i < summands.size(); ++i) out += " (+) " + summands[i].str();
  return out;
}

WDRep WDRep::parse(const std::string& text,
                   const std::function<Cuspidal(const std::string&)>& resolve_base) {
  std::vector<WDSummand> out;
  if (text == "0") return WDRep(std::move(out));
  size_t pos = 0;
  while (pos < text.size()) {
    size_t open = text.find('(', pos);
    if (open == std::string::npos) throw std::invalid_argument("bad summand in '" + text + "'");
    // The atom rendering may itself contain parentheses; match to the ") (x)".
    size_t close = text.find(") (x) Sp(", open);
    if (close == std::string::npos) throw std::invalid_argument("bad summand in '" + text + "'");
    std::string atom_text = text.substr(open + 1, close - open - 1);
    size_t kpos = close + 9;
    size_t kend = text.find(')', kpos);
    if (kend == std::string::npos) throw std::invalid_argument("bad Sp(k) in '" + text + "'");
    int k = std::stoi(text.substr(kpos, kend - kpos));
    Cuspidal atom = Cuspidal::unramified_char(Monomial::one());
    bool plain = atom_text.find('{') == std::string::npos && atom_text.find('#') == std::string::npos;
    if (plain) {
      atom = Cuspidal::unramified_char(Monomial::parse(atom_text));
    } else if (resolve_base) {
      atom = resolve_base(atom_text);
    } else {
      throw std::invalid_argument("atom '" + atom_text + "' needs a resolver");
    }
    out.push_back({atom, k});
    pos = kend + 1;
    size_t next = text.find(" (+) ", pos);
    pos = next == std::string::npos ? text.size() : next + 5;
  }
  return WDRep(std::move(out));
}

std::vector<int> clebsch_gordan(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("Sp(k) needs k >= 1");
  std::vector<int> out;
  for (int j = 0; j < std::min(a, b); ++j) out.push_back(a + b - 1 - 2 * j);
  return out;
}

std::vector<int> wedge2_sp(int k) {
  std::vector<int> out;
  for (int j = 2 * k - 3; j >= 1; j -= 4) out.push_back(j);
  return out;
}

std::vector<int> sym2_sp(int k) {
  std::vector<int> out;
  for (int j = 2 * k - 1; j >= 1; j -= 4) out.push_back(j);
  return out;
}

WDRep langlands_param(const Segment& d) { return WDRep({{d.centered_cuspidal(), d.k}}); }

WDRep langlands_param(const GLRep& pi) {
  std::vector<WDSummand> out;
  for (auto& d : pi.segs) out.push_back({d.centered_cuspidal(), d.k});
  return WDRep(std::move(out));
}

namespace {

Cuspidal atom_tensor(const Cuspidal& a, const Cuspidal& b) {
  if (a.is_char()) return b.twisted_by_char(a);
  if (b.is_char()) return a.twisted_by_char(b);
  throw std::domain_error("tensor of two r >= 2 atoms has no declared decomposition");
}

}  // namespace

WDRep tensor(const WDRep& a, const WDRep& b) {
  std::vector<WDSummand> out;
  for (auto& x : a.summands)
    for (auto& y : b.summands) {
      Cuspidal atom = atom_tensor(x.atom, y.atom);
      for (int k : clebsch_gordan(x.k, y.k)) out.push_back({atom, k});
    }
  return WDRep(std::move(out));
}

namespace {

Cuspidal char_square(const Cuspidal& c) {
  if (!c.is_char()) throw std::domain_error("representation-level wedge/sym squares need character atoms");
  return Cuspidal::ramified_char(c.twist().pow(2), c.label().pow(2));
}

Cuspidal char_product(const Cuspidal& a, const Cuspidal& b) {
  if (!a.is_char() || !b.is_char())
    throw std::domain_error("representation-level wedge/sym squares need character atoms");
  return Cuspidal::ramified_char(a.twist() * b.twist(), a.label() * b.label());
}

WDRep square_rep(const WDRep& a, bool wedge) {
  std::vector<WDSummand> out;
  for (auto& s : a.summands) {
    Cuspidal sq = char_square(s.atom);
    for (int j : wedge ? wedge2_sp(s.k) : sym2_sp(s.k)) out.push_back({sq, j});
  }
  for (size_t i = 0; i < a.summands.size(); ++i)
    for (size_t j = i + 1; j < a.summands.size(); ++j) {
      Cuspidal pr = char_product(a.summands[i].atom, a.summands[j].atom);
      for (int k : clebsch_gordan(a.summands[i].k, a.summands[j].k)) out.push_back({pr, k});
    }
  return WDRep(std::move(out));
}

}  // namespace

WDRep wedge2(const WDRep& a) { return square_rep(a, true); }
WDRep sym2(const WDRep& a) { return square_rep(a, false); }

Euler artin_L(const WDRep& a) {
  Euler out = Euler::one();
  for (auto& s : a.summands) {
    Monomial shift = Monomial::q(-Frac(s.k - 1, 2));
    for (auto& u : s.atom.standard_roots()) out = out * Euler::tate(u * shift);
  }
  return out;
}

namespace {

Euler roots_at_depths(const std::vector<Monomial>& roots, const std::vector<int>& sps) {
  Euler out = Euler::one();
  for (int j : sps) {
    Monomial shift = Monomial::q(-Frac(j - 1, 2));
    for (auto& u : roots) out = out * Euler::tate(u * shift);
  }
  return out;
}

}  // namespace

Euler tensor_L(const WDSummand& a, const WDSummand& b) {
  return roots_at_depths(a.atom.tensor_pole_roots(b.atom), clebsch_gordan(a.k, b.k));
}

namespace {

Euler square_L(const WDRep& a, bool wedge) {
  Euler out = Euler::one();
  for (auto& s : a.summands) {
    // wedge^2(V (x) Sp(k)) = Sym^2 V (x) wedge^2 Sp(k) (+) wedge^2 V (x) Sym^2 Sp(k).
    const auto with = wedge ? s.atom.sym_pole_roots() : s.atom.wedge_pole_roots();
    const auto against = wedge ? s.atom.wedge_pole_roots() : s.atom.sym_pole_roots();
    out = out * roots_at_depths(with, wedge2_sp(s.k));
    out = out * roots_at_depths(against, sym2_sp(s.k));
  }
  for (size_t i = 0; i < a.summands.size(); ++i)
    for (size_t j = i + 1; j < a.summands.size(); ++j)
      out = out * tensor_L(a.summands[i], a.summands[j]);
  return out;
}

}  // namespace

Euler wedge2_L(const WDRep& a) { return square_L(a, true); }
Euler sym2_L(const WDRep& a) { return square_L(a, false); }

bool atom_selfdual_symplectic(const Cuspidal& atom) {
  return atom.r() >= 2 && atom.selfdual() && atom.selfdual()->kind == SelfDual::symplectic &&
         atom.dual() == atom;
}

bool atom_selfdual_orthogonal(const Cuspidal& atom) {
  if (!(atom.dual() == atom)) return false;
  if (atom.r() == 1) return true;
  return atom.selfdual() && atom.selfdual()->kind == SelfDual::orthogonal;
}

namespace {

bool summand_symplectic(const WDSummand& s) {
  if (atom_selfdual_symplectic(s.atom)) return s.k % 2 == 1;
  if (atom_selfdual_orthogonal(s.atom)) return s.k % 2 == 0;
  return false;
}

bool match_rec(const std::vector<WDSummand>& ss, std::vector<bool>& used) {
  size_t i = 0;
  while (i < ss.size() && used[i]) ++i;
  if (i == ss.size()) return true;
  used[i] = true;
  if (summand_symplectic(ss[i]) && match_rec(ss, used)) return true;
  auto dual_key = ss[i].dual().key();
  for (size_t j = i + 1; j < ss.size(); ++j) {
    if (used[j] || ss[j].key() != dual_key) continue;
    used[j] = true;
    if (match_rec(ss, used)) return true;
    used[j] = false;
  }
  used[i] = false;
  return false;
}

}  // namespace

bool fixes_symplectic_form(const WDRep& a) {
  std::vector<bool> used(a.summands.size(), false);
  return match_rec(a.summands, used);
}

}  // namespace lff
