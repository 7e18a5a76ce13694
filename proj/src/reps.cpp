#include "lff/reps.hpp"

#include <algorithm>
#include <stdexcept>

namespace lff {

Label Label::operator*(const Label& o) const {
  Label r = *this;
  for (auto& [name, eo] : o.gens) {
    auto it = r.gens.find(name);
    if (it == r.gens.end()) {
      r.gens[name] = eo;
    } else {
      if (it->second.second != eo.second)
        throw std::invalid_argument("label generator '" + name + "' declared with two different orders");
      int e = (it->second.first + eo.first) % eo.second;
      if (e == 0) r.gens.erase(it);
      else it->second.first = e;
    }
  }
  return r;
}

Label Label::inverse() const {
  Label r;
  for (auto& [name, eo] : gens) r.gens[name] = {(eo.second - eo.first) % eo.second, eo.second};
  return r;
}

Label Label::pow(int k) const {
  Label r;
  for (auto& [name, eo] : gens) {
    int e = static_cast<int>(((static_cast<long long>(eo.first) * k) % eo.second + eo.second) % eo.second);
    if (e != 0) r.gens[name] = {e, eo.second};
  }
  return r;
}

std::string Label::str() const {
  if (gens.empty()) return "1";
  std::string out;
  for (auto& [name, eo] : gens) {
    if (!out.empty()) out += "*";
    out += name + "^" + std::to_string(eo.first);
  }
  return out;
}

Label Label::generator(const std::string& name, int order, int exp) {
  if (order < 2) throw std::invalid_argument("label generator order must be >= 2");
  Label l;
  exp = ((exp % order) + order) % order;
  if (exp != 0) l.gens[name] = {exp, order};
  return l;
}

void Cuspidal::normalize_twist() {
  if (torsion_ <= 1) return;
  Monomial best = twist_;
  for (auto& m : torsion_pack(twist_, torsion_))
    if (m < best) best = m;
  twist_ = best;
}

Cuspidal Cuspidal::unramified_char(const Monomial& satake) {
  Cuspidal c;
  c.base_ = "unramified-char";
  c.r_ = 1;
  c.twist_ = satake;
  c.base_central_ = Monomial::one();
  return c;
}

Cuspidal Cuspidal::ramified_char(const Monomial& satake, const Label& label) {
  if (label.trivial()) return unramified_char(satake);
  Cuspidal c;
  c.base_ = "char";
  c.r_ = 1;
  c.twist_ = satake;
  c.label_ = label;
  c.base_central_ = Monomial::one();
  return c;
}

Cuspidal Cuspidal::abstract(std::string base, int r, const Monomial& twist, int torsion,
                            std::optional<SelfDual> selfdual, const Monomial& base_central) {
  if (r < 2) throw std::invalid_argument("abstract cuspidal bases need r >= 2; declare a char instead");
  if (torsion < 1 || r % torsion != 0)
    throw std::invalid_argument("self-twist torsion must divide r");
  if (selfdual && selfdual->kind == SelfDual::symplectic && r % 2 != 0)
    throw std::invalid_argument("a symplectic self-dual cuspidal lives on even GL(r)");
  Cuspidal c;
  c.base_ = std::move(base);
  c.r_ = r;
  c.twist_ = twist;
  c.torsion_ = torsion;
  c.selfdual_ = std::move(selfdual);
  c.base_central_ = base_central;
  c.normalize_twist();
  return c;
}

Monomial Cuspidal::central() const {
  if (r_ == 1) return twist_;
  return base_central_ * twist_.pow(r_);
}

Cuspidal Cuspidal::dual() const {
  Cuspidal d = *this;
  d.twist_ = twist_.inverse();
  if (r_ == 1) {
    d.label_ = label_.inverse();
    return d;
  }
  if (selfdual_) {
    d.twist_ = selfdual_->at * twist_.inverse();
  } else {
    d.base_ = base_.ends_with("^") ? base_.substr(0, base_.size() - 1) : base_ + "^";
    d.base_central_ = base_central_.inverse();
  }
  for (auto& u : d.wedge_decl_) u = u.inverse();
  for (auto& u : d.sym_decl_) u = u.inverse();
  for (auto& u : d.std_decl_) u = u.inverse();
  d.pair_decl_.clear();
  d.normalize_twist();
  return d;
}

Cuspidal Cuspidal::twisted(Frac c) const {
  Cuspidal t = *this;
  t.twist_ = twist_ * Monomial::q(-c);
  t.normalize_twist();
  return t;
}

Cuspidal Cuspidal::twisted_by_char(const Cuspidal& chi) const {
  if (chi.r_ != 1) throw std::invalid_argument("can only twist by a character");
  Cuspidal t = *this;
  t.twist_ = twist_ * chi.twist_;
  if (r_ == 1) {
    t.label_ = label_ * chi.label_;
    t.base_ = t.label_.trivial() ? "unramified-char" : "char";
  } else if (!chi.label_.trivial()) {
    throw std::invalid_argument("twisting an abstract cuspidal by a ramified character is not modeled");
  }
  t.normalize_twist();
  return t;
}

std::vector<Monomial> Cuspidal::twist_solutions(const Cuspidal& o) const {
  if (!same_base(o)) return {};
  return torsion_pack(twist_ / o.twist_, torsion_);
}

std::vector<Monomial> Cuspidal::tensor_pole_roots(const Cuspidal& o) const {
  std::vector<Monomial> roots = o.twist_solutions(dual());
  auto add_declared = [&](const Cuspidal& a, const Cuspidal& b) {
    auto it = a.pair_decl_.find(b.base_);
    if (it == a.pair_decl_.end()) return;
    for (auto& u : it->second) {
      Monomial v = u * a.twist_ * b.twist_;
      if (std::find(roots.begin(), roots.end(), v) == roots.end()) roots.push_back(v);
    }
  };
  add_declared(*this, o);
  add_declared(o, *this);
  return roots;
}

std::vector<Monomial> Cuspidal::wedge_pole_roots() const {
  if (r_ == 1) return {};
  if (declared_wedge_sym_) {
    std::vector<Monomial> out;
    for (auto& u : wedge_decl_) out.push_back(u * twist_.pow(2));
    return out;
  }
  if (!selfdual_) return {};
  if (torsion_ != 1)
    throw std::domain_error("wedge/sym pole data of a self-dual base with torsion > 1 must be declared");
  if (selfdual_->kind != SelfDual::symplectic) return {};
  return {twist_.pow(2) / selfdual_->at};
}

std::vector<Monomial> Cuspidal::sym_pole_roots() const {
  if (r_ == 1) {
    if (!label_.pow(2).trivial()) return {};
    return {twist_.pow(2)};
  }
  if (declared_wedge_sym_) {
    std::vector<Monomial> out;
    for (auto& u : sym_decl_) out.push_back(u * twist_.pow(2));
    return out;
  }
  if (!selfdual_) return {};
  if (torsion_ != 1)
    throw std::domain_error("wedge/sym pole data of a self-dual base with torsion > 1 must be declared");
  if (selfdual_->kind != SelfDual::orthogonal) return {};
  return {twist_.pow(2) / selfdual_->at};
}

std::vector<Monomial> Cuspidal::standard_roots() const {
  if (r_ == 1) return label_.trivial() ? std::vector<Monomial>{twist_} : std::vector<Monomial>{};
  std::vector<Monomial> out;
  for (auto& u : std_decl_) out.push_back(u * twist_);
  return out;
}

void Cuspidal::declare_wedge_sym(std::vector<Monomial> wedge, std::vector<Monomial> sym) {
  if (r_ == 1) throw std::invalid_argument("wedge/sym pole data of characters is derived, not declared");
  declared_wedge_sym_ = true;
  wedge_decl_ = std::move(wedge);
  sym_decl_ = std::move(sym);
}

void Cuspidal::declare_standard(std::vector<Monomial> roots) {
  if (r_ == 1) throw std::invalid_argument("standard L data of characters is derived, not declared");
  std_decl_ = std::move(roots);
}

void Cuspidal::declare_pair_atoms(const std::string& other_base, std::vector<Monomial> roots) {
  pair_decl_[other_base] = std::move(roots);
}

std::string Cuspidal::str() const {
  if (r_ == 1) {
    std::string s = twist_.str();
    if (!label_.trivial()) s += " # " + label_.str();
    return s;
  }
  return base_ + "{" + twist_.str() + "}";
}

Monomial Segment::central_character() const {
  Frac ex = Frac(rho.r()) * (Frac(k) * e + Frac(static_cast<std::int64_t>(k) * (k - 1), 2));
  return rho.central().pow(k) * Monomial::q(-ex);
}

Segment Segment::dual() const { return {rho.dual(), k, -e - Frac(k - 1)}; }

std::string Segment::str() const {
  if (k == 1) return "[" + leading().str() + "]";
  return "St_" + std::to_string(k) + "(" + centered_cuspidal().str() + ")";
}

SegDerivative derivative(const Segment& d, int l) {
  if (l < 0 || l > d.dim()) throw std::out_of_range("derivative order out of range");
  if (l % d.rho.r() != 0) return {SegDerivative::zero, std::nullopt};
  int i = l / d.rho.r();
  if (i == d.k) return {SegDerivative::unit, std::nullopt};
  return {SegDerivative::segment, Segment{d.rho, d.k - i, d.e + Frac(i)}};
}

int GLRep::dim() const {
  int n = 0;
  for (auto& s : segs) n += s.dim();
  return n;
}

Monomial GLRep::central_character() const {
  Monomial c = Monomial::one();
  for (auto& s : segs) c = c * s.central_character();
  return c;
}

GLRep GLRep::dual() const {
  GLRep d;
  for (auto it = segs.rbegin(); it != segs.rend(); ++it) d.segs.push_back(it->dual());
  return d;
}

GLRep GLRep::twisted(Frac u) const {
  GLRep t = *this;
  for (auto& s : t.segs) s = s.twisted(u);
  return t;
}

std::vector<Segment::Key> GLRep::sorted_keys() const {
  std::vector<Segment::Key> keys;
  for (auto& s : segs) keys.push_back(s.key());
  std::sort(keys.begin(), keys.end());
  return keys;
}

bool GLRep::isomorphic(const GLRep& o) const { return sorted_keys() == o.sorted_keys(); }

std::string GLRep::str() const {
  if (segs.empty()) return "1";
  std::string out = segs[0].str();
  for (size_t i = 1; i < segs.size(); ++i) out += " x " + segs[i].str();
  return out;
}

bool are_linked(const Segment& A, const Segment& B) {
  Cuspidal a = A.leading(), b = B.leading();
  if (!a.same_base(b)) return false;
  Monomial ratio = b.twist() / a.twist();
  if (!ratio.symbol_exps().empty()) return false;
  Frac qe = ratio.q_exp();
  if (!qe.is_integer()) return false;
  std::int64_t c = -qe.num;  // b ~ a |.|^c
  Monomial zpart = ratio * Monomial::q(-qe);
  bool in_pack = false;
  for (auto& z : torsion_pack(Monomial::one(), a.torsion()))
    if (z == zpart) { in_pack = true; break; }
  if (!in_pack) return false;
  auto interval_linked = [](std::int64_t x0, std::int64_t x1, std::int64_t y0, std::int64_t y1) {
    return x0 < y0 && y0 <= x1 + 1 && y1 > x1;
  };
  std::int64_t a1 = A.k - 1, b0 = c, b1 = c + B.k - 1;
  return interval_linked(0, a1, b0, b1) || interval_linked(b0, b1, 0, a1);
}

bool is_generic(const GLRep& pi) {
  for (size_t i = 0; i < pi.segs.size(); ++i)
    for (size_t j = i + 1; j < pi.segs.size(); ++j)
      if (are_linked(pi.segs[i], pi.segs[j])) return false;
  return true;
}

namespace {

// Re(central character) descending, then length descending, then text.
bool langlands_before(const Segment& a, const Segment& b) {
  Frac ra = a.central_character().real_part(), rb = b.central_character().real_part();
  if (ra != rb) return rb < ra;
  if (a.k != b.k) return b.k < a.k;
  return a.str() < b.str();
}

}  // namespace

GLRep langlands_sort(const GLRep& pi) {
  GLRep s = pi;
  std::stable_sort(s.segs.begin(), s.segs.end(), langlands_before);
  return s;
}

bool is_langlands_ordered(const GLRep& pi) {
  for (size_t i = 0; i + 1 < pi.segs.size(); ++i) {
    Frac ra = pi.segs[i].central_character().real_part();
    Frac rb = pi.segs[i + 1].central_character().real_part();
    if (ra < rb) return false;
  }
  return true;
}

std::vector<GLRep> derivative_components(const GLRep& pi, int l) {
  if (l < 0 || l > pi.dim()) throw std::out_of_range("derivative order out of range");
  std::vector<GLRep> out;
  std::vector<Segment> cur;
  auto rec = [&](auto&& self, size_t idx, int rem) -> void {
    if (idx == pi.segs.size()) {
      if (rem == 0) out.push_back(GLRep(cur));
      return;
    }
    const Segment& s = pi.segs[idx];
    int r = s.rho.r();
    for (int i = 0; i <= s.k && i * r <= rem; ++i) {
      SegDerivative d = derivative(s, i * r);
      if (d.kind == SegDerivative::segment) {
        cur.push_back(*d.seg);
        self(self, idx + 1, rem - i * r);
        cur.pop_back();
      } else if (d.kind == SegDerivative::unit) {
        self(self, idx + 1, rem - i * r);
      }
    }
  };
  rec(rec, 0, l);
  return out;
}

std::vector<Monomial> exponents(const GLRep& pi, int l) {
  std::vector<Monomial> out;
  for (auto& comp : derivative_components(pi, l)) out.push_back(comp.central_character());
  return out;
}

bool has_completely_reducible_derivatives(const GLRep& pi) {
  for (int l = 0; l <= pi.dim(); ++l)
    for (auto& comp : derivative_components(pi, l))
      if (!is_generic(comp)) return false;
  return true;
}

}  // namespace lff
