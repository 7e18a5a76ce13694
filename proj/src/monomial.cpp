#include "lff/monomial.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lff {

namespace {

std::int64_t quarter_steps(Frac e) {
  Frac q4 = e * Frac(4);
  if (!q4.is_integer()) throw std::invalid_argument("exponent outside the (1/4)Z lattice: " + e.str());
  return q4.num;
}

std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

void Monomial::set_zeta(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw std::invalid_argument("root of unity needs a positive order");
  num = mod_pos(num, den);
  std::int64_t g = std::gcd(num, den);
  zeta_num_ = num / g;
  zeta_den_ = den / g;
  if (zeta_num_ == 0) zeta_den_ = 1;
}

Monomial Monomial::q(Frac e) {
  Monomial m;
  m.q4_ = quarter_steps(e);
  return m;
}

Monomial Monomial::symbol(int id, Frac e) {
  if (id <= 0) throw std::invalid_argument("symbol ids are positive");
  Monomial m;
  std::int64_t s = quarter_steps(e);
  if (s != 0) m.sym_.push_back({id, s});
  return m;
}

Monomial Monomial::zeta(std::int64_t num, std::int64_t den) {
  Monomial m;
  m.set_zeta(num, den);
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  // zeta_num_/zeta_den_ + o.zeta_num_/o.zeta_den_ mod 1
  std::int64_t den = std::lcm(zeta_den_, o.zeta_den_);
  r.set_zeta(zeta_num_ * (den / zeta_den_) + o.zeta_num_ * (den / o.zeta_den_), den);
  r.q4_ = q4_ + o.q4_;
  auto a = sym_.begin(), b = o.sym_.begin();
  while (a != sym_.end() || b != o.sym_.end()) {
    if (b == o.sym_.end() || (a != sym_.end() && a->first < b->first)) {
      r.sym_.push_back(*a++);
    } else if (a == sym_.end() || b->first < a->first) {
      r.sym_.push_back(*b++);
    } else {
      std::int64_t e = a->second + b->second;
      if (e != 0) r.sym_.push_back({a->first, e});
      ++a, ++b;
    }
  }
  return r;
}

Monomial Monomial::inverse() const {
  Monomial r;
  r.set_zeta(-zeta_num_, zeta_den_);
  r.q4_ = -q4_;
  r.sym_ = sym_;
  for (auto& [id, e] : r.sym_) e = -e;
  return r;
}

Monomial Monomial::pow(std::int64_t k) const {
  Monomial r;
  r.set_zeta(zeta_num_ * k, zeta_den_);
  r.q4_ = q4_ * k;
  if (k != 0) {
    r.sym_ = sym_;
    for (auto& [id, e] : r.sym_) e *= k;
  }
  return r;
}

Monomial Monomial::sqrt() const {
  Monomial r;
  r.set_zeta(zeta_num_, 2 * zeta_den_);
  if (q4_ % 2 != 0) throw std::domain_error("square root leaves the (1/4)Z exponent lattice");
  r.q4_ = q4_ / 2;
  r.sym_ = sym_;
  for (auto& [id, e] : r.sym_) {
    if (e % 2 != 0) throw std::domain_error("square root leaves the (1/4)Z exponent lattice");
    e /= 2;
  }
  return r;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  if (auto c = q4_ <=> o.q4_; c != 0) return c;
  if (auto c = sym_ <=> o.sym_; c != 0) return c;
  if (auto c = zeta_den_ <=> o.zeta_den_; c != 0) return c;
  return zeta_num_ <=> o.zeta_num_;
}

namespace {

std::string exp_str(std::int64_t q4) {
  Frac e(q4, 4);
  if (e.den == 1) return std::to_string(e.num);
  return "(" + e.str() + ")";
}

}  // namespace

std::string Monomial::str() const {
  std::vector<std::string> parts;
  if (zeta_num_ != 0)
    parts.push_back("zeta(" + std::to_string(zeta_num_) + "/" + std::to_string(zeta_den_) + ")");
  if (q4_ != 0) parts.push_back(q4_ == 4 ? "q" : "q^" + exp_str(q4_));
  for (auto& [id, e] : sym_) {
    std::string z = "z" + std::to_string(id);
    parts.push_back(e == 4 ? z : z + "^" + exp_str(e));
  }
  if (parts.empty()) return "1";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += " * " + parts[i];
  return out;
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() { while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i; }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) { ++i; return true; }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("monomial parse error at offset " + std::to_string(i) + ": " + what + " in '" + s + "'");
  }
  std::int64_t integer() {
    skip_ws();
    size_t j = i;
    if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
    size_t k = j;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
    if (k == j) fail("expected integer");
    std::int64_t v = std::strtoll(s.substr(i, k - i).c_str(), nullptr, 10);
    i = k;
    return v;
  }
  // "n", "(n)", or "(n/d)"
  Frac exponent() {
    skip_ws();
    if (eat('(')) {
      std::int64_t n = integer();
      std::int64_t d = eat('/') ? integer() : 1;
      if (!eat(')')) fail("expected ')'");
      return Frac(n, d);
    }
    return Frac(integer());
  }
};

}  // namespace

Monomial Monomial::parse(const std::string& text) {
  Cursor c{text};
  Monomial out;
  bool first = true;
  while (true) {
    c.skip_ws();
    if (c.i >= c.s.size()) {
      if (first) c.fail("empty monomial");
      break;
    }
    if (!first && !c.eat('*')) c.fail("expected '*'");
    c.skip_ws();
    first = false;
    if (c.i >= c.s.size()) c.fail("dangling '*'");
    char ch = c.s[c.i];
    if (ch == '1') {
      ++c.i;
    } else if (c.s.compare(c.i, 5, "zeta(") == 0) {
      c.i += 5;
      std::int64_t n = c.integer();
      if (!c.eat('/')) c.fail("expected '/'");
      std::int64_t d = c.integer();
      if (!c.eat(')')) c.fail("expected ')'");
      out = out * zeta(n, d);
    } else if (ch == 'q') {
      ++c.i;
      Frac e = c.eat('^') ? c.exponent() : Frac(1);
      out = out * q(e);
    } else if (ch == 'z') {
      ++c.i;
      int id = static_cast<int>(c.integer());
      Frac e = c.eat('^') ? c.exponent() : Frac(1);
      out = out * symbol(id, e);
    } else {
      c.fail("unexpected character");
    }
  }
  return out;
}

std::vector<Monomial> torsion_pack(const Monomial& u, int f) {
  std::vector<Monomial> pack;
  pack.reserve(f);
  for (int j = 0; j < f; ++j) pack.push_back(u * Monomial::zeta(j, f));
  return pack;
}

}  // namespace lff
