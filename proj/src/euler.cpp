#include "lff/euler.hpp"

#include <algorithm>
#include <stdexcept>

namespace lff {

Euler Euler::tate(const Monomial& u) {
  Euler e;
  e.roots_[u] = 1;
  return e;
}

Euler Euler::from_roots(const std::vector<Monomial>& roots) {
  Euler e;
  for (const auto& u : roots) ++e.roots_[u];
  return e;
}

std::int64_t Euler::degree() const {
  std::int64_t d = 0;
  for (auto& [u, m] : roots_) d += m;
  return d;
}

std::int64_t Euler::multiplicity(const Monomial& u) const {
  auto it = roots_.find(u);
  return it == roots_.end() ? 0 : it->second;
}

std::vector<Monomial> Euler::root_list() const {
  std::vector<Monomial> out;
  for (auto& [u, m] : roots_)
    for (std::int64_t i = 0; i < m; ++i) out.push_back(u);
  return out;
}

Euler Euler::operator*(const Euler& o) const {
  Euler r = *this;
  for (auto& [u, m] : o.roots_) r.roots_[u] += m;
  return r;
}

Euler Euler::lcm(const Euler& a, const Euler& b) {
  Euler r = a;
  for (auto& [u, m] : b.roots_) {
    auto& cur = r.roots_[u];
    cur = std::max(cur, m);
  }
  return r;
}

Euler Euler::gcd(const Euler& a, const Euler& b) {
  Euler r;
  for (auto& [u, m] : a.roots_) {
    std::int64_t n = std::min(m, b.multiplicity(u));
    if (n > 0) r.roots_[u] = n;
  }
  return r;
}

bool Euler::divides(const Euler& o) const {
  for (auto& [u, m] : roots_)
    if (m > o.multiplicity(u)) return false;
  return true;
}

Euler Euler::operator/(const Euler& o) const {
  Euler r = *this;
  for (auto& [u, m] : o.roots_) {
    auto it = r.roots_.find(u);
    if (it == r.roots_.end() || it->second < m)
      throw std::domain_error("Euler quotient is not an Euler factor");
    it->second -= m;
    if (it->second == 0) r.roots_.erase(it);
  }
  return r;
}

Euler Euler::shift(Frac c) const {
  Euler r;
  Monomial f = Monomial::q(-c);
  for (auto& [u, m] : roots_) r.roots_[u * f] = m;
  return r;
}

Euler Euler::dilate2() const {
  Euler r;
  for (auto& [u, m] : roots_) {
    Monomial s = u.sqrt();
    r.roots_[s] += m;
    r.roots_[s * Monomial::minus_one()] += m;
  }
  return r;
}

Euler Euler::reflect(Frac c) const {
  Euler r;
  Monomial f = Monomial::q(c);
  for (auto& [u, m] : roots_) r.roots_[u.inverse() * f] += m;
  return r;
}

bool Euler::has_common_root(const Euler& o) const {
  for (auto& [u, m] : roots_)
    if (o.multiplicity(u) > 0) return true;
  return false;
}

std::string Euler::str() const {
  if (roots_.empty()) return "1";
  std::string out;
  for (auto& [u, m] : roots_) {
    if (!out.empty()) out += " ";
    out += "(1 - " + u.str() + " X)^-" + std::to_string(m);
  }
  return "prod " + out;
}

std::string Euler::root_list_str() const {
  std::string out = "[";
  bool first = true;
  for (auto& [u, m] : roots_) {
    if (!first) out += "; ";
    first = false;
    out += "(" + std::to_string(m) + ") " + u.str();
  }
  return out + "]";
}

Euler Euler::parse(const std::string& text) {
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i; };
  auto expect = [&](const std::string& tok) {
    skip_ws();
    if (text.compare(i, tok.size(), tok) != 0)
      throw std::invalid_argument("Euler parse error: expected '" + tok + "' in '" + text + "'");
    i += tok.size();
  };
  skip_ws();
  if (text.compare(i, 1, "1") == 0 && [&] { size_t j = i + 1; while (j < text.size() && text[j] == ' ') ++j; return j == text.size(); }()) return one();
  expect("prod");
  Euler out;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    expect("(1");
    expect("-");
    skip_ws();
    size_t start = i;
    // the monomial runs until the final " X)" of this factor
    size_t end = text.find(" X)", start);
    if (end == std::string::npos) throw std::invalid_argument("Euler parse error: unterminated factor in '" + text + "'");
    Monomial u = Monomial::parse(text.substr(start, end - start));
    i = end + 3;
    expect("^-");
    skip_ws();
    size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i) throw std::invalid_argument("Euler parse error: expected multiplicity in '" + text + "'");
    std::int64_t m = std::stoll(text.substr(i, j - i));
    if (m <= 0) throw std::invalid_argument("Euler parse error: multiplicity must be positive");
    i = j;
    out.roots_[u] += m;
  }
  if (out.roots_.empty()) throw std::invalid_argument("Euler parse error: no factors in '" + text + "'");
  return out;
}

}  // namespace lff
