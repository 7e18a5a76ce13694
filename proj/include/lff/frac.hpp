#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lff {

// Exact rational number. Used for exponents of q and Satake symbols, which in
// practice lie in (1/4)Z, and for real parts of characters.
struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;  // > 0, gcd(num, den) = 1

  Frac() = default;
  Frac(std::int64_t n) : num(n), den(1) {}
  Frac(std::int64_t n, std::int64_t d) : num(n), den(d) { reduce(); }

  void reduce() {
    if (den == 0) throw std::invalid_argument("Frac: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  friend Frac operator+(Frac a, Frac b) { return Frac(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend Frac operator-(Frac a, Frac b) { return Frac(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend Frac operator-(Frac a) { return Frac(-a.num, a.den); }
  friend Frac operator*(Frac a, Frac b) { return Frac(a.num * b.num, a.den * b.den); }
  friend Frac operator/(Frac a, Frac b) {
    if (b.num == 0) throw std::invalid_argument("Frac: division by zero");
    return Frac(a.num * b.den, a.den * b.num);
  }
  friend bool operator==(const Frac& a, const Frac& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }
  friend bool operator<(const Frac& a, const Frac& b) { return a.num * b.den < b.num * a.den; }
  friend bool operator<=(const Frac& a, const Frac& b) { return a.num * b.den <= b.num * a.den; }
  friend bool operator>(const Frac& a, const Frac& b) { return b < a; }
  friend bool operator>=(const Frac& a, const Frac& b) { return b <= a; }

  bool is_integer() const { return den == 1; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

inline Frac half(std::int64_t n) { return Frac(n, 2); }

}  // namespace lff
