#include "lff/cosets.hpp"

#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lff {

int Subpartition::n() const { return std::accumulate(nbar.begin(), nbar.end(), 0); }

std::string Subpartition::str() const {
  std::ostringstream os;
  const size_t t = nbar.size();
  os << "{";
  bool first = true;
  for (size_t i = 0; i < t; ++i) {
    for (size_t j = i; j < t; ++j) {
      if (i == j) {
        if (diag_plus[i] == 0 && diag_minus[i] == 0) continue;
        if (!first) os << ", ";
        os << "n(" << i + 1 << "," << i + 1 << ")=" << diag_plus[i] << "+|" << diag_minus[i]
           << "-";
      } else {
        if (blocks[i][j] == 0) continue;
        if (!first) os << ", ";
        os << "n(" << i + 1 << "," << j + 1 << ")=" << blocks[i][j];
      }
      first = false;
    }
  }
  os << "}";
  return os.str();
}

namespace {

void check_row_sums(const Subpartition& s) {
  const size_t t = s.nbar.size();
  for (size_t i = 0; i < t; ++i) {
    int sum = 0;
    for (size_t j = 0; j < t; ++j) sum += s.blocks[i][j];
    if (sum != s.nbar[i]) throw std::invalid_argument("subpartition row sum mismatch");
    if (s.diag_plus[i] + s.diag_minus[i] != s.blocks[i][i])
      throw std::invalid_argument("diagonal split mismatch");
  }
}

void fill_upper(std::vector<std::vector<int>>& m, size_t i, size_t j,
                std::vector<int> remaining, const std::vector<int>& nbar,
                std::vector<Subpartition>& out);

void split_diagonals(const std::vector<std::vector<int>>& m, const std::vector<int>& nbar,
                     std::vector<Subpartition>& out) {
  const size_t t = nbar.size();
  const int n = std::accumulate(nbar.begin(), nbar.end(), 0);
  std::vector<int> plus(t, 0), minus(t, 0);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == t) {
      int p = std::accumulate(plus.begin(), plus.end(), 0);
      int q = std::accumulate(minus.begin(), minus.end(), 0);
      if (p - q != (n % 2 == 0 ? 0 : 1)) return;
      out.push_back(Subpartition{nbar, m, plus, minus});
      return;
    }
    for (int p = 0; p <= m[i][i]; ++p) {
      plus[i] = p;
      minus[i] = m[i][i] - p;
      rec(i + 1);
    }
    plus[i] = minus[i] = 0;
  };
  rec(0);
}

void fill_upper(std::vector<std::vector<int>>& m, size_t i, size_t j,
                std::vector<int> remaining, const std::vector<int>& nbar,
                std::vector<Subpartition>& out) {
  const size_t t = nbar.size();
  if (i == t) {
    split_diagonals(m, nbar, out);
    return;
  }
  if (j == t) {
    if (remaining[i] < 0) return;
    m[i][i] = remaining[i];
    fill_upper(m, i + 1, i + 2, remaining, nbar, out);
    m[i][i] = 0;
    return;
  }
  const int cap = std::min(remaining[i], remaining[j]);
  for (int v = 0; v <= cap; ++v) {
    m[i][j] = m[j][i] = v;
    auto rem = remaining;
    rem[i] -= v;
    rem[j] -= v;
    fill_upper(m, i, j + 1, rem, nbar, out);
  }
  m[i][j] = m[j][i] = 0;
}

// One diagonal block of the refined Levi, in ambient row-major order: the
// pair slot living at matrix position (pi, pj), or a signed diagonal slot.
struct Slot {
  size_t pi, pj;  // block position, 0-based
  int sign;       // 0 pair, +1 / -1 diagonal
  int size;
  std::string coord;
  size_t block_p;   // enclosing block of the coarse parabolic
  size_t block_ps;  // enclosing block of the refined parabolic
};

std::string coord_name(size_t i, size_t j, int sign) {
  std::ostringstream os;
  os << "l(" << std::min(i, j) + 1 << "," << std::max(i, j) + 1 << ")";
  if (sign > 0) os << "+";
  if (sign < 0) os << "-";
  return os.str();
}

std::vector<Slot> layout(const Subpartition& s) {
  check_row_sums(s);
  const size_t t = s.nbar.size();
  std::vector<Slot> slots;
  for (size_t i = 0; i < t; ++i) {
    for (size_t j = 0; j < t; ++j) {
      const size_t ps = i * t + j;
      if (i == j) {
        if (s.diag_plus[i] > 0)
          slots.push_back({i, i, +1, s.diag_plus[i], coord_name(i, i, +1), i, ps});
        if (s.diag_minus[i] > 0)
          slots.push_back({i, i, -1, s.diag_minus[i], coord_name(i, i, -1), i, ps});
      } else if (s.blocks[i][j] > 0) {
        slots.push_back({i, j, 0, s.blocks[i][j], coord_name(i, j, 0), i, ps});
      }
    }
  }
  return slots;
}

// Index of the slot the involution sends slot k to: pair slots swap with the
// transposed position, signed diagonal slots are fixed.
size_t theta_image(const std::vector<Slot>& slots, size_t k) {
  const Slot& a = slots[k];
  if (a.sign != 0) return k;
  for (size_t r = 0; r < slots.size(); ++r)
    if (slots[r].pi == a.pj && slots[r].pj == a.pi && slots[r].sign == 0) return r;
  throw std::logic_error("missing transposed slot");
}

}  // namespace

std::vector<Subpartition> enumerate_relevant(const std::vector<int>& nbar) {
  if (nbar.empty()) throw std::invalid_argument("empty composition");
  for (int v : nbar)
    if (v < 0) throw std::invalid_argument("negative composition entry");
  std::vector<std::vector<int>> m(nbar.size(), std::vector<int>(nbar.size(), 0));
  std::vector<Subpartition> out;
  fill_upper(m, 0, 1, nbar, nbar, out);
  return out;
}

void TorusCharacter::add(const std::string& coord, Frac e) {
  auto it = exps.find(coord);
  Frac v = (it == exps.end() ? Frac(0) : it->second) + e;
  if (v == Frac(0))
    exps.erase(coord);
  else
    exps[coord] = v;
}

TorusCharacter TorusCharacter::operator*(const TorusCharacter& o) const {
  TorusCharacter r = *this;
  for (const auto& [c, e] : o.exps) r.add(c, e);
  return r;
}

TorusCharacter TorusCharacter::inverse() const { return scaled(Frac(-1)); }

TorusCharacter TorusCharacter::scaled(Frac c) const {
  TorusCharacter r;
  if (c == Frac(0)) return r;
  for (const auto& [k, e] : exps) r.exps[k] = e * c;
  return r;
}

std::string TorusCharacter::str() const {
  if (exps.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, e] : exps) {
    if (!first) os << " ";
    os << "|" << c << "|^(" << e.str() << ")";
    first = false;
  }
  return os.str();
}

TorusCharacter modulus_character(CosetGroup which, const Subpartition& s) {
  const auto slots = layout(s);
  const size_t m = slots.size();
  TorusCharacter out;
  auto add_pair = [&](size_t a, size_t b) {
    const Frac w(int64_t(slots[a].size) * slots[b].size);
    out.add(slots[a].coord, w);
    out.add(slots[b].coord, Frac(0) - w);
  };
  for (size_t a = 0; a < m; ++a) {
    for (size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      switch (which) {
        case CosetGroup::P:
          if (slots[a].block_p < slots[b].block_p) add_pair(a, b);
          break;
        case CosetGroup::P_s:
          if (slots[a].block_ps < slots[b].block_ps) add_pair(a, b);
          break;
        case CosetGroup::P_prime_s:
          if (slots[a].block_p == slots[b].block_p && slots[a].block_ps < slots[b].block_ps)
            add_pair(a, b);
          break;
        case CosetGroup::P_s_theta: {
          if (slots[a].block_ps >= slots[b].block_ps) break;
          const size_t a2 = theta_image(slots, a), b2 = theta_image(slots, b);
          if (a2 == a && b2 == b) {
            if (slots[a].sign * slots[b].sign > 0) add_pair(a, b);
          } else if (slots[a2].block_ps < slots[b2].block_ps) {
            if (std::make_pair(a, b) <= std::make_pair(a2, b2)) add_pair(a, b);
          }
          break;
        }
      }
    }
  }
  return out;
}

TorusCharacter chi_alpha_restriction(const Subpartition& s) {
  TorusCharacter out;
  for (const auto& slot : layout(s))
    if (slot.sign != 0) out.add(slot.coord, Frac(slot.sign));
  return out;
}

}  // namespace lff
