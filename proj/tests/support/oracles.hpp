#pragma once

// Brute-force reference implementations used to cross-check the library.
// Everything here works straight from the definitions on small tables.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "pea/numeric.hpp"
#include "pea/table.hpp"

namespace oracle {

using pea::Elem;
using pea::PartialAdditionTable;
using pea::Rational;

inline Elem E(std::size_t i) { return Elem{static_cast<std::uint16_t>(i)}; }

inline int sum(const PartialAdditionTable& t, std::size_t a, std::size_t b) { return t.raw(E(a), E(b)); }

/// PE1-PE4 read off the definition, on raw row-major cells (-1 = undefined).
inline bool is_pea_cells(const std::vector<std::int16_t>& cells, std::size_t n, std::size_t z, std::size_t u) {
  auto sum = [&](std::size_t a, std::size_t b) { return int(cells[a * n + b]); };
  for (std::size_t a = 0; a < n; ++a)
    if (sum(a, z) != int(a) || sum(z, a) != int(a)) return false;
  for (std::size_t a = 0; a < n; ++a)
    if (a != z && (sum(u, a) >= 0 || sum(a, u) >= 0)) return false;
  for (std::size_t a = 0; a < n; ++a) {
    int left = 0, right = 0;
    for (std::size_t d = 0; d < n; ++d) {
      left += sum(d, a) == int(u);
      right += sum(a, d) == int(u);
    }
    if (left != 1 || right != 1) return false;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const int ab = sum(a, b);
      if (ab < 0) continue;
      bool d_ok = false, e_ok = false;
      for (std::size_t d = 0; d < n; ++d) {
        d_ok = d_ok || sum(d, a) == ab;
        e_ok = e_ok || sum(b, d) == ab;
      }
      if (!d_ok || !e_ok) return false;
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const int ab = sum(a, b), bc = sum(b, c);
        const int l = ab < 0 ? -1 : sum(ab, c);
        const int r = bc < 0 ? -1 : sum(a, bc);
        if (l != r) return false;
      }
  return true;
}

inline bool is_pea(const PartialAdditionTable& t) {
  return t.has_one() && is_pea_cells(t.cells(), t.size(), t.zero().id, t.unit().id);
}

/// a <= b iff a + c = b for some c.
inline bool leq(const PartialAdditionTable& t, std::size_t a, std::size_t b) {
  for (std::size_t c = 0; c < t.size(); ++c)
    if (sum(t, a, c) == int(b)) return true;
  return false;
}

/// Every subset containing 0 that is downward closed and closed under sums.
inline std::vector<pea::ElemSet> ideals(const PartialAdditionTable& t) {
  const std::size_t n = t.size();
  std::vector<pea::ElemSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    auto in = [&](std::size_t i) { return (mask >> i) & 1; };
    if (!in(t.zero().id)) continue;
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b) {
        if (in(b) && leq(t, a, b) && !in(a)) ok = false;
        const int ab = sum(t, a, b);
        if (in(a) && in(b) && ab >= 0 && !in(ab)) ok = false;
      }
    if (!ok) continue;
    pea::ElemSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (in(i)) s.push_back(E(i));
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Solves A x = b exactly. Returns the solution when it is unique.
inline std::optional<std::vector<Rational>> solve_unique(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                                                         std::size_t vars) {
  std::size_t row = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < vars && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    std::swap(b[p], b[row]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[row][col];
      for (std::size_t c = 0; c < vars; ++c) a[r][c] -= f * a[row][c];
      b[r] -= f * b[row];
    }
    pivots.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < a.size(); ++r)
    if (b[r] != 0) return std::nullopt;
  if (pivots.size() != vars) return std::nullopt;
  std::vector<Rational> x(vars);
  for (std::size_t r = 0; r < vars; ++r) x[pivots[r]] = b[r] / a[r][pivots[r]];
  return x;
}

/// Vertices of the state polytope: try every choice of tight bounds
/// (s(e) = 0, s(e) = 1 or neither) and keep the feasible unique solutions.
inline std::set<std::vector<Rational>> state_vertices(const PartialAdditionTable& t) {
  const std::size_t n = t.size();
  std::vector<std::vector<Rational>> base_a;
  std::vector<Rational> base_b;
  auto unit_row = [&](std::size_t i, Rational v) {
    std::vector<Rational> r(n, 0);
    r[i] = 1;
    base_a.push_back(r);
    base_b.push_back(v);
  };
  unit_row(t.zero().id, 0);
  unit_row(t.unit().id, 1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const int ab = sum(t, a, b);
      if (ab < 0) continue;
      std::vector<Rational> r(n, 0);
      r[ab] += 1;
      r[a] -= 1;
      r[b] -= 1;
      base_a.push_back(r);
      base_b.push_back(0);
    }
  std::set<std::vector<Rational>> out;
  std::size_t combos = 1;
  for (std::size_t i = 0; i < n; ++i) combos *= 3;
  for (std::size_t code = 0; code < combos; ++code) {
    auto a = base_a;
    auto b = base_b;
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= 3) {
      if (c % 3 == 2) continue;
      std::vector<Rational> r(n, 0);
      r[i] = 1;
      a.push_back(r);
      b.push_back(Rational(c % 3));
    }
    const auto x = solve_unique(a, b, n);
    if (!x) continue;
    if (std::all_of(x->begin(), x->end(), [](const Rational& v) { return v >= 0 && v <= 1; })) out.insert(*x);
  }
  return out;
}

/// Additive maps into {0, ..., n} with 0 -> 0 and 1 -> n, by exhaustion.
inline std::set<std::vector<std::size_t>> discrete_labelings(const PartialAdditionTable& t, std::size_t n) {
  const std::size_t k = t.size();
  std::set<std::vector<std::size_t>> out;
  std::vector<std::size_t> v(k, 0);
  for (;;) {
    bool ok = v[t.zero().id] == 0 && v[t.unit().id] == n;
    std::vector<bool> hit(n + 1, false);
    for (std::size_t a = 0; a < k && ok; ++a) {
      hit[v[a]] = true;
      for (std::size_t b = 0; b < k && ok; ++b) {
        const int ab = sum(t, a, b);
        if (ab >= 0 && v[ab] != v[a] + v[b]) ok = false;
      }
    }
    if (ok && std::all_of(hit.begin(), hit.end(), [](bool h) { return h; })) out.insert(v);
    std::size_t i = 0;
    while (i < k && v[i] == n) v[i++] = 0;
    if (i == k) break;
    ++v[i];
  }
  return out;
}

/// True when some bijection is an isomorphism.
inline bool isomorphic(const PartialAdditionTable& a, const PartialAdditionTable& b) {
  if (a.size() != b.size() || a.has_one() != b.has_one()) return false;
  std::vector<std::size_t> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    if (p[a.zero().id] != b.zero().id) continue;
    if (a.has_one() && p[a.unit().id] != b.unit().id) continue;
    bool ok = true;
    for (std::size_t x = 0; x < a.size() && ok; ++x)
      for (std::size_t y = 0; y < a.size() && ok; ++y) {
        const int s = sum(a, x, y), r = sum(b, p[x], p[y]);
        ok = (s < 0) ? r < 0 : r == int(p[s]);
      }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// All PEAs on {0, m_1, ..., m_k, 1} up to isomorphism. Sums are only
/// constrained by the unit laws and PE4, so this is slow; use it for size <= 5.
inline std::vector<PartialAdditionTable> small_peas(std::size_t size) {
  const std::size_t n = size, z = 0, u = size - 1;
  std::vector<std::pair<std::size_t, std::size_t>> free;
  for (std::size_t a = 1; a + 1 < n; ++a)
    for (std::size_t b = 1; b + 1 < n; ++b) free.emplace_back(a, b);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(i == z ? "0" : i == u ? "1" : "m" + std::to_string(i));
  std::vector<PartialAdditionTable> found;
  std::vector<int> choice(free.size(), -1);
  const int options = static_cast<int>(n);  // -1 (undefined) .. n-1
  for (;;) {
    std::vector<std::int16_t> cells(n * n, -1);
    for (std::size_t a = 0; a < n; ++a) cells[a * n + z] = cells[z * n + a] = static_cast<std::int16_t>(a);
    for (std::size_t i = 0; i < free.size(); ++i)
      cells[free[i].first * n + free[i].second] = static_cast<std::int16_t>(choice[i]);
    if (is_pea_cells(cells, n, z, u)) {
      PartialAdditionTable t(names, E(z), E(u), cells);
      if (std::none_of(found.begin(), found.end(), [&](const auto& f) { return isomorphic(f, t); }))
        found.push_back(t);
    }
    std::size_t i = 0;
    while (i < choice.size() && choice[i] == options - 1) choice[i++] = -1;
    if (i == choice.size()) break;
    ++choice[i];
  }
  return found;
}

}  // namespace oracle
