#include "pea/states.hpp"

#include <algorithm>
#include <set>

#include "pea/core_algebra.hpp"
#include "pea/elemset.hpp"
#include "pea/errors.hpp"
#include "pea/ideals.hpp"

namespace pea {

namespace {

using Row = std::vector<Rational>;

Rational dot(const Row& a, const Row& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

// In-place reduced row echelon form; returns the pivot column of each row kept.
std::vector<std::size_t> rref(std::vector<Row>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

std::size_t rank_of(std::vector<Row> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  return rref(m, cols).size();
}

struct Param {
  bool consistent = true;
  Row particular;
  std::vector<Row> basis;  // one per free variable, length |E|
  std::vector<Elem> free;
};

Param parametrize(const PartialAdditionTable& t) {
  const std::size_t n = t.size();
  std::vector<Row> m;
  auto fix = [&](Elem e, int v) {
    Row r(n + 1, 0);
    r[e.id] = 1;
    r[n] = v;
    m.push_back(std::move(r));
  };
  fix(t.zero(), 0);
  fix(t.unit(), 1);
  for (Elem a : t.elements())
    for (Elem b : t.elements())
      if (auto c = t.add(a, b)) {
        Row r(n + 1, 0);
        r[a.id] += 1;
        r[b.id] += 1;
        r[c->id] -= 1;
        if (std::any_of(r.begin(), r.end(), [](const Rational& v) { return v != 0; }))
          m.push_back(std::move(r));
      }
  const auto pivots = rref(m, n + 1);
  Param p;
  if (!pivots.empty() && pivots.back() == n) {
    p.consistent = false;
    return p;
  }
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  p.particular.assign(n, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) p.particular[pivots[i]] = m[i][n];
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Row b(n, 0);
    b[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) b[pivots[i]] = -m[i][f];
    p.basis.push_back(std::move(b));
    p.free.push_back(Elem{static_cast<std::uint16_t>(f)});
  }
  return p;
}

// Homogeneous inequality rows over (lambda, t_1..t_k): x_e >= 0 and 1 - x_e >= 0.
std::vector<Row> cone_rows(const Param& p, std::size_t n) {
  const std::size_t k = p.basis.size();
  std::vector<Row> rows;
  std::set<Row> seen;
  auto push = [&](Row r) {
    if (std::all_of(r.begin(), r.end(), [](const Rational& v) { return v == 0; })) return;
    if (seen.insert(r).second) rows.push_back(std::move(r));
  };
  Row lambda(k + 1, 0);
  lambda[0] = 1;
  push(lambda);
  for (std::size_t e = 0; e < n; ++e) {
    Row lo(k + 1), hi(k + 1);
    lo[0] = p.particular[e];
    hi[0] = 1 - p.particular[e];
    for (std::size_t f = 0; f < k; ++f) {
      lo[f + 1] = p.basis[f][e];
      hi[f + 1] = -p.basis[f][e];
    }
    push(std::move(lo));
    push(std::move(hi));
  }
  return rows;
}

void normalize(Row& r) {
  for (const auto& v : r)
    if (v != 0) {
      const Rational s = abs(v);
      for (auto& w : r) w /= s;
      return;
    }
}

// Extreme rays of {y : row . y >= 0 for all rows}, assumed pointed.
std::vector<Row> double_description(const std::vector<Row>& rows, std::size_t d) {
  // Start from d independent rows: the cone they cut out is simplicial.
  std::vector<std::size_t> basis_rows;
  std::vector<Row> chosen;
  for (std::size_t i = 0; i < rows.size() && basis_rows.size() < d; ++i) {
    chosen.push_back(rows[i]);
    if (rank_of(chosen) == chosen.size())
      basis_rows.push_back(i);
    else
      chosen.pop_back();
  }
  if (basis_rows.size() < d) throw Inconsistency("state polytope constraints are not of full rank");

  // Inverse of the chosen square matrix; its columns are the initial rays.
  std::vector<Row> aug(d, Row(2 * d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) aug[i][j] = chosen[i][j];
    aug[i][d + i] = 1;
  }
  rref(aug, d);
  std::vector<Row> rays(d, Row(d));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) rays[j][i] = aug[i][d + j];
  for (auto& r : rays) normalize(r);

  std::vector<std::size_t> processed = basis_rows;
  std::vector<bool> used(rows.size(), false);
  for (auto i : basis_rows) used[i] = true;

  for (std::size_t ri = 0; ri < rows.size(); ++ri) {
    if (used[ri]) continue;
    const Row& a = rows[ri];
    std::vector<Rational> val(rays.size());
    for (std::size_t j = 0; j < rays.size(); ++j) val[j] = dot(a, rays[j]);

    // zero sets over processed rows, for the adjacency test
    std::vector<std::vector<bool>> zero(rays.size(), std::vector<bool>(processed.size()));
    for (std::size_t j = 0; j < rays.size(); ++j)
      for (std::size_t q = 0; q < processed.size(); ++q)
        zero[j][q] = dot(rows[processed[q]], rays[j]) == 0;

    std::vector<Row> next;
    for (std::size_t j = 0; j < rays.size(); ++j)
      if (val[j] >= 0) next.push_back(rays[j]);
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (val[p] <= 0) continue;
      for (std::size_t m = 0; m < rays.size(); ++m) {
        if (val[m] >= 0) continue;
        std::vector<bool> common(processed.size());
        std::size_t count = 0;
        for (std::size_t q = 0; q < processed.size(); ++q) {
          common[q] = zero[p][q] && zero[m][q];
          count += common[q];
        }
        if (count + 2 < d) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == m) continue;
          bool covers = true;
          for (std::size_t q = 0; q < processed.size() && covers; ++q)
            if (common[q] && !zero[o][q]) covers = false;
          if (covers) adjacent = false;
        }
        if (!adjacent) continue;
        Row r(d);
        for (std::size_t i = 0; i < d; ++i) r[i] = val[p] * rays[m][i] - val[m] * rays[p][i];
        normalize(r);
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
    processed.push_back(ri);
    used[ri] = true;
  }
  return rays;
}

StateVector evaluate(const Param& p, const Row& params) {
  StateVector s{p.particular};
  for (std::size_t f = 0; f < p.basis.size(); ++f)
    if (params[f] != 0)
      for (std::size_t e = 0; e < s.values.size(); ++e) s.values[e] += params[f] * p.basis[f][e];
  return s;
}

void require_state(const PartialAdditionTable& t, const StateVector& s) {
  const auto why = state_error(t, s);
  if (!why.empty()) throw InputError("not a state: " + why);
}

}  // namespace

std::string state_error(const PartialAdditionTable& t, const StateVector& s) {
  if (s.values.size() != t.size()) return "expected " + std::to_string(t.size()) + " values";
  for (Elem e : t.elements())
    if (s[e] < 0 || s[e] > 1) return "value of '" + t.name(e) + "' outside [0,1]";
  if (s[t.zero()] != 0) return "s(0) != 0";
  if (t.has_one() && s[*t.one()] != 1) return "s(1) != 1";
  for (Elem a : t.elements())
    for (Elem b : t.elements())
      if (auto c = t.add(a, b); c && s[*c] != s[a] + s[b])
        return "s(" + t.name(a) + "+" + t.name(b) + ") != s(" + t.name(a) + ")+s(" + t.name(b) + ")";
  return {};
}

StateSpace solve_state_space(const PartialAdditionTable& t) {
  require_axioms(t, Kind::Pea);
  const Param p = parametrize(t);
  StateSpace space;
  space.consistent = p.consistent;
  if (!p.consistent) return space;
  if (p.basis.size() > kMaxFreeParameters)
    throw TooLarge("state space has " + std::to_string(p.basis.size()) +
                   " free parameters (cap " + std::to_string(kMaxFreeParameters) + ")");
  space.particular = p.particular;
  space.basis = p.basis;
  space.free = p.free;

  const std::size_t k = p.basis.size();
  const auto rays = double_description(cone_rows(p, t.size()), k + 1);
  std::set<StateVector> vertices;
  for (const auto& r : rays) {
    if (r[0] <= 0) throw Inconsistency("state polytope has a recession direction");
    Row params(k);
    for (std::size_t f = 0; f < k; ++f) params[f] = r[f + 1] / r[0];
    auto s = evaluate(p, params);
    if (!state_error(t, s).empty()) throw Inconsistency("vertex is not a state");
    vertices.insert(std::move(s));
  }
  space.extremal.assign(vertices.begin(), vertices.end());
  return space;
}

std::vector<std::vector<std::size_t>> additive_labelings(const PartialAdditionTable& t,
                                                         std::size_t n) {
  if (n == 0) throw InputError("n must be at least 1");
  require_axioms(t, Kind::Pea);
  const std::size_t size = t.size();
  struct Sum {
    std::size_t a, b, c;
  };
  std::vector<Sum> sums;
  for (Elem a : t.elements())
    for (Elem b : t.elements())
      if (auto c = t.add(a, b)) sums.push_back({a.id, b.id, c->id});

  constexpr long kUnset = -1;
  std::vector<std::vector<std::size_t>> out;
  std::vector<long> label(size, kUnset);

  // Forces values through a+b=c until stable; false on contradiction.
  auto propagate = [&](std::vector<long>& l) {
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& s : sums) {
        const long la = l[s.a], lb = l[s.b], lc = l[s.c];
        const int known = (la != kUnset) + (lb != kUnset) + (lc != kUnset);
        if (known == 3) {
          if (la + lb != lc) return false;
        } else if (known == 2) {
          long v;
          std::size_t target;
          if (lc == kUnset) {
            v = la + lb, target = s.c;
          } else if (la == kUnset) {
            v = lc - lb, target = s.a;
          } else {
            v = lc - la, target = s.b;
          }
          if (v < 0 || v > static_cast<long>(n)) return false;
          l[target] = v;
          changed = true;
        }
      }
    }
    return true;
  };

  auto search = [&](auto&& self, std::vector<long> l) -> void {
    if (!propagate(l)) return;
    const auto it = std::find(l.begin(), l.end(), kUnset);
    if (it == l.end()) {
      std::vector<bool> hit(n + 1, false);
      for (long v : l) hit[static_cast<std::size_t>(v)] = true;
      if (std::find(hit.begin(), hit.end(), false) != hit.end()) return;
      out.emplace_back(l.begin(), l.end());
      return;
    }
    const auto idx = static_cast<std::size_t>(it - l.begin());
    for (long v = 0; v <= static_cast<long>(n); ++v) {
      l[idx] = v;
      self(self, l);
    }
  };
  label[t.zero().id] = 0;
  label[t.unit().id] = static_cast<long>(n);
  search(search, label);
  std::sort(out.begin(), out.end());
  return out;
}

StateVector state_from_labeling(const std::vector<std::size_t>& labels, std::size_t n) {
  StateVector s;
  for (auto l : labels) s.values.emplace_back(Rational(Integer(l), Integer(n)));
  return s;
}

std::vector<StateVector> enumerate_discrete_states(const PartialAdditionTable& t, std::size_t n) {
  std::vector<StateVector> out;
  for (const auto& l : additive_labelings(t, n)) out.push_back(state_from_labeling(l, n));
  for (const auto& s : out)
    if (!state_error(t, s).empty()) throw Inconsistency("labeling is not additive");
  return out;
}

StateClass classify_state(const PartialAdditionTable& t, const StateVector& s) {
  require_state(t, s);
  StateClass c;
  std::set<Rational> image(s.values.begin(), s.values.end());
  c.image.assign(image.begin(), image.end());
  c.n = c.image.size() - 1;
  c.common_denominator = 1;
  for (const auto& v : c.image) c.common_denominator = lcm(c.common_denominator, denominator(v));

  c.cond_i = true;
  for (std::size_t i = 0; i <= c.n; ++i)
    if (c.image[i] != Rational(Integer(i), Integer(c.n))) c.cond_i = false;

  c.cond_iii = true;
  for (const auto& lo : c.image)
    for (const auto& hi : c.image)
      if (lo <= hi && !image.count(hi - lo)) {
        if (!c.gap) c.gap = std::array<Rational, 3>{lo, hi, hi - lo};
        c.cond_iii = false;
      }

  // sub-effect algebra: 0, 1 present and if two of t, v, t+v lie in s(E) so does the third
  c.cond_ii = image.count(0) && image.count(1);
  for (const auto& x : c.image)
    for (const auto& y : c.image) {
      if (x + y <= 1 && !image.count(x + y)) c.cond_ii = false;
      if (x <= y && !image.count(y - x)) c.cond_ii = false;
    }

  if (c.cond_i != c.cond_ii || c.cond_ii != c.cond_iii)
    throw Inconsistency("discreteness conditions (i), (ii), (iii) disagree");
  c.discrete = c.cond_i;
  return c;
}

Extremality is_extremal(const PartialAdditionTable& t, const StateVector& s) {
  require_axioms(t, Kind::Pea);
  require_state(t, s);
  const Param p = parametrize(t);
  const std::size_t k = p.basis.size();
  if (k == 0) return {};

  std::vector<Row> tight;
  for (Elem e : t.elements()) {
    if (s[e] != 0 && s[e] != 1) continue;
    Row g(k);
    for (std::size_t f = 0; f < k; ++f) g[f] = p.basis[f][e.id];
    tight.push_back(std::move(g));
  }
  auto reduced = tight;
  const auto pivots = rref(reduced, k);
  if (pivots.size() == k) return {};

  // a direction in the null space of the tight gradients
  std::vector<bool> is_pivot(k, false);
  for (auto c : pivots) is_pivot[c] = true;
  const auto f0 = static_cast<std::size_t>(std::find(is_pivot.begin(), is_pivot.end(), false) - is_pivot.begin());
  Row delta(k, 0);
  delta[f0] = 1;
  for (std::size_t i = 0; i < pivots.size(); ++i) delta[pivots[i]] = -reduced[i][f0];

  Row dx(t.size(), 0);
  for (std::size_t f = 0; f < k; ++f)
    for (std::size_t e = 0; e < t.size(); ++e) dx[e] += delta[f] * p.basis[f][e];

  std::optional<Rational> eps;
  for (std::size_t e = 0; e < t.size(); ++e) {
    if (dx[e] == 0) continue;
    const Rational room = std::min<Rational>(s.values[e], Rational(1 - s.values[e])) / abs(dx[e]);
    if (!eps || room < *eps) eps = room;
  }
  if (!eps || *eps <= 0) throw Inconsistency("no room along a null direction of a non-vertex");

  StateVector s1 = s, s2 = s;
  for (std::size_t e = 0; e < t.size(); ++e) {
    s1.values[e] -= *eps * dx[e];
    s2.values[e] += *eps * dx[e];
  }
  if (s2 < s1) std::swap(s1, s2);
  if (!state_error(t, s1).empty() || !state_error(t, s2).empty())
    throw Inconsistency("extremality witness is not a pair of states");
  return {false, std::make_pair(std::move(s1), std::move(s2))};
}

ElemSet kernel(const PartialAdditionTable& t, const StateVector& s) {
  require_state(t, s);
  ElemSet k;
  for (Elem e : t.elements())
    if (s[e] == 0) k.push_back(e);
  if (!is_ideal(t, k).holds || !is_normal(t, k).holds)
    throw Inconsistency("kernel of a state is not a normal ideal");
  return k;
}

}  // namespace pea
