#include "pea/ideals.hpp"

#include <algorithm>
#include <set>

#include "pea/constructions.hpp"
#include "pea/core_algebra.hpp"
#include "pea/elemset.hpp"
#include "pea/errors.hpp"
#include "pea/rdp.hpp"

namespace pea {

namespace {

Check fail(std::vector<Elem> w, std::string reason) { return {false, std::move(w), std::move(reason)}; }

ElemSet down_set(const OrderRelation& ord, const PartialAdditionTable& t, const ElemSet& gens) {
  ElemSet out;
  for (Elem x : t.elements())
    for (Elem g : gens)
      if (ord.leq(x, g)) {
        out.push_back(x);
        break;
      }
  return out;
}

bool sum_closed(const PartialAdditionTable& t, const ElemSet& s) {
  for (Elem i : s)
    for (Elem j : s)
      if (auto c = t.add(i, j); c && !contains(s, *c)) return false;
  return true;
}

}  // namespace

Check is_ideal(const PartialAdditionTable& t, const ElemSet& s) {
  if (s.empty()) return fail({}, "empty set");
  const ElemSet set = make_set(s);
  const OrderRelation ord = detail::order_of(t);
  for (Elem i : set)
    for (Elem a : t.elements())
      if (ord.leq(a, i) && !contains(set, a)) return fail({a, i}, "not downward closed");
  for (Elem i : set)
    for (Elem j : set)
      if (auto c = t.add(i, j); c && !contains(set, *c)) return fail({i, j}, "not closed under +");
  return {};
}

Check is_normal(const PartialAdditionTable& t, const ElemSet& s) {
  if (auto c = is_ideal(t, s); !c.holds) return c;
  const ElemSet set = make_set(s);
  for (Elem a : t.elements())
    for (Elem i : t.elements()) {
      const auto ai = t.add(a, i);
      if (!ai) continue;
      const auto j = detail::left_diff(t, *ai, a);  // j + a = a + i
      if (j && contains(set, i) != contains(set, *j)) return fail({a, i, *j}, "a+i = j+a splits I");
    }
  return {};
}

std::vector<ElemSet> enumerate_ideals(const PartialAdditionTable& t) {
  const OrderRelation ord = detail::order_of(t);
  std::vector<ElemSet> out;
  ElemSet chosen;
  // Each down-set is generated by exactly one antichain: its maximal elements.
  auto walk = [&](auto&& self, std::size_t from) -> void {
    if (!chosen.empty()) {
      ElemSet d = down_set(ord, t, chosen);
      if (sum_closed(t, d)) out.push_back(std::move(d));
    }
    for (std::size_t k = from; k < t.size(); ++k) {
      const Elem e{static_cast<std::uint16_t>(k)};
      if (std::any_of(chosen.begin(), chosen.end(), [&](Elem c) { return ord.comparable(c, e); }))
        continue;
      chosen.push_back(e);
      self(self, k + 1);
      chosen.pop_back();
    }
  };
  walk(walk, 0);
  std::sort(out.begin(), out.end(), [](const ElemSet& a, const ElemSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<ElemSet> maximal_ideals(const PartialAdditionTable& t) {
  const auto all = enumerate_ideals(t);
  std::vector<ElemSet> out;
  for (const auto& i : all) {
    if (i.size() == t.size()) continue;
    bool top = true;
    for (const auto& j : all)
      if (j.size() != t.size() && j.size() > i.size() && is_subset(i, j)) top = false;
    if (top) out.push_back(i);
  }
  return out;
}

Check is_maximal(const PartialAdditionTable& t, const ElemSet& s) {
  if (auto c = is_ideal(t, s); !c.holds) return c;
  const ElemSet set = make_set(s);
  if (set.size() == t.size()) return fail({}, "not proper");
  for (const auto& j : enumerate_ideals(t))
    if (j.size() != t.size() && j.size() > set.size() && is_subset(set, j))
      return fail(j, "contained in a larger proper ideal");
  return {};
}

bool is_upward_directed(const PartialAdditionTable& t, std::vector<Elem>* witness) {
  const OrderRelation ord = detail::order_of(t);
  for (Elem x : t.elements())
    for (Elem y : t.elements()) {
      bool bounded = false;
      for (Elem z : t.elements())
        if (ord.leq(x, z) && ord.leq(y, z)) {
          bounded = true;
          break;
        }
      if (!bounded) {
        if (witness) *witness = {x, y};
        return false;
      }
    }
  return true;
}

Check check_r2(const PartialAdditionTable& t, const ElemSet& ideal) {
  const ElemSet set = make_set(ideal);
  const OrderRelation ord = detail::order_of(t);
  for (Elem i : set)
    for (Elem a : t.elements()) {
      if (!ord.leq(i, a)) continue;
      const Elem a_minus_i = *detail::left_diff(t, a, i);  // (a\i) + i = a
      const Elem i_over_a = *detail::right_diff(t, i, a);  // i + (i/a) = a
      for (Elem b : t.elements()) {
        if (t.defined(a_minus_i, b)) {
          bool ok = false;
          for (Elem j : set)
            if (ord.leq(j, b) && t.defined(a, *detail::right_diff(t, j, b))) ok = true;
          if (!ok) return fail({i, a, b}, "(R2) first clause");
        }
        if (t.defined(b, i_over_a)) {
          bool ok = false;
          for (Elem j : set)
            if (ord.leq(j, b) && t.defined(*detail::left_diff(t, b, j), a)) ok = true;
          if (!ok) return fail({i, a, b}, "(R2) second clause");
        }
      }
    }
  return {};
}

RieszReport is_riesz_ideal(const PartialAdditionTable& t, const ElemSet& ideal) {
  RieszReport r;
  if (auto c = is_ideal(t, ideal); !c.holds) {
    r.witness = c.witness;
    r.reason = "not an ideal: " + c.reason;
    return r;
  }
  const ElemSet set = make_set(ideal);
  const OrderRelation ord = detail::order_of(t);
  r.r1 = true;
  for (Elem i : set) {
    for (Elem a : t.elements())
      for (Elem b : t.elements()) {
        const auto ab = t.add(a, b);
        if (!ab || !ord.leq(i, *ab)) continue;
        bool found = false;
        for (Elem j : set) {
          if (!ord.leq(j, a)) continue;
          for (Elem k : set)
            if (ord.leq(k, b))
              if (auto jk = t.add(j, k); jk && ord.leq(i, *jk)) found = true;
        }
        if (!found && r.r1) {
          r.r1 = false;
          r.witness = {i, a, b};
          r.reason = "(R1) fails";
        }
      }
  }
  r.upward_directed = is_upward_directed(t);
  if (r.upward_directed) {
    r.riesz = r.r1;
  } else {
    const auto c2 = check_r2(t, set);
    r.r2 = c2.holds;
    r.riesz = r.r1 && c2.holds;
    if (r.r1 && !c2.holds) {
      r.witness = c2.witness;
      r.reason = c2.reason;
    }
  }
  return r;
}

Congruence congruence_classes(const PartialAdditionTable& t, const ElemSet& ideal) {
  const ElemSet set = make_set(ideal);
  if (auto c = is_normal(t, set); !c.holds) throw Refused("ideal is not normal: " + c.reason);
  if (auto r = is_riesz_ideal(t, set); !r.riesz) throw Refused("ideal is not Riesz: " + r.reason);
  const OrderRelation ord = detail::order_of(t);
  const std::size_t n = t.size();
  // residues a\i for i in I below a
  std::vector<std::set<Elem>> residues(n);
  for (Elem a : t.elements())
    for (Elem i : set)
      if (ord.leq(i, a)) residues[a.id].insert(*detail::left_diff(t, a, i));
  auto related = [&](Elem a, Elem b) {
    for (Elem r : residues[a.id])
      if (residues[b.id].count(r)) return true;
    return false;
  };
  for (Elem a : t.elements()) {
    if (!related(a, a)) throw Inconsistency("~_I is not reflexive");
    for (Elem b : t.elements()) {
      if (related(a, b) != related(b, a)) throw Inconsistency("~_I is not symmetric");
      if (!related(a, b)) continue;
      for (Elem c : t.elements())
        if (related(b, c) && !related(a, c)) throw Inconsistency("~_I is not transitive");
    }
  }
  Congruence g;
  g.class_of.assign(n, n);
  for (Elem a : t.elements()) {
    if (g.class_of[a.id] != n) continue;
    ElemSet cls;
    for (Elem b : t.elements())
      if (related(a, b)) {
        cls.push_back(b);
        g.class_of[b.id] = g.classes.size();
      }
    g.classes.push_back(std::move(cls));
  }
  return g;
}

Quotient quotient(const PartialAdditionTable& t, const ElemSet& ideal) {
  Congruence g = congruence_classes(t, ideal);
  const std::size_t m = g.classes.size();
  std::vector<std::int16_t> cells(m * m, PartialAdditionTable::kUndefined);
  for (Elem a : t.elements())
    for (Elem b : t.elements()) {
      const auto c = t.add(a, b);
      if (!c) continue;
      auto& cell = cells[g.class_of[a.id] * m + g.class_of[b.id]];
      const auto k = static_cast<std::int16_t>(g.class_of[c->id]);
      if (cell != PartialAdditionTable::kUndefined && cell != k)
        throw Inconsistency("[" + t.name(a) + "]+[" + t.name(b) + "] is not well defined");
      cell = k;
    }
  std::vector<std::string> names;
  for (const auto& cls : g.classes) names.push_back(t.names_of(cls));
  const Elem zero{static_cast<std::uint16_t>(g.class_of[t.zero().id])};
  std::optional<Elem> one;
  if (t.has_one() && g.class_of[t.one()->id] != zero.id)
    one = Elem{static_cast<std::uint16_t>(g.class_of[t.one()->id])};
  PartialAdditionTable q(std::move(names), zero, one, std::move(cells));
  if (!check_axioms(q, Kind::Gpea).passed()) throw Inconsistency("quotient is not a GPEA");

  bool cond_l = true;
  for (Elem a : t.elements())
    for (Elem b : t.elements()) {
      bool found = false;
      for (Elem c : t.elements()) {
        const auto ac = t.add(a, c), bc = t.add(b, c);
        if ((ac && g.class_of[ac->id] == g.class_of[b.id]) ||
            (bc && g.class_of[bc->id] == g.class_of[a.id])) {
          found = true;
          break;
        }
      }
      if (!found) cond_l = false;
    }
  const bool linear = detail::order_of(q).is_total();
  if (cond_l != linear) throw Inconsistency("condition (L) disagrees with linearity of the quotient");
  return {std::move(q), std::move(g), cond_l, linear};
}

ElemSet ideal_generated(const PartialAdditionTable& t, const ElemSet& ideal, Elem a) {
  const ElemSet set = make_set(ideal);
  if (auto c = is_ideal(t, set); !c.holds) throw InputError("not an ideal: " + c.reason);
  if (!check_rdp0(t).holds) throw Refused("(RDP)0 fails, the generated-ideal formula does not apply");
  const OrderRelation ord = detail::order_of(t);
  ElemSet below;
  for (Elem x : t.elements())
    if (ord.leq(x, a)) below.push_back(x);
  const bool normal = is_normal(t, set).holds;

  std::set<Elem> acc;
  for (Elem x : set)
    for (Elem y : below)
      if (auto s = t.add(x, y)) acc.insert(*s);
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Elem> current(acc.begin(), acc.end());
    for (Elem s : current) {
      if (normal) {
        for (Elem y : below)
          if (auto v = t.add(s, y)) grew |= acc.insert(*v).second;
      } else {
        for (Elem x : set)
          if (auto sx = t.add(s, x))
            for (Elem y : below)
              if (auto v = t.add(*sx, y)) grew |= acc.insert(*v).second;
      }
    }
  }
  ElemSet out(acc.begin(), acc.end());
  if (auto c = is_ideal(t, out); !c.holds) throw Inconsistency("generated set is not an ideal: " + c.reason);
  return out;
}

Radicals radicals(const PartialAdditionTable& t) {
  Radicals r{all_elements(t), all_elements(t)};
  for (const auto& m : maximal_ideals(t)) {
    r.rad = set_intersection(r.rad, m);
    if (is_normal(t, m).holds) r.rad_n = set_intersection(r.rad_n, m);
  }
  if (!is_subset(r.rad, r.rad_n)) throw Inconsistency("Rad is not contained in Rad_n");
  return r;
}

bool splits_by_complements(const PartialAdditionTable& t, const ElemSet& ideal) {
  const ElemSet set = make_set(ideal);
  ElemSet minus, tilde;
  for (Elem i : set) {
    const auto c = detail::complements_of(t, i);
    minus.push_back(c.minus);
    tilde.push_back(c.tilde);
  }
  minus = make_set(minus);
  tilde = make_set(tilde);
  if (!set_intersection(set, minus).empty() || !set_intersection(set, tilde).empty()) return false;
  return set.size() + minus.size() == t.size() && set.size() + tilde.size() == t.size();
}

std::vector<TwoValuedPair> two_valued_partition(const PartialAdditionTable& t) {
  require_axioms(t, Kind::Pea);
  const bool symmetric = is_symmetric(t).symmetric;
  std::vector<TwoValuedPair> out;
  for (const auto& m : maximal_ideals(t)) {
    if (!is_normal(t, m).holds || !splits_by_complements(t, m)) continue;
    TwoValuedPair p{m, StateVector{}, false};
    for (Elem e : t.elements()) p.state.values.emplace_back(contains(m, e) ? 0 : 1);
    if (!state_error(t, p.state).empty()) throw Inconsistency("partition indicator is not a state");
    if (symmetric) {
      const auto hat = unitize(restrict_to(t, m));
      std::vector<Elem> map(hat.size());
      for (std::size_t k = 0; k < m.size(); ++k) {
        map[k] = m[k];
        map[m.size() + k] = detail::complements_of(t, m[k]).tilde;
      }
      if (!is_isomorphism(hat, t, map)) throw Inconsistency("E is not the unitization of I");
      p.unitization_verified = true;
    }
    out.push_back(std::move(p));
  }
  std::set<StateVector> from_partition, from_labels;
  for (const auto& p : out) from_partition.insert(p.state);
  for (auto& s : enumerate_discrete_states(t, 1)) from_labels.insert(std::move(s));
  if (from_partition != from_labels)
    throw Inconsistency("two-valued states and complement partitions are not in bijection");
  return out;
}

}  // namespace pea
