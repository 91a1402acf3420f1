#include "pea/decompositions.hpp"

#include <algorithm>

#include "pea/builtins.hpp"
#include "pea/core_algebra.hpp"
#include "pea/corpus.hpp"
#include "pea/elemset.hpp"
#include "pea/errors.hpp"

namespace pea {

Decomposition decomposition_from_labels(const std::vector<std::size_t>& labels, std::size_t n) {
  Decomposition d{n, std::vector<ElemSet>(n + 1), labels};
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] > n) throw InputError("label exceeds n");
    d.parts[labels[i]].push_back(Elem{static_cast<std::uint16_t>(i)});
  }
  return d;
}

std::string decomposition_error(const PartialAdditionTable& t, const Decomposition& d) {
  if (d.labels.size() != t.size() || d.parts.size() != d.n + 1) return "(b) parts do not cover E";
  std::vector<int> seen(t.size(), 0);
  for (std::size_t i = 0; i <= d.n; ++i) {
    if (d.parts[i].empty()) return "E" + std::to_string(i) + " is empty";
    for (Elem x : d.parts[i]) {
      if (++seen[x.id] > 1) return "(a) " + t.name(x) + " lies in two parts";
      if (d.labels[x.id] != i) return "labels disagree with parts at " + t.name(x);
    }
  }
  for (Elem x : t.elements())
    if (!seen[x.id]) return "(b) " + t.name(x) + " lies in no part";
  for (Elem x : t.elements()) {
    const auto c = detail::complements_of(t, x);
    const std::size_t want = d.n - d.labels[x.id];
    if (d.labels[c.minus.id] != want || d.labels[c.tilde.id] != want)
      return "(c) complements of " + t.name(x) + " leave E" + std::to_string(want);
  }
  for (Elem x : t.elements())
    for (Elem y : t.elements())
      if (auto s = t.add(x, y)) {
        const std::size_t i = d.labels[x.id], j = d.labels[y.id];
        if (i + j > d.n || d.labels[s->id] != i + j)
          return "(d) " + t.name(x) + "+" + t.name(y) + " is not in E" + std::to_string(i + j);
      }
  return {};
}

std::vector<Decomposition> find_decompositions(const PartialAdditionTable& t, std::size_t n) {
  std::vector<Decomposition> out;
  for (const auto& l : additive_labelings(t, n)) {
    auto d = decomposition_from_labels(l, n);
    if (auto err = decomposition_error(t, d); !err.empty()) throw Inconsistency("labeling is not a decomposition: " + err);
    out.push_back(std::move(d));
  }
  return out;
}

StateVector state_of(const Decomposition& d) { return state_from_labeling(d.labels, d.n); }

Decomposition decomposition_of(const PartialAdditionTable& t, const StateVector& s, std::size_t n) {
  if (s.values.size() != t.size()) throw InputError("state has the wrong length");
  std::vector<std::size_t> labels(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Rational scaled = s.values[i] * Integer(n);
    if (denominator(scaled) != 1 || scaled < 0 || scaled > Integer(n))
      throw Refused("state value " + to_string(s.values[i]) + " is not of the form i/" + std::to_string(n));
    labels[i] = numerator(scaled).convert_to<std::size_t>();
  }
  return decomposition_from_labels(labels, n);
}

DecompositionStatePairing decomposition_state_bijection(const PartialAdditionTable& t, std::size_t n) {
  DecompositionStatePairing p;
  const auto ds = find_decompositions(t, n);
  const auto ss = enumerate_discrete_states(t, n);
  p.decompositions = ds.size();
  p.states = ss.size();
  for (const auto& d : ds) {
    const StateVector s = state_of(d);
    const bool known = std::find(ss.begin(), ss.end(), s) != ss.end();
    if (!known || !(decomposition_of(t, s, n) == d)) p.mutually_inverse = false;
    p.pairs.emplace_back(d, s);
  }
  for (const auto& s : ss) {
    const Decomposition d = decomposition_of(t, s, n);
    if (std::find(ds.begin(), ds.end(), d) == ds.end() || !(state_of(d) == s)) p.mutually_inverse = false;
  }
  return p;
}

ComparabilityReport check_comparability(const PartialAdditionTable& t, const Decomposition& d) {
  if (auto err = decomposition_error(t, d); !err.empty()) throw InputError("not a decomposition: " + err);
  ComparabilityReport r;
  const OrderRelation ord = detail::order_of(t);
  for (std::size_t i = 0; i < d.n && r.chain; ++i)
    for (Elem x : d.parts[i])
      for (Elem y : d.parts[i + 1])
        if (r.chain && !ord.leq(x, y)) {
          r.chain = false;
          r.chain_witness = {x, y};
        }
  for (std::size_t i = 0; i <= d.n && r.sums_exist; ++i)
    for (std::size_t j = 0; i + j < d.n && r.sums_exist; ++j)
      for (Elem x : d.parts[i])
        for (Elem y : d.parts[j])
          if (r.sums_exist && !t.defined(x, y)) {
            r.sums_exist = false;
            r.sums_witness = {x, y};
          }
  if (!r.chain || !r.sums_exist) return r;

  r.consequences_checked = true;
  r.e0_is_infinit = isotropic_data(t).infinit == d.parts[0];
  r.e0_is_normal = is_ideal(t, d.parts[0]).holds && is_normal(t, d.parts[0]).holds;
  r.low_sums_fill = true;
  r.high_sums_absent = true;
  for (std::size_t i = 0; i <= d.n; ++i)
    for (std::size_t j = 0; j <= d.n; ++j) {
      ElemSet sums;
      bool any = false;
      for (Elem x : d.parts[i])
        for (Elem y : d.parts[j])
          if (auto s = t.add(x, y)) {
            sums.push_back(*s);
            any = true;
          }
      if (i + j < d.n && make_set(sums) != d.parts[i + j]) r.low_sums_fill = false;
      if (i + j > d.n && any) r.high_sums_absent = false;
    }
  return r;
}

PerfectReport is_n_perfect(const PartialAdditionTable& t, std::size_t n) {
  PerfectReport r;
  r.maximal_ideals = maximal_ideals(t);
  const auto ds = find_decompositions(t, n);
  if (ds.empty()) {
    r.reason = "no " + std::to_string(n) + "-decomposition";
    return r;
  }
  for (const auto& d : ds) {
    bool sums = true;
    for (std::size_t i = 0; i <= n && sums; ++i)
      for (std::size_t j = 0; i + j < n && sums; ++j)
        for (Elem x : d.parts[i])
          for (Elem y : d.parts[j]) sums = sums && t.defined(x, y);
    if (!sums) {
      r.reason = "E_i + E_j does not exist for some i + j < n";
      continue;
    }
    if (r.maximal_ideals.size() != 1 || r.maximal_ideals[0] != d.parts[0]) {
      r.reason = "E0 is not the unique maximal ideal";
      continue;
    }
    r.perfect = true;
    r.certificate = d;
    r.reason.clear();
    return r;
  }
  return r;
}

Check check_condition_e(const PartialAdditionTable& t, const Decomposition& d) {
  const OrderRelation ord = detail::order_of(t);
  for (std::size_t i = 0; i <= d.n; ++i) {
    const ElemSet& part = d.parts[i];
    for (Elem x : part)
      for (Elem y : part) {
        const bool up = std::any_of(part.begin(), part.end(), [&](Elem z) { return ord.leq(x, z) && ord.leq(y, z); });
        if (!up) return {false, {x, y}, "E" + std::to_string(i) + " is not upwards directed"};
        const bool down = std::any_of(part.begin(), part.end(), [&](Elem z) { return ord.leq(z, x) && ord.leq(z, y); });
        if (!down) return {false, {x, y}, "E" + std::to_string(i) + " is not downwards directed"};
      }
  }
  return {};
}

ChainReport canonical_chain_report(const PartialAdditionTable& t, std::size_t n) {
  const PerfectReport p = is_n_perfect(t, n);
  if (!p.perfect) throw Refused("not " + std::to_string(n) + "-perfect: " + p.reason);
  const Decomposition& d = *p.certificate;
  if (const Check e = check_condition_e(t, d); !e.holds) throw Refused("condition (e) fails: " + e.reason);
  const OrderRelation ord = detail::order_of(t);

  std::optional<Elem> c;
  for (Elem x : d.parts[1])
    if (std::all_of(d.parts[1].begin(), d.parts[1].end(), [&](Elem y) { return ord.leq(x, y); })) c = x;
  if (!c) throw Inconsistency("E1 has no smallest element");

  ChainReport r{*c, {t.zero()}, false};
  for (std::size_t i = 1; i <= n; ++i) {
    const auto next = t.add(r.multiples.back(), *c);
    if (!next) throw Inconsistency(std::to_string(i) + "c is undefined");
    r.multiples.push_back(*next);
  }
  for (std::size_t i = 0; i <= n; ++i) {
    const Elem ic = r.multiples[i];
    const auto cc = detail::complements_of(t, ic);
    if (cc.minus != cc.tilde) throw Inconsistency("(ic)^- != (ic)^~ at i=" + std::to_string(i));
    const Elem top = detail::complements_of(t, r.multiples[n - i]).tilde;
    for (Elem x : d.parts[i]) {
      if (!ord.leq(ic, x)) throw Inconsistency("ic is not smallest in E" + std::to_string(i));
      if (!ord.leq(x, top)) throw Inconsistency("E" + std::to_string(i) + " leaves [ic, ((n-i)c)^~]");
    }
    if (d.parts[i] != ElemSet{ic}) throw Inconsistency("E" + std::to_string(i) + " is not {ic}");
  }
  if (r.multiples.back() != t.unit()) throw Inconsistency("nc != 1");
  const Quotient q = quotient(t, d.parts[0]);
  r.quotient_is_chain = q.table.size() == n + 1 && canonical_form(q.table) == canonical_form(chain(n));
  if (!r.quotient_is_chain) throw Inconsistency("E/E0 is not the chain C_n");
  return r;
}

}  // namespace pea
