#include "pea/core_algebra.hpp"

#include <algorithm>
#include <map>

#include "pea/errors.hpp"

namespace pea {

std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::GP1: return "GP1";
    case Axiom::GP2: return "GP2";
    case Axiom::GP3: return "GP3";
    case Axiom::GP4: return "GP4";
    case Axiom::GP5: return "GP5";
    case Axiom::PE1: return "PE1";
    case Axiom::PE2: return "PE2";
    case Axiom::PE3: return "PE3";
    case Axiom::PE4: return "PE4";
  }
  return "?";
}

std::string to_string(Kind k) { return k == Kind::Pea ? "pea" : "gpea"; }

bool AxiomReport::violates(Axiom a) const {
  return std::any_of(violations.begin(), violations.end(),
                     [a](const Violation& v) { return v.axiom == a; });
}

AxiomReport check_axioms(const PartialAdditionTable& t, Kind kind) {
  if (kind == Kind::Pea && !t.has_one())
    throw InputError("PEA axioms need a unit element");
  const bool pea = kind == Kind::Pea;
  std::map<Axiom, std::vector<Elem>> first;
  auto record = [&](Axiom ax, std::vector<Elem> w) {
    auto it = first.find(ax);
    if (it == first.end() || w < it->second) first[ax] = std::move(w);
  };
  const Axiom assoc = pea ? Axiom::PE1 : Axiom::GP1;
  const Axiom shift = pea ? Axiom::PE3 : Axiom::GP2;

  for (Elem a : t.elements()) {
    // GP5
    if (t.add(a, t.zero()) != a || t.add(t.zero(), a) != a) record(Axiom::GP5, {a});
    for (Elem b : t.elements()) {
      const auto ab = t.add(a, b);
      // GP4
      if (ab && *ab == t.zero() && (a != t.zero() || b != t.zero())) record(Axiom::GP4, {a, b});
      // GP2 / PE3
      if (ab) {
        bool has_d = false, has_e = false;
        for (Elem x : t.elements()) {
          has_d = has_d || t.add(x, a) == ab;
          has_e = has_e || t.add(b, x) == ab;
        }
        if (!has_d || !has_e) record(shift, {a, b});
      }
      for (Elem c : t.elements()) {
        // GP1 / PE1
        const auto bc = t.add(b, c);
        std::optional<Elem> lhs, rhs;
        if (ab) lhs = t.add(*ab, c);
        if (bc) rhs = t.add(a, *bc);
        if (lhs != rhs) record(assoc, {a, b, c});
        // GP3, both cancellation laws
        if (b != c) {
          const auto ac = t.add(a, c);
          if (ab && ab == ac) record(Axiom::GP3, {a, b, c});
          const auto ba = t.add(b, a), ca = t.add(c, a);
          if (ba && ba == ca) record(Axiom::GP3, {a, b, c});
        }
      }
    }
  }

  if (pea) {
    const Elem one = *t.one();
    for (Elem a : t.elements()) {
      std::size_t right = 0, left = 0;
      for (Elem x : t.elements()) {
        if (t.add(a, x) == one) ++right;
        if (t.add(x, a) == one) ++left;
      }
      if (right != 1 || left != 1) record(Axiom::PE2, {a});
      if (a != t.zero() && (t.defined(a, one) || t.defined(one, a))) record(Axiom::PE4, {a});
    }
  }

  AxiomReport report;
  for (auto& [ax, w] : first) report.violations.push_back({ax, std::move(w)});
  return report;
}

void require_axioms(const PartialAdditionTable& t, Kind kind) {
  const auto r = check_axioms(t, kind);
  if (!r.passed())
    throw Refused("table fails the " + to_string(kind) + " axioms (" +
                  to_string(r.violations.front().axiom) + ")");
}

std::vector<std::pair<Elem, Elem>> OrderRelation::pairs() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      if (leq_[a * n_ + b])
        out.emplace_back(Elem{static_cast<std::uint16_t>(a)}, Elem{static_cast<std::uint16_t>(b)});
  return out;
}

std::vector<std::pair<Elem, Elem>> OrderRelation::covers() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (auto [a, b] : pairs()) {
    if (a == b) continue;
    bool between = false;
    for (std::size_t c = 0; c < n_ && !between; ++c) {
      const Elem e{static_cast<std::uint16_t>(c)};
      between = less(a, e) && less(e, b);
    }
    if (!between) out.emplace_back(a, b);
  }
  return out;
}

bool OrderRelation::is_total() const {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      if (!leq_[a * n_ + b] && !leq_[b * n_ + a]) return false;
  return true;
}

namespace detail {

OrderRelation order_of(const PartialAdditionTable& t) {
  OrderRelation ord(t.size());
  std::vector<bool> left(t.size() * t.size(), false);
  for (Elem a : t.elements())
    for (Elem c : t.elements()) {
      if (auto b = t.add(a, c)) ord.set(a, *b);
      if (auto b = t.add(c, a)) left[std::size_t{a.id} * t.size() + b->id] = true;
    }
  for (Elem a : t.elements())
    for (Elem b : t.elements())
      if (ord.leq(a, b) != left[std::size_t{a.id} * t.size() + b.id]) {
        if (!ord.left_form_mismatch) ord.left_form_mismatch = std::make_pair(a, b);
      }
  return ord;
}

Complements complements_of(const PartialAdditionTable& t, Elem a) {
  const Elem one = t.unit();
  std::optional<Elem> minus, tilde;
  for (Elem x : t.elements()) {
    if (!minus && t.add(x, a) == one) minus = x;
    if (!tilde && t.add(a, x) == one) tilde = x;
  }
  if (!minus || !tilde) throw Refused("element '" + t.name(a) + "' has no complement");
  return {*minus, *tilde};
}

std::optional<Elem> left_diff(const PartialAdditionTable& t, Elem b, Elem a) {
  for (Elem x : t.elements())
    if (t.add(x, a) == b) return x;
  return std::nullopt;
}

std::optional<Elem> right_diff(const PartialAdditionTable& t, Elem a, Elem b) {
  for (Elem x : t.elements())
    if (t.add(a, x) == b) return x;
  return std::nullopt;
}

IsotropicIndex iota_of(const PartialAdditionTable& t, Elem a) {
  if (a == t.zero()) return {};
  // Multiples of a != 0 strictly increase, so a finite table stops within |E|.
  const std::size_t cap = t.size() + 1;
  Elem m = a;
  for (std::size_t k = 1; k <= cap; ++k) {
    auto next = t.add(m, a);
    if (!next) return {k};
    m = *next;
  }
  throw Inconsistency("isotropic index of '" + t.name(a) + "' reached the cap " +
                      std::to_string(cap));
}

}  // namespace detail

OrderRelation induced_order(const PartialAdditionTable& t) {
  require_axioms(t, Kind::Gpea);
  return detail::order_of(t);
}

Complements complements(const PartialAdditionTable& t, Elem a) {
  require_axioms(t, Kind::Pea);
  return detail::complements_of(t, a);
}

bool is_weakly_commutative(const PartialAdditionTable& t, std::pair<Elem, Elem>* witness) {
  for (Elem a : t.elements())
    for (Elem b : t.elements())
      if (t.defined(a, b) != t.defined(b, a)) {
        if (witness) *witness = t.defined(a, b) ? std::make_pair(a, b) : std::make_pair(b, a);
        return false;
      }
  return true;
}

SymmetryReport is_symmetric(const PartialAdditionTable& t) {
  require_axioms(t, Kind::Pea);
  SymmetryReport r;
  for (Elem a : t.elements()) {
    const auto c = detail::complements_of(t, a);
    if (c.minus != c.tilde) {
      r.symmetric = false;
      r.witness = a;
      break;
    }
  }
  std::pair<Elem, Elem> w;
  r.weakly_commutative = is_weakly_commutative(t, &w);
  if (!r.weakly_commutative) r.commutativity_witness = w;
  if (r.symmetric != r.weakly_commutative)
    throw Inconsistency("symmetry and condition (C) disagree");
  return r;
}

IsotropicData isotropic_data(const PartialAdditionTable& t) {
  require_axioms(t, Kind::Gpea);
  const bool pea = t.has_one() && check_axioms(t, Kind::Pea).passed();
  IsotropicData d;
  for (Elem a : t.elements()) {
    ElementInfo info{a, std::nullopt, detail::iota_of(t, a)};
    if (pea) info.complements = detail::complements_of(t, a);
    if (info.iota.infinite()) d.infinit.push_back(a);
    d.info.push_back(info);
  }
  return d;
}

Elem difference(const PartialAdditionTable& t, Elem a, Elem b, Side side) {
  const auto r = side == Side::Left ? detail::left_diff(t, b, a) : detail::right_diff(t, a, b);
  if (!r)
    throw UndefinedDifference("'" + t.name(a) + "' is not below '" + t.name(b) + "'");
  return *r;
}

}  // namespace pea
