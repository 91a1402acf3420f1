#include "pea/constructions.hpp"

#include <algorithm>

#include "pea/core_algebra.hpp"
#include "pea/elemset.hpp"
#include "pea/errors.hpp"

namespace pea {

namespace detail {

PartialAdditionTable unitize_rules(const PartialAdditionTable& e) {
  const std::size_t n = e.size();
  std::vector<std::string> names = e.names();
  for (Elem a : e.elements()) {
    std::string sharp = e.name(a) + "#";
    while (e.find(sharp) || std::find(names.begin(), names.end(), sharp) != names.end()) sharp += "#";
    names.push_back(sharp);
  }
  TableBuilder b(2 * n);
  for (Elem a : e.elements())
    for (Elem x : e.elements()) {
      // (i) a + x
      if (auto s = e.add(a, x)) b.set(a.id, x.id, s->id);
      // (ii) a + x# = (x\a)#
      if (auto d = left_diff(e, x, a)) b.set(a.id, n + x.id, n + d->id);
      // (iii) x# + a = (a/x)#
      if (auto d = right_diff(e, a, x)) b.set(n + x.id, a.id, n + d->id);
    }
  return b.build(std::move(names), e.zero().id, n + e.zero().id);
}

}  // namespace detail

bool is_order_ideal_embedding(const PartialAdditionTable& t, const ElemSet& s,
                              const PartialAdditionTable& inner) {
  const OrderRelation outer = detail::order_of(t);
  const OrderRelation in = detail::order_of(inner);
  for (Elem x : s) {
    for (Elem a : t.elements())
      if (outer.leq(a, x) && !contains(s, a)) return false;
    for (Elem y : s)
      if (auto c = t.add(x, y); c && !contains(s, *c)) return false;
  }
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (outer.leq(s[i], s[j]) != in.leq(Elem{static_cast<std::uint16_t>(i)}, Elem{static_cast<std::uint16_t>(j)}))
        return false;
  return true;
}

PartialAdditionTable unitize(const PartialAdditionTable& gpea) {
  require_axioms(gpea, Kind::Gpea);
  std::pair<Elem, Elem> w;
  if (!is_weakly_commutative(gpea, &w))
    throw NonSymmetric("GPEA is not symmetric: " + gpea.name(w.first) + "+" + gpea.name(w.second) +
                       " is defined but the reverse sum is not");
  PartialAdditionTable hat = detail::unitize_rules(gpea);
  if (!check_axioms(hat, Kind::Pea).passed()) throw Inconsistency("unitization is not a PEA");
  if (!is_symmetric(hat).symmetric) throw Inconsistency("unitization is not symmetric");
  ElemSet base;
  for (Elem e : gpea.elements()) base.push_back(e);
  if (!is_order_ideal_embedding(hat, base, gpea)) throw Inconsistency("E is not an order ideal of its unitization");
  return hat;
}

PartialAdditionTable gamma_interval_finite(const PoGroup& g, const GroupElem& u, long bound) {
  const std::size_t k = g.arity();
  if (u.size() != k) throw InputError("unit has the wrong number of coordinates");
  if (!g.is_positive(u)) throw InputError("unit " + to_string(u) + " is not positive");
  double points = 1;
  for (std::size_t i = 0; i < k; ++i) points *= static_cast<double>(2 * bound + 1);
  if (points > 1e6) throw TooLarge("enumeration box is too large");

  std::vector<GroupElem> members;
  GroupElem x(k, -bound);
  for (;;) {
    if (g.is_positive(x) && g.leq(x, u)) {
      for (const auto& c : x)
        if (abs(c) >= bound)
          throw Refused("interval reaches the enumeration bound at " + to_string(x) +
                        "; it may be infinite, use a symbolic construction");
      members.push_back(x);
    }
    std::size_t i = 0;
    while (i < k && x[i] == bound) x[i++] = -bound;
    if (i == k) break;
    ++x[i];
  }
  const GroupElem zero = g.zero();
  std::stable_sort(members.begin(), members.end(), [&](const GroupElem& a, const GroupElem& b) {
    const int ra = a == zero ? 0 : a == u ? 2 : 1, rb = b == zero ? 0 : b == u ? 2 : 1;
    return ra != rb ? ra < rb : a < b;
  });
  if (members.size() > 4096) throw TooLarge("interval has more than 4096 elements");
  std::vector<std::string> names;
  for (const auto& m : members) names.push_back(k == 1 ? m[0].str() : to_string(m));
  TableBuilder b(members.size());
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j) {
      const auto s = g.add(members[i], members[j]);
      if (!g.leq(s, u)) continue;
      const auto it = std::find(members.begin(), members.end(), s);
      if (it == members.end()) throw Inconsistency("sum inside [0,u] was not enumerated");
      b.set(i, j, static_cast<std::size_t>(it - members.begin()));
    }
  auto t = b.build(std::move(names), 0, members.size() - 1);
  if (!check_axioms(t, Kind::Pea).passed()) throw Inconsistency("interval is not a PEA");
  return t;
}

}  // namespace pea
